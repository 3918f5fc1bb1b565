#pragma once

#include <cstdint>
#include <ostream>

namespace asdescent {

// Replays every embedded golden example set and the property suites, printing
// one line per check. Returns true iff everything passed. The seed only
// affects the randomized suites; output is deterministic for a fixed seed.
bool run_verification(std::ostream& out, uint64_t seed);

}  // namespace asdescent
