#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace asdescent {

struct CommandConfig {
  std::string subcommand;  // field, descend, tower, count, bound, verify
  int64_t p = 0;
  int n = 0;
  int depth = 2;
  int level = 1;
  int64_t q = 0;
  std::optional<int64_t> g;
  std::optional<int64_t> n1;
  std::optional<int64_t> n2;
  std::optional<std::vector<int64_t>> modulus;  // constant coefficient first, monic
  std::optional<std::vector<int64_t>> norms;    // generator exponents, odd p only
  std::string format = "text";
  uint64_t seed = 1;
};

// Exit status: 0 success, 1 verification failure, 2 invalid parameters,
// 3 internal consistency error.
int run(const CommandConfig& config, std::ostream& out);

}  // namespace asdescent
