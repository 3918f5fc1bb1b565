#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace asdescent {

// Exact rational with positive denominator, always reduced.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;
};

Rat make_rat(int64_t num, int64_t den);
bool operator==(const Rat& a, const Rat& b);
bool operator!=(const Rat& a, const Rat& b);
bool rat_less(const Rat& a, const Rat& b);
std::string to_string(const Rat& r);       // "90" or "21/2"
std::string rat_decimal(const Rat& r);     // rounded to 6 places, display only
nlohmann::ordered_json rat_json(const Rat& r);

bool is_prime(int64_t m);
// Writes the prime and exponent through the out-pointers when m = p^e.
bool is_prime_power(int64_t m, int64_t* p_out = nullptr, int* e_out = nullptr);

// Curve data for the 3n + 3g bound. Degree-2 place counts are caller-supplied;
// nothing here derives them.
struct CurveInput {
  int64_t q = 0;
  int64_t n = 0;   // extension degree, at least 2
  int64_t g = 0;   // genus
  int64_t n1 = 0;  // places of degree 1
  int64_t n2 = 0;  // places of degree 2
  bool nonspecial_assumed = true;
};

// Flag defaults to the regime where a non-special divisor of degree g - 1 is
// known to exist.
CurveInput make_curve_input(int64_t q, int64_t n, int64_t g, int64_t n1, int64_t n2);

struct ConditionReport {
  bool nonspecial = false;
  bool genus_size = false;
  bool place_count = false;
  bool all() const { return nonspecial && genus_size && place_count; }
};

// Decides 2g + 1 <= q^{(n-1)/2} (sqrt(q) - 1) in exact integer arithmetic.
bool cond2_exact(int64_t q, int64_t n, int64_t g);
// Same inequality evaluated with 256-bit binary floating point; cross-check
// oracle for tests, never used for decisions.
bool cond2_highprec(int64_t q, int64_t n, int64_t g);

ConditionReport chud_conditions(const CurveInput& in);

struct MuResult {
  ConditionReport conditions;
  std::optional<int64_t> bound;      // 3n + 3g, present iff every condition holds
  std::vector<std::string> failing;  // names of failed conditions
};

MuResult mu_bound(const CurveInput& in);

struct UniformBound {
  Rat total;        // 3 (1 + p/(q-3)) n
  Rat coefficient;  // 3 (1 + p/(q-3))
};

UniformBound uniform_bound(int64_t q, int64_t n);

// (our coefficient at q = p, the cited coefficient 3(1 + 4/(p-3))); requires
// p prime >= 5 and asserts the cited one is strictly smaller.
std::pair<Rat, Rat> compare_prime_case(int64_t p);

}  // namespace asdescent
