#include "asdescent/complexity.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asdescent {

namespace {

using boost::multiprecision::cpp_int;
using Float256 = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<256, boost::multiprecision::backends::digit_base_2>>;

int64_t isqrt64(int64_t m) {
  if (m < 0) return -1;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(m)));
  while (r > 0 && r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

cpp_int ipow(cpp_int b, int64_t e) {
  cpp_int r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

void check_curve(const CurveInput& in) {
  if (!is_prime_power(in.q)) throw std::invalid_argument("q must be a prime power");
  if (in.n < 2) throw std::invalid_argument("extension degree must be at least 2");
  if (in.g < 0 || in.n1 < 0 || in.n2 < 0)
    throw std::invalid_argument("genus and place counts must be nonnegative");
}

}  // namespace

Rat make_rat(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat{num, den};
}

bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

bool rat_less(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string rat_decimal(const Rat& r) {
  // Round half away from zero at the sixth place; exact integer arithmetic.
  bool neg = r.num < 0;
  __int128 num = neg ? -static_cast<__int128>(r.num) : r.num;
  __int128 scaled = num * 1000000 / r.den;
  __int128 rem2 = num * 1000000 % r.den;
  if (2 * rem2 >= r.den) ++scaled;
  auto digits = std::to_string(static_cast<int64_t>(scaled % 1000000));
  digits.insert(0, 6 - digits.size(), '0');
  return (neg ? "-" : "") + std::to_string(static_cast<int64_t>(scaled / 1000000)) + "." + digits;
}

nlohmann::ordered_json rat_json(const Rat& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num;
  j["den"] = r.den;
  j["decimal"] = rat_decimal(r);
  return j;
}

bool is_prime(int64_t m) {
  if (m < 2) return false;
  for (int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

bool is_prime_power(int64_t m, int64_t* p_out, int* e_out) {
  if (m < 2) return false;
  int64_t p = m;
  for (int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  int e = 0;
  int64_t r = m;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

CurveInput make_curve_input(int64_t q, int64_t n, int64_t g, int64_t n1, int64_t n2) {
  CurveInput in;
  in.q = q;
  in.n = n;
  in.g = g;
  in.n1 = n1;
  in.n2 = n2;
  in.nonspecial_assumed = q >= 4;
  return in;
}

// Strategy: the right side q^{(n-1)/2} (sqrt(q) - 1) is irrational exactly when
// q is not a perfect square, so one squaring decides the comparison.
//   - q = s^2: the right side is the integer s^{n-1} (s - 1); compare directly.
//   - q not a square, n odd: with m = (n-1)/2 the inequality reads
//     2g + 1 + q^m <= q^m sqrt(q); both sides positive, square once:
//     (2g + 1 + q^m)^2 <= q^{2m+1}.
//   - q not a square, n even: with m = n/2 - 1 it reads
//     q^m sqrt(q) <= q^{m+1} - (2g + 1); false outright when the right side is
//     negative, else square: q^{2m+1} <= (q^{m+1} - (2g + 1))^2.
// Equality never occurs after squaring in the irrational cases (an odd power of
// a non-square is not a square), so <= is preserved.
bool cond2_exact(int64_t q, int64_t n, int64_t g) {
  if (q < 2 || n < 1 || g < 0) throw std::invalid_argument("bad condition-2 input");
  cpp_int L = 2 * cpp_int(g) + 1;
  int64_t s = isqrt64(q);
  if (s * s == q) return L <= ipow(s, n - 1) * (s - 1);
  if (n % 2 == 1) {
    int64_t m = (n - 1) / 2;
    cpp_int lhs = L + ipow(q, m);
    return lhs * lhs <= ipow(q, 2 * m + 1);
  }
  int64_t m = n / 2 - 1;
  cpp_int t = ipow(q, m + 1) - L;
  if (t < 0) return false;
  return ipow(q, 2 * m + 1) <= t * t;
}

bool cond2_highprec(int64_t q, int64_t n, int64_t g) {
  Float256 rhs = pow(Float256(q), Float256(n - 1) / 2) * (sqrt(Float256(q)) - 1);
  return Float256(2 * g + 1) <= rhs;
}

ConditionReport chud_conditions(const CurveInput& in) {
  check_curve(in);
  ConditionReport rep;
  rep.nonspecial = in.nonspecial_assumed;
  rep.genus_size = cond2_exact(in.q, in.n, in.g);
  rep.place_count = in.n1 + 2 * in.n2 > 2 * in.n + 2 * in.g - 2;
  return rep;
}

MuResult mu_bound(const CurveInput& in) {
  MuResult res;
  res.conditions = chud_conditions(in);
  if (!res.conditions.nonspecial) res.failing.push_back("nonspecial");
  if (!res.conditions.genus_size) res.failing.push_back("genus-size");
  if (!res.conditions.place_count) res.failing.push_back("place-count");
  if (res.failing.empty()) res.bound = 3 * in.n + 3 * in.g;
  return res;
}

UniformBound uniform_bound(int64_t q, int64_t n) {
  int64_t p = 0;
  if (!is_prime_power(q, &p)) throw std::invalid_argument("q must be a prime power");
  if (q < 4) throw std::invalid_argument("q must be at least 4");
  if (n < 1) throw std::invalid_argument("extension degree must be positive");
  UniformBound b;
  b.coefficient = make_rat(3 * (q - 3 + p), q - 3);
  b.total = make_rat(3 * n * (q - 3 + p), q - 3);
  return b;
}

std::pair<Rat, Rat> compare_prime_case(int64_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime at least 5");
  Rat ours = make_rat(6 * p - 9, p - 3);
  Rat cited = make_rat(3 * p + 3, p - 3);
  if (!rat_less(cited, ours))
    throw std::logic_error("cited coefficient is not smaller");
  return {ours, cited};
}

}  // namespace asdescent
