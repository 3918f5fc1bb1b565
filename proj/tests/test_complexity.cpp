#include <doctest.h>

#include <random>

#include "asdescent/complexity.hpp"

using namespace asdescent;

TEST_CASE("rationals normalize on construction") {
  CHECK(make_rat(4, -6) == make_rat(-2, 3));
  CHECK(make_rat(0, 7) == make_rat(0, 1));
  CHECK(make_rat(21, 2).num == 21);
  CHECK(make_rat(21, 2).den == 2);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
  CHECK(rat_less(make_rat(9, 1), make_rat(21, 2)));
  CHECK(!rat_less(make_rat(21, 2), make_rat(9, 1)));
}

TEST_CASE("rational rendering") {
  CHECK(to_string(make_rat(90, 1)) == "90");
  CHECK(to_string(make_rat(21, 2)) == "21/2");
  CHECK(rat_decimal(make_rat(21, 2)) == "10.500000");
  CHECK(rat_decimal(make_rat(90, 1)) == "90.000000");
  CHECK(rat_decimal(make_rat(-1, 3)) == "-0.333333");
  CHECK(rat_decimal(make_rat(2, 3)) == "0.666667");
  nlohmann::ordered_json j = rat_json(make_rat(21, 2));
  CHECK(j["num"] == 21);
  CHECK(j["den"] == 2);
  CHECK(j["decimal"] == "10.500000");
}

TEST_CASE("prime power recognition") {
  int64_t p = 0;
  int e = 0;
  CHECK(is_prime_power(1024, &p, &e));
  CHECK(p == 2);
  CHECK(e == 10);
  CHECK(is_prime_power(27, &p, &e));
  CHECK(p == 3);
  CHECK(e == 3);
  CHECK(!is_prime_power(12));
  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(0));
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK(!is_prime(1000001));  // 101 * 9901
}

TEST_CASE("genus-size condition on the reference inputs") {
  CHECK(!cond2_exact(4, 3, 2));  // 5 <= 4 fails
  CHECK(cond2_exact(4, 2, 0));   // 1 <= 2
  CHECK(cond2_exact(9, 2, 0));   // 1 <= 6
  // square q, n = 1 boundary: 2g+1 <= sqrt(q)-1
  CHECK(cond2_exact(4, 1, 0));
  CHECK(!cond2_exact(4, 1, 1));
  CHECK(cond2_exact(16, 1, 1));
  // non-square q, both parities of n
  CHECK(cond2_exact(2, 5, 0));
  CHECK(!cond2_exact(2, 2, 1));
  CHECK_THROWS_AS(cond2_exact(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cond2_exact(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(cond2_exact(4, 2, -1), std::invalid_argument);
}

TEST_CASE("exact and high-precision evaluations agree on a seeded sample") {
  std::vector<int64_t> prime_powers;
  for (int64_t m = 2; m <= 1024; ++m)
    if (is_prime_power(m)) prime_powers.push_back(m);
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<size_t> pick_q(0, prime_powers.size() - 1);
  std::uniform_int_distribution<int64_t> pick_n(1, 20), pick_g(0, 1000000);
  for (int t = 0; t < 1000; ++t) {
    int64_t q = prime_powers[pick_q(rng)];
    int64_t n = pick_n(rng), g = pick_g(rng);
    REQUIRE(cond2_exact(q, n, g) == cond2_highprec(q, n, g));
  }
}

TEST_CASE("three conditions and the bound gate") {
  MuResult a = mu_bound(make_curve_input(4, 3, 2, 5, 2));
  CHECK(a.conditions.nonspecial);
  CHECK(!a.conditions.genus_size);
  CHECK(a.conditions.place_count);
  CHECK(!a.bound);
  CHECK(a.failing == std::vector<std::string>{"genus-size"});

  MuResult b = mu_bound(make_curve_input(9, 2, 0, 10, 0));
  CHECK(b.conditions.all());
  CHECK(b.bound == 6);
  CHECK(b.failing.empty());

  MuResult c = mu_bound(make_curve_input(4, 2, 0, 5, 0));
  CHECK(c.bound == 6);

  // q below 4 turns the external nonspecial assumption off by default
  MuResult d = mu_bound(make_curve_input(2, 5, 0, 40, 0));
  CHECK(!d.conditions.nonspecial);
  CHECK(!d.bound);

  // place-count failure gates the bound
  MuResult e = mu_bound(make_curve_input(9, 3, 0, 2, 0));
  CHECK(!e.conditions.place_count);
  CHECK(!e.bound);
  CHECK(e.failing == std::vector<std::string>{"place-count"});

  CHECK_THROWS_AS(mu_bound(make_curve_input(6, 2, 0, 5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(mu_bound(make_curve_input(4, 1, 0, 5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(mu_bound(make_curve_input(4, 2, -1, 5, 0)), std::invalid_argument);
}

TEST_CASE("genus increments move the bound by exactly 3") {
  for (int64_t g = 0; g < 4; ++g) {
    MuResult lo = mu_bound(make_curve_input(16, 2, g, 40, 0));
    MuResult hi = mu_bound(make_curve_input(16, 2, g + 1, 40, 0));
    REQUIRE(lo.bound);
    REQUIRE(hi.bound);
    CHECK(*hi.bound == *lo.bound + 3);
  }
}

TEST_CASE("uniform bound values and preconditions") {
  for (int n = 1; n <= 30; ++n) {
    UniformBound b = uniform_bound(4, n);
    CHECK(b.total == make_rat(9 * n, 1));
    CHECK(b.coefficient == make_rat(9, 1));
  }
  UniformBound b92 = uniform_bound(9, 2);
  CHECK(b92.coefficient == make_rat(9, 2));
  CHECK(b92.total == make_rat(9, 1));
  UniformBound b51 = uniform_bound(5, 1);
  CHECK(b51.total == make_rat(21, 2));
  CHECK_THROWS_AS(uniform_bound(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(uniform_bound(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(uniform_bound(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(uniform_bound(4, 0), std::invalid_argument);
}

TEST_CASE("prime-case comparison frozen values and domain") {
  auto p5 = compare_prime_case(5);
  CHECK(p5.first == make_rat(21, 2));
  CHECK(p5.second == make_rat(9, 1));
  auto p7 = compare_prime_case(7);
  CHECK(p7.first == make_rat(33, 4));
  CHECK(p7.second == make_rat(6, 1));
  CHECK_THROWS_AS(compare_prime_case(4), std::invalid_argument);
  CHECK_THROWS_AS(compare_prime_case(9), std::invalid_argument);
  CHECK_THROWS_AS(compare_prime_case(3), std::invalid_argument);
}

TEST_CASE("coefficients approach their limits for large primes") {
  auto pc = compare_prime_case(1000003);
  // cited = 3 + 12/(p-3), ours = 6 + 9/(p-3)
  CHECK(pc.second == make_rat(3 * 1000003 + 3, 1000000));
  CHECK(pc.first == make_rat(6 * 1000003 - 9, 1000000));
  CHECK(rat_less(make_rat(3, 1), pc.second));
  CHECK(rat_less(pc.second, make_rat(30001, 10000)));
  CHECK(rat_less(make_rat(6, 1), pc.first));
  CHECK(rat_less(pc.first, make_rat(60001, 10000)));
}
