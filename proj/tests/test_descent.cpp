#include <doctest.h>

#include <set>

#include "asdescent/descent.hpp"
#include "asdescent/fixtures.hpp"

using namespace asdescent;

namespace {

DescentTable canonical_table(int64_t p, int n) {
  return descent_table(canonical_chain(extend_quadratic(make_field(p, n))));
}

}  // namespace

TEST_CASE("trace-zero kernel has q elements closed under the operations") {
  for (auto [p, n] : {std::pair<int64_t, int>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    FieldPtr fq = make_field(p, n);
    FieldPtr fq2 = extend_quadratic(fq);
    int64_t q = fq->size();
    auto kernel = trace_zero_kernel(fq2);
    REQUIRE(static_cast<int64_t>(kernel.size()) == q);
    std::set<uint32_t> idx;
    for (const auto& x : kernel) {
      REQUIRE((x.pow(q) + x).is_zero());
      idx.insert(x.index());
    }
    // additively closed
    for (const auto& a : kernel)
      for (const auto& b : kernel) REQUIRE(idx.count((a + b).index()) == 1);
    // char 2: the kernel is exactly the embedded base field
    if (p == 2)
      for (const auto& x : kernel) REQUIRE(lies_in_base(x));
  }
}

TEST_CASE("canonical chains validate and are Galois stable") {
  for (auto [p, n] : {std::pair<int64_t, int>{2, 3}, {3, 2}, {2, 5}, {3, 3}, {5, 2}}) {
    FieldPtr fq2 = extend_quadratic(make_field(p, n));
    SubspaceChain chain = canonical_chain(fq2);
    int64_t q = chain.fq->size();
    REQUIRE(static_cast<int>(chain.basis.size()) == n);
    REQUIRE(moore_det(chain.basis, p) != fq2->zero());
    int64_t expect = 1;
    for (int i = 0; i < n; ++i) {
      expect *= p;
      REQUIRE(static_cast<int64_t>(chain.spans[i].size()) == expect);
      REQUIRE(verify_galois_stability(chain.spans[i], q));
    }
  }
}

TEST_CASE("galois stability detects unstable sets") {
  FieldPtr fq2 = extend_quadratic(make_field(3, 2));
  // a random non-kernel singleton together with zero is not stable in general
  FieldElement g = fq2->generator();
  std::vector<FieldElement> unstable{fq2->zero(), g};
  CHECK(!verify_galois_stability(unstable, 9));
  CHECK(verify_galois_stability(trace_zero_kernel(fq2), 9));
}

TEST_CASE("norm-pinned chains reproduce the frozen odd tables and reject bad input") {
  FieldPtr fq2 = extend_quadratic(make_field(3, 2));
  const Fixture& fx = fixture("q9");
  DescentTable t = descent_table(chain_from_norms(fq2, *fx.norms));
  CHECK(t.rows[0].M == parse_linpoly(fx.M[0], t.fq, 3));
  // even generator exponents are not kernel norms for q = 9
  CHECK_THROWS_AS(chain_from_norms(fq2, {2}), std::invalid_argument);
  // repeating the same norm forces a dependent family
  CHECK_THROWS_AS(chain_from_norms(fq2, {1, 1}), std::invalid_argument);
}

TEST_CASE("descent rows compose to T^q + T with coefficients downstairs") {
  for (auto [p, n] : {std::pair<int64_t, int>{2, 4}, {3, 3}}) {
    DescentTable t = canonical_table(p, n);
    LinearizedPoly A = artin_schreier_poly(t.fq, n);
    REQUIRE(static_cast<int>(t.rows.size()) == n - 1);
    for (const auto& row : t.rows) {
      REQUIRE(row.P.field()->same_as(*t.fq));
      REQUIRE(row.M.field()->same_as(*t.fq));
      REQUIRE(symbolic_compose(row.M, row.P) == A);
      REQUIRE(row.M.monic());
      REQUIRE(row.M.separable());
    }
  }
}

TEST_CASE("recursion constants are nonzero and satisfy the one-step identity") {
  DescentTable t = canonical_table(2, 4);
  const FieldPtr& fq = t.fq;
  for (size_t k = 0; k < t.W.size(); ++k) {
    REQUIRE(!t.W[k].is_zero());
    // P_j = P_{j-1}^p - W_j P_{j-1} for j = k+2, with P_n = T^q + T
    const LinearizedPoly& prev = t.rows[k].P;
    LinearizedPoly frob(fq, 2, {fq->zero(), fq->one()});
    LinearizedPoly lifted = symbolic_compose(frob, prev);
    std::vector<FieldElement> c;
    for (int i = 0; i <= lifted.sym_degree(); ++i)
      c.push_back(lifted.coeff(i) - t.W[k] * prev.coeff(i));
    LinearizedPoly next(fq, 2, std::move(c));
    LinearizedPoly expect =
        (k + 1 < t.rows.size()) ? t.rows[k + 1].P : artin_schreier_poly(fq, 4);
    REQUIRE(next == expect);
  }
}

TEST_CASE("perturbing any cofactor coefficient breaks the composition") {
  DescentTable t = canonical_table(2, 3);
  LinearizedPoly A = artin_schreier_poly(t.fq, 3);
  for (const auto& row : t.rows) {
    for (int i = 0; i <= row.M.sym_degree(); ++i) {
      std::vector<FieldElement> c = row.M.coeffs();
      c[i] += t.fq->generator();
      LinearizedPoly bad(t.fq, 2, std::move(c));
      REQUIRE(symbolic_compose(bad, row.P) != A);
    }
  }
}

TEST_CASE("single-step boundary produces an empty table") {
  DescentTable t = descent_table(canonical_chain(extend_quadratic(make_field(2, 1))));
  CHECK(t.rows.empty());
  CHECK(t.W.empty());
}

TEST_CASE("odd factorization agrees with the kernel norms and multiplies back") {
  FieldPtr fq2 = extend_quadratic(make_field(3, 2));
  auto factors = odd_p_factorization(fq2);
  REQUIRE(factors.size() == 5);  // T and (q-1)/2 quadratics
  CHECK(factors[0].degree() == 1);
  std::vector<int64_t> dlogs;
  OrdinaryPoly prod = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) {
    CHECK(factors[k].degree() == 2);
    dlogs.push_back(*factors[k].coeff(0).dlog());
    prod = prod * factors[k];
  }
  CHECK(dlogs == std::vector<int64_t>{1, 3, 5, 7});
  FieldPtr fq = make_field(3, 2);
  CHECK(prod == to_ordinary(artin_schreier_poly(fq, 2)));
  FieldPtr even = extend_quadratic(make_field(2, 2));
  CHECK_THROWS_AS(odd_p_factorization(even), std::invalid_argument);
}

TEST_CASE("level norms report the new quadratic constants per step") {
  const Fixture& fx = fixture("q27");
  FieldPtr fq2 = extend_quadratic(make_field(3, 3));
  SubspaceChain chain = chain_from_norms(fq2, *fx.norms);
  auto lv = level_norms(chain);
  REQUIRE(lv.size() == 3);
  CHECK(lv[0].size() == 1);
  CHECK(*lv[0][0].dlog() == 0);
  std::vector<int64_t> second;
  for (const auto& x : lv[1]) second.push_back(*x.dlog());
  CHECK(second == std::vector<int64_t>{2, 6, 18});
}

TEST_CASE("descent json round-trips byte for byte") {
  DescentTable t = canonical_table(2, 3);
  std::string s = descent_json(t).dump(2);
  CHECK(nlohmann::ordered_json::parse(s).dump(2) == s);
}

TEST_CASE("descent text contains the labeled rows and recursion constants") {
  DescentTable t = canonical_table(2, 3);
  std::string text = descent_text(t);
  CHECK(text.find("q = 8 = 2^3") != std::string::npos);
  CHECK(text.find("(a) t_2 = z(z+1), M_1 = T^4 + T^2 + T") != std::string::npos);
  CHECK(text.find("(b) t_1 = t_2(z+w)(z+w+1), M_2 = T^2 + w^3*T") != std::string::npos);
  CHECK(text.find("W_2 = w^4") != std::string::npos);
  CHECK(text.find("W_3 = w^3") != std::string::npos);
}
