#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "asdescent/ff.hpp"

namespace asdescent {

// Dense polynomial over a field. Coefficients are trimmed; the zero polynomial
// has an empty coefficient vector and degree -1.
class OrdinaryPoly {
 public:
  OrdinaryPoly() = default;
  explicit OrdinaryPoly(FieldPtr f) : field_(std::move(f)) {}
  OrdinaryPoly(FieldPtr f, std::vector<FieldElement> coeffs);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
  FieldElement coeff(int64_t i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  FieldElement eval(const FieldElement& x) const;

  OrdinaryPoly operator+(const OrdinaryPoly& o) const;
  OrdinaryPoly operator-(const OrdinaryPoly& o) const;
  OrdinaryPoly operator*(const OrdinaryPoly& o) const;
  bool operator==(const OrdinaryPoly& o) const;
  bool operator!=(const OrdinaryPoly& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<OrdinaryPoly, OrdinaryPoly> divmod(const OrdinaryPoly& num,
                                             const OrdinaryPoly& den);
// Whether q divides r exactly (ordinary polynomial division).
bool ordinary_divides(const OrdinaryPoly& q, const OrdinaryPoly& r);
std::string to_string(const OrdinaryPoly& f, std::string_view var = "T");

// Additive polynomial sum_i c_i T^{b^i} with b a power of the coefficient
// field's characteristic. coeffs_ holds c_0..c_d trimmed; empty means zero.
class LinearizedPoly {
 public:
  LinearizedPoly() = default;
  LinearizedPoly(FieldPtr f, int64_t b);
  LinearizedPoly(FieldPtr f, int64_t b, std::vector<FieldElement> coeffs);

  const FieldPtr& field() const { return field_; }
  int64_t base() const { return b_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Symbolic degree d; the ordinary degree is b^d.
  int sym_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int64_t ordinary_degree() const;
  FieldElement coeff(int i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  // Separable iff the T-coefficient c_0 is nonzero.
  bool separable() const { return !coeffs_.empty() && !coeffs_[0].is_zero(); }

  bool operator==(const LinearizedPoly& o) const;
  bool operator!=(const LinearizedPoly& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  int64_t b_ = 0;
  std::vector<FieldElement> coeffs_;
};

// T^{p^n} + T over f with base b = p (the kernel polynomial of the descent).
LinearizedPoly artin_schreier_poly(const FieldPtr& f, int n);

// Evaluate at x, which may live in f or in an extension whose base chain
// contains f; coefficients are embedded as needed.
FieldElement lin_eval(const LinearizedPoly& L, const FieldElement& x);

// Symbolic product (M * Q)(T) = M(Q(T)). Same coefficient field and base.
// Not commutative unless all coefficients are fixed by x -> x^b.
LinearizedPoly symbolic_compose(const LinearizedPoly& M, const LinearizedPoly& Q);

// Right division in the twisted polynomial ring: R = (M * Q) + rem with
// sym_degree(rem) < sym_degree(Q). Q must be nonzero. Exact; the leading
// coefficient q_s^{b^t} is always invertible.
std::pair<LinearizedPoly, LinearizedPoly> symbolic_divmod(const LinearizedPoly& R,
                                                          const LinearizedPoly& Q);
// Whether R = M * Q for some linearized M (zero symbolic remainder).
bool symbolic_divides(const LinearizedPoly& Q, const LinearizedPoly& R);

OrdinaryPoly to_ordinary(const LinearizedPoly& L);
// Inverse of to_ordinary: fails unless the support is contained in {b^i}.
LinearizedPoly from_ordinary(const OrdinaryPoly& f, int64_t b);
// Rewrite with a different base (both powers of p); exact or error.
LinearizedPoly with_base(const LinearizedPoly& L, int64_t new_b);

// prod_{a in H} (T - a) for H an F_b-subspace of the ambient field, computed
// by direct product expansion and checked sparse on the b-power support.
LinearizedPoly subspace_poly(const std::vector<FieldElement>& H, int64_t b);

// Determinant of the Moore matrix (w_j^{b^{i-1}})_{i,j}; nonzero iff the
// family is linearly independent over the subfield of order b.
FieldElement moore_det(const std::vector<FieldElement>& elems, int64_t b);

// For monic separable A with root-space basis (w_1..w_d) over F_b, split at i:
// returns (A_i, M_i) with A_i the subspace polynomial of span(w_1..w_i) and
// M_i the unique cofactor with (M_i * A_i) = A, solved from the Moore system
// sum_m sigma_j^{b^m} X_m = -sigma_j^{b^t}, sigma_j = A_i(w_j), j = i+1..d.
std::pair<LinearizedPoly, LinearizedPoly> symbolic_cofactor(
    const LinearizedPoly& A, const std::vector<FieldElement>& basis, int split);

// "T^8 + w^26*T^4 + w^16*T^2 + w^12*T", highest power first.
std::string to_string(const LinearizedPoly& L, std::string_view var = "T");
// {"base": b, "coeffs": [element...]} with c_0 first.
nlohmann::ordered_json linpoly_json(const LinearizedPoly& L);

}  // namespace asdescent
