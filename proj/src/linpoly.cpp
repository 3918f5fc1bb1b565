#include "asdescent/linpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace asdescent {

namespace {

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("field mismatch");
}

void trim(std::vector<FieldElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// b must be p^e with e >= 1.
void check_base(const Field& f, int64_t b) {
  int64_t p = f.characteristic();
  if (b < p) throw std::invalid_argument("base must be a positive power of the characteristic");
  int64_t v = b;
  while (v > 1) {
    if (v % p != 0) throw std::invalid_argument("base must be a power of the characteristic");
    v /= p;
  }
}

}  // namespace

OrdinaryPoly::OrdinaryPoly(FieldPtr f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  for (const auto& c : coeffs_)
    if (!field_->same_as(c.field())) throw std::invalid_argument("coefficient field mismatch");
  trim(coeffs_);
}

FieldElement OrdinaryPoly::coeff(int64_t i) const {
  if (i < 0 || i >= static_cast<int64_t>(coeffs_.size())) return field_->zero();
  return coeffs_[i];
}

FieldElement OrdinaryPoly::eval(const FieldElement& x) const {
  if (!field_) throw std::logic_error("eval on a polynomial without a field");
  if (field_->same_as(x.field())) {
    FieldElement r = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }
  if (x.field().degree_over_prime() >= field_->degree_over_prime()) {
    FieldPtr xf = x.field_ptr();
    FieldElement r = xf->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + embed(*it, xf);
    return r;
  }
  FieldElement xe = embed(x, field_);
  FieldElement r = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * xe + *it;
  return r;
}

OrdinaryPoly OrdinaryPoly::operator+(const OrdinaryPoly& o) const {
  check_same_field(field_, o.field_);
  std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return {field_, std::move(out)};
}

OrdinaryPoly OrdinaryPoly::operator-(const OrdinaryPoly& o) const {
  check_same_field(field_, o.field_);
  std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return {field_, std::move(out)};
}

OrdinaryPoly OrdinaryPoly::operator*(const OrdinaryPoly& o) const {
  check_same_field(field_, o.field_);
  if (is_zero() || o.is_zero()) return OrdinaryPoly(field_);
  std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return {field_, std::move(out)};
}

bool OrdinaryPoly::operator==(const OrdinaryPoly& o) const {
  if (!field_ || !o.field_) return coeffs_.empty() && o.coeffs_.empty();
  if (!field_->same_as(*o.field_)) return false;
  return coeffs_ == o.coeffs_;
}

std::pair<OrdinaryPoly, OrdinaryPoly> divmod(const OrdinaryPoly& num, const OrdinaryPoly& den) {
  check_same_field(num.field(), den.field());
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const FieldPtr& f = num.field();
  int64_t dn = num.degree(), dd = den.degree();
  if (dn < dd) return {OrdinaryPoly(f), num};
  std::vector<FieldElement> rem = num.coeffs();
  std::vector<FieldElement> quot(dn - dd + 1, f->zero());
  // Support of the divisor, skipping interior zeros.
  std::vector<std::pair<int64_t, FieldElement>> support;
  for (int64_t j = 0; j < dd; ++j)
    if (!den.coeff(j).is_zero()) support.emplace_back(j, den.coeff(j));
  FieldElement lead_inv = den.coeff(dd).inv();
  for (int64_t k = dn; k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    FieldElement factor = rem[k] * lead_inv;
    quot[k - dd] = factor;
    rem[k] = f->zero();
    for (const auto& [j, c] : support) rem[k - dd + j] -= factor * c;
  }
  return {OrdinaryPoly(f, std::move(quot)), OrdinaryPoly(f, std::move(rem))};
}

bool ordinary_divides(const OrdinaryPoly& q, const OrdinaryPoly& r) {
  return divmod(r, q).second.is_zero();
}

std::string to_string(const OrdinaryPoly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int64_t i = f.degree(); i >= 0; --i) {
    FieldElement c = f.coeff(i);
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = to_power_string(c);
    } else {
      term = std::string(var);
      if (i > 1) term += "^" + std::to_string(i);
      if (!c.is_one()) term = to_power_string(c) + "*" + term;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

LinearizedPoly::LinearizedPoly(FieldPtr f, int64_t b) : field_(std::move(f)), b_(b) {
  if (!field_) throw std::invalid_argument("null field");
  check_base(*field_, b_);
}

LinearizedPoly::LinearizedPoly(FieldPtr f, int64_t b, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), b_(b), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  check_base(*field_, b_);
  for (const auto& c : coeffs_)
    if (!field_->same_as(c.field())) throw std::invalid_argument("coefficient field mismatch");
  trim(coeffs_);
}

int64_t LinearizedPoly::ordinary_degree() const {
  if (is_zero()) return -1;
  int64_t d = 1;
  for (int i = 0; i < sym_degree(); ++i) d *= b_;
  return d;
}

FieldElement LinearizedPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[i];
}

bool LinearizedPoly::operator==(const LinearizedPoly& o) const {
  if (!field_ || !o.field_) return coeffs_.empty() && o.coeffs_.empty();
  if (!field_->same_as(*o.field_) || b_ != o.b_) return false;
  return coeffs_ == o.coeffs_;
}

LinearizedPoly artin_schreier_poly(const FieldPtr& f, int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<FieldElement> c(n + 1, f->zero());
  c[0] = f->one();
  c[n] = f->one();
  return {f, f->characteristic(), std::move(c)};
}

FieldElement lin_eval(const LinearizedPoly& L, const FieldElement& x) {
  FieldPtr xf = x.field_ptr();
  FieldElement r = xf->zero();
  FieldElement xp = x;
  for (int i = 0; i <= L.sym_degree(); ++i) {
    FieldElement c = L.coeff(i);
    if (!c.is_zero()) r += embed(c, xf) * xp;
    if (i < L.sym_degree()) xp = xp.pow(L.base());
  }
  return r;
}

LinearizedPoly symbolic_compose(const LinearizedPoly& M, const LinearizedPoly& Q) {
  check_same_field(M.field(), Q.field());
  if (M.base() != Q.base()) throw std::invalid_argument("symbolic base mismatch");
  const FieldPtr& f = M.field();
  if (M.is_zero() || Q.is_zero()) return LinearizedPoly(f, M.base());
  std::vector<FieldElement> out(M.sym_degree() + Q.sym_degree() + 1, f->zero());
  for (int i = 0; i <= M.sym_degree(); ++i) {
    FieldElement mi = M.coeff(i);
    if (mi.is_zero()) continue;
    int64_t bi = 1;
    for (int k = 0; k < i; ++k) bi *= M.base();
    for (int j = 0; j <= Q.sym_degree(); ++j) {
      FieldElement qj = Q.coeff(j);
      if (qj.is_zero()) continue;
      out[i + j] += mi * qj.pow(bi);
    }
  }
  return {f, M.base(), std::move(out)};
}

std::pair<LinearizedPoly, LinearizedPoly> symbolic_divmod(const LinearizedPoly& R,
                                                          const LinearizedPoly& Q) {
  check_same_field(R.field(), Q.field());
  if (R.base() != Q.base()) throw std::invalid_argument("symbolic base mismatch");
  if (Q.is_zero()) throw std::domain_error("symbolic division by zero");
  const FieldPtr& f = R.field();
  int64_t b = R.base();
  int s = Q.sym_degree();
  std::vector<FieldElement> rem = R.coeffs();
  if (R.sym_degree() < s) return {LinearizedPoly(f, b), R};
  std::vector<FieldElement> quot(R.sym_degree() - s + 1, f->zero());
  for (int top = R.sym_degree(); top >= s; --top) {
    if (rem[top].is_zero()) continue;
    int t = top - s;
    // m_t T^{b^t} * Q has coefficient m_t q_{j}^{b^t} at slot t+j.
    int64_t bt = 1;
    for (int k = 0; k < t; ++k) bt *= b;
    FieldElement mt = rem[top] / Q.coeff(s).pow(bt);
    quot[t] = mt;
    for (int j = 0; j <= s; ++j) rem[t + j] -= mt * Q.coeff(j).pow(bt);
  }
  rem.resize(s);
  return {LinearizedPoly(f, b, std::move(quot)), LinearizedPoly(f, b, std::move(rem))};
}

bool symbolic_divides(const LinearizedPoly& Q, const LinearizedPoly& R) {
  return symbolic_divmod(R, Q).second.is_zero();
}

OrdinaryPoly to_ordinary(const LinearizedPoly& L) {
  const FieldPtr& f = L.field();
  if (L.is_zero()) return OrdinaryPoly(f);
  std::vector<FieldElement> out(L.ordinary_degree() + 1, f->zero());
  int64_t pos = 1;
  for (int i = 0; i <= L.sym_degree(); ++i) {
    out[pos] = L.coeff(i);
    pos *= L.base();
  }
  return {f, std::move(out)};
}

LinearizedPoly from_ordinary(const OrdinaryPoly& f, int64_t b) {
  const FieldPtr& fld = f.field();
  if (!fld) throw std::invalid_argument("null field");
  check_base(*fld, b);
  if (f.is_zero()) return LinearizedPoly(fld, b);
  std::vector<FieldElement> out;
  int64_t pos = 1;
  while (pos <= f.degree()) {
    out.push_back(f.coeff(pos));
    pos *= b;
  }
  // Everything off the b-power support must vanish, including the constant.
  int64_t next = 1;
  size_t k = 0;
  for (int64_t j = 0; j <= f.degree(); ++j) {
    if (j == next && k < out.size()) {
      next *= b;
      ++k;
      continue;
    }
    if (!f.coeff(j).is_zero())
      throw std::invalid_argument("polynomial is not linearized for this base");
  }
  return {fld, b, std::move(out)};
}

LinearizedPoly with_base(const LinearizedPoly& L, int64_t new_b) {
  const FieldPtr& f = L.field();
  check_base(*f, new_b);
  if (L.base() == new_b) return L;
  if (L.is_zero()) return LinearizedPoly(f, new_b);
  // b = new_b^k: spread coefficients; new_b = b^k: gather, interior must vanish.
  auto log_in = [](int64_t value, int64_t base) -> int {
    int e = 0;
    int64_t v = 1;
    while (v < value) {
      v *= base;
      ++e;
    }
    return v == value ? e : -1;
  };
  int k = log_in(L.base(), new_b);
  if (k > 0) {
    std::vector<FieldElement> out(static_cast<size_t>(L.sym_degree()) * k + 1, f->zero());
    for (int i = 0; i <= L.sym_degree(); ++i) out[static_cast<size_t>(i) * k] = L.coeff(i);
    return {f, new_b, std::move(out)};
  }
  k = log_in(new_b, L.base());
  if (k > 0) {
    if (L.sym_degree() % k != 0)
      throw std::invalid_argument("degree not representable in the new base");
    std::vector<FieldElement> out(L.sym_degree() / k + 1, f->zero());
    for (int i = 0; i <= L.sym_degree(); ++i) {
      if (i % k == 0) {
        out[i / k] = L.coeff(i);
      } else if (!L.coeff(i).is_zero()) {
        throw std::invalid_argument("coefficient support not representable in the new base");
      }
    }
    return {f, new_b, std::move(out)};
  }
  throw std::invalid_argument("incompatible symbolic bases");
}

LinearizedPoly subspace_poly(const std::vector<FieldElement>& H, int64_t b) {
  if (H.empty()) throw std::invalid_argument("empty subspace");
  FieldPtr f = H[0].field_ptr();
  check_base(*f, b);
  std::vector<uint32_t> idx;
  idx.reserve(H.size());
  for (const auto& x : H) {
    if (!f->same_as(x.field())) throw std::invalid_argument("field mismatch in subspace");
    idx.push_back(x.index());
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("repeated subspace element");
  if (idx[0] != 0) throw std::invalid_argument("subspace does not contain zero");
  // |H| = b^k and closure under addition and under scaling by the subfield of
  // order b (elements fixed by x -> x^b).
  {
    int64_t n = static_cast<int64_t>(idx.size());
    int64_t v = 1;
    while (v < n) v *= b;
    if (v != n) throw std::invalid_argument("subspace size is not a power of the base");
  }
  std::vector<bool> member(f->size(), false);
  for (uint32_t i : idx) member[i] = true;
  std::vector<uint32_t> scalars;
  for (uint32_t s = 0; s < f->size(); ++s)
    if (f->idx_pow(s, b) == s) scalars.push_back(s);
  if (static_cast<int64_t>(scalars.size()) != b)
    throw std::logic_error("subfield of the scaling order not found");
  for (uint32_t a : idx) {
    for (uint32_t c : idx)
      if (!member[f->idx_add(a, c)]) throw std::invalid_argument("set is not closed under addition");
    for (uint32_t s : scalars)
      if (!member[f->idx_mul(s, a)]) throw std::invalid_argument("set is not closed under scaling");
  }
  OrdinaryPoly prod(f, {f->one()});
  for (uint32_t i : idx) {
    OrdinaryPoly lin(f, {-f->element(i), f->one()});
    prod = prod * lin;
  }
  return from_ordinary(prod, b);  // roots all simple by construction
}

FieldElement moore_det(const std::vector<FieldElement>& elems, int64_t b) {
  if (elems.empty()) throw std::invalid_argument("empty element family");
  FieldPtr f = elems[0].field_ptr();
  check_base(*f, b);
  size_t d = elems.size();
  std::vector<std::vector<FieldElement>> m(d, std::vector<FieldElement>(d, f->zero()));
  for (size_t j = 0; j < d; ++j) {
    if (!f->same_as(elems[j].field())) throw std::invalid_argument("field mismatch");
    FieldElement v = elems[j];
    for (size_t i = 0; i < d; ++i) {
      m[i][j] = v;
      v = v.pow(b);
    }
  }
  FieldElement det = f->one();
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) return f->zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    FieldElement inv = m[col][col].inv();
    for (size_t j = col; j < d; ++j) m[col][j] *= inv;
    for (size_t r = col + 1; r < d; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldElement factor = m[r][col];
      for (size_t j = col; j < d; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

std::pair<LinearizedPoly, LinearizedPoly> symbolic_cofactor(
    const LinearizedPoly& A, const std::vector<FieldElement>& basis, int split) {
  const FieldPtr& f = A.field();
  if (!f) throw std::invalid_argument("null polynomial");
  if (!A.monic()) throw std::invalid_argument("polynomial must be monic");
  if (!A.separable()) throw std::invalid_argument("polynomial must be separable");
  int d = A.sym_degree();
  if (static_cast<int>(basis.size()) != d)
    throw std::invalid_argument("basis size must match the symbolic degree");
  if (split < 1 || split > d) throw std::invalid_argument("split index out of range");
  int64_t b = A.base();
  for (const auto& w : basis) {
    if (!f->same_as(w.field())) throw std::invalid_argument("basis field mismatch");
    if (!lin_eval(A, w).is_zero()) throw std::invalid_argument("basis element is not a root");
  }
  if (moore_det(basis, b).is_zero())
    throw std::invalid_argument("basis is not independent (Moore determinant zero)");

  // Span of the first `split` basis vectors over the order-b subfield.
  std::vector<uint32_t> scalars;
  for (uint32_t s = 0; s < f->size(); ++s)
    if (f->idx_pow(s, b) == s) scalars.push_back(s);
  std::vector<FieldElement> H = {f->zero()};
  for (int j = 0; j < split; ++j) {
    std::vector<FieldElement> next;
    next.reserve(H.size() * scalars.size());
    for (const auto& h : H)
      for (uint32_t s : scalars) next.push_back(h + f->element(s) * basis[j]);
    H = std::move(next);
  }
  LinearizedPoly Ai = subspace_poly(H, b);

  int t = d - split;
  LinearizedPoly Mi(f, b);
  if (t == 0) {
    Mi = LinearizedPoly(f, b, {f->one()});
  } else {
    std::vector<std::vector<FieldElement>> m(t, std::vector<FieldElement>(t, f->zero()));
    std::vector<FieldElement> rhs(t, f->zero());
    for (int r = 0; r < t; ++r) {
      FieldElement sigma = lin_eval(Ai, basis[split + r]);
      FieldElement v = sigma;
      for (int c = 0; c < t; ++c) {
        m[r][c] = v;
        v = v.pow(b);
      }
      rhs[r] = -v;  // v = sigma^{b^t}
    }
    for (int col = 0; col < t; ++col) {
      int piv = col;
      while (piv < t && m[piv][col].is_zero()) ++piv;
      if (piv == t) throw std::logic_error("singular Moore system");
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
      FieldElement inv = m[col][col].inv();
      for (int j = col; j < t; ++j) m[col][j] *= inv;
      rhs[col] *= inv;
      for (int r = 0; r < t; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        FieldElement factor = m[r][col];
        for (int j = col; j < t; ++j) m[r][j] -= factor * m[col][j];
        rhs[r] -= factor * rhs[col];
      }
    }
    rhs.push_back(f->one());
    Mi = LinearizedPoly(f, b, std::move(rhs));
  }

  if (symbolic_compose(Mi, Ai) != A) throw std::logic_error("cofactor does not compose to A");
  if (!Mi.monic() || !Mi.separable()) throw std::logic_error("cofactor is not monic separable");
  if (Mi.coeff(0) * Ai.coeff(0) != A.coeff(0))
    throw std::logic_error("cofactor constant-term law violated");
  return {Ai, Mi};
}

std::string to_string(const LinearizedPoly& L, std::string_view var) {
  if (L.is_zero()) return "0";
  std::string out;
  for (int i = L.sym_degree(); i >= 0; --i) {
    FieldElement c = L.coeff(i);
    if (c.is_zero()) continue;
    int64_t e = 1;
    for (int k = 0; k < i; ++k) e *= L.base();
    std::string term(var);
    if (e > 1) term += "^" + std::to_string(e);
    if (!c.is_one()) term = to_power_string(c) + "*" + term;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

nlohmann::ordered_json linpoly_json(const LinearizedPoly& L) {
  nlohmann::ordered_json j;
  j["base"] = L.base();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int i = 0; i <= L.sym_degree(); ++i) coeffs.push_back(element_json(L.coeff(i)));
  j["coeffs"] = coeffs;
  return j;
}

}  // namespace asdescent
