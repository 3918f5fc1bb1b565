#include "asdescent/descent.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace asdescent {

namespace {

// fq2 must be a quadratic extension; returns its base.
FieldPtr quadratic_base(const FieldPtr& fq2) {
  if (!fq2) throw std::invalid_argument("null field");
  if (fq2->ext_degree() != 2 || fq2->base() == nullptr)
    throw std::invalid_argument("field is not a quadratic extension");
  return fq2->base_ptr();
}

std::vector<FieldElement> span_closure(const FieldPtr& fq2, int64_t p,
                                       const std::vector<FieldElement>& basis, size_t upto) {
  std::vector<FieldElement> span = {fq2->zero()};
  for (size_t j = 0; j < upto; ++j) {
    std::vector<FieldElement> next;
    next.reserve(span.size() * p);
    for (const auto& h : span) {
      FieldElement shift = fq2->zero();
      for (int64_t c = 0; c < p; ++c) {
        next.push_back(h + shift);
        shift += basis[j];
      }
    }
    span = std::move(next);
  }
  std::sort(span.begin(), span.end(),
            [](const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); });
  return span;
}

void validate_chain(const SubspaceChain& chain) {
  if (!chain.fq || !chain.fq2) throw std::invalid_argument("chain has null fields");
  int64_t q = chain.fq->size();
  int n = chain.fq->degree_over_prime();
  if (static_cast<int>(chain.basis.size()) != n)
    throw std::invalid_argument("basis size must equal the degree of F_q over its prime field");
  if (chain.spans.size() != chain.basis.size())
    throw std::invalid_argument("span list does not match the basis");
  for (const auto& w : chain.basis) {
    if (!chain.fq2->same_as(w.field())) throw std::invalid_argument("basis field mismatch");
    if (!(w.pow(q) + w).is_zero())
      throw std::invalid_argument("basis element is not in the trace-zero set");
  }
  if (moore_det(chain.basis, chain.fq->characteristic()).is_zero())
    throw std::invalid_argument("basis is not independent over the prime field");
  int64_t expect = 1;
  for (size_t i = 0; i < chain.spans.size(); ++i) {
    expect *= chain.fq->characteristic();
    if (static_cast<int64_t>(chain.spans[i].size()) != expect)
      throw std::invalid_argument("span has the wrong cardinality");
    if (!verify_galois_stability(chain.spans[i], q))
      throw std::invalid_argument("span is not Galois stable");
  }
}

SubspaceChain assemble_chain(const FieldPtr& fq2, std::vector<FieldElement> basis) {
  SubspaceChain chain;
  chain.fq = quadratic_base(fq2);
  chain.fq2 = fq2;
  chain.basis = std::move(basis);
  int64_t p = chain.fq->characteristic();
  for (size_t i = 1; i <= chain.basis.size(); ++i)
    chain.spans.push_back(span_closure(fq2, p, chain.basis, i));
  validate_chain(chain);
  return chain;
}

int64_t dlog_or_throw(const FieldElement& x) {
  auto l = x.dlog();
  if (!l) throw std::logic_error("discrete log of zero");
  return *l;
}

// -1 for zero, else the discrete log; total order used for display sorting.
int64_t sort_key(const FieldElement& x) { return x.is_zero() ? -1 : dlog_or_throw(x); }

}  // namespace

std::vector<FieldElement> trace_zero_kernel(const FieldPtr& fq2) {
  FieldPtr fq = quadratic_base(fq2);
  int64_t q = fq->size();
  std::vector<FieldElement> out;
  out.reserve(q);
  for (int64_t i = 0; i < fq2->size(); ++i) {
    FieldElement x = fq2->element(static_cast<uint32_t>(i));
    if ((x.pow(q) + x).is_zero()) out.push_back(x);
  }
  if (static_cast<int64_t>(out.size()) != q)
    throw std::logic_error("trace-zero set has unexpected size");
  return out;
}

SubspaceChain canonical_chain(const FieldPtr& fq2) {
  FieldPtr fq = quadratic_base(fq2);
  int64_t p = fq->characteristic();
  int64_t q = fq->size();
  int n = fq->degree_over_prime();
  std::vector<FieldElement> basis;
  FieldElement wpow = fq->one();
  for (int j = 0; j < n; ++j) {
    basis.push_back(embed(wpow, fq2));
    wpow *= fq->generator();
  }
  if (p != 2) {
    FieldElement a0 = fq2->generator().pow((q + 1) / 2);
    for (auto& b : basis) b = a0 * b;
  }
  return assemble_chain(fq2, std::move(basis));
}

SubspaceChain chain_from_norms(const FieldPtr& fq2, const std::vector<int64_t>& norm_dlogs) {
  FieldPtr fq = quadratic_base(fq2);
  int64_t p = fq->characteristic();
  if (p == 2) throw std::invalid_argument("norm overrides require odd characteristic");
  int64_t q = fq->size();
  int n = fq->degree_over_prime();
  if (static_cast<int>(norm_dlogs.size()) > n)
    throw std::invalid_argument("more norms than basis slots");

  std::vector<FieldElement> basis;
  std::unordered_set<uint32_t> span_idx;
  auto span_of_current = [&]() {
    auto s = span_closure(fq2, p, basis, basis.size());
    span_idx.clear();
    for (const auto& x : s) span_idx.insert(x.index());
  };
  span_of_current();

  for (int64_t k : norm_dlogs) {
    int64_t kk = k % (q - 1);
    if (kk < 0) kk += q - 1;
    FieldElement a = fq->generator().pow(kk);
    FieldElement ma = embed(-a, fq2);
    int64_t l = dlog_or_throw(ma);
    if (l % 2 != 0) throw std::invalid_argument("value is not a norm from the trace-zero set");
    FieldElement root = fq2->generator().pow(l / 2);  // the smaller-log square root
    if (!(root.pow(q) + root).is_zero())
      throw std::invalid_argument("value is not a norm from the trace-zero set");
    if (span_idx.count(root.index()))
      throw std::invalid_argument("selected roots are dependent");
    basis.push_back(root);
    span_of_current();
  }

  FieldElement a0 = fq2->generator().pow((q + 1) / 2);
  FieldElement wpow = fq2->one();
  for (int j = 0; j < n && static_cast<int>(basis.size()) < n; ++j) {
    FieldElement cand = a0 * wpow;
    wpow *= embed(fq->generator(), fq2);
    if (span_idx.count(cand.index())) continue;
    basis.push_back(cand);
    span_of_current();
  }
  if (static_cast<int>(basis.size()) != n)
    throw std::logic_error("canonical fill failed to complete the basis");
  return assemble_chain(fq2, std::move(basis));
}

bool verify_galois_stability(const std::vector<FieldElement>& H, int64_t q) {
  if (H.empty()) return true;
  std::unordered_set<uint32_t> idx;
  for (const auto& x : H) idx.insert(x.index());
  for (const auto& x : H)
    if (!idx.count(x.pow(q).index())) return false;
  return true;
}

namespace {

LinearizedPoly project_poly(const LinearizedPoly& L, const FieldPtr& fq) {
  std::vector<FieldElement> out;
  out.reserve(L.sym_degree() + 1);
  for (int i = 0; i <= L.sym_degree(); ++i) {
    FieldElement c = L.coeff(i);
    if (!lies_in_base(c)) throw std::logic_error("coefficient does not lie in F_q");
    out.push_back(project_to_base(c));
  }
  (void)fq;
  return {out.empty() ? fq : out[0].field_ptr(), L.base(), std::move(out)};
}

// c^p shift: T^p composed with L.
LinearizedPoly frobenius_twist(const LinearizedPoly& L) {
  const FieldPtr& f = L.field();
  LinearizedPoly frob(f, L.base(), {f->zero(), f->one()});
  return symbolic_compose(frob, L);
}

LinearizedPoly scale(const FieldElement& c, const LinearizedPoly& L) {
  std::vector<FieldElement> out = L.coeffs();
  for (auto& x : out) x *= c;
  return {L.field(), L.base(), std::move(out)};
}

LinearizedPoly subtract(const LinearizedPoly& a, const LinearizedPoly& b) {
  std::vector<FieldElement> out(std::max(a.sym_degree(), b.sym_degree()) + 1, a.field()->zero());
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return {a.field(), a.base(), std::move(out)};
}

// New elements of H_i relative to H_{i-1} (sorted by index).
std::vector<FieldElement> new_elements(const SubspaceChain& chain, int i) {
  const auto& cur = chain.spans[i - 1];
  if (i == 1) {
    std::vector<FieldElement> out;
    for (const auto& x : cur)
      if (!x.is_zero()) out.push_back(x);
    return out;
  }
  std::unordered_set<uint32_t> prev;
  for (const auto& x : chain.spans[i - 2]) prev.insert(x.index());
  std::vector<FieldElement> out;
  for (const auto& x : cur)
    if (!prev.count(x.index())) out.push_back(x);
  return out;
}

std::string defined_as_string(const SubspaceChain& chain, int i, int n) {
  int64_t p = chain.fq->characteristic();
  std::string lhs = "t_" + std::to_string(n - i) + " = ";
  std::string rhs = (i == 1) ? "z" : "t_" + std::to_string(n - i + 1);
  auto fresh = new_elements(chain, i);
  if (p == 2) {
    // Pair the new elements into H_1-cosets {a, a + w_1}; representative is
    // the smaller index. With w_1 = 1 the pair renders as (z+a)(z+a+1).
    bool unit_w1 = chain.basis[0].is_one();
    std::unordered_set<uint32_t> seen;
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    std::vector<FieldElement> singles;
    if (i == 1) {
      singles = fresh;  // single nonzero element of H_1
    } else {
      for (const auto& x : fresh) {
        if (seen.count(x.index())) continue;
        FieldElement partner = x + chain.basis[0];
        seen.insert(x.index());
        seen.insert(partner.index());
        FieldElement a = x.index() < partner.index() ? x : partner;
        FieldElement b = x.index() < partner.index() ? partner : x;
        pairs.emplace_back(a, b);
      }
      // Display order follows F_q discrete logs (kernel elements lie in F_q
      // when p = 2, so projection is always possible here).
      std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) {
        return sort_key(project_to_base(l.first)) < sort_key(project_to_base(r.first));
      });
    }
    auto render = [](const FieldElement& x) {
      return to_power_string(lies_in_base(x) ? project_to_base(x) : x);
    };
    for (const auto& s : singles) rhs += "(z+" + render(s) + ")";
    for (const auto& [a, b] : pairs) {
      rhs += "(z+" + render(a) + ")";
      if (unit_w1)
        rhs += "(z+" + render(a) + "+1)";
      else
        rhs += "(z+" + render(b) + ")";
    }
  } else {
    // +/- pairs collapse to quadratic factors z^2 + norm.
    std::vector<FieldElement> norms;
    std::unordered_set<uint32_t> seen;
    for (const auto& x : fresh) {
      FieldElement nrm = trace_norm(x, *chain.fq).second;
      if (seen.insert(nrm.index()).second) norms.push_back(nrm);
    }
    std::sort(norms.begin(), norms.end(),
              [](const FieldElement& a, const FieldElement& b) { return sort_key(a) < sort_key(b); });
    for (const auto& nrm : norms) rhs += "(z^2+" + to_power_string(nrm) + ")";
  }
  return lhs + rhs;
}

}  // namespace

DescentTable descent_table(const SubspaceChain& chain) {
  validate_chain(chain);
  DescentTable t;
  t.fq = chain.fq;
  t.fq2 = chain.fq2;
  t.chain = chain;
  int64_t p = chain.fq->characteristic();
  int n = chain.fq->degree_over_prime();
  LinearizedPoly A = artin_schreier_poly(chain.fq2, n);

  std::vector<LinearizedPoly> P(n + 1);  // P[i] over F_q, 1-based; P[n] = T^q+T
  for (int i = 1; i < n; ++i) {
    auto [Ai, Mi] = symbolic_cofactor(A, chain.basis, i);
    DescentRow row;
    row.i = i;
    row.P = project_poly(Ai, chain.fq);
    row.M = project_poly(Mi, chain.fq);
    row.defined_as = defined_as_string(chain, i, n);
    P[i] = row.P;
    t.rows.push_back(std::move(row));
  }
  P[n] = artin_schreier_poly(chain.fq, n);

  for (int j = 2; j <= n; ++j) {
    const LinearizedPoly& prev = P[j - 1];
    FieldElement val = lin_eval(prev, chain.basis[j - 1]);  // in F_{q^2}
    FieldElement wj2 = val.pow(p - 1);
    if (!lies_in_base(wj2)) throw std::logic_error("recursion constant not in F_q");
    FieldElement Wj = project_to_base(wj2);
    if (Wj.is_zero()) throw std::logic_error("recursion constant vanishes");
    if (subtract(frobenius_twist(prev), scale(Wj, prev)) != P[j])
      throw std::logic_error("one-step recursion identity failed");
    t.W.push_back(Wj);
  }
  return t;
}

std::vector<OrdinaryPoly> odd_p_factorization(const FieldPtr& fq2) {
  FieldPtr fq = quadratic_base(fq2);
  if (fq->characteristic() == 2)
    throw std::invalid_argument("quadratic factorization requires odd characteristic");
  int64_t q = fq->size();

  std::vector<FieldElement> norms;
  {
    std::unordered_set<uint32_t> seen;
    for (const auto& x : trace_zero_kernel(fq2)) {
      if (x.is_zero()) continue;
      FieldElement nrm = trace_norm(x, *fq).second;
      if (seen.insert(nrm.index()).second) norms.push_back(nrm);
    }
  }
  std::sort(norms.begin(), norms.end(),
            [](const FieldElement& a, const FieldElement& b) { return sort_key(a) < sort_key(b); });
  if (static_cast<int64_t>(norms.size()) != (q - 1) / 2)
    throw std::logic_error("norm set has unexpected size");

  OrdinaryPoly P = to_ordinary(artin_schreier_poly(fq, fq->degree_over_prime()));
  // Cross-check against trial division over all of F_q^*.
  std::unordered_set<uint32_t> norm_idx;
  for (const auto& nrm : norms) norm_idx.insert(nrm.index());
  for (int64_t i = 1; i < q; ++i) {
    FieldElement a = fq->element(static_cast<uint32_t>(i));
    OrdinaryPoly quad(fq, {a, fq->zero(), fq->one()});
    bool divides = ordinary_divides(quad, P);
    if (divides != (norm_idx.count(a.index()) > 0))
      throw std::logic_error("trial division disagrees with the norm set");
  }

  std::vector<OrdinaryPoly> out;
  out.push_back(OrdinaryPoly(fq, {fq->zero(), fq->one()}));
  OrdinaryPoly prod = out[0];
  for (const auto& nrm : norms) {
    out.emplace_back(fq, std::vector<FieldElement>{nrm, fq->zero(), fq->one()});
    prod = prod * out.back();
  }
  if (prod != P) throw std::logic_error("factor product does not reproduce T^q + T");
  return out;
}

std::vector<std::vector<FieldElement>> level_norms(const SubspaceChain& chain) {
  validate_chain(chain);
  std::vector<std::vector<FieldElement>> out;
  for (int i = 1; i <= static_cast<int>(chain.spans.size()); ++i) {
    std::vector<FieldElement> norms;
    std::unordered_set<uint32_t> seen;
    for (const auto& x : new_elements(chain, i)) {
      FieldElement nrm = trace_norm(x, *chain.fq).second;
      if (seen.insert(nrm.index()).second) norms.push_back(nrm);
    }
    std::sort(norms.begin(), norms.end(),
              [](const FieldElement& a, const FieldElement& b) { return sort_key(a) < sort_key(b); });
    out.push_back(std::move(norms));
  }
  return out;
}

nlohmann::ordered_json descent_json(const DescentTable& t) {
  nlohmann::ordered_json j;
  j["q"] = t.fq->size();
  j["modulus"] = t.fq->modulus_string();
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& w : t.chain.basis) basis.push_back(element_json(w));
  j["basis"] = basis;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["i"] = row.i;
    r["P"] = linpoly_json(row.P);
    r["M"] = linpoly_json(row.M);
    rows.push_back(r);
  }
  j["rows"] = rows;
  nlohmann::ordered_json rec = nlohmann::ordered_json::array();
  for (size_t k = 0; k < t.W.size(); ++k) {
    nlohmann::ordered_json r;
    r["j"] = static_cast<int>(k + 2);
    r["W"] = element_json(t.W[k]);
    rec.push_back(r);
  }
  j["recursion"] = rec;
  return j;
}

std::string descent_text(const DescentTable& t) {
  std::string out;
  int64_t q = t.fq->size();
  out += "q = " + std::to_string(q) + " = " + std::to_string(t.fq->characteristic()) + "^" +
         std::to_string(t.fq->degree_over_prime()) + "\n";
  out += "F_q: modulus " + t.fq->modulus_string() + ", generator " + t.fq->generator_name() + "\n";
  out += "F_q^2: modulus " + t.fq2->modulus_string() + ", generator " +
         t.fq2->generator_name() + "\n";
  out += "basis: (";
  for (size_t j = 0; j < t.chain.basis.size(); ++j) {
    const FieldElement& w = t.chain.basis[j];
    if (j) out += ", ";
    out += to_power_string(lies_in_base(w) ? project_to_base(w) : w);
  }
  out += ")\n";
  for (const auto& row : t.rows) {
    std::string label(1, static_cast<char>('a' + row.i - 1));
    out += "(" + label + ") " + row.defined_as + ", M_" + std::to_string(row.i) + " = " +
           to_string(row.M) + "\n";
  }
  for (size_t k = 0; k < t.W.size(); ++k)
    out += "W_" + std::to_string(k + 2) + " = " + to_power_string(t.W[k]) + "\n";
  if (t.fq->characteristic() != 2) {
    auto factors = odd_p_factorization(t.fq2);
    out += "T^" + std::to_string(q) + " + T = T";
    for (size_t k = 1; k < factors.size(); ++k)
      out += "(T^2+" + to_power_string(factors[k].coeff(0)) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace asdescent
