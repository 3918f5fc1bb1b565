#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "asdescent/ff.hpp"
#include "asdescent/linpoly.hpp"

namespace asdescent {

// Nested F_p-subspaces H_1 < ... < H_n of the trace-zero set
// {a in F_{q^2} : a^q + a = 0}, presented by a basis w_1..w_n.
struct SubspaceChain {
  FieldPtr fq;
  FieldPtr fq2;
  std::vector<FieldElement> basis;               // w_1..w_n, elements of fq2
  std::vector<std::vector<FieldElement>> spans;  // spans[i-1] = H_i, sorted by index
};

// All roots of T^q + T in F_{q^2} (exhaustive scan), sorted by index.
// For p = 2 this is F_q itself; for odd p it meets F_q only in zero.
std::vector<FieldElement> trace_zero_kernel(const FieldPtr& fq2);

// p = 2: basis (1, w, ..., w^{n-1}) with w the generator of F_q, embedded.
// p odd: the same list scaled by a0 = W^{(q+1)/2}, W the generator of F_{q^2};
// a0 generates the trace-zero line over F_q since a0^q = -a0.
SubspaceChain canonical_chain(const FieldPtr& fq2);

// Odd p only. Each norm value a = g^k selects the trace-zero pair with
// x^2 = -a; the root with the smaller discrete log joins the basis. Slots
// beyond the given norms are filled from the canonical basis, skipping
// dependent candidates.
SubspaceChain chain_from_norms(const FieldPtr& fq2, const std::vector<int64_t>& norm_dlogs);

// True iff x -> x^q maps H into itself. Holds for any F_p-subspace of the
// trace-zero set, where the map acts as negation.
bool verify_galois_stability(const std::vector<FieldElement>& H, int64_t q);

struct DescentRow {
  int i = 0;              // 1..n-1
  LinearizedPoly P;       // subspace polynomial of H_i, coefficients in F_q
  LinearizedPoly M;       // cofactor: (M * P)(T) = T^q + T
  std::string defined_as; // t_{n-i} as an incremental product of root factors
};

struct DescentTable {
  FieldPtr fq;
  FieldPtr fq2;
  SubspaceChain chain;
  std::vector<DescentRow> rows;  // empty when n = 1
  // W_2..W_n in F_q, with P_j = P_{j-1}^p - W_j P_{j-1} and W_j = P_{j-1}(w_j)^{p-1}.
  std::vector<FieldElement> W;
};

// Splits T^q + T along the chain: row i holds P_i (degree p^i) and the unique
// monic separable cofactor M_i (degree p^{n-i}). Both are checked to have all
// coefficients in F_q and are returned over F_q; the recursion constants are
// recomputed and verified coefficient-wise against the direct expansion.
DescentTable descent_table(const SubspaceChain& chain);

// Odd p: T^q + T = T * prod (T^2 + a) over F_q, the a running over the norms
// of the nonzero trace-zero elements. Returned as [T, quadratics...] with the
// quadratic constants sorted by discrete log; the product is verified both by
// trial division and against the norm set.
std::vector<OrdinaryPoly> odd_p_factorization(const FieldPtr& fq2);

// Norms of H_i \ H_{i-1} (new elements at level i), deduplicated and sorted
// by discrete log; entry [i-1] belongs to level i.
std::vector<std::vector<FieldElement>> level_norms(const SubspaceChain& chain);

nlohmann::ordered_json descent_json(const DescentTable& t);
// One "(a)", "(b)", ... line per level, each carrying the incremental product
// definition of t_{n-i} and "M_i = ...".
std::string descent_text(const DescentTable& t);

}  // namespace asdescent
