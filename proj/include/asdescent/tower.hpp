#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "asdescent/descent.hpp"
#include "asdescent/ff.hpp"
#include "asdescent/linpoly.hpp"

namespace asdescent {

enum class TowerKind { rational, artin_schreier, intermediate, recursion_link };

// One step of a tower presentation. level = (stage i, intermediate index s)
// with s = 0 for the Garcia-Stichtenoth steps themselves.
struct TowerRecord {
  int stage = 1;
  int sub = 0;
  std::string new_var;
  TowerKind kind = TowerKind::rational;
  std::string label;       // field-extension line, e.g. "G_{1,1} = G_1(t_1)"
  std::string relation;    // minimal-polynomial equation ("" for the base)
  std::string step;        // one-step ladder equation ("" when none)
  std::string defined_as;  // substitution defining the variable ("" when none)
  int64_t degree_over_prev = 1;
};

// Garcia-Stichtenoth tower over F_{q^2}: z_{i+1}^q + z_{i+1} = x_i^{q+1} with
// x_i = z_i/x_{i-1}. depth counts stages F_1..F_depth; depth <= 16.
std::vector<TowerRecord> gs_tower(const FieldPtr& fq2, int depth);

// Completed, descended tower over F_q: between G_{i,0} and G_{i+1,0} the
// intermediate steps t_{i,s} with minimal polynomial M_{n-s}(t) = x_i^{q+1},
// linked by t_{i,s+1}^p - W_{n-s} t_{i,s+1} = t_{i,s}. Stage 1 uses the bare
// names x, z, t_s; later stages are subscripted. The one-step relations are
// verified to compose back to every M_{n-s} before returning. When n = 1
// there are no intermediate steps and the shape is the plain tower.
std::vector<TowerRecord> completed_tower(const DescentTable& table, int depth);

// q(p^i - 1)/2 for 1 <= i <= n; i = n gives the Hermitian genus q(q-1)/2.
int64_t first_stage_genus(const FieldPtr& fq, int i);

struct CurveStats {
  int64_t q = 0;
  int i = 0;
  int64_t genus = 0;
  int64_t n1_over_fq = 0;
  int64_t n_over_fq2 = 0;
  bool maximal = false;
};

// Rational places of G_{1,i}: affine solutions of M_{n-i}(t) = x^{q+1} over
// the given field (F_q or F_{q^2}) plus the fully ramified infinite place.
// The affine model is smooth since M_{n-i} is separable. Enumeration may be
// split across ASDESCENT_WORKERS threads; the count is partition-independent.
int64_t count_places_first_stage(const DescentTable& table, int i, const FieldPtr& over);

// Counts over both fields and compares N(F_{q^2}) with the Weil bound
// q^2 + 1 + 2 g_i q. Guarded by q^3 <= 2^20 to keep enumeration bounded.
CurveStats check_maximality(const DescentTable& table, int i);

nlohmann::ordered_json tower_json(const std::vector<TowerRecord>& records);
nlohmann::ordered_json curve_stats_json(const CurveStats& s);
// Ladder rendering, top of the tower first.
std::string tower_text(const std::vector<TowerRecord>& records);

}  // namespace asdescent
