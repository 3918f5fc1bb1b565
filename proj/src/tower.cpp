#include "asdescent/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace asdescent {

namespace {

constexpr int kMaxDepth = 16;

int worker_count() {
  const char* env = std::getenv("ASDESCENT_WORKERS");
  if (!env || !*env) return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  if (v > 64) return 64;
  return static_cast<int>(v);
}

std::string subscript(const std::string& base, int i) { return base + "_" + std::to_string(i); }

// t_{i,s}: bare "t_s" in stage 1, "t_{i,s}" later.
std::string t_name(int stage, int s) {
  if (stage == 1) return "t_" + std::to_string(s);
  return "t_{" + std::to_string(stage) + "," + std::to_string(s) + "}";
}

std::string x_name(int stage, bool bare_stage1) {
  if (stage == 1 && bare_stage1) return "x";
  return subscript("x", stage);
}

std::string z_name(int stage, bool bare_stage1) {
  // z_{i+1} generates stage i -> i+1; bare "z" for the first stage.
  if (stage == 1 && bare_stage1) return "z";
  return subscript("z", stage + 1);
}

std::string g_label(int stage, int sub) {
  if (sub == 0) return subscript("G", stage);
  return "G_{" + std::to_string(stage) + "," + std::to_string(sub) + "}";
}

void check_depth(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (depth > kMaxDepth) throw std::invalid_argument("depth exceeds the symbolic cap");
}

// Plain recursive tower records, parameterized so the same generator serves
// the base tower over F_{q^2} and its descent when n = 1.
std::vector<TowerRecord> plain_tower(int64_t q, int depth, const std::string& prefix,
                                     const std::string& base_field) {
  std::vector<TowerRecord> out;
  TowerRecord base;
  base.stage = 1;
  base.sub = 0;
  base.new_var = "x_1";
  base.kind = TowerKind::rational;
  base.label = subscript(prefix, 1) + " = " + base_field + "(x_1)";
  out.push_back(base);
  for (int i = 1; i < depth; ++i) {
    TowerRecord as;
    as.stage = i + 1;
    as.sub = 0;
    as.new_var = subscript("z", i + 1);
    as.kind = TowerKind::artin_schreier;
    as.label = subscript(prefix, i + 1) + " = " + subscript(prefix, i) + "(" + as.new_var + ")";
    as.relation = as.new_var + "^" + std::to_string(q) + " + " + as.new_var + " = " +
                  subscript("x", i) + "^" + std::to_string(q + 1);
    as.degree_over_prev = q;
    out.push_back(as);
    if (i + 1 < depth) {
      TowerRecord link;
      link.stage = i + 1;
      link.sub = 0;
      link.new_var = subscript("x", i + 1);
      link.kind = TowerKind::recursion_link;
      link.relation = subscript("x", i + 1) + " = " + subscript("z", i + 1) + "/" +
                      subscript("x", i);
      link.degree_over_prev = 1;
      out.push_back(link);
    }
  }
  return out;
}

void check_table(const DescentTable& table) {
  if (!table.fq || !table.fq2) throw std::invalid_argument("table has null fields");
  int n = table.fq->degree_over_prime();
  if (static_cast<int>(table.rows.size()) != (n > 1 ? n - 1 : 0) ||
      static_cast<int>(table.W.size()) != (n > 1 ? n - 1 : 0))
    throw std::invalid_argument("descent table is incomplete");
}

}  // namespace

std::vector<TowerRecord> gs_tower(const FieldPtr& fq2, int depth) {
  check_depth(depth);
  if (!fq2 || fq2->ext_degree() != 2 || fq2->base() == nullptr)
    throw std::invalid_argument("tower base must be a quadratic extension");
  int64_t q = fq2->base()->size();
  return plain_tower(q, depth, "F", "F_" + std::to_string(fq2->size()));
}

std::vector<TowerRecord> completed_tower(const DescentTable& table, int depth) {
  check_depth(depth);
  check_table(table);
  const FieldPtr& fq = table.fq;
  int64_t p = fq->characteristic();
  int64_t q = fq->size();
  int n = fq->degree_over_prime();
  if (n == 1) return plain_tower(q, depth, "G", "F_" + std::to_string(q));

  // One-step polynomials S_s(T) = T^p - W_{n-s+1} T must compose back to
  // every M_{n-s} and finally, with P_1, to T^q + T.
  std::vector<LinearizedPoly> S(n);  // S[s] for s = 1..n-1
  for (int s = 1; s <= n - 1; ++s)
    S[s] = LinearizedPoly(fq, p, {-table.W[n - s - 1], fq->one()});
  LinearizedPoly acc = S[1];
  for (int s = 1; s <= n - 1; ++s) {
    if (s > 1) acc = symbolic_compose(acc, S[s]);
    if (acc != table.rows[n - s - 1].M)
      throw std::logic_error("one-step relations do not compose to the cofactor");
  }
  if (symbolic_compose(acc, table.rows[0].P) != artin_schreier_poly(fq, n))
    throw std::logic_error("ladder composition does not reproduce T^q + T");

  std::vector<TowerRecord> out;
  TowerRecord base;
  base.stage = 1;
  base.sub = 0;
  base.new_var = "x";
  base.kind = TowerKind::rational;
  base.label = "G_1 = F_" + std::to_string(q) + "(x)";
  out.push_back(base);

  std::string rhs_pow = "^" + std::to_string(q + 1);
  for (int i = 1; i < depth; ++i) {
    bool bare = (i == 1);
    std::string xi = x_name(i, bare);
    std::string zi = z_name(i, bare);
    for (int s = 1; s <= n - 1; ++s) {
      TowerRecord rec;
      rec.stage = i;
      rec.sub = s;
      rec.new_var = t_name(i, s);
      rec.kind = TowerKind::intermediate;
      rec.label = g_label(i, s) + " = " + g_label(i, s - 1) + "(" + rec.new_var + ")";
      rec.relation = to_string(table.rows[n - s - 1].M, rec.new_var) + " = " + xi + rhs_pow;
      rec.step = s == 1 ? rec.relation
                        : to_string(S[s], rec.new_var) + " = " + t_name(i, s - 1);
      rec.defined_as = rec.new_var + " = " + to_string(table.rows[n - s - 1].P, zi);
      rec.degree_over_prev = p;
      out.push_back(rec);
    }
    TowerRecord as;
    as.stage = i + 1;
    as.sub = 0;
    as.new_var = zi;
    as.kind = TowerKind::artin_schreier;
    as.label = g_label(i + 1, 0) + " = " + g_label(i, n - 1) + "(" + zi + ")";
    as.relation = zi + "^" + std::to_string(q) + " + " + zi + " = " + xi + rhs_pow;
    as.step = to_string(table.rows[0].P, zi) + " = " + t_name(i, n - 1);
    as.degree_over_prev = p;
    out.push_back(as);
    if (i + 1 < depth) {
      TowerRecord link;
      link.stage = i + 1;
      link.sub = 0;
      link.new_var = x_name(i + 1, false);
      link.kind = TowerKind::recursion_link;
      link.relation = link.new_var + " = " + zi + "/" + xi;
      link.degree_over_prev = 1;
      out.push_back(link);
    }
  }
  return out;
}

int64_t first_stage_genus(const FieldPtr& fq, int i) {
  if (!fq) throw std::invalid_argument("null field");
  int n = fq->degree_over_prime();
  if (i < 1 || i > n) throw std::invalid_argument("level index out of range");
  int64_t pi = 1;
  for (int k = 0; k < i; ++k) pi *= fq->characteristic();
  return fq->size() * (pi - 1) / 2;
}

int64_t count_places_first_stage(const DescentTable& table, int i, const FieldPtr& over) {
  check_table(table);
  const FieldPtr& fq = table.fq;
  int n = fq->degree_over_prime();
  if (i < 1 || i > n) throw std::invalid_argument("level index out of range");
  if (!over || (!over->same_as(*fq) && !over->same_as(*table.fq2)))
    throw std::invalid_argument("counting field must be F_q or F_q^2");
  int64_t q = fq->size();
  int64_t p = fq->characteristic();
  LinearizedPoly L = (i == n) ? artin_schreier_poly(fq, n) : table.rows[n - i - 1].M;

  std::vector<FieldElement> c;
  for (int j = 0; j <= L.sym_degree(); ++j) c.push_back(embed(L.coeff(j), over));
  int64_t m = over->size();
  int workers = worker_count();
  if (workers > static_cast<int>(m)) workers = static_cast<int>(m);

  // cnt[v] = #{t : L(t) = v}, accumulated per worker then merged.
  std::vector<int64_t> cnt(m, 0);
  {
    std::vector<std::vector<int64_t>> local(workers);
    std::vector<std::thread> threads;
    int64_t chunk = (m + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        local[w].assign(m, 0);
        int64_t lo = w * chunk, hi = std::min<int64_t>(m, lo + chunk);
        for (int64_t ti = lo; ti < hi; ++ti) {
          FieldElement t = over->element(static_cast<uint32_t>(ti));
          FieldElement acc = over->zero();
          FieldElement tp = t;
          for (int j = 0; j <= L.sym_degree(); ++j) {
            if (!c[j].is_zero()) acc += c[j] * tp;
            if (j < L.sym_degree()) tp = tp.pow(p);
          }
          ++local[w][acc.index()];
        }
      });
    }
    for (auto& th : threads) th.join();
    for (int w = 0; w < workers; ++w)
      for (int64_t v = 0; v < m; ++v) cnt[v] += local[w][v];
  }

  std::vector<int64_t> partial(workers, 0);
  {
    std::vector<std::thread> threads;
    int64_t chunk = (m + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        int64_t lo = w * chunk, hi = std::min<int64_t>(m, lo + chunk);
        int64_t sum = 0;
        for (int64_t xi = lo; xi < hi; ++xi)
          sum += cnt[over->idx_pow(static_cast<uint32_t>(xi), q + 1)];
        partial[w] = sum;
      });
    }
    for (auto& th : threads) th.join();
  }
  int64_t affine = 0;
  for (int64_t s : partial) affine += s;
  return affine + 1;  // the fully ramified place at infinity
}

CurveStats check_maximality(const DescentTable& table, int i) {
  check_table(table);
  int64_t q = table.fq->size();
  if (q * q * q > Field::kMaxSize)
    throw std::invalid_argument("field too large for exhaustive maximality check");
  CurveStats s;
  s.q = q;
  s.i = i;
  s.genus = first_stage_genus(table.fq, i);
  s.n1_over_fq = count_places_first_stage(table, i, table.fq);
  s.n_over_fq2 = count_places_first_stage(table, i, table.fq2);
  s.maximal = (s.n_over_fq2 == q * q + 1 + 2 * s.genus * q);
  return s;
}

nlohmann::ordered_json tower_json(const std::vector<TowerRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["level"] = {r.stage, r.sub};
    j["new_var"] = r.new_var;
    j["relation"] = r.relation;
    j["degree_over_prev"] = r.degree_over_prev;
    arr.push_back(j);
  }
  return arr;
}

nlohmann::ordered_json curve_stats_json(const CurveStats& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q;
  j["i"] = s.i;
  j["genus"] = s.genus;
  j["n1_over_fq"] = s.n1_over_fq;
  j["n_over_fq2"] = s.n_over_fq2;
  j["maximal"] = s.maximal;
  return j;
}

std::string tower_text(const std::vector<TowerRecord>& records) {
  std::string out;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const TowerRecord& r = *it;
    std::string line;
    if (r.kind == TowerKind::recursion_link) {
      line = r.relation;
    } else if (r.kind == TowerKind::rational) {
      line = r.label;
    } else {
      line = r.label + "   " + (r.step.empty() ? r.relation : r.step);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace asdescent
