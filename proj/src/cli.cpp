#include "asdescent/cli.hpp"

#include <json.hpp>

#include <stdexcept>

#include "asdescent/complexity.hpp"
#include "asdescent/descent.hpp"
#include "asdescent/tower.hpp"
#include "asdescent/verification.hpp"

namespace asdescent {

namespace {

using nlohmann::ordered_json;

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

bool want_json(const CommandConfig& c) {
  if (c.format == "json") return true;
  if (c.format == "text") return false;
  throw std::invalid_argument("format must be text or json");
}

FieldPtr field_from(const CommandConfig& c) {
  if (c.p < 2) throw std::invalid_argument("characteristic must be at least 2");
  if (c.n < 1) throw std::invalid_argument("degree must be at least 1");
  if (c.modulus) return make_field(c.p, c.n, *c.modulus);
  return make_field(c.p, c.n);
}

DescentTable table_from(const CommandConfig& c) {
  FieldPtr fq = field_from(c);
  FieldPtr fq2 = extend_quadratic(fq);
  SubspaceChain chain = c.norms ? chain_from_norms(fq2, *c.norms) : canonical_chain(fq2);
  return descent_table(chain);
}

int run_field(const CommandConfig& c, std::ostream& out) {
  FieldPtr f = field_from(c);
  if (want_json(c)) {
    ordered_json j;
    j["p"] = f->characteristic();
    j["degree"] = f->degree_over_prime();
    j["size"] = f->size();
    j["modulus"] = f->modulus_string();
    j["generator"] = f->generator_name();
    j["nonzero"] = f->size() - 1;
    emit(out, j);
    return 0;
  }
  out << "F_" << f->size() << ": modulus " << f->modulus_string() << ", generator "
      << f->generator_name() << "\n";
  out << "characteristic " << f->characteristic() << ", degree over prime field "
      << f->degree_over_prime() << ", size " << f->size() << "\n";
  out << "log table covers " << f->size() - 1 << " nonzero elements\n";
  return 0;
}

int run_descend(const CommandConfig& c, std::ostream& out) {
  DescentTable t = table_from(c);
  if (want_json(c))
    emit(out, descent_json(t));
  else
    out << descent_text(t);
  return 0;
}

int run_tower(const CommandConfig& c, std::ostream& out) {
  DescentTable t = table_from(c);
  std::vector<TowerRecord> recs = completed_tower(t, c.depth);
  if (want_json(c))
    emit(out, tower_json(recs));
  else
    out << tower_text(recs);
  return 0;
}

int run_count(const CommandConfig& c, std::ostream& out) {
  DescentTable t = table_from(c);
  CurveStats s = check_maximality(t, c.level);
  if (want_json(c)) {
    emit(out, curve_stats_json(s));
    return 0;
  }
  out << "q = " << s.q << ", level " << s.i << ": genus " << s.genus << "\n";
  out << "N(F_" << s.q << ") = " << s.n1_over_fq << "\n";
  out << "N(F_" << s.q * s.q << ") = " << s.n_over_fq2 << "\n";
  out << "maximal over F_" << s.q * s.q << ": " << (s.maximal ? "yes" : "no") << "\n";
  return 0;
}

int run_bound(const CommandConfig& c, std::ostream& out) {
  if (c.n < 1) throw std::invalid_argument("degree must be at least 1");
  bool have_curve = c.g || c.n1 || c.n2;
  if (have_curve && !(c.g && c.n1 && c.n2))
    throw std::invalid_argument("curve data needs all of g, n1, n2");
  UniformBound ub = uniform_bound(c.q, c.n);
  bool prime_case = c.q >= 5 && is_prime(c.q);
  if (want_json(c)) {
    ordered_json j;
    j["q"] = c.q;
    j["n"] = c.n;
    j["uniform_bound"] = rat_json(ub.total);
    j["asymptotic"] = rat_json(ub.coefficient);
    if (prime_case) {
      auto pc = compare_prime_case(c.q);
      ordered_json cmp;
      cmp["ours"] = rat_json(pc.first);
      cmp["cited"] = rat_json(pc.second);
      j["comparison"] = cmp;
    }
    if (have_curve) {
      MuResult mu = mu_bound(make_curve_input(c.q, c.n, *c.g, *c.n1, *c.n2));
      ordered_json cv;
      cv["g"] = *c.g;
      cv["n1"] = *c.n1;
      cv["n2"] = *c.n2;
      ordered_json cond;
      cond["nonspecial"] = mu.conditions.nonspecial;
      cond["genus_size"] = mu.conditions.genus_size;
      cond["place_count"] = mu.conditions.place_count;
      cv["conditions"] = cond;
      if (mu.bound)
        cv["mu"] = *mu.bound;
      else
        cv["mu"] = nullptr;
      cv["failing"] = mu.failing;
      j["curve"] = cv;
    }
    emit(out, j);
    return 0;
  }
  out << "uniform bound = " << to_string(ub.total) << "\n";
  out << "asymptotic coefficient = " << to_string(ub.coefficient) << "\n";
  if (prime_case) {
    auto pc = compare_prime_case(c.q);
    out << "prime-case comparison: ours " << to_string(pc.first) << ", cited "
        << to_string(pc.second) << " (cited is smaller)\n";
  }
  if (have_curve) {
    MuResult mu = mu_bound(make_curve_input(c.q, c.n, *c.g, *c.n1, *c.n2));
    out << "conditions: nonspecial " << (mu.conditions.nonspecial ? "yes" : "no")
        << ", genus-size " << (mu.conditions.genus_size ? "yes" : "no") << ", place-count "
        << (mu.conditions.place_count ? "yes" : "no") << "\n";
    if (mu.bound) {
      out << "mu bound = 3n + 3g = " << *mu.bound << "\n";
    } else {
      out << "mu bound: not applicable (failing:";
      for (const auto& f : mu.failing) out << " " << f;
      out << ")\n";
    }
  }
  return 0;
}

int run_verify(const CommandConfig& c, std::ostream& out) {
  return run_verification(out, c.seed) ? 0 : 1;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out) {
  try {
    if (config.subcommand == "field") return run_field(config, out);
    if (config.subcommand == "descend") return run_descend(config, out);
    if (config.subcommand == "tower") return run_tower(config, out);
    if (config.subcommand == "count") return run_count(config, out);
    if (config.subcommand == "bound") return run_bound(config, out);
    if (config.subcommand == "verify") return run_verify(config, out);
    throw std::invalid_argument("unknown subcommand: " + config.subcommand);
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    out << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace asdescent
