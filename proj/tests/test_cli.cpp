#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>

#include "asdescent/cli.hpp"

using namespace asdescent;

namespace {

std::pair<int, std::string> run_cfg(const CommandConfig& cfg) {
  std::ostringstream out;
  int rc = run(cfg, out);
  return {rc, out.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("descend renders the cofactor table for F_32") {
  CommandConfig cfg;
  cfg.subcommand = "descend";
  cfg.p = 2;
  cfg.n = 5;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "q = 32 = 2^5"));
  CHECK(contains(out, "M_2 = T^8 + w^26*T^4 + w^16*T^2 + w^12*T"));
  CHECK(contains(out, "W_2 = w^19"));
  CHECK(contains(out, "W_5 = w^2"));
}

TEST_CASE("bound prints the uniform bound lines verbatim") {
  CommandConfig cfg;
  cfg.subcommand = "bound";
  cfg.q = 4;
  cfg.n = 10;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(out == "uniform bound = 90\nasymptotic coefficient = 9\n");
}

TEST_CASE("bound adds the prime-case comparison when q is a prime") {
  CommandConfig cfg;
  cfg.subcommand = "bound";
  cfg.q = 5;
  cfg.n = 1;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "uniform bound = 21/2"));
  CHECK(contains(out, "prime-case comparison: ours 21/2, cited 9 (cited is smaller)"));
}

TEST_CASE("bound reports the mu bound when curve data is supplied") {
  CommandConfig cfg;
  cfg.subcommand = "bound";
  cfg.q = 9;
  cfg.n = 2;
  cfg.g = 0;
  cfg.n1 = 10;
  cfg.n2 = 0;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "conditions: nonspecial yes, genus-size yes, place-count yes"));
  CHECK(contains(out, "mu bound = 3n + 3g = 6"));
}

TEST_CASE("bound lists failing conditions instead of a bound") {
  CommandConfig cfg;
  cfg.subcommand = "bound";
  cfg.q = 4;
  cfg.n = 3;
  cfg.g = 2;
  cfg.n1 = 5;
  cfg.n2 = 2;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "mu bound: not applicable (failing: genus-size)"));
}

TEST_CASE("partial curve data is rejected") {
  CommandConfig cfg;
  cfg.subcommand = "bound";
  cfg.q = 9;
  cfg.n = 2;
  cfg.g = 0;
  cfg.n1 = 10;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 2);
  CHECK(contains(out, "error: curve data needs all of g, n1, n2"));
}

TEST_CASE("field json output is a stable round trip") {
  CommandConfig cfg;
  cfg.subcommand = "field";
  cfg.p = 2;
  cfg.n = 2;
  cfg.format = "json";
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(out);
  CHECK(j["p"] == 2);
  CHECK(j["degree"] == 2);
  CHECK(j["size"] == 4);
  CHECK(j["modulus"] == "w^2+w+1");
  CHECK(j["generator"] == "w");
  CHECK(j["nonzero"] == 3);
  CHECK(out == j.dump(2) + "\n");
}

TEST_CASE("descend json output is a stable round trip") {
  CommandConfig cfg;
  cfg.subcommand = "descend";
  cfg.p = 2;
  cfg.n = 3;
  cfg.format = "json";
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(out);
  CHECK(j["q"] == 8);
  CHECK(j["rows"].size() == 2);
  CHECK(out == j.dump(2) + "\n");
}

TEST_CASE("repeated runs emit identical bytes") {
  CommandConfig cfg;
  cfg.subcommand = "descend";
  cfg.p = 2;
  cfg.n = 4;
  auto first = run_cfg(cfg);
  auto second = run_cfg(cfg);
  CHECK(first.first == 0);
  CHECK(first.second == second.second);
}

TEST_CASE("invalid parameters map to exit status 2") {
  CommandConfig bad_p;
  bad_p.subcommand = "field";
  bad_p.p = 6;
  bad_p.n = 2;
  auto [rc1, out1] = run_cfg(bad_p);
  CHECK(rc1 == 2);
  CHECK(contains(out1, "error: "));

  CommandConfig bad_fmt;
  bad_fmt.subcommand = "field";
  bad_fmt.p = 2;
  bad_fmt.n = 2;
  bad_fmt.format = "xml";
  CHECK(run_cfg(bad_fmt).first == 2);

  CommandConfig bad_sub;
  bad_sub.subcommand = "explode";
  CHECK(run_cfg(bad_sub).first == 2);

  CommandConfig bad_level;
  bad_level.subcommand = "count";
  bad_level.p = 2;
  bad_level.n = 2;
  bad_level.level = 0;
  CHECK(run_cfg(bad_level).first == 2);
}

TEST_CASE("tower prints the ladder top down") {
  CommandConfig cfg;
  cfg.subcommand = "tower";
  cfg.p = 2;
  cfg.n = 5;
  cfg.depth = 2;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(out.rfind("G_2 = G_{1,4}(z)   z^2 + z = t_4\n", 0) == 0);
  CHECK(contains(out, "G_{1,1} = G_1(t_1)   t_1^2 + w^2*t_1 = x^33"));
  CHECK(contains(out, "G_1 = F_32(x)\n"));
}

TEST_CASE("tower depth one is just the rational field") {
  CommandConfig cfg;
  cfg.subcommand = "tower";
  cfg.p = 2;
  cfg.n = 2;
  cfg.depth = 1;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(out == "G_1 = F_4(x)\n");
}

TEST_CASE("count reports genus, place counts, and maximality") {
  CommandConfig cfg;
  cfg.subcommand = "count";
  cfg.p = 2;
  cfg.n = 2;
  cfg.level = 1;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(out ==
        "q = 4, level 1: genus 2\n"
        "N(F_4) = 5\n"
        "N(F_16) = 33\n"
        "maximal over F_16: yes\n");

  cfg.format = "json";
  auto [rc2, out2] = run_cfg(cfg);
  CHECK(rc2 == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(out2);
  CHECK(j["q"] == 4);
  CHECK(j["i"] == 1);
  CHECK(j["genus"] == 2);
  CHECK(j["n1_over_fq"] == 5);
  CHECK(j["n_over_fq2"] == 33);
  CHECK(j["maximal"] == true);
}

TEST_CASE("norm overrides steer the odd-characteristic table") {
  CommandConfig cfg;
  cfg.subcommand = "descend";
  cfg.p = 3;
  cfg.n = 2;
  cfg.norms = std::vector<int64_t>{1};
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "M_1 = T^3 + w^7*T"));
  CHECK(contains(out, "T^9 + T = T(T^2+w)(T^2+w^3)(T^2+w^5)(T^2+w^7)"));
}

TEST_CASE("modulus override matching the default changes nothing") {
  CommandConfig cfg;
  cfg.subcommand = "descend";
  cfg.p = 3;
  cfg.n = 2;
  auto base = run_cfg(cfg);
  cfg.modulus = std::vector<int64_t>{2, 2, 1};
  auto same = run_cfg(cfg);
  CHECK(base.first == 0);
  CHECK(base.second == same.second);

  cfg.modulus = std::vector<int64_t>{2, 0, 1};  // (T-1)(T+1) over F_3
  CHECK(run_cfg(cfg).first == 2);
}

TEST_CASE("verify subcommand reports success") {
  CommandConfig cfg;
  cfg.subcommand = "verify";
  cfg.seed = 1;
  auto [rc, out] = run_cfg(cfg);
  CHECK(rc == 0);
  CHECK(contains(out, "seed = 1"));
  CHECK(contains(out, "checks passed"));
}
