#include <doctest.h>

#include <cstdlib>

#include "asdescent/fixtures.hpp"
#include "asdescent/tower.hpp"

using namespace asdescent;

namespace {

DescentTable table_for_q(int64_t p, int n) {
  FieldPtr fq = make_field(p, n);
  FieldPtr fq2 = extend_quadratic(fq);
  return descent_table(canonical_chain(fq2));
}

}  // namespace

TEST_CASE("base tower records follow the recursive pattern") {
  FieldPtr f81 = extend_quadratic(make_field(3, 2));
  auto recs = gs_tower(f81, 3);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].kind == TowerKind::rational);
  CHECK(recs[0].label == "F_1 = F_81(x_1)");
  CHECK(recs[1].relation == "z_2^9 + z_2 = x_1^10");
  CHECK(recs[1].degree_over_prev == 9);
  CHECK(recs[2].kind == TowerKind::recursion_link);
  CHECK(recs[2].relation == "x_2 = z_2/x_1");
  CHECK(recs[3].relation == "z_3^9 + z_3 = x_2^10");
  CHECK_THROWS_AS(gs_tower(f81, 0), std::invalid_argument);
  CHECK_THROWS_AS(gs_tower(f81, 17), std::invalid_argument);
  CHECK_THROWS_AS(gs_tower(make_field(3, 3), 2), std::invalid_argument);  // not quadratic
  CHECK_THROWS_AS(gs_tower(make_field(3, 1), 2), std::invalid_argument);  // prime field
}

TEST_CASE("completed tower inserts degree-p steps that multiply to q") {
  DescentTable t = table_for_q(2, 4);
  auto recs = completed_tower(t, 3);
  // stage 1 contributes n-1 intermediates of degree p plus one Artin-Schreier
  // step of degree p; together they span the full degree-q stage
  int64_t deg = 1;
  for (const auto& r : recs) {
    bool stage1_step = r.stage == 1 && r.kind == TowerKind::intermediate;
    bool stage1_top = r.stage == 2 && r.kind == TowerKind::artin_schreier;
    if (stage1_step || stage1_top) deg *= r.degree_over_prev;
  }
  CHECK(deg == 16);
  // stage-2 names are subscripted and the link sits between stages
  bool saw_link = false, saw_stage2 = false;
  for (const auto& r : recs) {
    if (r.kind == TowerKind::recursion_link && r.stage == 2) {
      saw_link = true;
      CHECK(r.relation == "x_2 = z/x");
    }
    if (r.stage == 2 && r.sub == 1) {
      saw_stage2 = true;
      CHECK(r.new_var == "t_{2,1}");
      CHECK(r.relation.find("x_2^17") != std::string::npos);
    }
  }
  CHECK(saw_link);
  CHECK(saw_stage2);
}

TEST_CASE("completed tower steps match the frozen ladder") {
  const Fixture& fx = fixture("q32");
  DescentTable t = table_for_q(2, 5);
  auto recs = completed_tower(t, 2);
  std::vector<std::string> steps;
  for (auto it = recs.rbegin(); it != recs.rend(); ++it)
    if (it->kind != TowerKind::rational) steps.push_back(it->step);
  CHECK(steps == fx.ladder);
  CHECK(recs.back().label == "G_2 = G_{1,4}(z)");
  std::string text = tower_text(recs);
  CHECK(text.find("G_2 = G_{1,4}(z)   z^2 + z = t_4") != std::string::npos);
  CHECK(text.find("G_{1,1} = G_1(t_1)   t_1^2 + w^2*t_1 = x^33") != std::string::npos);
  CHECK(text.find("G_1 = F_32(x)") != std::string::npos);
}

TEST_CASE("prime base field gives the undescended shape with G labels") {
  DescentTable t = descent_table(canonical_chain(extend_quadratic(make_field(2, 1))));
  auto recs = completed_tower(t, 3);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].label == "G_1 = F_2(x_1)");
  CHECK(recs[1].relation == "z_2^2 + z_2 = x_1^3");
  CHECK(recs[2].relation == "x_2 = z_2/x_1");
}

TEST_CASE("genus formula by level") {
  FieldPtr f4 = make_field(2, 2);
  CHECK(first_stage_genus(f4, 1) == 2);
  CHECK(first_stage_genus(f4, 2) == 6);
  FieldPtr f8 = make_field(2, 3);
  CHECK(first_stage_genus(f8, 1) == 4);
  CHECK(first_stage_genus(f8, 2) == 12);
  CHECK(first_stage_genus(f8, 3) == 28);
  FieldPtr f9 = make_field(3, 2);
  CHECK(first_stage_genus(f9, 1) == 9);
  CHECK(first_stage_genus(f9, 2) == 36);
  CHECK_THROWS_AS(first_stage_genus(f9, 0), std::invalid_argument);
  CHECK_THROWS_AS(first_stage_genus(f9, 3), std::invalid_argument);
}

TEST_CASE("place counts hit the frozen values and reject bad fields") {
  DescentTable t = table_for_q(2, 2);
  FieldPtr fq = t.fq;
  FieldPtr fq2 = t.fq2;
  CHECK(count_places_first_stage(t, 1, fq) == 5);
  CHECK(count_places_first_stage(t, 1, fq2) == 33);
  CHECK(count_places_first_stage(t, 2, fq) == 5);
  CHECK(count_places_first_stage(t, 2, fq2) == 65);
  CHECK_THROWS_AS(count_places_first_stage(t, 0, fq), std::invalid_argument);
  CHECK_THROWS_AS(count_places_first_stage(t, 3, fq), std::invalid_argument);
  CHECK_THROWS_AS(count_places_first_stage(t, 1, make_field(2, 3)), std::invalid_argument);
}

TEST_CASE("counts are independent of the worker partition") {
  DescentTable t = table_for_q(3, 2);
  FieldPtr fq2 = t.fq2;
  setenv("ASDESCENT_WORKERS", "1", 1);
  int64_t base = count_places_first_stage(t, 1, fq2);
  for (const char* w : {"2", "3", "7"}) {
    setenv("ASDESCENT_WORKERS", w, 1);
    CHECK(count_places_first_stage(t, 1, fq2) == base);
  }
  unsetenv("ASDESCENT_WORKERS");
  CHECK(base == 244);
}

TEST_CASE("maximality statistics assemble q, genus and both counts") {
  DescentTable t = table_for_q(2, 3);
  CurveStats s = check_maximality(t, 2);
  CHECK(s.q == 8);
  CHECK(s.i == 2);
  CHECK(s.genus == 12);
  CHECK(s.n1_over_fq == 9);
  CHECK(s.n_over_fq2 == 257);
  CHECK(s.maximal);
  nlohmann::ordered_json j = curve_stats_json(s);
  CHECK(j["genus"] == 12);
  CHECK(j["maximal"] == true);
}

TEST_CASE("tower json round-trips and lists ascending levels") {
  DescentTable t = table_for_q(2, 2);
  auto recs = completed_tower(t, 2);
  nlohmann::ordered_json j = tower_json(recs);
  std::string s = j.dump(2);
  CHECK(nlohmann::ordered_json::parse(s).dump(2) == s);
  REQUIRE(j.size() == recs.size());
  CHECK(j[0]["level"][0] == 1);
  CHECK(j[0]["level"][1] == 0);
  CHECK(j[1]["new_var"] == "t_1");
}
