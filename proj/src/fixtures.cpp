#include "asdescent/fixtures.hpp"

#include <json.hpp>

#include <stdexcept>

namespace asdescent {

namespace {

std::vector<int64_t> int_list(const nlohmann::json& j) {
  return j.get<std::vector<int64_t>>();
}

Fixture parse_fixture(const char* text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Fixture f;
  f.name = j.at("name").get<std::string>();
  f.comment = j.at("comment").get<std::string>();
  f.p = j.at("p").get<int64_t>();
  f.n = j.at("n").get<int>();
  if (!j.at("norms").is_null()) f.norms = int_list(j.at("norms"));
  f.P = j.at("P").get<std::vector<std::vector<std::string>>>();
  f.M = j.at("M").get<std::vector<std::vector<std::string>>>();
  f.W = j.at("W").get<std::vector<std::string>>();
  f.defined_as = j.at("defined_as").get<std::vector<std::string>>();
  f.ladder = j.at("ladder").get<std::vector<std::string>>();
  f.counts_fq = int_list(j.at("counts_fq"));
  f.counts_fq2 = int_list(j.at("counts_fq2"));
  if (!j.at("factor_constant_dlogs").is_null())
    f.factor_constant_dlogs = int_list(j.at("factor_constant_dlogs"));
  if (!j.at("new_norm_dlogs").is_null())
    f.new_norm_dlogs = j.at("new_norm_dlogs").get<std::vector<std::vector<int64_t>>>();
  return f;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> v;
    for (const char* text : {detail::kFixtureQ4, detail::kFixtureQ8, detail::kFixtureQ16,
                             detail::kFixtureQ32, detail::kFixtureQ9, detail::kFixtureQ27})
      v.push_back(parse_fixture(text));
    return v;
  }();
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : all_fixtures())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + name);
}

FieldElement parse_power_string(const std::string& s, const FieldPtr& f) {
  if (s.empty()) throw std::invalid_argument("empty coefficient string");
  if (s[0] == 'w') {
    if (s.size() == 1) return f->generator();
    if (s[1] != '^') throw std::invalid_argument("bad coefficient string: " + s);
    return f->generator().pow(std::stoll(s.substr(2)));
  }
  return f->from_int(std::stoll(s));
}

LinearizedPoly parse_linpoly(const std::vector<std::string>& coeffs, const FieldPtr& f,
                             int64_t b) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const std::string& s : coeffs) c.push_back(parse_power_string(s, f));
  return LinearizedPoly(f, b, std::move(c));
}

}  // namespace asdescent
