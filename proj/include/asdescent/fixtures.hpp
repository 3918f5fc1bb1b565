#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asdescent/linpoly.hpp"

namespace asdescent {

// One embedded golden example set: frozen descent data for a single q plus the
// expected renderings and point counts.
struct Fixture {
  std::string name;
  std::string comment;
  int64_t p = 0;
  int n = 0;
  std::optional<std::vector<int64_t>> norms;  // odd p: generator exponents pinning the chain
  std::vector<std::vector<std::string>> P;    // coefficient strings, constant first
  std::vector<std::vector<std::string>> M;
  std::vector<std::string> W;
  std::vector<std::string> defined_as;
  std::vector<std::string> ladder;  // one-step relations, top of the tower first
  std::vector<int64_t> counts_fq;   // rational places of the stage-one curves, level ascending
  std::vector<int64_t> counts_fq2;
  std::optional<std::vector<int64_t>> factor_constant_dlogs;
  std::optional<std::vector<std::vector<int64_t>>> new_norm_dlogs;
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& name);

// Parses the fixture coefficient notation: "0", "w", "w^5", or a plain
// prime-subfield integer like "2".
FieldElement parse_power_string(const std::string& s, const FieldPtr& f);
LinearizedPoly parse_linpoly(const std::vector<std::string>& coeffs, const FieldPtr& f,
                             int64_t b);

namespace detail {
extern const char* const kFixtureQ4;
extern const char* const kFixtureQ8;
extern const char* const kFixtureQ16;
extern const char* const kFixtureQ32;
extern const char* const kFixtureQ9;
extern const char* const kFixtureQ27;
}  // namespace detail

}  // namespace asdescent
