#include <CLI11.hpp>

#include <iostream>
#include <vector>

#include "asdescent/cli.hpp"

namespace {

std::vector<int64_t> g_modulus;
std::vector<int64_t> g_norms;
int64_t g_genus = 0;
int64_t g_places1 = 0;
int64_t g_places2 = 0;

void add_format(CLI::App* sub, asdescent::CommandConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_field_params(CLI::App* sub, asdescent::CommandConfig& cfg) {
  sub->add_option("--p", cfg.p, "Field characteristic")->required();
  sub->add_option("--n", cfg.n, "Degree of F_q over the prime field")->required();
  sub->add_option("--modulus", g_modulus,
                  "Modulus coefficients c0,c1,...,1 (constant first, monic)")
      ->delimiter(',');
  sub->add_option("--norms", g_norms,
                  "Chain override for odd p: kernel-norm generator exponents a1,a2,...")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent tables, completed towers, and multiplication-complexity bounds "
               "for Artin-Schreier extensions of small finite fields"};
  app.require_subcommand(1);
  asdescent::CommandConfig cfg;

  CLI::App* field = app.add_subcommand("field", "Print a finite field's parameters");
  add_field_params(field, cfg);
  add_format(field, cfg);

  CLI::App* descend = app.add_subcommand(
      "descend", "Compute the descent table of T^q + T over F_q for q = p^n");
  add_field_params(descend, cfg);
  add_format(descend, cfg);

  CLI::App* tower = app.add_subcommand(
      "tower", "Print the completed recursive tower equations over F_q");
  add_field_params(tower, cfg);
  tower->add_option("--depth", cfg.depth, "Number of tower stages")->default_val(2);
  add_format(tower, cfg);

  CLI::App* count = app.add_subcommand(
      "count", "Count rational places of a first-stage curve and test maximality");
  add_field_params(count, cfg);
  count->add_option("--i", cfg.level, "Level of the first-stage curve")->default_val(1);
  add_format(count, cfg);

  CLI::App* bound = app.add_subcommand(
      "bound", "Evaluate multiplication-complexity bounds for F_{q^n} over F_q");
  bound->add_option("--q", cfg.q, "Base field size")->required();
  bound->add_option("--n", cfg.n, "Extension degree")->required();
  bound->add_option("--g", g_genus, "Genus of the auxiliary curve");
  bound->add_option("--n1", g_places1, "Places of degree 1");
  bound->add_option("--n2", g_places2, "Places of degree 2");
  add_format(bound, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "Replay the embedded golden examples and property suites");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized suites")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* parsed = app.get_subcommands().front();
  cfg.subcommand = parsed->get_name();
  const CLI::Option* mod_opt = parsed->get_option_no_throw("--modulus");
  if (mod_opt && mod_opt->count() > 0) cfg.modulus = g_modulus;
  const CLI::Option* norm_opt = parsed->get_option_no_throw("--norms");
  if (norm_opt && norm_opt->count() > 0) cfg.norms = g_norms;
  const CLI::Option* g_opt = parsed->get_option_no_throw("--g");
  if (g_opt && g_opt->count() > 0) cfg.g = g_genus;
  const CLI::Option* n1_opt = parsed->get_option_no_throw("--n1");
  if (n1_opt && n1_opt->count() > 0) cfg.n1 = g_places1;
  const CLI::Option* n2_opt = parsed->get_option_no_throw("--n2");
  if (n2_opt && n2_opt->count() > 0) cfg.n2 = g_places2;
  return asdescent::run(cfg, std::cout);
}
