#include <iostream>

#include <CLI11.hpp>

#include "mfcft/cli.hpp"

using namespace mfcft;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for x^d bifactorisations and the matching NS fusion data"};
  app.require_subcommand(1);

  cli::Config cfg;
  std::string format = "json";
  std::optional<int> degree_bound;
  bool fault = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "odd modulus d >= 3")->default_val(3);
    sub->add_option("--root-exponent", cfg.root_exponent, "exponent l of the chosen root, coprime to d")->default_val(1);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "markdown"}))->default_val("json");
    sub->add_option("--degree-bound", degree_bound, "override the degree bound of homotopy searches");
    sub->add_flag("--inject-koszul-fault", fault)->group("");
  };

  std::string side = "mf";
  auto* ft = app.add_subcommand("fusion-table", "print all pairwise fusion products");
  common(ft);
  ft->add_option("--side", side, "cft or mf")->check(CLI::IsMember({"cft", "mf"}))->default_val("mf");

  std::string left, right;
  auto* dec = app.add_subcommand("decompose", "decompose P(a:lambda) (x) P(b:mu)");
  common(dec);
  dec->add_option("left", left, "a:lambda")->required();
  dec->add_option("right", right, "b:mu")->required();

  std::string suites = "all";
  auto* ver = app.add_subcommand("verify", "run verification suites");
  common(ver);
  ver->add_option("--suites", suites, "comma separated subset of core,graded,tl,cft,equivariance,equivalence")
      ->default_val("all");

  auto* cmp = app.add_subcommand("compare", "compare the two fusion rings under the label map");
  common(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  cfg.format = format == "markdown" ? cli::Format::markdown : cli::Format::json;
  cfg.degree_bound = degree_bound;
  detail::koszul_fault = fault;

  cli::Result res;
  try {
    if (ft->parsed()) res = cli::cmd_fusion_table(cfg, side == "cft" ? cli::Side::cft : cli::Side::mf);
    else if (dec->parsed()) res = cli::cmd_decompose(cfg, cli::parse_label(left), cli::parse_label(right));
    else if (ver->parsed()) res = cli::cmd_verify(cfg, cli::parse_suites(suites));
    else res = cli::cmd_compare(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  std::cout << res.output;
  return res.exit_code;
}
