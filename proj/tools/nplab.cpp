// Command-line front end: one subcommand per check, JSON report on stdout.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include <nplab/cli.hpp>

int main(int argc, char **argv) {
  nplab::cli::RunConfig cfg;
  CLI::App app{"nplab: nonplanarity checks for polynomial matrix maps"};
  app.require_subcommand(1);
  bool no_timings = false;
  bool compact = false;
  app.add_flag("--no-timings", no_timings, "Omit timings (byte-identical reports)");
  app.add_flag("--compact", compact, "Single-line JSON");

  auto add_words = [&](CLI::App *sub) {
    sub->add_option("--m", cfg.m, "Matrix size")->required();
    sub->add_option("--words", cfg.words, "Words, e.g. \"x1*x2; x2*x1\"")->required();
    sub->add_option("--r", cfg.r, "Number of generators (default: inferred)");
  };

  auto *strong = app.add_subcommand("strong-check", "Strong nonplanarity of a word system");
  add_words(strong);
  strong->add_option("--max-m", cfg.max_m, "Largest accepted m");
  strong->add_option("--max-monomials", cfg.max_monomials, "Term budget");

  auto *weak = app.add_subcommand("weak-check", "Complex weak nonplanarity test");
  auto *pf = weak->add_option("--param", cfg.param_file, "Parameterization JSON file");
  auto *pj = weak->add_option("--param-json", cfg.param_json, "Inline parameterization JSON");
  pf->excludes(pj);
  weak->add_option("--max-pairs", cfg.gb_max_pairs, "Groebner pair budget");

  auto *lemma = app.add_subcommand("lemma-verify", "Check the path ordering lemma");
  add_words(lemma);
  lemma->add_option("--minor", cfg.minor, "Single index \"rows|cols\", e.g. \"1,2|1,3\"");
  lemma->add_option("--max-size", cfg.max_minor_size, "Largest minor size (0 = all)");
  lemma->add_option("--budget", cfg.lemma_budget, "Enumeration budget");

  auto *paths = app.add_subcommand("paths-oracle", "Compare path sums with word products");
  add_words(paths);

  auto *expo = app.add_subcommand("exponents", "Diophantine exponent estimates");
  expo->add_option("--matrix", cfg.matrix, "Entries, rows separated by ';'")->required();
  expo->add_option("--m", cfg.m, "Rows");
  expo->add_option("--n", cfg.n, "Columns");
  expo->add_option("--Q", cfg.Q, "Search bound");
  expo->add_option("--q-min", cfg.q_min, "Window start (0 = ceil(sqrt(Q)))");
  expo->add_option("--kind", cfg.kind, "omega | omega_x | both");

  auto *baker = app.add_subcommand("baker-experiment", "omega_x of random Veronese curves");
  baker->add_option("--m", cfg.m, "Matrix size");
  baker->add_option("--n", cfg.n, "Number of powers");
  baker->add_option("--Q", cfg.Q, "Search bound");
  baker->add_option("--q-min", cfg.q_min, "Window start (0 = ceil(sqrt(Q)))");
  baker->add_option("--trials", cfg.trials, "Number of samples");
  baker->add_option("--seed", cfg.seed, "RNG seed");
  baker->add_option("--force", cfg.forced, "Fixed sample(s), row-major m x m");

  // Defaults that differ per subcommand.
  const bool baker_requested = [&] {
    for (int i = 1; i < argc; ++i)
      if (std::string(argv[i]) == "baker-experiment") return true;
    return false;
  }();
  if (baker_requested) {
    cfg.n = 2;
    cfg.Q = 2000;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : nplab::cli::kInputError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.timings = !no_timings;
  auto result = nplab::cli::run(cfg);
  std::cout << result.report.dump(compact ? -1 : 2) << "\n";
  if (result.report.contains("error"))
    std::cerr << "nplab: " << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
