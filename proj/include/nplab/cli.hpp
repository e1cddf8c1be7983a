#ifndef NPLAB_CLI_HPP
#define NPLAB_CLI_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "exponents.hpp"
#include "paths.hpp"
#include "poly_parse.hpp"
#include "strongcheck.hpp"
#include "weakcheck.hpp"
#include "words.hpp"

namespace nplab::cli {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "nonplanarity-lab/1";

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

struct RunConfig {
  std::string subcommand;
  std::size_t m = 1;
  std::size_t n = 1;
  unsigned r = 0; ///< 0: infer from the words
  std::string words;
  std::string param_file;
  std::string param_json;
  std::string matrix;
  std::string kind = "both"; ///< exponents: omega | omega_x | both
  long Q = 1000;
  long q_min = 0;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> forced;
  std::string minor;            ///< lemma-verify: "rows|cols", 1-based
  std::size_t max_minor_size = 0; ///< lemma-verify: 0 means all sizes
  bool timings = true;

  // Budgets.
  std::size_t max_m = 4;
  std::size_t max_monomials = 10'000'000;
  std::size_t lemma_budget = 1'000'000;
  std::size_t gb_max_pairs = 200'000;
};

struct RunResult {
  json report;
  int exit_code = kOk;
};

/// Parses "0.5" or "1/2, 0.25; 3 4" (rows separated by ';', entries by ','
/// or whitespace) into exact rationals. Returns (rows, cols, entries).
struct ParsedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> entries;
};

inline ParsedMatrix parse_matrix(std::string_view text) {
  ParsedMatrix out;
  std::string s(text);
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    for (char &ch : row)
      if (ch == ',') ch = ' ';
    std::istringstream cells(row);
    std::string cell;
    std::size_t count = 0;
    while (cells >> cell) {
      out.entries.push_back(parse_rat(cell));
      ++count;
    }
    if (count == 0) throw std::invalid_argument("matrix: empty row");
    if (out.rows == 0)
      out.cols = count;
    else if (count != out.cols)
      throw std::invalid_argument("matrix: rows have different lengths");
    ++out.rows;
  }
  if (out.rows == 0) throw std::invalid_argument("matrix: no entries");
  return out;
}

/// {"k":..,"m":..,"n":..,"entries":[["x1",..],..]} -> Parameterization.
inline Parameterization load_parameterization(const nlohmann::json &doc) {
  for (const char *key : {"k", "m", "n", "entries"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("parameterization: missing field '") +
                                  key + "'");
  Parameterization f;
  f.k = doc.at("k").get<std::size_t>();
  f.m = doc.at("m").get<std::size_t>();
  f.n = doc.at("n").get<std::size_t>();
  const auto &rows = doc.at("entries");
  if (!rows.is_array() || rows.size() != f.m)
    throw std::invalid_argument("parameterization: entries must have m rows");
  f.entries = PolyMatrix(f.m, f.n);
  for (std::size_t i = 0; i < f.m; ++i) {
    const auto &row = rows[i];
    if (!row.is_array() || row.size() != f.n)
      throw std::invalid_argument("parameterization: each row must have n entries");
    for (std::size_t j = 0; j < f.n; ++j) {
      if (!row[j].is_string())
        throw std::invalid_argument("parameterization: entries must be strings");
      f.entries(i, j) = parse_poly(row[j].get<std::string>());
    }
  }
  f.validate();
  return f;
}

inline Parameterization load_parameterization_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(std::string("parameterization: ") + e.what());
  }
  return load_parameterization(doc);
}

inline Parameterization load_parameterization_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("parameterization: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_parameterization_text(buf.str());
}

/// "1,2|1,3" -> ({1,2},{1,3}).
inline MinorIndex parse_minor(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("minor: expected 'rows|cols'");
  auto list = [](std::string_view part) {
    std::vector<std::size_t> out;
    std::string s(part);
    for (char &ch : s)
      if (ch == ',') ch = ' ';
    std::istringstream in(s);
    long v;
    while (in >> v) {
      if (v <= 0) throw std::invalid_argument("minor: indices start at 1");
      out.push_back(static_cast<std::size_t>(v));
    }
    if (!in.eof()) throw std::invalid_argument("minor: malformed index list");
    std::sort(out.begin(), out.end());
    return out;
  };
  return {list(text.substr(0, bar)), list(text.substr(bar + 1))};
}

namespace detail {

inline json rat_json(const Rat &q) { return q.get_str(); }

inline json estimate_json(const ExponentEstimate &e) {
  json j;
  j["infinite"] = e.infinite;
  if (e.infinite || e.best_q.empty())
    j["value"] = nullptr;
  else
    j["value"] = e.value;
  j["best_q"] = e.best_q;
  j["best_p"] = e.best_p;
  j["Q"] = e.Q;
  j["q_min"] = e.q_min;
  j["candidates"] = e.candidates;
  return j;
}

inline json words_json(const WordSystem &ws) {
  json arr = json::array();
  for (const auto &w : ws.words) arr.push_back(w.to_string());
  return arr;
}

inline json run_strong(const RunConfig &cfg, json &report) {
  WordSystem ws = parse_words(cfg.words, cfg.m, cfg.r);
  report["inputs"] = {{"m", ws.m}, {"r", ws.r}, {"words", words_json(ws)}};
  report["budgets"] = {{"max_m", cfg.max_m}, {"max_monomials", cfg.max_monomials}};
  auto rep = check_strong_with_abelianization(ws, {cfg.max_m, cfg.max_monomials});
  const auto &v = rep.verdict;
  json res;
  res["verdict"] = v.is_strongly_nonplanar ? "strongly_nonplanar"
                                           : "not_strongly_nonplanar";
  res["rank"] = v.rank;
  res["c"] = v.c;
  res["monomials"] = v.monomial_count;
  res["distinct_abelianizations"] = rep.distinct_abelianizations;
  res["abelianization_criterion_agrees"] = rep.consistent;
  if (v.witness) {
    json w = json::array();
    for (std::size_t k = 0; k < v.c; ++k)
      if ((*v.witness)[k] != 0)
        w.push_back({{"minor", v.index[k].to_string()},
                     {"coefficient", rat_json((*v.witness)[k])}});
    res["witness"] = w;
    res["kernel_dimension"] = v.kernel_basis.size();
  }
  return res;
}

inline json run_weak(const RunConfig &cfg, json &report) {
  Parameterization f;
  if (!cfg.param_file.empty())
    f = load_parameterization_file(cfg.param_file);
  else if (!cfg.param_json.empty())
    f = load_parameterization_text(cfg.param_json);
  else
    throw std::invalid_argument("weak-check: a parameterization is required");
  json entries = json::array();
  for (std::size_t i = 0; i < f.m; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.n; ++j) row.push_back(f.entries(i, j).to_string());
    entries.push_back(row);
  }
  report["inputs"] = {{"k", f.k}, {"m", f.m}, {"n", f.n}, {"entries", entries}};
  report["budgets"] = {{"gb_max_pairs", cfg.gb_max_pairs}};
  WeakLimits limits;
  limits.groebner.max_pairs = cfg.gb_max_pairs;
  auto v = check_weak_complex(f, limits);
  json res;
  res["status"] = to_string(v.status);
  res["free_variable"] = v.free_variable ? json(v.free_variable->to_string()) : json();
  json ideal = json::array();
  for (const auto &g : v.ideal) ideal.push_back(g.to_string());
  res["ideal"] = ideal;
  json mem = json::object();
  for (const auto &[u, in] : v.membership) mem[u.to_string()] = in;
  res["radical_membership"] = mem;
  if (v.status == WeakStatus::ComplexSolutionExists)
    res["note"] = "complex solution exists; inconclusive for real weak nonplanarity";
  return res;
}

inline json run_lemma(const RunConfig &cfg, json &report) {
  WordSystem ws = parse_words(cfg.words, cfg.m, cfg.r);
  report["inputs"] = {{"m", ws.m}, {"r", ws.r}, {"words", words_json(ws)},
                      {"minor", cfg.minor}, {"max_minor_size", cfg.max_minor_size}};
  report["budgets"] = {{"lemma_budget", cfg.lemma_budget}};
  std::vector<MinorIndex> ds;
  if (!cfg.minor.empty()) {
    ds.push_back(parse_minor(cfg.minor));
  } else {
    for (auto &d : enumerate_D(ws.m, ws.width()))
      if (cfg.max_minor_size == 0 || d.size() <= cfg.max_minor_size)
        ds.push_back(std::move(d));
  }
  json rows = json::array();
  bool all = true;
  for (const auto &d : ds) {
    auto chk = check_lemma(ws, d, cfg.lemma_budget);
    all = all && chk.holds;
    json r = {{"minor", d.to_string()},
              {"f", chk.f_d},
              {"holds", chk.holds},
              {"collections", chk.collections},
              {"witness", chk.witness.to_string()}};
    if (chk.counterexample) r["counterexample"] = chk.counterexample->to_string();
    rows.push_back(r);
  }
  json res;
  res["all_hold"] = all;
  res["checked"] = ds.size();
  res["results"] = rows;
  return res;
}

inline json run_paths(const RunConfig &cfg, json &report) {
  WordSystem ws = parse_words(cfg.words, cfg.m, cfg.r);
  report["inputs"] = {{"m", ws.m}, {"r", ws.r}, {"words", words_json(ws)}};
  auto xs = generic_matrices(ws.m, ws.r);
  std::size_t checked = 0;
  json mismatches = json::array();
  for (std::size_t l = 1; l <= ws.n(); ++l) {
    PolyMatrix direct = evaluate_word(ws.words[l - 1], xs);
    for (unsigned i = 1; i <= ws.m; ++i)
      for (unsigned t = 1; t <= ws.m; ++t) {
        ++checked;
        if (path_sum_entry(ws, i, t, l) != direct(i - 1, t - 1))
          mismatches.push_back({{"label", l}, {"i", i}, {"t", t}});
      }
  }
  json res;
  res["entries_checked"] = checked;
  res["all_equal"] = mismatches.empty();
  res["mismatches"] = mismatches;
  return res;
}

inline json run_exponents(const RunConfig &cfg, json &report) {
  ParsedMatrix pm = parse_matrix(cfg.matrix);
  if (pm.rows != cfg.m || pm.cols != cfg.n)
    throw std::invalid_argument("exponents: matrix is " + std::to_string(pm.rows) +
                                "x" + std::to_string(pm.cols) + ", expected " +
                                std::to_string(cfg.m) + "x" + std::to_string(cfg.n));
  if (cfg.kind != "omega" && cfg.kind != "omega_x" && cfg.kind != "both")
    throw std::invalid_argument("exponents: kind must be omega, omega_x or both");
  json mat = json::array();
  for (const auto &q : pm.entries) mat.push_back(rat_json(q));
  report["inputs"] = {{"m", cfg.m}, {"n", cfg.n}, {"matrix", mat},
                      {"Q", cfg.Q}, {"q_min", cfg.q_min}, {"kind", cfg.kind}};
  RealMatrix a = RealMatrix::from_rationals(pm.rows, pm.cols, pm.entries);
  ExponentOptions opt;
  opt.q_min = cfg.q_min;
  json res;
  if (cfg.kind != "omega_x") res["omega"] = estimate_json(estimate_omega(a, cfg.Q, opt));
  if (cfg.kind != "omega") res["omega_x"] = estimate_json(estimate_omega_x(a, cfg.Q, opt));
  return res;
}

inline json run_baker(const RunConfig &cfg, json &report) {
  BakerOptions opt;
  opt.m = cfg.m;
  opt.n = cfg.n;
  opt.Q = cfg.Q;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.exponent.q_min = cfg.q_min;
  for (const auto &f : cfg.forced) {
    ParsedMatrix pm = parse_matrix(f);
    if (pm.rows != cfg.m || pm.cols != cfg.m)
      throw std::invalid_argument("baker-experiment: forced sample must be m x m");
    opt.forced.push_back(pm.entries);
  }
  report["inputs"] = {{"m", cfg.m}, {"n", cfg.n}, {"Q", cfg.Q}, {"q_min", cfg.q_min},
                      {"trials", cfg.trials}, {"seed", cfg.seed}, {"forced", cfg.forced}};
  BakerReport rep = baker_experiment(opt);
  json trials = json::array();
  for (const auto &t : rep.trials) {
    json e = estimate_json(t.estimate);
    e["sample"] = t.sample;
    e["forced"] = t.forced;
    trials.push_back(e);
  }
  json res;
  res["trials"] = trials;
  res["median"] = rep.median ? json(*rep.median) : json();
  res["max"] = rep.max ? json(*rep.max) : json();
  res["infinite_count"] = rep.infinite_count;
  return res;
}

} // namespace detail

/// Executes one subcommand. Never throws: failures become an "error" entry
/// in the report and a nonzero exit code.
inline RunResult run(const RunConfig &cfg) {
  RunResult out;
  out.report["schema"] = kSchema;
  out.report["subcommand"] = cfg.subcommand;
  auto start = std::chrono::steady_clock::now();
  try {
    json res;
    if (cfg.subcommand == "strong-check")
      res = detail::run_strong(cfg, out.report);
    else if (cfg.subcommand == "weak-check")
      res = detail::run_weak(cfg, out.report);
    else if (cfg.subcommand == "lemma-verify")
      res = detail::run_lemma(cfg, out.report);
    else if (cfg.subcommand == "paths-oracle")
      res = detail::run_paths(cfg, out.report);
    else if (cfg.subcommand == "exponents")
      res = detail::run_exponents(cfg, out.report);
    else if (cfg.subcommand == "baker-experiment")
      res = detail::run_baker(cfg, out.report);
    else
      throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
    out.report["result"] = std::move(res);
  } catch (const budget_exceeded &e) {
    out.report["error"] = {{"kind", "budget_exceeded"}, {"message", e.what()}};
    out.exit_code = kBudgetExceeded;
  } catch (const std::invalid_argument &e) {
    out.report["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const std::out_of_range &e) {
    out.report["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const nlohmann::json::exception &e) {
    out.report["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const std::exception &e) {
    out.report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    out.exit_code = kInternalError;
  }
  if (cfg.timings) {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    out.report["timings"] = {{"total_ms", ms}};
  }
  return out;
}

} // namespace nplab::cli

#endif // NPLAB_CLI_HPP
