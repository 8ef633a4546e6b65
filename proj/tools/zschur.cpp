// Command-line front end: compute / check / enumerate / verify / tables.
// Machine output is JSON on stdout (or --output FILE); human summaries go
// to stderr.  Exit codes: 0 resolved or verified, 1 verification
// counterexample or table mismatch, 2 usage error, 3 budget exhausted.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "zschur/core.hpp"
#include "zschur/enumerate.hpp"
#include "zschur/search.hpp"
#include "zschur/serialize.hpp"
#include "zschur/tables.hpp"
#include "zschur/witness.hpp"
#include "zschur/zero_sum.hpp"

namespace {

using nlohmann::json;
using namespace zschur;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::string output;  // empty or "-" = stdout
  int threads = 1;
  bool threads_given = false;
  double budget_s = 0.0;
  int verbosity = 0;
};

void emit(const GlobalOptions& opt, const json& payload) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << payload.dump() << "\n";
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
  out << payload.dump(2) << "\n";
}

int resolve_threads(const GlobalOptions& opt) {
  if (opt.threads_given) return opt.threads;
  if (const char* env = std::getenv("ZSCHUR_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return opt.threads;
}

SearchLimits make_limits(const GlobalOptions& opt, int max_n, bool symmetry) {
  SearchLimits lim;
  lim.max_n = max_n;
  lim.worker_count = resolve_threads(opt);
  lim.symmetry_reduction = symmetry;
  if (opt.budget_s > 0)
    lim.time_budget = std::chrono::milliseconds(static_cast<long long>(opt.budget_s * 1000));
  return lim;
}

int run_compute(const GlobalOptions& opt, int k, int r, bool binary, int max_n,
                bool symmetry) {
  const Params p{k, r, binary ? Palette::Binary : Palette::Full};
  const SearchLimits lim = make_limits(opt, max_n, symmetry);
  const SearchOutcome outcome = compute_number(p, lim);

  json record = to_json(outcome, r);
  record["k"] = k;
  record["r"] = r;
  record["palette"] = palette_name(p.palette);
  emit(opt, record);

  switch (outcome.status) {
    case Status::Infinite:
      std::cerr << "S(" << k << ";" << r << ") is infinite (r does not divide k)\n";
      return kExitOk;
    case Status::Finite:
      std::cerr << "S(" << k << ";" << r << ") = " << outcome.value << "  ["
                << outcome.stats.nodes << " nodes, " << outcome.stats.elapsed_ms << " ms]\n";
      return kExitOk;
    case Status::Unresolved:
      std::cerr << "unresolved: S(" << k << ";" << r << ") >= " << outcome.lower_bound + 1
                << "  [" << outcome.stats.nodes << " nodes, " << outcome.stats.elapsed_ms
                << " ms]\n";
      return kExitBudget;
  }
  return kExitOk;
}

int run_check(const GlobalOptions& opt, const std::string& text, int k, int r) {
  const Params p{k, r, Palette::Full};
  const Coloring chi = parse_coloring(text, r);
  for (uint8_t c : chi.colors())
    if (c >= r) throw CLI::ValidationError("coloring", "color exceeds r-1");

  const auto hit = find_any_zero_sum(chi, p);
  json record{{"k", k},
              {"r", r},
              {"coloring", encode_coloring(chi, r)},
              {"zero_sum", hit.has_value()}};
  if (hit) {
    json sol = to_json(*hit);
    sol["color_sum"] = color_sum(*hit, chi, r);
    record["solution"] = sol;
    std::string parts;
    for (size_t i = 0; i < hit->parts.size(); ++i) {
      if (i) parts += "+";
      parts += std::to_string(hit->parts[i]);
    }
    std::cerr << "zero-sum: " << parts << "=" << hit->target << "\n";
  } else {
    std::cerr << "AVOIDING\n";
  }
  emit(opt, record);
  return kExitOk;
}

int run_enumerate(const GlobalOptions& opt, int t, int k, bool count_only) {
  (void)opt;
  if (count_only) {
    std::cout << count_solutions(t, k) << "\n";
    return kExitOk;
  }
  enumerate_solutions(t, k, [](const std::vector<int>& parts, int) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << parts[i];
    }
    std::cout << '\n';
    return true;
  });
  return kExitOk;
}

int run_verify(const GlobalOptions& opt, const std::string& family_text, int k, int all_up_to,
               double tuple_budget) {
  const Family family = family_from_name(family_text);
  std::vector<int> ks;
  if (all_up_to > 0) {
    for (int cand = 3; cand <= all_up_to; ++cand)
      if (family_applicable(family, cand)) ks.push_back(cand);
  } else {
    require_applicable(family, k);
    ks.push_back(k);
  }

  json records = json::array();
  bool all_avoid = true;
  for (int cand : ks) {
    const double cost = top_target_solution_estimate(family, cand);
    if (all_up_to > 0 && cost > tuple_budget) {
      std::cerr << family_text << " k=" << cand << ": skipped, ~" << cost
                << " solutions at the top target exceeds budget " << tuple_budget << "\n";
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport report = verify_witness(family, cand);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_avoid = all_avoid && report.avoids;
    json j = to_json(report);
    j["elapsed_s"] = secs;
    records.push_back(j);
    std::cerr << report.family << " k=" << cand << " n=" << report.length
              << " bound=" << report.claimed_bound
              << (report.avoids ? " avoids=true" : " avoids=FALSE") << "\n";
  }
  emit(opt, records.size() == 1 && all_up_to == 0 ? records[0] : records);
  return all_avoid ? kExitOk : kExitCounterexample;
}

int run_tables(const GlobalOptions& opt, const std::string& table_text,
               const std::string& tier_text, const std::string& cache) {
  CellFilter filter;
  filter.tier_a = true;
  filter.tier_b = tier_text != "a";
  filter.tier_c = tier_text == "abc";

  std::vector<int> table_ids;
  if (table_text == "1")
    table_ids = {1};
  else if (table_text == "2")
    table_ids = {2};
  else
    table_ids = {1, 2};

  const SearchLimits lim = make_limits(opt, 4096, true);
  json all = json::array();
  bool mismatch = false, skipped = false;
  for (int table : table_ids) {
    const auto results = reproduce_table(table, filter, lim, cache);
    for (const auto& cell : results) {
      all.push_back(to_json(cell));
      mismatch = mismatch || cell.verdict == Verdict::Mismatch;
      skipped = skipped || cell.verdict == Verdict::SkippedBudget;
      if (cell.new_result)
        std::cerr << "NEW RESULT: k=" << cell.k << " r=" << cell.r
                  << " outruns the published lower bound\n";
    }
    std::cerr << render_grid(table, results);
  }
  emit(opt, all);
  if (mismatch) return kExitCounterexample;
  if (skipped) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation of zero-sum generalized Schur numbers"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  GlobalOptions opt;
  app.add_option("--output", opt.output, "write machine output to FILE ('-' = stdout)");
  auto* threads_opt = app.add_option("--threads", opt.threads, "worker threads");
  app.add_option("--budget", opt.budget_s, "time budget in seconds (0 = unlimited)");
  app.add_flag("-v,--verbose", opt.verbosity, "more progress output on stderr");

  // compute
  int k = 0, r = 0, max_n = 4096;
  bool binary = false, no_symmetry = false;
  auto* compute = app.add_subcommand("compute", "compute S3(k;r) or S32(k;r)");
  compute->add_option("--k", k, "term count of the equation")->required();
  compute->add_option("--r", r, "number of colors / modulus")->required();
  compute->add_flag("--binary", binary, "restrict colorings to {0,1}");
  compute->add_option("--max-n", max_n, "largest interval length to attempt");
  compute->add_flag("--no-symmetry", no_symmetry, "disable symmetry reduction");
  double compute_budget = 0.0;
  compute->add_option("--budget", compute_budget, "time budget in seconds");
  int compute_threads = 0;
  compute->add_option("--threads", compute_threads, "worker threads");

  // check
  std::string coloring_text;
  int check_k = 0, check_r = 0;
  auto* check = app.add_subcommand("check", "test a coloring for zero-sum solutions");
  check->add_option("--coloring", coloring_text, "digit string (or comma-separated)")
      ->required();
  check->add_option("--k", check_k, "term count")->required();
  check->add_option("--r", check_r, "modulus")->required();

  // enumerate
  int enum_t = 0, enum_k = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list solutions with a given target");
  enumerate->add_option("--t", enum_t, "target value")->required();
  enumerate->add_option("--k", enum_k, "term count")->required();
  enumerate->add_flag("--count-only", count_only, "print only the number of solutions");

  // verify
  std::string family_text;
  int verify_k = 0, all_up_to = 0;
  double tuple_budget = 1e8;
  auto* verify = app.add_subcommand("verify", "verify a lower-bound witness family");
  verify->add_option("--family", family_text, "p3|t4|t5|t6|p7|s32kk")->required();
  verify->add_option("--k", verify_k, "term count");
  verify->add_option("--all-k-up-to", all_up_to, "verify every applicable k up to N");
  verify->add_option("--tuple-budget", tuple_budget,
                     "sweep mode: skip k past this many enumerated tuples");

  // tables
  std::string table_text = "both", tier_text = "ab", cache;
  auto* tables = app.add_subcommand("tables", "reproduce the known value tables");
  tables->add_option("--table", table_text, "1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}));
  tables->add_option("--tier", tier_text, "a, ab or abc")
      ->check(CLI::IsMember({"a", "ab", "abc"}));
  tables->add_option("--cache", cache, "result cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) {
      if (compute_threads >= 1) {
        opt.threads = compute_threads;
        opt.threads_given = true;
      } else {
        opt.threads_given = threads_opt->count() > 0;
      }
      if (compute_budget > 0) opt.budget_s = compute_budget;
      return run_compute(opt, k, r, binary, max_n, !no_symmetry);
    }
    opt.threads_given = threads_opt->count() > 0;
    if (*check) return run_check(opt, coloring_text, check_k, check_r);
    if (*enumerate) return run_enumerate(opt, enum_t, enum_k, count_only);
    if (*verify) {
      if (all_up_to == 0 && verify_k == 0)
        throw CLI::RequiredError("verify needs --k or --all-k-up-to");
      return run_verify(opt, family_text, verify_k, all_up_to, tuple_budget);
    }
    if (*tables) return run_tables(opt, table_text, tier_text, cache);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
