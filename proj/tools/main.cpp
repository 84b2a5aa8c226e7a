// cyclosig: circular-unit signature rank toolkit.
//
// Subcommands: matrix, rank, verify, survey, bound, composite, lemma.
// Exit codes: 0 success, 1 I/O failure, 2 invalid input/usage,
// 3 a verified mathematical statement failed to hold.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclosig/composite.hpp"
#include "cyclosig/conductor.hpp"
#include "cyclosig/errors.hpp"
#include "cyclosig/gf2.hpp"
#include "cyclosig/sigmatrix.hpp"
#include "cyclosig/survey.hpp"
#include "cyclosig/version.hpp"

namespace {

using namespace cyclosig;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitFalsified = 3;

nlohmann::json matrix_to_json(const SignMatrix& mat, std::int64_t m,
                              MatrixKind kind) {
  nlohmann::json j;
  j["m"] = m;
  j["kind"] = std::string(to_string(kind));
  j["row_labels"] = mat.row_labels();
  j["col_labels"] = mat.col_labels();
  std::vector<std::string> rows;
  rows.reserve(mat.n_rows());
  for (const auto& r : mat.rows()) rows.push_back(r.to_hex());
  j["rows"] = rows;
  return j;
}

void print_matrix_text(const SignMatrix& mat, std::string_view name,
                       std::ostream& out) {
  out << name << " (" << mat.n_rows() << "x" << mat.n_cols() << ")\n";
  out << "cols:";
  for (auto b : mat.col_labels()) out << ' ' << b;
  out << '\n';
  for (std::size_t i = 0; i < mat.n_rows(); ++i) {
    out << "a=" << mat.row_labels()[i] << ":";
    for (std::size_t j = 0; j < mat.n_cols(); ++j)
      out << ' ' << (mat.at(i, j) ? 1 : 0);
    out << '\n';
  }
}

// Rejects conductors that have no signature matrix, with the scope hint for
// composite m.
Conductor require_prime_power(std::int64_t m) {
  const Conductor c = make_conductor(m);
  if (!c.is_prime_power())
    throw std::invalid_argument(
        "composite m: matrix construction out of scope; use `bound`");
  return c;
}

int cmd_matrix(std::int64_t m, const std::string& format,
               const std::string& out_path) {
  const Conductor c = require_prime_power(m);
  const SignMatrix C = build_circular_matrix(c);
  const SignMatrix M = build_modified_matrix(C);
  const MatrixKind kind =
      c.is_two_power() ? MatrixKind::two_power : MatrixKind::odd_prime_power;

  std::ostringstream body;
  if (format == "json") {
    nlohmann::json j;
    j["C"] = matrix_to_json(C, m, kind);
    j["M"] = matrix_to_json(M, m, kind);
    body << j.dump(2) << '\n';
  } else {
    print_matrix_text(C, "C", body);
    print_matrix_text(M, "M", body);
  }

  if (out_path.empty()) {
    std::cout << body.str();
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  out << body.str();
  return out ? kExitOk : kExitIo;
}

int cmd_rank(std::int64_t m, bool as_json) {
  const Conductor c = require_prime_power(m);
  const RankReport r = verify_lower_bound(c);
  if (as_json) {
    nlohmann::json j;
    j["m"] = r.m;
    j["kind"] = std::string(to_string(r.kind));
    j["phi_half"] = r.phi_half;
    j["rank"] = r.rank;
    j["deficiency"] = r.circular_deficiency;
    j["log_bound"] = r.log_bound;
    j["bound_satisfied"] = r.bound_satisfied;
    j["full_rank"] = r.full_rank;
    j["two_adic_deficiency_bound"] = two_adic_bound(r.circular_deficiency);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "m = " << r.m << " (" << to_string(r.kind) << ")\n"
              << "phi(m)/2 = " << r.phi_half << '\n'
              << "circular signature rank = " << r.rank << '\n'
              << "deficiency = " << r.circular_deficiency << '\n'
              << "lower bound floor(log2 m) - 2 = " << r.log_bound
              << (r.bound_satisfied ? " (satisfied)" : " (VIOLATED)") << '\n'
              << "full rank = " << (r.full_rank ? "yes" : "no") << '\n'
              << "2-adic deficiency bound (3x) = "
              << two_adic_bound(r.circular_deficiency) << '\n';
  }
  return r.bound_satisfied ? kExitOk : kExitFalsified;
}

int cmd_bound(std::int64_t m, bool as_json) {
  const CompositeBoundReport r = theorem_bound(make_conductor(m));
  if (as_json) {
    nlohmann::json j;
    j["m"] = r.m;
    j["omega"] = r.omega;
    j["theorem_bound_real"] = r.theorem_bound_real;
    j["theorem_bound"] = r.theorem_bound;
    nlohmann::json factors = nlohmann::json::array();
    for (auto [q, b] : r.per_factor_bounds)
      factors.push_back({{"prime_power", q}, {"bound", b}});
    j["per_factor_bounds"] = factors;
    j["combined_sum"] = r.combined_sum;
    j["combined_bound"] = r.combined_bound;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "m = " << r.m << ", omega = " << r.omega << '\n'
              << "theorem bound log2(m) - 4*omega + 1 = "
              << r.theorem_bound_real << " -> " << r.theorem_bound
              << " (smallest integer >= value, clamped at 0)\n"
              << "per-factor bounds floor(log2 p^a) - 2:";
    for (auto [q, b] : r.per_factor_bounds) std::cout << ' ' << q << "->" << b;
    std::cout << '\n'
              << "combined sum - (omega - 1) = " << r.combined_sum
              << " (clamped: " << r.combined_bound << ")\n";
  }
  return kExitOk;
}

int cmd_lemma(std::int64_t m, int k, bool check_column, bool as_json) {
  const Conductor c = make_conductor(m);
  const LemmaWitness w = lemma_witness(c, k);
  std::optional<bool> column_ok;
  if (check_column) {
    const SignMatrix M =
        build_modified_matrix(build_matrix_odd_prime_power(c));
    column_ok = column_witness_holds(M, w);
  }
  if (as_json) {
    nlohmann::json j;
    j["m"] = w.m;
    j["k"] = w.k;
    j["b0"] = w.b0;
    j["b1"] = w.b1;
    j["chosen_B"] = w.chosen_B;
    nlohmann::json parities = nlohmann::json::array();
    for (auto [d, parity] : w.parities)
      parities.push_back({{"d", d}, {"parity", parity}});
    j["parities"] = parities;
    if (column_ok) j["column_witness"] = *column_ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "m = " << w.m << ", k = " << w.k << '\n'
              << "b0 = " << w.b0 << ", b1 = " << w.b1
              << ", chosen B(k) = " << w.chosen_B << '\n'
              << "floor(2^(d+1) B / m) parities:";
    for (auto [d, parity] : w.parities)
      std::cout << " d=" << d << ":" << (parity ? "odd" : "even");
    std::cout << '\n';
    if (column_ok)
      std::cout << "column of M at B(k) over rows 2..2^k = (0,...,0,1): "
                << (*column_ok ? "yes" : "NO") << '\n';
  }
  if (column_ok && !*column_ok) return kExitFalsified;
  return kExitOk;
}

int cmd_composite(std::int64_t left_m, std::int64_t right_m, bool as_json) {
  const Conductor cl = require_prime_power(left_m);
  const Conductor cr = require_prime_power(right_m);
  if (std::gcd(cl.m, cr.m) != 1)
    throw std::invalid_argument(
        "conductors must be coprime for the product-space combinator");

  const SignMatrix left_C = build_circular_matrix(cl);
  const SignMatrix right_C = build_circular_matrix(cr);
  const auto left_span = row_space_basis(left_C);
  const auto right_span = row_space_basis(right_C);
  const CompositeRank result = composite_rank(left_span, right_span);

  if (as_json) {
    nlohmann::json j;
    j["left_m"] = cl.m;
    j["right_m"] = cr.m;
    j["left_rank"] = left_span.size();
    j["right_rank"] = right_span.size();
    j["product_dims"] = cl.phi_half * cr.phi_half;
    j["rank"] = result.rank;
    j["predicted"] = result.predicted;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "left m = " << cl.m << " (rank " << left_span.size()
              << "), right m = " << cr.m << " (rank " << right_span.size()
              << ")\n"
              << "product space dimension = " << cl.phi_half * cr.phi_half
              << '\n'
              << "computed rank = " << result.rank
              << ", predicted = " << result.predicted << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteOutcome {
  int checked = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

template <typename Item, typename Fn>
SuiteOutcome run_items(const std::vector<Item>& items, int jobs, Fn check) {
  std::vector<std::string> lines(items.size());
  std::vector<char> passed(items.size(), 1);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) break;
      try {
        passed[i] = check(items[i], lines[i]) ? 1 : 0;
      } catch (const std::exception& e) {
        lines[i] += std::string(" FALSIFIED: ") + e.what();
        passed[i] = 0;
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  SuiteOutcome outcome;
  outcome.checked = static_cast<int>(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::cout << lines[i] << (passed[i] ? " OK" : " FAIL") << '\n';
    if (!passed[i]) ++outcome.failed;
  }
  return outcome;
}

SuiteOutcome suite_weber(std::int64_t max_m, int jobs) {
  std::vector<int> ns;
  for (int n = 2; (std::int64_t{1} << n) <= max_m; ++n) ns.push_back(n);
  return run_items(ns, jobs, [](int n, std::string& line) {
    const std::int64_t m = std::int64_t{1} << n;
    const RankReport r = verify_lower_bound(make_conductor(m));
    const std::int64_t expected = std::int64_t{1} << (n - 2);
    line = "m=2^" + std::to_string(n) + " rank=" + std::to_string(r.rank) +
           " expected=" + std::to_string(expected);
    return r.rank == expected;
  });
}

std::vector<std::int64_t> odd_prime_powers_up_to(std::int64_t max_m) {
  return survey_conductors(3, max_m, SurveyFilter::odd_prime_powers);
}

SuiteOutcome suite_lemma(std::int64_t max_m, int jobs) {
  const auto ms = odd_prime_powers_up_to(max_m);
  return run_items(ms, jobs, [](std::int64_t m, std::string& line) {
    const Conductor c = make_conductor(m);
    const SignMatrix M =
        build_modified_matrix(build_matrix_odd_prime_power(c));
    int k_max = 0;
    bool all_ok = true;
    for (int k = 1; (std::int64_t{1} << (k + 2)) < m; ++k) {
      const LemmaWitness w = lemma_witness(c, k);  // throws on parity failure
      if (!column_witness_holds(M, w)) all_ok = false;
      k_max = k;
    }
    line = "m=" + std::to_string(m) + " k=1.." + std::to_string(k_max) +
           " parities+column-witness";
    return all_ok;
  });
}

SuiteOutcome suite_bound(std::int64_t max_m, int jobs) {
  const auto ms = survey_conductors(3, max_m, SurveyFilter::prime_powers);
  return run_items(ms, jobs, [](std::int64_t m, std::string& line) {
    const Conductor c = make_conductor(m);
    const SignMatrix C = build_circular_matrix(c);
    const SignMatrix M = build_modified_matrix(C);
    const std::int64_t rank_C = rank(C);
    const std::int64_t rank_M = rank(M);
    const RankReport r = make_rank_report(c, rank_M);
    const std::int64_t tb = theorem_bound(c).theorem_bound;
    line = "m=" + std::to_string(m) + " rank=" + std::to_string(rank_M) +
           " log-bound=" + std::to_string(r.log_bound) +
           " theorem-bound=" + std::to_string(tb);
    return rank_C == rank_M && r.bound_satisfied && rank_M >= tb;
  });
}

SuiteOutcome suite_oracle(std::int64_t max_m, int jobs) {
  const auto ms = survey_conductors(3, max_m, SurveyFilter::prime_powers);
  return run_items(ms, jobs, [](std::int64_t m, std::string& line) {
    const Conductor c = make_conductor(m);
    const SignMatrix C = build_circular_matrix(c);
    const auto& res = C.col_labels();
    std::int64_t disagreements = 0;
    std::int64_t entries = 0;
    for (std::size_t i = 0; i < C.n_rows(); ++i) {
      if (C.row_labels()[i] == 1) continue;  // -1 row: not a sine ratio
      for (std::size_t j = 0; j < C.n_cols(); ++j) {
        const int exact = C.at(i, j) ? 1 : 0;
        const int oracle = sine_oracle_entry(C.row_labels()[i], res[j], c);
        ++entries;
        if (exact != oracle) ++disagreements;
      }
    }
    line = "m=" + std::to_string(m) + " entries=" + std::to_string(entries) +
           " disagreements=" + std::to_string(disagreements);
    return disagreements == 0;
  });
}

SuiteOutcome suite_composite(int n_random, std::int64_t pair_max,
                             std::uint64_t seed, int jobs) {
  SuiteOutcome total;

  // Randomized synthetic spans.
  std::mt19937_64 rng(seed);
  int random_failures = 0;
  for (int i = 0; i < n_random; ++i) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, 12);
    const std::size_t ld = dim_dist(rng);
    const std::size_t rd = dim_dist(rng);
    std::uniform_int_distribution<std::size_t> rank_dist_l(
        1, std::min<std::size_t>(6, ld));
    std::uniform_int_distribution<std::size_t> rank_dist_r(
        1, std::min<std::size_t>(6, rd));
    const auto left =
        random_independent_span(rng, ld, rank_dist_l(rng), rng() & 1);
    const auto right =
        random_independent_span(rng, rd, rank_dist_r(rng), rng() & 1);
    try {
      composite_rank(left, right);  // throws if rank != predicted
    } catch (const std::exception& e) {
      ++random_failures;
      std::cout << "random instance " << i << " FALSIFIED: " << e.what()
                << '\n';
    }
  }
  std::cout << "random instances: " << (n_random - random_failures) << "/"
            << n_random << (random_failures == 0 ? " OK" : " FAIL") << '\n';
  total.checked += n_random;
  total.failed += random_failures;

  // All coprime pairs of prime-power conductors up to the cap.
  const auto pps = survey_conductors(3, pair_max, SurveyFilter::prime_powers);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i < pps.size(); ++i)
    for (std::size_t j = i + 1; j < pps.size(); ++j)
      if (std::gcd(pps[i], pps[j]) == 1) pairs.emplace_back(pps[i], pps[j]);

  std::atomic<int> pair_failures{0};
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) break;
      const auto [pm, qm] = pairs[i];
      try {
        const auto left =
            row_space_basis(build_circular_matrix(make_conductor(pm)));
        const auto right =
            row_space_basis(build_circular_matrix(make_conductor(qm)));
        composite_rank(left, right);
      } catch (const std::exception& e) {
        ++pair_failures;
        std::cout << "pair (" << pm << ", " << qm << ") FALSIFIED: "
                  << e.what() << '\n';
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < std::max(1, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  std::cout << "conductor pairs <= " << pair_max << ": "
            << (pairs.size() - pair_failures) << "/" << pairs.size()
            << (pair_failures == 0 ? " OK" : " FAIL") << '\n';
  total.checked += static_cast<int>(pairs.size());
  total.failed += pair_failures;
  return total;
}

SuiteOutcome suite_corollary() {
  SuiteOutcome outcome;
  const CorollaryResult result = corollary_check();
  for (const auto& e : result.entries) {
    std::cout << "m=" << e.m << " rank=" << e.rank
              << (e.rank >= 2 ? " (>= 2) OK" : " FAIL") << '\n';
    ++outcome.checked;
    if (e.rank < 2) ++outcome.failed;
  }
  std::cout << "m=" << result.exception_m << " documented exception: "
            << result.exception_note << '\n';
  ++outcome.checked;
  return outcome;
}

int cmd_verify(const std::string& suite, std::int64_t max_m, int n_random,
               std::uint64_t seed, int jobs) {
  SuiteOutcome total;
  const auto add = [&](const SuiteOutcome& o) {
    total.checked += o.checked;
    total.failed += o.failed;
  };

  const bool all = suite == "all";
  try {
    if (all || suite == "weber")
      add(suite_weber(max_m > 0 ? max_m : 8192, jobs));
    if (all || suite == "lemma")
      add(suite_lemma(max_m > 0 ? max_m : 2000, jobs));
    if (all || suite == "bound")
      add(suite_bound(max_m > 0 ? max_m : 2000, jobs));
    if (all || suite == "oracle")
      add(suite_oracle(max_m > 0 ? max_m : 2000, jobs));
    if (all || suite == "composite")
      add(suite_composite(n_random, max_m > 0 ? max_m : 200, seed, jobs));
    if (all || suite == "corollary") add(suite_corollary());
  } catch (const falsification_error& e) {
    std::cout << "FALSIFIED: " << e.what() << '\n';
    ++total.failed;
  }

  std::cout << "verify " << suite << ": " << (total.checked - total.failed)
            << "/" << total.checked << " checks passed\n";
  return total.ok() ? kExitOk : kExitFalsified;
}

int cmd_survey(const std::string& range_spec, const std::string& filter_name,
               int jobs, std::string cache_dir, const std::string& out_path,
               bool allow_large) {
  SurveyOptions options;
  if (!parse_range_spec(range_spec, options.lo, options.hi))
    throw std::invalid_argument("range must look like 3..10000");
  const auto filter = parse_survey_filter(filter_name);
  if (!filter)
    throw std::invalid_argument(
        "filter must be prime-powers, odd-prime-powers or two-powers");
  options.filter = *filter;
  options.jobs = jobs;
  options.allow_large = allow_large;
  if (const char* env = std::getenv("CYCLOSIG_CACHE"); env && *env)
    cache_dir = env;
  options.cache_dir = cache_dir;

  const auto records = run_survey(options);

  if (out_path.empty()) {
    write_survey_csv(records, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitIo;
    }
    write_survey_csv(records, out);
    if (!out) return kExitIo;
  }

  for (const auto& rec : records)
    if (rec.errored()) return kExitIo;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular-unit signature ranks in real cyclotomic fields"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  std::int64_t m = 0;
  std::string format = "json";
  std::string out_path;
  bool as_json = false;

  auto* matrix_cmd = app.add_subcommand(
      "matrix", "Export the signature matrices C and M for a prime power");
  matrix_cmd->add_option("--m", m, "conductor (prime power)")->required();
  matrix_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  matrix_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* rank_cmd = app.add_subcommand(
      "rank", "Rank report for one prime-power conductor");
  rank_cmd->add_option("--m", m, "conductor (prime power)")->required();
  rank_cmd->add_flag("--json", as_json, "emit JSON");

  auto* bound_cmd = app.add_subcommand(
      "bound", "General-conductor lower bound (no matrix computation)");
  bound_cmd->add_option("--m", m, "conductor")->required();
  bound_cmd->add_flag("--json", as_json, "emit JSON");

  int k = 0;
  bool check_column = false;
  auto* lemma_cmd = app.add_subcommand(
      "lemma", "Floor-parity witness b0(k), b1(k), B(k) for an odd prime power");
  lemma_cmd->add_option("--m", m, "odd prime power")->required();
  lemma_cmd->add_option("--k", k, "pattern length (requires m > 2^(k+2))")
      ->required();
  lemma_cmd->add_flag("--check-column", check_column,
                      "also build M and verify the column pattern");
  lemma_cmd->add_flag("--json", as_json, "emit JSON");

  std::int64_t right_m = 0;
  auto* composite_cmd = app.add_subcommand(
      "composite",
      "Product-space rank combinator for two coprime prime powers");
  composite_cmd->add_option("--left", m, "left conductor")->required();
  composite_cmd->add_option("--right", right_m, "right conductor")->required();
  composite_cmd->add_flag("--json", as_json, "emit JSON");

  std::string suite;
  std::int64_t max_m = -1;
  int n_random = 1000;
  std::uint64_t seed = 12345;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"lemma", "bound", "weber", "oracle", "composite",
                             "corollary", "all"}));
  verify_cmd->add_option("--max-m", max_m,
                         "upper conductor limit (per-suite default)");
  verify_cmd->add_option("--random", n_random,
                         "randomized instances for the composite suite");
  verify_cmd->add_option("--seed", seed, "RNG seed for randomized checks");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  std::string range_spec;
  std::string filter_name = "prime-powers";
  std::string cache_dir;
  int survey_jobs = 1;
  bool allow_large = false;
  auto* survey_cmd = app.add_subcommand(
      "survey", "Rank survey over a conductor range, CSV output");
  survey_cmd->add_option("--range", range_spec, "conductor range, e.g. 3..5000")
      ->required();
  survey_cmd
      ->add_option("--filter", filter_name,
                   "prime-powers, odd-prime-powers or two-powers")
      ->check(CLI::IsMember(
          {"prime-powers", "odd-prime-powers", "two-powers"}));
  survey_cmd->add_option("--jobs", survey_jobs, "worker threads");
  survey_cmd->add_option("--cache-dir", cache_dir,
                         "cache directory (CYCLOSIG_CACHE overrides)");
  survey_cmd->add_option("--out", out_path, "CSV output file (default stdout)");
  survey_cmd->add_flag("--allow-large", allow_large,
                       "lift the phi(m)/2 <= 16384 dimension cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (matrix_cmd->parsed()) return cmd_matrix(m, format, out_path);
    if (rank_cmd->parsed()) return cmd_rank(m, as_json);
    if (bound_cmd->parsed()) return cmd_bound(m, as_json);
    if (lemma_cmd->parsed()) return cmd_lemma(m, k, check_column, as_json);
    if (composite_cmd->parsed()) return cmd_composite(m, right_m, as_json);
    if (verify_cmd->parsed())
      return cmd_verify(suite, max_m, n_random, seed, jobs);
    if (survey_cmd->parsed())
      return cmd_survey(range_spec, filter_name, survey_jobs, cache_dir,
                        out_path, allow_large);
  } catch (const falsification_error& e) {
    std::cerr << "FALSIFIED: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
