#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclosig {

/// One survey row. Numeric fields are absent for rows that were skipped or
/// errored before a rank could be computed.
struct SurveyRecord {
  std::int64_t m = 0;
  std::string kind;  // "odd-prime-power" | "two-power"
  std::int64_t phi_half = 0;
  std::optional<std::int64_t> rank;
  std::optional<std::int64_t> deficiency;
  std::int64_t log_bound = 0;      // floor(log2 m) - 2
  std::int64_t theorem_bound = 0;  // max(0, ceil(log2 m - 4*omega + 1))
  std::optional<std::int64_t> elapsed_ms;
  std::string toolkit_version;
  std::string status = "ok";  // "ok" | "skipped:..." | "error:..."

  bool ok() const { return status == "ok"; }
  bool errored() const { return status.rfind("error", 0) == 0; }
};

enum class SurveyFilter { prime_powers, odd_prime_powers, two_powers };

std::optional<SurveyFilter> parse_survey_filter(const std::string& name);

struct SurveyOptions {
  std::int64_t lo = 3;
  std::int64_t hi = 0;
  SurveyFilter filter = SurveyFilter::prime_powers;
  int jobs = 1;
  std::filesystem::path cache_dir;  // empty = caching disabled
  bool allow_large = false;
  std::int64_t max_dim = 16384;  // skip phi(m)/2 above this unless allow_large
};

/// Parses "A..B" range specs. Returns false on malformed input.
bool parse_range_spec(const std::string& spec, std::int64_t& lo,
                      std::int64_t& hi);

/// Conductors in [lo, hi] matching the filter, ascending.
std::vector<std::int64_t> survey_conductors(std::int64_t lo, std::int64_t hi,
                                            SurveyFilter filter);

/// Computes the record for a single conductor (no cache involved).
SurveyRecord compute_survey_record(std::int64_t m);

/// Runs the survey: cache lookups, parallel workers over disjoint
/// conductors, per-row error capture. Results are ordered by m.
std::vector<SurveyRecord> run_survey(const SurveyOptions& options);

/// CSV columns: m,kind,phi_half,rank,deficiency,log_bound,theorem_bound,
/// elapsed_ms,status. RFC-4180-style quoting.
extern const char* const kSurveyCsvHeader;
void write_survey_csv(const std::vector<SurveyRecord>& records,
                      std::ostream& out);
std::string survey_csv_row(const SurveyRecord& record);

/// JSON cache, one file per conductor, keyed by (m, toolkit version).
/// A version mismatch is a miss. Writes go through a temp file + rename.
std::optional<SurveyRecord> cache_load(const std::filesystem::path& dir,
                                       std::int64_t m);
void cache_store(const std::filesystem::path& dir, const SurveyRecord& record);

std::string survey_record_to_json(const SurveyRecord& record);
std::optional<SurveyRecord> survey_record_from_json(const std::string& text);

}  // namespace cyclosig
