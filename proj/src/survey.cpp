#include "cyclosig/survey.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cyclosig/composite.hpp"
#include "cyclosig/conductor.hpp"
#include "cyclosig/sigmatrix.hpp"
#include "cyclosig/version.hpp"

namespace cyclosig {

const char* const kSurveyCsvHeader =
    "m,kind,phi_half,rank,deficiency,log_bound,theorem_bound,elapsed_ms,"
    "status";

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string opt_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::optional<SurveyFilter> parse_survey_filter(const std::string& name) {
  if (name == "prime-powers") return SurveyFilter::prime_powers;
  if (name == "odd-prime-powers") return SurveyFilter::odd_prime_powers;
  if (name == "two-powers") return SurveyFilter::two_powers;
  return std::nullopt;
}

bool parse_range_spec(const std::string& spec, std::int64_t& lo,
                      std::int64_t& hi) {
  const auto sep = spec.find("..");
  if (sep == std::string::npos) return false;
  const char* begin = spec.data();
  const auto a = std::from_chars(begin, begin + sep, lo);
  if (a.ec != std::errc{} || a.ptr != begin + sep) return false;
  const char* mid = begin + sep + 2;
  const char* end = begin + spec.size();
  const auto b = std::from_chars(mid, end, hi);
  if (b.ec != std::errc{} || b.ptr != end) return false;
  return lo >= 0 && lo <= hi;
}

std::vector<std::int64_t> survey_conductors(std::int64_t lo, std::int64_t hi,
                                            SurveyFilter filter) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = std::max<std::int64_t>(3, lo); m <= hi; ++m) {
    if (m % 4 == 2) continue;
    const Conductor c = make_conductor(m);
    if (!c.is_prime_power()) continue;
    if (filter == SurveyFilter::odd_prime_powers && !c.is_odd_prime_power())
      continue;
    if (filter == SurveyFilter::two_powers && !c.is_two_power()) continue;
    out.push_back(m);
  }
  return out;
}

SurveyRecord compute_survey_record(std::int64_t m) {
  const Conductor c = make_conductor(m);
  const auto t0 = std::chrono::steady_clock::now();
  const RankReport report = verify_lower_bound(c);
  const auto t1 = std::chrono::steady_clock::now();

  SurveyRecord rec;
  rec.m = m;
  rec.kind = std::string(to_string(report.kind));
  rec.phi_half = report.phi_half;
  rec.rank = report.rank;
  rec.deficiency = report.circular_deficiency;
  rec.log_bound = report.log_bound;
  rec.theorem_bound = theorem_bound(c).theorem_bound;
  rec.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rec.toolkit_version = kToolkitVersion;
  rec.status = "ok";
  return rec;
}

std::string survey_record_to_json(const SurveyRecord& record) {
  nlohmann::json j;
  j["m"] = record.m;
  j["kind"] = record.kind;
  j["phi_half"] = record.phi_half;
  if (record.rank) j["rank"] = *record.rank;
  if (record.deficiency) j["deficiency"] = *record.deficiency;
  j["log_bound"] = record.log_bound;
  j["theorem_bound"] = record.theorem_bound;
  if (record.elapsed_ms) j["elapsed_ms"] = *record.elapsed_ms;
  j["toolkit_version"] = record.toolkit_version;
  j["status"] = record.status;
  return j.dump();
}

std::optional<SurveyRecord> survey_record_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) return std::nullopt;
  try {
    SurveyRecord rec;
    rec.m = j.at("m").get<std::int64_t>();
    rec.kind = j.at("kind").get<std::string>();
    rec.phi_half = j.at("phi_half").get<std::int64_t>();
    if (j.contains("rank")) rec.rank = j["rank"].get<std::int64_t>();
    if (j.contains("deficiency"))
      rec.deficiency = j["deficiency"].get<std::int64_t>();
    rec.log_bound = j.at("log_bound").get<std::int64_t>();
    rec.theorem_bound = j.at("theorem_bound").get<std::int64_t>();
    if (j.contains("elapsed_ms"))
      rec.elapsed_ms = j["elapsed_ms"].get<std::int64_t>();
    rec.toolkit_version = j.at("toolkit_version").get<std::string>();
    rec.status = j.at("status").get<std::string>();
    return rec;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

namespace {

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 std::int64_t m) {
  return dir / ("m" + std::to_string(m) + ".json");
}

}  // namespace

std::optional<SurveyRecord> cache_load(const std::filesystem::path& dir,
                                       std::int64_t m) {
  std::ifstream in(cache_path(dir, m));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto rec = survey_record_from_json(buffer.str());
  if (!rec || rec->m != m || rec->toolkit_version != kToolkitVersion)
    return std::nullopt;
  return rec;
}

void cache_store(const std::filesystem::path& dir, const SurveyRecord& record) {
  std::filesystem::create_directories(dir);
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto tmp =
      dir / ("m" + std::to_string(record.m) + ".tmp" +
             std::to_string(rd()) + "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " +
                                       tmp.string());
    out << survey_record_to_json(record) << '\n';
  }
  std::filesystem::rename(tmp, cache_path(dir, record.m));
}

std::string survey_csv_row(const SurveyRecord& record) {
  std::string row;
  row += std::to_string(record.m);
  row += ',';
  row += csv_escape(record.kind);
  row += ',';
  row += std::to_string(record.phi_half);
  row += ',';
  row += opt_str(record.rank);
  row += ',';
  row += opt_str(record.deficiency);
  row += ',';
  row += std::to_string(record.log_bound);
  row += ',';
  row += std::to_string(record.theorem_bound);
  row += ',';
  row += opt_str(record.elapsed_ms);
  row += ',';
  row += csv_escape(record.status);
  return row;
}

void write_survey_csv(const std::vector<SurveyRecord>& records,
                      std::ostream& out) {
  out << kSurveyCsvHeader << '\n';
  for (const auto& rec : records) out << survey_csv_row(rec) << '\n';
}

namespace {

SurveyRecord shallow_record(const Conductor& c) {
  SurveyRecord rec;
  rec.m = c.m;
  rec.kind = std::string(
      to_string(c.is_two_power() ? MatrixKind::two_power
                                 : MatrixKind::odd_prime_power));
  rec.phi_half = c.phi_half;
  rec.log_bound = floor_log2(c.m) - 2;
  rec.theorem_bound = theorem_bound(c).theorem_bound;
  rec.toolkit_version = kToolkitVersion;
  return rec;
}

}  // namespace

std::vector<SurveyRecord> run_survey(const SurveyOptions& options) {
  const auto conductors =
      survey_conductors(options.lo, options.hi, options.filter);
  std::vector<SurveyRecord> out(conductors.size());
  const bool use_cache = !options.cache_dir.empty();

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= conductors.size()) break;
      const std::int64_t m = conductors[i];
      try {
        const Conductor c = make_conductor(m);
        if (c.phi_half > options.max_dim && !options.allow_large) {
          out[i] = shallow_record(c);
          out[i].status = "skipped:dimension-cap";
          continue;
        }
        if (use_cache) {
          if (auto hit = cache_load(options.cache_dir, m)) {
            out[i] = *hit;
            continue;
          }
        }
        out[i] = compute_survey_record(m);
        if (use_cache) cache_store(options.cache_dir, out[i]);
      } catch (const std::exception& e) {
        out[i] = SurveyRecord{};
        out[i].m = m;
        out[i].toolkit_version = kToolkitVersion;
        out[i].status = std::string("error:") + e.what();
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || conductors.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();
  }
  return out;
}

}  // namespace cyclosig
