#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "cyclosig/survey.hpp"
#include "cyclosig/version.hpp"

using namespace cyclosig;
namespace fs = std::filesystem;

namespace {

fs::path fresh_temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(
      static_cast<std::uint64_t>(std::chrono::steady_clock::now()
                                     .time_since_epoch()
                                     .count()));
  const fs::path dir = fs::temp_directory_path() /
                       ("cyclosig-test-" + tag + "-" + std::to_string(rng()));
  fs::create_directories(dir);
  return dir;
}

std::string csv_of(const std::vector<SurveyRecord>& records) {
  std::ostringstream os;
  write_survey_csv(records, os);
  return os.str();
}

}  // namespace

TEST_CASE("range and filter parsing") {
  std::int64_t lo = 0, hi = 0;
  CHECK(parse_range_spec("3..10000", lo, hi));
  CHECK(lo == 3);
  CHECK(hi == 10000);
  CHECK_FALSE(parse_range_spec("3-10000", lo, hi));
  CHECK_FALSE(parse_range_spec("..", lo, hi));
  CHECK_FALSE(parse_range_spec("5..x", lo, hi));
  CHECK_FALSE(parse_range_spec("9..4", lo, hi));

  CHECK(parse_survey_filter("prime-powers") == SurveyFilter::prime_powers);
  CHECK(parse_survey_filter("odd-prime-powers") ==
        SurveyFilter::odd_prime_powers);
  CHECK(parse_survey_filter("two-powers") == SurveyFilter::two_powers);
  CHECK_FALSE(parse_survey_filter("everything").has_value());
}

TEST_CASE("conductor enumeration respects filters") {
  CHECK(survey_conductors(3, 20, SurveyFilter::prime_powers) ==
        std::vector<std::int64_t>{3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19});
  CHECK(survey_conductors(3, 20, SurveyFilter::odd_prime_powers) ==
        std::vector<std::int64_t>{3, 5, 7, 9, 11, 13, 17, 19});
  CHECK(survey_conductors(3, 64, SurveyFilter::two_powers) ==
        std::vector<std::int64_t>{4, 8, 16, 32, 64});
}

TEST_CASE("compute_survey_record fills the report") {
  const SurveyRecord rec = compute_survey_record(29);
  CHECK(rec.m == 29);
  CHECK(rec.kind == "odd-prime-power");
  CHECK(rec.phi_half == 14);
  CHECK(rec.rank == 11);
  CHECK(rec.deficiency == 3);
  CHECK(rec.log_bound == 2);
  CHECK(rec.theorem_bound == 2);
  CHECK(rec.toolkit_version == kToolkitVersion);
  CHECK(rec.status == "ok");
  CHECK(rec.ok());
  CHECK_FALSE(rec.errored());
}

TEST_CASE("record JSON serialization roundtrips") {
  const SurveyRecord rec = compute_survey_record(13);
  const std::string text = survey_record_to_json(rec);
  const auto back = survey_record_from_json(text);
  REQUIRE(back.has_value());
  CHECK(survey_record_to_json(*back) == text);
  CHECK(back->m == rec.m);
  CHECK(back->rank == rec.rank);
  CHECK(back->status == rec.status);

  CHECK_FALSE(survey_record_from_json("not json").has_value());
  CHECK_FALSE(survey_record_from_json("{}").has_value());
}

TEST_CASE("CSV header and quoting") {
  CHECK(std::string(kSurveyCsvHeader) ==
        "m,kind,phi_half,rank,deficiency,log_bound,theorem_bound,elapsed_ms,"
        "status");

  SurveyRecord rec;
  rec.m = 99;
  rec.kind = "odd-prime-power";
  rec.phi_half = 5;
  rec.log_bound = 4;
  rec.theorem_bound = 1;
  rec.status = "error:something, with \"quotes\"";
  const std::string row = survey_csv_row(rec);
  CHECK(row ==
        "99,odd-prime-power,5,,,4,1,,\"error:something, with \"\"quotes\"\"\"");
}

TEST_CASE("cache store/load roundtrip, version invalidation, atomicity") {
  const fs::path dir = fresh_temp_dir("cache");

  const SurveyRecord rec = compute_survey_record(17);
  cache_store(dir, rec);
  const auto hit = cache_load(dir, 17);
  REQUIRE(hit.has_value());
  CHECK(survey_record_to_json(*hit) == survey_record_to_json(rec));

  CHECK_FALSE(cache_load(dir, 19).has_value());

  // A record written by a different toolkit version is a miss.
  SurveyRecord stale = rec;
  stale.m = 19;
  stale.toolkit_version = "0.0.0-stale";
  {
    std::ofstream out(dir / "m19.json");
    out << survey_record_to_json(stale) << '\n';
  }
  CHECK_FALSE(cache_load(dir, 19).has_value());

  // Corrupt files are misses, not crashes.
  {
    std::ofstream out(dir / "m23.json");
    out << "{broken";
  }
  CHECK_FALSE(cache_load(dir, 23).has_value());

  // No temp files are left behind.
  for (const auto& entry : fs::directory_iterator(dir))
    CHECK(entry.path().extension() == ".json");

  fs::remove_all(dir);
}

TEST_CASE("run_survey: ordering, consistency, warm cache determinism") {
  const fs::path dir = fresh_temp_dir("survey");

  SurveyOptions options;
  options.lo = 3;
  options.hi = 100;
  options.filter = SurveyFilter::odd_prime_powers;
  options.jobs = 2;
  options.cache_dir = dir;

  const auto cold = run_survey(options);
  CHECK(cold.size() ==
        survey_conductors(3, 100, SurveyFilter::odd_prime_powers).size());
  for (std::size_t i = 1; i < cold.size(); ++i)
    CHECK(cold[i - 1].m < cold[i].m);
  for (const auto& rec : cold) {
    CHECK(rec.ok());
    REQUIRE(rec.rank.has_value());
    REQUIRE(rec.deficiency.has_value());
    CHECK(*rec.deficiency == rec.phi_half - *rec.rank);
    CHECK(*rec.deficiency >= 0);
    CHECK(*rec.rank >= rec.log_bound);
  }

  // Warm rerun: byte-identical CSV (elapsed_ms comes from the cache).
  const auto warm = run_survey(options);
  CHECK(csv_of(warm) == csv_of(cold));

  fs::remove_all(dir);
}

TEST_CASE("run_survey honors the dimension cap") {
  SurveyOptions options;
  options.lo = 120;
  options.hi = 130;
  options.filter = SurveyFilter::prime_powers;
  options.max_dim = 20;  // phi(127)/2 = 63 exceeds this
  const auto records = run_survey(options);
  REQUIRE(records.size() == 3);  // 121, 125, 127
  CHECK(records[0].m == 121);    // phi/2 = 55 > 20: skipped
  CHECK(records[0].status == "skipped:dimension-cap");
  CHECK_FALSE(records[0].rank.has_value());
  CHECK(records[2].m == 127);
  CHECK(records[2].status == "skipped:dimension-cap");

  options.allow_large = true;
  const auto forced = run_survey(options);
  for (const auto& rec : forced) {
    CHECK(rec.ok());
    CHECK(rec.rank.has_value());
  }
}

TEST_CASE("two-power survey rows have zero deficiency") {
  SurveyOptions options;
  options.lo = 4;
  options.hi = 512;
  options.filter = SurveyFilter::two_powers;
  const auto records = run_survey(options);
  REQUIRE(records.size() == 8);
  for (const auto& rec : records) {
    REQUIRE(rec.deficiency.has_value());
    CHECK(*rec.deficiency == 0);
    CHECK(rec.kind == "two-power");
  }
}
