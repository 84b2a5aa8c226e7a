#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclosig/composite.hpp"
#include "cyclosig/conductor.hpp"
#include "cyclosig/errors.hpp"
#include "cyclosig/sigmatrix.hpp"

using namespace cyclosig;

namespace {

std::vector<int> bits_of(const SignVector& v) {
  std::vector<int> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v.get(i) ? 1 : 0;
  return out;
}

}  // namespace

TEST_CASE("embeddings replicate coordinates row-major") {
  CHECK(bits_of(embed_left(SignVector::from_bits({1, 0}), 2)) ==
        std::vector<int>{1, 1, 0, 0});
  CHECK(bits_of(embed_right(SignVector::from_bits({1, 0}), 2)) ==
        std::vector<int>{1, 0, 1, 0});
  CHECK(embed_left(SignVector::ones(3), 4) == SignVector::ones(12));
  CHECK(embed_right(SignVector::ones(4), 3) == SignVector::ones(12));
}

TEST_CASE("embeddings are linear") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 20;
    const std::size_t other = 1 + rng() % 20;
    SignVector u(dim), v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rng() & 1) u.set(i, true);
      if (rng() & 1) v.set(i, true);
    }
    CHECK(embed_left(u ^ v, other) == (embed_left(u, other) ^ embed_left(v, other)));
    CHECK(embed_right(u ^ v, other) ==
          (embed_right(u, other) ^ embed_right(v, other)));
  }
}

TEST_CASE("composite rank: worked examples") {
  const auto ones2 = SignVector::from_bits({1, 1});
  const auto e1 = SignVector::from_bits({1, 0});
  const auto e2 = SignVector::from_bits({0, 1});

  // Both spans are the all-ones line: the embedded vectors coincide.
  const CompositeRank both_ones = composite_rank({ones2}, {ones2});
  CHECK(both_ones.rank == 1);
  CHECK(both_ones.predicted == 1);

  // Neither span contains all-ones: ranks add.
  const CompositeRank disjoint = composite_rank({e1}, {e2});
  CHECK(disjoint.rank == 2);
  CHECK(disjoint.predicted == 2);

  // Left is the full plane (contains all-ones), right is the all-ones line:
  // one collision, 2 + 1 - 1 = 2.
  const CompositeRank collide = composite_rank({e1, e2}, {ones2});
  CHECK(collide.rank == 2);
  CHECK(collide.predicted == 2);
}

TEST_CASE("composite rank: input validation") {
  const auto ones2 = SignVector::from_bits({1, 1});
  CHECK_THROWS_AS(composite_rank({}, {ones2}), std::invalid_argument);
  CHECK_THROWS_AS(composite_rank({ones2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(composite_rank({ones2, ones2}, {ones2}),
                  std::invalid_argument);  // dependent left span
  const auto e1 = SignVector::from_bits({1, 0});
  const auto e2 = SignVector::from_bits({0, 1});
  CHECK_THROWS_AS(composite_rank({e1, e2, ones2}, {ones2}),
                  std::invalid_argument);
}

TEST_CASE("composite rank: randomized spans match the prediction") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t ld = 1 + rng() % 12;
    const std::size_t rd = 1 + rng() % 12;
    const std::size_t lr = 1 + rng() % std::min<std::size_t>(6, ld);
    const std::size_t rr = 1 + rng() % std::min<std::size_t>(6, rd);
    const auto left = random_independent_span(rng, ld, lr, rng() & 1);
    const auto right = random_independent_span(rng, rd, rr, rng() & 1);
    // composite_rank throws falsification_error on any mismatch.
    const CompositeRank result = composite_rank(left, right);
    CHECK(result.rank == result.predicted);
  }
}

TEST_CASE("composite rank on circular spans of coprime conductors") {
  const auto left =
      row_space_basis(build_circular_matrix(make_conductor(5)));
  const auto right =
      row_space_basis(build_circular_matrix(make_conductor(7)));
  CHECK(left.size() == 2);
  CHECK(right.size() == 3);
  // Row 1 of each matrix is all-ones, so both spans contain it: r + s - 1.
  const CompositeRank result = composite_rank(left, right);
  CHECK(result.rank == 4);
  CHECK(result.predicted == 4);
}

TEST_CASE("theorem bound: worked examples") {
  const CompositeBoundReport b3072 = theorem_bound(make_conductor(3072));
  CHECK(b3072.omega == 2);
  CHECK(b3072.theorem_bound == 5);  // ceil(11.585 - 8 + 1)
  CHECK(b3072.per_factor_bounds ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{1024, 8},
                                                           {3, -1}});
  CHECK(b3072.combined_sum == 6);
  CHECK(b3072.combined_bound == 6);
  CHECK(b3072.theorem_bound_real == doctest::Approx(4.58496).epsilon(1e-4));

  const CompositeBoundReport b35 = theorem_bound(make_conductor(35));
  CHECK(b35.theorem_bound == 0);  // clamped
  CHECK(b35.combined_sum == -1);
  CHECK(b35.combined_bound == 0);

  const CompositeBoundReport b29 = theorem_bound(make_conductor(29));
  CHECK(b29.theorem_bound == 2);
  CHECK(b29.combined_sum == 2);

  // Powers of two hit the ceiling exactly: log2 is an integer.
  const CompositeBoundReport b8192 = theorem_bound(make_conductor(8192));
  CHECK(b8192.theorem_bound == 10);

  const CompositeBoundReport b3 = theorem_bound(make_conductor(3));
  CHECK(b3.theorem_bound == 0);
  CHECK(b3.combined_sum == -1);
  CHECK(b3.combined_bound == 0);
}

TEST_CASE("theorem bound: prime powers collapse to the log bound") {
  // For a single prime power the unclamped combined sum is exactly
  // floor(log2 m) - 2.
  for (std::int64_t m = 3; m <= 10000; ++m) {
    if (m % 4 == 2) continue;
    const Conductor c = make_conductor(m);
    if (!c.is_prime_power()) continue;
    const CompositeBoundReport b = theorem_bound(c);
    CHECK(b.combined_sum == floor_log2(m) - 2);
  }
}

TEST_CASE("corollary check: frozen ranks and the m = 12 exception") {
  const CorollaryResult result = corollary_check();
  REQUIRE(result.entries.size() == 6);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected{
      {8, 2}, {9, 3}, {5, 2}, {7, 3}, {11, 5}, {13, 6}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.entries[i].m == expected[i].first);
    CHECK(result.entries[i].rank == expected[i].second);
    CHECK(result.entries[i].rank >= 2);
  }
  CHECK(result.exception_m == 12);
  CHECK(result.exception_note.find("2 + sqrt 3") != std::string::npos);
}

TEST_CASE("two-adic bound") {
  CHECK(two_adic_bound(0) == 0);
  CHECK(two_adic_bound(2) == 6);
  CHECK(two_adic_bound(3) == 9);
  CHECK_THROWS_AS(two_adic_bound(-1), std::invalid_argument);
}

TEST_CASE("random_independent_span honors its contract") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dims = 1 + rng() % 16;
    const std::size_t r = 1 + rng() % dims;
    const bool seeded = rng() & 1;
    const auto span = random_independent_span(rng, dims, r, seeded);
    CHECK(span.size() == r);
    SpanBasis basis(dims);
    for (const auto& v : span) CHECK(basis.insert(v));
    if (seeded) CHECK(basis.contains(SignVector::ones(dims)));
  }
  CHECK_THROWS_AS(random_independent_span(rng, 4, 5, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_independent_span(rng, 4, 0, false),
                  std::invalid_argument);
}
