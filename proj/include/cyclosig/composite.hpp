#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclosig/conductor.hpp"
#include "cyclosig/gf2.hpp"

namespace cyclosig {

/// Embeddings into the product signature space of a compositum. The product
/// space has dimension left_dims * right_dims, indexed row-major by pairs
/// (sigma, tau): position sigma * right_dims + tau.
///
/// embed_left replicates v across all tau-columns (entry (sigma,tau) =
/// v[sigma]); embed_right replicates w across all sigma-rows.
SignVector embed_left(const SignVector& v, std::size_t right_dims);
SignVector embed_right(const SignVector& w, std::size_t left_dims);

struct CompositeRank {
  std::int64_t rank = 0;       // computed by elimination in the product space
  std::int64_t predicted = 0;  // r + s, minus 1 iff both spans contain all-ones
};

/// Rank of the embedded union of two independent sign spans. Requires each
/// input list to be linearly independent (throws std::invalid_argument
/// otherwise, or when a list is empty). The computed rank is always obtained
/// independently by elimination; if it ever disagreed with the predicted
/// value, falsification_error would be thrown.
CompositeRank composite_rank(const std::vector<SignVector>& left,
                             const std::vector<SignVector>& right);

/// The general-conductor lower bound log2(m) - 4*omega(m) + 1 next to the
/// per-factor sum it is derived from.
struct CompositeBoundReport {
  std::int64_t m = 0;
  int omega = 0;
  double theorem_bound_real = 0.0;  // log2(m) - 4*omega + 1, for display
  std::int64_t theorem_bound = 0;   // max(0, smallest integer >= the above)
  // (p^a, floor(log2 p^a) - 2); small factors may contribute negatively.
  std::vector<std::pair<std::int64_t, std::int64_t>> per_factor_bounds;
  std::int64_t combined_sum = 0;    // sum of per-factor bounds - (omega - 1)
  std::int64_t combined_bound = 0;  // max(0, combined_sum)
};

/// Pure integer arithmetic on the factorization; no matrix is built. The
/// integer theorem_bound is exact (no floating point in the comparison).
CompositeBoundReport theorem_bound(const Conductor& c);

/// Small-conductor checks behind the totally-positive-fundamental-system
/// corollary: the circular signature rank is at least 2 for
/// m = 8, 9, 5, 7, 11, 13. m = 12 is the documented exception (Q(sqrt 3)
/// has totally positive fundamental unit 2 + sqrt 3) and is reported
/// without computation.
struct CorollaryEntry {
  std::int64_t m = 0;
  std::int64_t rank = 0;
};
struct CorollaryResult {
  std::vector<CorollaryEntry> entries;  // in the order 8, 9, 5, 7, 11, 13
  std::int64_t exception_m = 12;
  std::string exception_note;
};

/// Throws falsification_error if any computed rank drops below 2.
CorollaryResult corollary_check();

/// Reporting helper: the 2-adic signature deficiency is at most three times
/// the archimedean one.
std::int64_t two_adic_bound(std::int64_t archimedean_deficiency);

/// `rank` linearly independent random vectors of the given dimension,
/// optionally with the all-ones vector seeded into the span. Used by the
/// randomized combinator checks. Requires 1 <= rank <= dims.
std::vector<SignVector> random_independent_span(std::mt19937_64& rng,
                                                std::size_t dims,
                                                std::size_t rank,
                                                bool include_all_ones);

}  // namespace cyclosig
