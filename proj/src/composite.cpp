#include "cyclosig/composite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cyclosig/errors.hpp"
#include "cyclosig/sigmatrix.hpp"

namespace cyclosig {

SignVector embed_left(const SignVector& v, std::size_t right_dims) {
  if (right_dims == 0) throw std::invalid_argument("right_dims must be positive");
  SignVector out(v.dim() * right_dims);
  for (std::size_t s = 0; s < v.dim(); ++s)
    if (v.get(s))
      for (std::size_t t = 0; t < right_dims; ++t)
        out.set(s * right_dims + t, true);
  return out;
}

SignVector embed_right(const SignVector& w, std::size_t left_dims) {
  if (left_dims == 0) throw std::invalid_argument("left_dims must be positive");
  SignVector out(left_dims * w.dim());
  for (std::size_t t = 0; t < w.dim(); ++t)
    if (w.get(t))
      for (std::size_t s = 0; s < left_dims; ++s)
        out.set(s * w.dim() + t, true);
  return out;
}

CompositeRank composite_rank(const std::vector<SignVector>& left,
                             const std::vector<SignVector>& right) {
  if (left.empty() || right.empty())
    throw std::invalid_argument("composite_rank requires nonempty spans");
  const std::size_t left_dims = left[0].dim();
  const std::size_t right_dims = right[0].dim();

  SpanBasis left_basis(left_dims);
  for (const auto& v : left)
    if (!left_basis.insert(v))
      throw std::invalid_argument(
          "left signatures are not linearly independent");
  SpanBasis right_basis(right_dims);
  for (const auto& w : right)
    if (!right_basis.insert(w))
      throw std::invalid_argument(
          "right signatures are not linearly independent");

  const bool left_all_ones = left_basis.contains(SignVector::ones(left_dims));
  const bool right_all_ones =
      right_basis.contains(SignVector::ones(right_dims));

  std::vector<SignVector> embedded;
  embedded.reserve(left.size() + right.size());
  for (const auto& v : left) embedded.push_back(embed_left(v, right_dims));
  for (const auto& w : right) embedded.push_back(embed_right(w, left_dims));

  CompositeRank result;
  result.rank = rank(embedded, left_dims * right_dims);
  result.predicted =
      static_cast<std::int64_t>(left.size() + right.size()) -
      ((left_all_ones && right_all_ones) ? 1 : 0);
  if (result.rank != result.predicted)
    throw falsification_error(
        "product-space rank " + std::to_string(result.rank) +
        " differs from the predicted " + std::to_string(result.predicted));
  return result;
}

CompositeBoundReport theorem_bound(const Conductor& c) {
  CompositeBoundReport r;
  r.m = c.m;
  r.omega = c.omega();
  r.theorem_bound_real =
      std::log2(static_cast<double>(c.m)) - 4.0 * r.omega + 1.0;

  // Exact integer ceiling: log2(m) is an integer only for powers of two,
  // so ceil(log2 m) = floor_log2(m) + (m not a power of two).
  const bool pow2 = (c.m & (c.m - 1)) == 0;
  const std::int64_t ceil_log2 = floor_log2(c.m) + (pow2 ? 0 : 1);
  r.theorem_bound = std::max<std::int64_t>(0, ceil_log2 - 4 * r.omega + 1);

  std::int64_t sum = 0;
  for (auto [p, e] : c.factorization) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    const std::int64_t bound = floor_log2(q) - 2;
    r.per_factor_bounds.emplace_back(q, bound);
    sum += bound;
  }
  r.combined_sum = sum - (r.omega - 1);
  r.combined_bound = std::max<std::int64_t>(0, r.combined_sum);
  return r;
}

CorollaryResult corollary_check() {
  CorollaryResult result;
  result.exception_m = 12;
  result.exception_note =
      "maximal real subfield Q(sqrt 3) has totally positive fundamental "
      "unit 2 + sqrt 3; not computed here";
  for (std::int64_t m : {8, 9, 5, 7, 11, 13}) {
    const RankReport report = verify_lower_bound(make_conductor(m));
    if (report.rank < 2)
      throw falsification_error("circular signature rank at m = " +
                                std::to_string(m) + " fell below 2");
    result.entries.push_back({m, report.rank});
  }
  return result;
}

std::int64_t two_adic_bound(std::int64_t archimedean_deficiency) {
  if (archimedean_deficiency < 0)
    throw std::invalid_argument("deficiency must be nonnegative");
  return 3 * archimedean_deficiency;
}

std::vector<SignVector> random_independent_span(std::mt19937_64& rng,
                                                std::size_t dims,
                                                std::size_t rank,
                                                bool include_all_ones) {
  if (rank < 1 || rank > dims)
    throw std::invalid_argument("span rank must lie in [1, dims]");
  SpanBasis basis(dims);
  std::vector<SignVector> span;
  if (include_all_ones) {
    const SignVector ones = SignVector::ones(dims);
    basis.insert(ones);
    span.push_back(ones);
  }
  while (span.size() < rank) {
    SignVector v(dims);
    for (std::size_t i = 0; i < dims; ++i)
      if (rng() & 1) v.set(i, true);
    if (basis.insert(v)) span.push_back(std::move(v));
  }
  return span;
}

}  // namespace cyclosig
