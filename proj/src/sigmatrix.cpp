#include "cyclosig/sigmatrix.hpp"

#include <bit>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cyclosig/errors.hpp"

namespace cyclosig {

namespace {

// One matrix row: bit j is the half-interval sign of the least positive
// residue of a * cols[j] modulo `mod`. The residue is maintained
// incrementally; gaps between consecutive coprime residues of a prime power
// are at most 2, so the subtraction loop runs at most once per step.
SignVector make_sign_row(std::int64_t a, const std::vector<std::int64_t>& cols,
                         std::int64_t mod) {
  SignVector row(cols.size());
  std::int64_t r = 0;
  std::int64_t prev = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    r += a * (cols[j] - prev);
    prev = cols[j];
    while (r >= mod) r -= mod;
    if (2 * r == mod || r == 0)
      throw std::logic_error("product residue landed on the interval boundary");
    if (2 * r > mod) row.set(j, true);
  }
  return row;
}

// Runs fn(lo, hi) over contiguous row blocks, in parallel when the matrix is
// large enough to be worth the threads. Exceptions are collected and
// rethrown on the calling thread.
template <typename Fn>
void for_row_blocks(std::size_t n_rows, std::size_t dim, Fn fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  std::size_t n_threads = std::min<std::size_t>(hw ? hw : 1, n_rows);
  if (n_threads < 2 || n_rows * dim < (std::size_t{1} << 21)) {
    fn(std::size_t{0}, n_rows);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(n_threads);
  const std::size_t chunk = (n_rows + n_threads - 1) / n_threads;
  for (std::size_t t = 0; t < n_threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n_rows, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, t, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

SignMatrix build_from_interval_rule(const Conductor& c, std::int64_t mod) {
  ResidueIndexMap map(c);
  const auto& res = map.residues();
  std::vector<SignVector> rows(res.size());
  for_row_blocks(res.size(), res.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      rows[i] = res[i] == 1 ? SignVector::ones(res.size())
                            : make_sign_row(res[i], res, mod);
  });
  return SignMatrix(std::move(rows), res, res);
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  return kind == MatrixKind::odd_prime_power ? "odd-prime-power" : "two-power";
}

int floor_log2(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("floor_log2 expects m >= 1");
  return std::bit_width(static_cast<std::uint64_t>(m)) - 1;
}

SignMatrix build_matrix_odd_prime_power(const Conductor& c) {
  if (!c.is_odd_prime_power())
    throw std::invalid_argument(
        "signature matrix for m = " + std::to_string(c.m) +
        ": conductor must be an odd prime power");
  return build_from_interval_rule(c, c.m);
}

SignMatrix build_matrix_two_power(const Conductor& c) {
  if (!c.is_two_power())
    throw std::invalid_argument("signature matrix for m = " +
                                std::to_string(c.m) +
                                ": conductor must be a power of 2");
  // All residues are taken modulo 2^(n+1): the units live in the field of
  // 2^(n+1)-st roots of unity under the fixed embedding. For m = 4 the only
  // row is the all-ones signature of -1.
  return build_from_interval_rule(c, 2 * c.m);
}

SignMatrix build_circular_matrix(const Conductor& c) {
  if (c.is_two_power()) return build_matrix_two_power(c);
  return build_matrix_odd_prime_power(c);
}

SignMatrix build_modified_matrix(const SignMatrix& C) {
  std::vector<SignVector> rows = C.rows();
  for (std::size_t i = 1; i < rows.size(); ++i) rows[i] ^= rows[0];
  return SignMatrix(std::move(rows), C.row_labels(), C.col_labels());
}

int sine_oracle_entry(std::int64_t a, std::int64_t b, const Conductor& c) {
  const std::int64_t m = c.m;
  if (a < 1 || 2 * a >= m || std::gcd(a, m) != 1 || b < 1 || 2 * b >= m ||
      std::gcd(b, m) != 1)
    throw std::invalid_argument("sine oracle labels must be coprime residues "
                                "in [1, m/2)");
  double num, den;
  if (c.is_two_power()) {
    const std::int64_t mod = 2 * m;
    const std::int64_t r = least_positive_residue(a * b, mod);
    num = std::sin(std::numbers::pi * static_cast<double>(r) /
                   static_cast<double>(m));
    den = std::sin(std::numbers::pi * static_cast<double>(b) /
                   static_cast<double>(m));
  } else {
    const std::int64_t r = least_positive_residue(a * b, m);
    num = std::sin(2.0 * std::numbers::pi * static_cast<double>(r) /
                   static_cast<double>(m));
    den = std::sin(2.0 * std::numbers::pi * static_cast<double>(b) /
                   static_cast<double>(m));
  }
  if (std::abs(num) < 1e-9 || std::abs(den) < 1e-9)
    throw std::domain_error(
        "sine oracle: |sin| below 1e-9 at m = " + std::to_string(m) +
        "; m too large for the float cross-check (the exact integer path "
        "is authoritative)");
  return (num / den) < 0.0 ? 1 : 0;
}

LemmaWitness lemma_witness(const Conductor& c, int k) {
  if (!c.is_odd_prime_power())
    throw std::invalid_argument("lemma witness requires an odd prime power");
  if (k < 1) throw std::invalid_argument("lemma witness requires k >= 1");
  if (k > 60 || c.m <= (std::int64_t{1} << (k + 2)))
    throw std::invalid_argument("lemma witness requires m > 2^(k+2) (m = " +
                                std::to_string(c.m) + ", k = " +
                                std::to_string(k) + ")");
  const std::int64_t m = c.m;
  using int128 = __int128;

  LemmaWitness w;
  w.m = m;
  w.k = k;
  const int128 two_k = int128{1} << k;
  w.b0 = static_cast<std::int64_t>(((two_k - 2) * m) >> (k + 1)) + 1;
  w.b1 = w.b0 + 1;

  for (std::int64_t b : {w.b0, w.b1}) {
    for (int d = 1; d <= k; ++d) {
      const auto floor_val =
          static_cast<std::int64_t>((int128{b} << (d + 1)) / m);
      const bool odd = floor_val % 2 != 0;
      if ((d < k && !odd) || (d == k && odd))
        throw falsification_error(
            "floor parity pattern failed at m = " + std::to_string(m) +
            ", k = " + std::to_string(k) + ", b = " + std::to_string(b) +
            ", d = " + std::to_string(d));
    }
  }

  w.chosen_B = std::gcd(w.b0, m) == 1 ? w.b0 : w.b1;
  if (std::gcd(w.chosen_B, m) != 1 || w.chosen_B < 1 || 2 * w.chosen_B >= m)
    throw falsification_error("no admissible column witness B(k) at m = " +
                              std::to_string(m) + ", k = " + std::to_string(k));

  w.parities.reserve(static_cast<std::size_t>(k));
  for (int d = 1; d <= k; ++d) {
    const auto floor_val =
        static_cast<std::int64_t>((int128{w.chosen_B} << (d + 1)) / m);
    w.parities.emplace_back(d, static_cast<int>(floor_val % 2));
  }
  return w;
}

bool column_witness_holds(const SignMatrix& M, const LemmaWitness& w) {
  const auto find_label = [](const std::vector<std::int64_t>& labels,
                             std::int64_t value) {
    const auto it = std::lower_bound(labels.begin(), labels.end(), value);
    if (it == labels.end() || *it != value)
      throw std::logic_error("label " + std::to_string(value) +
                             " not present in the matrix");
    return static_cast<std::size_t>(it - labels.begin());
  };

  const std::size_t col = find_label(M.col_labels(), w.chosen_B);
  for (int d = 1; d <= w.k; ++d) {
    const std::size_t row =
        find_label(M.row_labels(), std::int64_t{1} << d);
    const bool expected = d == w.k;
    if (M.at(row, col) != expected) return false;
  }
  return true;
}

TwoPowerWitness two_power_column_witness(const Conductor& c, int k) {
  if (!c.is_two_power())
    throw std::invalid_argument("two-power witness requires m = 2^n");
  const int n = c.two_power_exponent();
  if (k < 2 || k > n - 2)
    throw std::invalid_argument("two-power witness requires 2 <= k <= n-2");

  TwoPowerWitness w;
  w.m = c.m;
  w.k = k;
  w.col_label = c.m - (std::int64_t{1} << (n - k + 1)) + 1;
  const std::int64_t mod = 2 * c.m;
  w.holds = true;
  for (int d = 1; d <= k; ++d) {
    const std::int64_t a = (std::int64_t{1} << d) - 1;
    const std::int64_t r = least_positive_residue(a * w.col_label, mod);
    const int entry = half_interval_sign(r, mod);
    w.entries.push_back(entry);
    if (entry != (d == k ? 1 : 0)) w.holds = false;
  }
  return w;
}

RankReport make_rank_report(const Conductor& c, std::int64_t computed_rank) {
  if (!c.is_prime_power())
    throw std::invalid_argument("rank reports cover prime-power conductors");
  RankReport r;
  r.m = c.m;
  r.kind = c.is_two_power() ? MatrixKind::two_power
                            : MatrixKind::odd_prime_power;
  r.rank = computed_rank;
  r.phi_half = c.phi_half;
  r.circular_deficiency = c.phi_half - computed_rank;
  r.log_bound = floor_log2(c.m) - 2;
  r.bound_satisfied = computed_rank >= r.log_bound;
  r.full_rank = computed_rank == c.phi_half;
  return r;
}

RankReport verify_lower_bound(const Conductor& c) {
  const SignMatrix C = build_circular_matrix(c);
  return make_rank_report(c, rank(C));
}

}  // namespace cyclosig
