#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclosig/conductor.hpp"
#include "cyclosig/gf2.hpp"

namespace cyclosig {

enum class MatrixKind { odd_prime_power, two_power };

std::string_view to_string(MatrixKind kind);

/// Circular-unit signature matrix C for m = p^n, p an odd prime.
/// Rows and columns are labeled by the coprime residues 1 <= a, b < m/2 in
/// ascending order. The row for a = 1 is all ones (the signature of -1);
/// for a >= 2 the entry at column b is 0 when the least positive residue of
/// a*b mod m lies in (0, m/2) and 1 when it lies in (m/2, m).
SignMatrix build_matrix_odd_prime_power(const Conductor& c);

/// Circular-unit signature matrix for m = 2^n, n >= 2. Rows/columns are the
/// odd residues in [1, 2^(n-1)); entries use the least positive residue of
/// a*b modulo 2^(n+1) against the interval (0, 2^n). For n = 2 this
/// degenerates to the 1x1 all-ones matrix (only the -1 row exists).
SignMatrix build_matrix_two_power(const Conductor& c);

/// Dispatches on the conductor kind; rejects composite m.
SignMatrix build_circular_matrix(const Conductor& c);

/// The modified matrix M: row 1 kept, every other row XORed with row 1.
/// An elementary row operation, so rank(M) = rank(C).
SignMatrix build_modified_matrix(const SignMatrix& C);

/// Floating-point cross-check of a single matrix entry: the sign of
///   sin(2*pi*a*b/m) / sin(2*pi*b/m)            (odd prime powers)
///   sin(pi*a*b/2^n) / sin(pi*b/2^n)            (m = 2^n)
/// encoded over F2 (0 positive, 1 negative). Test-only oracle; the exact
/// integer interval rule above is the production path. Throws
/// std::domain_error when either sine is below 1e-9 in magnitude.
int sine_oracle_entry(std::int64_t a, std::int64_t b, const Conductor& c);

/// Witness data for the floor-parity pattern behind the rank lower bound:
/// with b0 = floor((2^k - 2) m / 2^(k+1)) + 1 and b1 = b0 + 1, the floors
/// floor(2^(d+1) b / m) are odd for d = 1..k-1 and even for d = k, for both
/// b in {b0, b1}. chosen_B is the coprime one (b0 preferred) and satisfies
/// 1 <= chosen_B < m/2.
struct LemmaWitness {
  std::int64_t m = 0;
  int k = 0;
  std::int64_t b0 = 0;
  std::int64_t b1 = 0;
  std::int64_t chosen_B = 0;
  // (d, parity of floor(2^(d+1) * chosen_B / m)) for d = 1..k.
  std::vector<std::pair<int, int>> parities;
};

/// Computes and verifies the witness for an odd prime power m > 2^(k+2).
/// Throws std::invalid_argument on bad inputs and falsification_error if a
/// parity check fails (which would contradict the proven pattern).
LemmaWitness lemma_witness(const Conductor& c, int k);

/// True iff the column of M labeled w.chosen_B, restricted to the rows
/// labeled 2, 4, ..., 2^k, reads (0, 0, ..., 0, 1).
bool column_witness_holds(const SignMatrix& M, const LemmaWitness& w);

/// Exploratory analogue of the column witness for m = 2^n: the raw interval
/// rule entries at rows 2^d - 1 (d = 1..k) and column 2^n - 2^(n-k+1) + 1.
/// Reported only; valid for 2 <= k <= n-2 (k = 1 hits the trivial a = 1 row).
struct TwoPowerWitness {
  std::int64_t m = 0;
  int k = 0;
  std::int64_t col_label = 0;
  std::vector<int> entries;  // interval-rule entries for d = 1..k
  bool holds = false;        // entries == (0, ..., 0, 1)
};
TwoPowerWitness two_power_column_witness(const Conductor& c, int k);

/// Rank summary for one prime-power conductor.
struct RankReport {
  std::int64_t m = 0;
  MatrixKind kind = MatrixKind::odd_prime_power;
  std::int64_t rank = 0;
  std::int64_t phi_half = 0;
  std::int64_t circular_deficiency = 0;  // phi_half - rank
  std::int64_t log_bound = 0;            // floor(log2 m) - 2
  bool bound_satisfied = false;          // rank >= log_bound
  bool full_rank = false;  // rank == phi_half; for m = 2^n this is Weber's
                           // statement rank = 2^(n-2) exactly
};

/// Builds the signature matrix for a prime-power conductor, computes its
/// rank, and fills the report.
RankReport verify_lower_bound(const Conductor& c);

/// Report from an already-computed rank (used when the matrix is reused).
RankReport make_rank_report(const Conductor& c, std::int64_t computed_rank);

/// floor(log2 m).
int floor_log2(std::int64_t m);

}  // namespace cyclosig
