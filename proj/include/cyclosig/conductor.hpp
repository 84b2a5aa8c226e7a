#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclosig {

/// A validated cyclotomic conductor: m >= 3 and m odd or divisible by 4
/// (m = 2 mod 4 gives the same field as m/2 and is excluded).
struct Conductor {
  std::int64_t m = 0;
  // (prime, exponent) pairs, primes ascending; product reconstructs m.
  std::vector<std::pair<std::int64_t, int>> factorization;
  // phi(m)/2 = number of coprime residues a with 1 <= a < m/2.
  std::int64_t phi_half = 0;

  int omega() const { return static_cast<int>(factorization.size()); }
  std::int64_t phi() const { return 2 * phi_half; }
  bool is_prime_power() const { return factorization.size() == 1; }
  bool is_odd_prime_power() const {
    return is_prime_power() && factorization[0].first != 2;
  }
  bool is_two_power() const {
    return is_prime_power() && factorization[0].first == 2;
  }
  /// Exponent n for m = 2^n; only meaningful when is_two_power().
  int two_power_exponent() const { return factorization[0].second; }
};

/// Validates and factors m (trial division; m fits in 64 bits).
/// Throws std::invalid_argument for m < 3 or m = 2 (mod 4).
Conductor make_conductor(std::int64_t m);

/// Least positive residue of x modulo `modulus`, in [1, modulus].
/// (x = 0 mod modulus maps to modulus, not 0.)
std::int64_t least_positive_residue(std::int64_t x, std::int64_t modulus);

/// 0 if r lies in (0, modulus/2), 1 if in (modulus/2, modulus).
/// Pure integer comparison (2r vs modulus). Throws std::domain_error when
/// r equals modulus/2 exactly or is out of range; that cannot happen for
/// residues of products of units coprime to the modulus, so it signals an
/// upstream bug rather than a representable sign.
int half_interval_sign(std::int64_t r, std::int64_t modulus);

/// The ordered list of coprime residues a with 1 <= a < m/2, together with
/// the 1-based index maps used to label matrix rows and columns. For odd
/// prime powers p^n these agree with the closed forms
///   i = a - floor((a-1)/p)   and   a = i + floor((i-1)/(p-1)).
class ResidueIndexMap {
 public:
  explicit ResidueIndexMap(Conductor c);

  const Conductor& conductor() const { return conductor_; }
  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::int64_t size() const {
    return static_cast<std::int64_t>(residues_.size());
  }

  /// 1-based. Throws std::out_of_range for i outside [1, size()].
  std::int64_t residue_at(std::int64_t i) const;

  /// 1-based. Throws std::invalid_argument unless 1 <= a < m/2 and
  /// gcd(a, m) = 1.
  std::int64_t index_of(std::int64_t a) const;

 private:
  Conductor conductor_;
  std::vector<std::int64_t> residues_;
};

}  // namespace cyclosig
