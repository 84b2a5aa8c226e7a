#include "cyclosig/conductor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclosig {

Conductor make_conductor(std::int64_t m) {
  if (m < 3)
    throw std::invalid_argument("conductor m must be at least 3 (got " +
                                std::to_string(m) + ")");
  if (m % 4 == 2)
    throw std::invalid_argument(
        "m ≡ 2 (mod 4) excluded: m = " + std::to_string(m) +
        " defines the same field as m/2; conductors must be odd or "
        "divisible by 4");

  Conductor c;
  c.m = m;

  std::int64_t x = m;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    c.factorization.emplace_back(p, e);
  }
  if (x > 1) c.factorization.emplace_back(x, 1);

  std::int64_t phi = 1;
  for (auto [p, e] : c.factorization) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  c.phi_half = phi / 2;
  return c;
}

std::int64_t least_positive_residue(std::int64_t x, std::int64_t modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  if (x <= 0) throw std::invalid_argument("least_positive_residue expects x > 0");
  const std::int64_t r = x % modulus;
  return r == 0 ? modulus : r;
}

int half_interval_sign(std::int64_t r, std::int64_t modulus) {
  if (r < 1 || r >= modulus || 2 * r == modulus)
    throw std::domain_error(
        "half_interval_sign: residue " + std::to_string(r) + " mod " +
        std::to_string(modulus) +
        " is not in an open half-interval (upstream bug)");
  return 2 * r < modulus ? 0 : 1;
}

ResidueIndexMap::ResidueIndexMap(Conductor c) : conductor_(std::move(c)) {
  const std::int64_t m = conductor_.m;
  residues_.reserve(static_cast<std::size_t>(conductor_.phi_half));
  for (std::int64_t a = 1; 2 * a < m; ++a)
    if (std::gcd(a, m) == 1) residues_.push_back(a);
  if (size() != conductor_.phi_half)
    throw std::logic_error("residue count does not match phi(m)/2");
}

std::int64_t ResidueIndexMap::residue_at(std::int64_t i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("residue index " + std::to_string(i) +
                            " outside [1, " + std::to_string(size()) + "]");
  return residues_[static_cast<std::size_t>(i - 1)];
}

std::int64_t ResidueIndexMap::index_of(std::int64_t a) const {
  const std::int64_t m = conductor_.m;
  if (a < 1 || 2 * a >= m || std::gcd(a, m) != 1)
    throw std::invalid_argument("residue " + std::to_string(a) +
                                " is not a coprime residue in [1, " +
                                std::to_string(m) + "/2)");
  const auto it = std::lower_bound(residues_.begin(), residues_.end(), a);
  return static_cast<std::int64_t>(it - residues_.begin()) + 1;
}

}  // namespace cyclosig
