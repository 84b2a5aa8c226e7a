#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclosig/gf2.hpp"

using namespace cyclosig;

namespace {

SignVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  SignVector v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (rng() & 1) v.set(i, true);
  return v;
}

std::vector<SignVector> random_rows(std::mt19937_64& rng, std::size_t n,
                                    std::size_t dim) {
  std::vector<SignVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(rng, dim));
  return rows;
}

// Independent oracle: plain boolean Gaussian elimination, no packing.
int naive_rank(std::vector<std::vector<int>> mat) {
  if (mat.empty()) return 0;
  const std::size_t cols = mat[0].size();
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && row < mat.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[row], mat[pivot]);
    for (std::size_t i = 0; i < mat.size(); ++i)
      if (i != row && mat[i][col])
        for (std::size_t j = 0; j < cols; ++j) mat[i][j] ^= mat[row][j];
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> unpack(const std::vector<SignVector>& rows) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows) {
    std::vector<int> bits(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) bits[i] = r.get(i) ? 1 : 0;
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace

TEST_CASE("rank examples") {
  const SignMatrix invertible({SignVector::from_bits({1, 1}),
                               SignVector::from_bits({1, 0})},
                              {1, 2}, {1, 2});
  CHECK(rank(invertible) == 2);

  const SignMatrix repeated({SignVector::from_bits({1, 1}),
                             SignVector::from_bits({1, 1})},
                            {1, 2}, {1, 2});
  CHECK(rank(repeated) == 1);

  CHECK_THROWS_AS(rank(SignMatrix({}, {}, {1, 2})), std::invalid_argument);
}

TEST_CASE("span_insert and contains examples") {
  SpanBasis basis(2);
  CHECK(basis.insert(SignVector::from_bits({1, 1})));
  CHECK(basis.rank() == 1);
  CHECK_FALSE(basis.insert(SignVector::from_bits({1, 1})));
  CHECK(basis.rank() == 1);
  CHECK(basis.insert(SignVector::from_bits({0, 1})));
  CHECK(basis.rank() == 2);

  SpanBasis plane(2);
  plane.insert(SignVector::from_bits({1, 0}));
  plane.insert(SignVector::from_bits({0, 1}));
  CHECK(plane.contains(SignVector::ones(2)));

  SpanBasis line(3);
  line.insert(SignVector::from_bits({1, 1, 0}));
  CHECK_FALSE(line.contains(SignVector::ones(3)));
  CHECK(line.contains(SignVector(3)));  // zero vector: empty combination

  CHECK_THROWS_AS(line.insert(SignVector(2)), std::invalid_argument);
  CHECK_THROWS_AS(line.contains(SignVector(4)), std::invalid_argument);
}

TEST_CASE("insert reports independence exactly when contains is false") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng() % 80;
    SpanBasis basis(dim);
    for (int step = 0; step < 30; ++step) {
      const SignVector v = random_vector(rng, dim);
      const bool member = basis.contains(v);
      CHECK(basis.insert(v) == !member);
    }
  }
}

TEST_CASE("rank invariant under row permutation and row XOR") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng() % 256;
    const std::size_t n = 1 + rng() % (dim + 8);
    auto rows = random_rows(rng, n, dim);
    const std::int64_t base = rank(rows, dim);

    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rank(shuffled, dim) == base);

    if (n >= 2) {
      auto xored = rows;
      const std::size_t i = rng() % n;
      std::size_t j = rng() % n;
      if (j == i) j = (j + 1) % n;
      xored[i] ^= xored[j];
      CHECK(rank(xored, dim) == base);
    }
  }
}

TEST_CASE("packed rank matches the naive boolean oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + rng() % 64;
    const std::size_t n = 1 + rng() % (dim + 4);
    const auto rows = random_rows(rng, n, dim);
    CHECK(rank(rows, dim) == naive_rank(unpack(rows)));
  }
}

TEST_CASE("row_space_basis spans the rows independently") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng() % 48;
    const std::size_t n = 1 + rng() % (dim + 6);
    auto rows = random_rows(rng, n, dim);
    std::vector<std::int64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i);
    std::vector<std::int64_t> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) cols[j] = static_cast<std::int64_t>(j);
    const SignMatrix mat(rows, labels, cols);

    const auto basis_vectors = row_space_basis(mat);
    CHECK(static_cast<std::int64_t>(basis_vectors.size()) == rank(mat));
    CHECK(rank(basis_vectors, dim) ==
          static_cast<std::int64_t>(basis_vectors.size()));
    SpanBasis basis(dim);
    for (const auto& v : basis_vectors) basis.insert(v);
    for (const auto& r : mat.rows()) CHECK(basis.contains(r));
  }
}

TEST_CASE("XOR keeps padding canonical") {
  SignVector a = SignVector::ones(70);
  const SignVector b = SignVector::ones(70);
  a ^= b;
  CHECK(a.is_zero());
  CHECK(a == SignVector(70));
  CHECK(SignVector::ones(70).popcount() == 70);
  CHECK_THROWS_AS(SignVector(3) ^ SignVector(4), std::invalid_argument);
}

TEST_CASE("hex packing: known values and roundtrip") {
  CHECK(SignVector::from_bits({1, 1}).to_hex() == "03");
  CHECK(SignVector::from_bits({0, 1}).to_hex() == "02");
  SignVector nine(9);
  nine.set(8, true);
  CHECK(nine.to_hex() == "0001");

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 200;
    const SignVector v = random_vector(rng, dim);
    CHECK(SignVector::from_hex(v.to_hex(), dim) == v);
  }

  CHECK_THROWS_AS(SignVector::from_hex("0", 2), std::invalid_argument);
  CHECK_THROWS_AS(SignVector::from_hex("zz", 2), std::invalid_argument);
  CHECK_THROWS_AS(SignVector::from_hex("04", 2), std::invalid_argument);
}

TEST_CASE("matrix construction validates shapes") {
  CHECK_THROWS_AS(SignMatrix({SignVector(3)}, {1, 2}, {1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix({SignVector(2)}, {1}, {1, 2, 3}),
                  std::invalid_argument);
  const SignMatrix ok({SignVector(2)}, {1}, {1, 2});
  CHECK(ok.n_rows() == 1);
  CHECK(ok.n_cols() == 2);
}
