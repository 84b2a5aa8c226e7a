#include "cyclosig/gf2.hpp"

#include <algorithm>
#include <cctype>

namespace cyclosig {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string SignVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t n_bytes = (dim_ + 7) / 8;
  std::string out;
  out.reserve(2 * n_bytes);
  for (std::size_t k = 0; k < n_bytes; ++k) {
    const unsigned byte =
        static_cast<unsigned>(words_[k >> 3] >> (8 * (k & 7))) & 0xffu;
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

SignVector SignVector::from_hex(std::string_view hex, std::size_t dim) {
  const std::size_t n_bytes = (dim + 7) / 8;
  if (hex.size() != 2 * n_bytes)
    throw std::invalid_argument("hex string length does not match dimension");
  SignVector v(dim);
  for (std::size_t k = 0; k < n_bytes; ++k) {
    const int hi = hex_nibble(hex[2 * k]);
    const int lo = hex_nibble(hex[2 * k + 1]);
    if (hi < 0 || lo < 0)
      throw std::invalid_argument("invalid hex digit in packed bitstring");
    const std::uint64_t byte = static_cast<std::uint64_t>((hi << 4) | lo);
    v.words_[k >> 3] |= byte << (8 * (k & 7));
  }
  // Padding bits must be zero or the encoding was not canonical.
  SignVector masked = v;
  masked.mask_tail();
  if (masked.words_ != v.words_)
    throw std::invalid_argument("packed bitstring sets bits beyond dim");
  return v;
}

SignMatrix::SignMatrix(std::vector<SignVector> rows,
                       std::vector<std::int64_t> row_labels,
                       std::vector<std::int64_t> col_labels)
    : rows_(std::move(rows)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (rows_.size() != row_labels_.size())
    throw std::invalid_argument("row label count does not match row count");
  for (const auto& r : rows_)
    if (r.dim() != col_labels_.size())
      throw std::invalid_argument("row dimension does not match column count");
}

SignVector SpanBasis::reduce(SignVector v) const {
  check_dim(v);
  for (const auto& e : entries_)
    if (v.get(e.pivot)) v.xor_in(e.vec, e.pivot >> 6);
  return v;
}

bool SpanBasis::contains(const SignVector& v) const {
  return reduce(v).is_zero();
}

bool SpanBasis::insert(const SignVector& v) {
  SignVector r = reduce(v);
  const std::ptrdiff_t pivot_signed = r.lowest_set_bit();
  if (pivot_signed < 0) return false;
  const std::size_t pivot = static_cast<std::size_t>(pivot_signed);

  // Clear the new pivot column from the existing vectors so the basis stays
  // in reduced row-echelon form.
  for (auto& e : entries_)
    if (e.vec.get(pivot)) e.vec.xor_in(r, pivot >> 6);

  const auto pos = std::lower_bound(
      entries_.begin(), entries_.end(), pivot,
      [](const Entry& e, std::size_t p) { return e.pivot < p; });
  entries_.insert(pos, Entry{pivot, std::move(r)});
  return true;
}

std::int64_t rank(const SignMatrix& matrix) {
  if (matrix.n_rows() == 0)
    throw std::invalid_argument("rank of an empty matrix");
  return rank(matrix.rows(), matrix.n_cols());
}

std::int64_t rank(const std::vector<SignVector>& vectors, std::size_t dim) {
  SpanBasis basis(dim);
  for (const auto& v : vectors) {
    basis.insert(v);
    if (basis.rank() == dim) break;  // span is already everything
  }
  return static_cast<std::int64_t>(basis.rank());
}

std::vector<SignVector> row_space_basis(const SignMatrix& matrix) {
  SpanBasis basis(matrix.n_cols());
  for (const auto& r : matrix.rows()) basis.insert(r);
  std::vector<SignVector> out;
  out.reserve(basis.rank());
  for (const auto& e : basis.pivots()) out.push_back(e.vec);
  return out;
}

}  // namespace cyclosig
