#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclosig {

/// Bit-packed vector over F2. Bits beyond dim are kept zero so that
/// word-wise equality and XOR are canonical.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t dim) : dim_(dim), words_(word_count(dim)) {}

  static SignVector ones(std::size_t dim) {
    SignVector v(dim);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    v.mask_tail();
    return v;
  }

  static SignVector from_bits(std::span<const int> bits) {
    SignVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) v.set(i, true);
    return v;
  }
  static SignVector from_bits(std::initializer_list<int> bits) {
    return from_bits(std::span<const int>(bits.begin(), bits.size()));
  }

  std::size_t dim() const { return dim_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }

  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Index of the lowest set bit, or -1 when the vector is zero.
  std::ptrdiff_t lowest_set_bit() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k])
        return static_cast<std::ptrdiff_t>(64 * k + std::countr_zero(words_[k]));
    return -1;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  SignVector& operator^=(const SignVector& other) {
    check_same_dim(other);
    xor_in(other, 0);
    return *this;
  }
  friend SignVector operator^(SignVector lhs, const SignVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  /// Word-wise XOR starting at `from_word`; the caller guarantees the words
  /// of `other` before that offset are zero (true for echelon basis vectors
  /// whose pivot lies in or after that word).
  void xor_in(const SignVector& other, std::size_t from_word) {
    const std::uint64_t* src = other.words_.data();
    std::uint64_t* dst = words_.data();
    const std::size_t n = words_.size();
    for (std::size_t k = from_word; k < n; ++k) dst[k] ^= src[k];
  }

  bool operator==(const SignVector&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

  /// Hex encoding of the packed bits, row-major, little-endian within bytes:
  /// bit i lives in byte i/8 at position i%8, bytes emitted in order.
  std::string to_hex() const;
  static SignVector from_hex(std::string_view hex, std::size_t dim);

 private:
  static std::size_t word_count(std::size_t dim) { return (dim + 63) / 64; }
  void mask_tail() {
    if (dim_ & 63) words_.back() &= (std::uint64_t{1} << (dim_ & 63)) - 1;
  }
  void check_same_dim(const SignVector& other) const {
    if (dim_ != other.dim_)
      throw std::invalid_argument("SignVector dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense F2 matrix with integer row/column labels (the coprime residues
/// indexing signature matrices). Immutable after construction; rank is
/// always computed on a working copy.
class SignMatrix {
 public:
  SignMatrix(std::vector<SignVector> rows, std::vector<std::int64_t> row_labels,
             std::vector<std::int64_t> col_labels);

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return col_labels_.size(); }
  bool at(std::size_t i, std::size_t j) const { return rows_[i].get(j); }

  const SignVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SignVector>& rows() const { return rows_; }
  const std::vector<std::int64_t>& row_labels() const { return row_labels_; }
  const std::vector<std::int64_t>& col_labels() const { return col_labels_; }

 private:
  std::vector<SignVector> rows_;
  std::vector<std::int64_t> row_labels_;
  std::vector<std::int64_t> col_labels_;
};

/// Reduced row-echelon basis of a subspace of F2^dim. Supports online rank
/// computation and span membership queries. Pivot = lowest set bit; each
/// pivot column holds a 1 in exactly one basis vector.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return entries_.size(); }

  struct Entry {
    std::size_t pivot;
    SignVector vec;
  };
  const std::vector<Entry>& pivots() const { return entries_; }

  /// Reduces v against the basis (XOR of the pivoted vectors).
  SignVector reduce(SignVector v) const;

  /// True iff v lies in the span (reduces to zero).
  bool contains(const SignVector& v) const;

  /// Inserts v if independent of the current span. Returns whether the
  /// basis grew (equivalently: !contains(v) beforehand).
  bool insert(const SignVector& v);

 private:
  void check_dim(const SignVector& v) const {
    if (v.dim() != dim_)
      throw std::invalid_argument("SpanBasis dimension mismatch");
  }

  std::size_t dim_;
  std::vector<Entry> entries_;  // sorted by pivot ascending
};

/// F2 rank of the row span. The matrix itself is left untouched.
/// Throws std::invalid_argument on an empty matrix.
std::int64_t rank(const SignMatrix& matrix);

/// Rank of an arbitrary set of vectors of common dimension `dim`.
std::int64_t rank(const std::vector<SignVector>& vectors, std::size_t dim);

/// Echelon basis of the row space, as an independent list of vectors
/// spanning the same subspace as the rows.
std::vector<SignVector> row_space_basis(const SignMatrix& matrix);

}  // namespace cyclosig
