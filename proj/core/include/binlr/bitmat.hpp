#pragma once

// Bit-packed binary vectors and matrices with GF(2) and Boolean-semiring
// kernels. Rows are packed into 64-bit words; bits past the logical width of
// a row are always zero so that popcount-based distances are exact.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace binlr {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed bit vector of fixed length. Used for matrix columns, coefficient
/// vectors and set representations of columns.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector ones(std::size_t size);
  /// Low `size` bits of `bits`; requires size <= 64.
  static BitVector from_word(std::size_t size, Word bits);
  static BitVector from_bits(std::span<const std::uint8_t> bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t popcount() const;
  bool none() const;
  /// Value of the first 64 bits as an integer (bit i = entry i).
  Word low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  /// Set difference: this \ other.
  BitVector& and_not(const BitVector& other);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  /// True when every set bit of this vector is also set in `other`.
  bool is_subset_of(const BitVector& other) const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// "0101..." with entry 0 first.
  std::string to_string() const;

  void assign_zero();
  void assign(const BitVector& other);  // same length; reuses storage

 private:
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Hamming distance between equally sized vectors, without allocating.
std::size_t hamming_dist(const BitVector& a, const BitVector& b);

/// Dense d x n binary matrix, row-major, 64-bit packed.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Row-major entries, each 0 or 1.
  static BitMatrix make(std::size_t rows, std::size_t cols, std::span<const int> entries);
  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t rows, std::size_t cols);
  /// Columns become the columns of the matrix; all must share a length.
  static BitMatrix from_columns(std::span<const BitVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  /// All columns at once; the transposed copy column-heavy algorithms work on.
  std::vector<BitVector> columns() const;
  BitMatrix transpose() const;
  /// Sub-matrix formed by the given columns, in order.
  BitMatrix select_columns(std::span<const std::size_t> indices) const;

  std::size_t popcount() const;
  BitMatrix complement() const;

  BitMatrix& operator^=(const BitMatrix& other);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// True when every padding bit is zero.
  bool is_canonical() const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<Word> data_;
};

BitMatrix gf2_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix bool_mul(const BitMatrix& a, const BitMatrix& b);
std::size_t hamming_dist(const BitMatrix& a, const BitMatrix& b);
std::size_t gf2_rank(const BitMatrix& a);

/// XOR of the columns of `p` selected by the set bits of `c`.
BitVector gf2_combine_columns(const BitMatrix& p, const BitVector& c);
/// OR of the columns of `p` selected by the set bits of `c`.
BitVector bool_union_columns(const BitMatrix& p, const BitVector& c);

/// Outer product u v^T (identical in both semirings).
BitMatrix outer(const BitVector& u, const BitVector& v);

// .bmx text format: "d n\n" followed by d lines of n characters from {0,1}.
BitMatrix read_bmx(std::istream& in);
BitMatrix parse_bmx(const std::string& text);
void write_bmx(std::ostream& out, const BitMatrix& m);
std::string format_bmx(const BitMatrix& m);
BitMatrix load_bmx(const std::string& path);
void save_bmx(const std::string& path, const BitMatrix& m);

}  // namespace binlr
