#include "binlr/bitmat.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "binlr/errors.hpp"

namespace binlr {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DimensionError(message);
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  if (!v.words_.empty()) v.words_.back() &= tail_mask(size);
  return v;
}

BitVector BitVector::from_word(std::size_t size, Word bits) {
  require(size <= kWordBits, "BitVector::from_word: size exceeds 64");
  BitVector v(size);
  if (size > 0) v.words_[0] = bits & tail_mask(size);
  return v;
}

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    require(bits[i] <= 1, "BitVector::from_bits: entry not in {0,1}");
    if (bits[i]) v.set(i);
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void BitVector::check_same_size(const BitVector& other) const {
  require(size_ == other.size_, "BitVector: length mismatch");
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::and_not(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitVector::assign_zero() { std::fill(words_.begin(), words_.end(), 0); }

void BitVector::assign(const BitVector& other) {
  check_same_size(other);
  std::copy(other.words_.begin(), other.words_.end(), words_.begin());
}

std::size_t hamming_dist(const BitVector& a, const BitVector& b) {
  require(a.size() == b.size(), "hamming_dist: length mismatch");
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return total;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)) {
  require(rows >= 1 && cols >= 1, "BitMatrix: dimensions must be at least 1");
  require(rows <= std::numeric_limits<std::uint64_t>::max() / cols,
          "BitMatrix: rows*cols overflows");
  data_.assign(rows_ * stride_, 0);
}

BitMatrix BitMatrix::make(std::size_t rows, std::size_t cols, std::span<const int> entries) {
  BitMatrix m(rows, cols);
  require(entries.size() == rows * cols, "make: expected " + std::to_string(rows * cols) +
                                             " entries, got " + std::to_string(entries.size()));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const int v = entries[r * cols + c];
      require(v == 0 || v == 1, "make: entry value out of range");
      if (v) m.set(r, c);
    }
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  const Word tail = tail_mask(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t w = 0; w < m.stride_; ++w) m.data_[r * m.stride_ + w] = ~Word{0};
    m.data_[r * m.stride_ + m.stride_ - 1] &= tail;
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns) {
  require(!columns.empty(), "from_columns: no columns");
  BitMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == m.rows_, "from_columns: column length mismatch");
    for (std::size_t r = 0; r < m.rows_; ++r)
      if (columns[c].get(r)) m.set(r, c);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const Word mask = Word{1} << (c % kWordBits);
  Word& w = data_[r * stride_ + c / kWordBits];
  w = value ? (w | mask) : (w & ~mask);
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  auto out = v.words();
  const auto in = row_words(r);
  std::copy(in.begin(), in.end(), out.begin());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  require(c < cols_, "column: index out of range");
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

std::vector<BitVector> BitMatrix::columns() const {
  std::vector<BitVector> out(cols_, BitVector(rows_));
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto words = row_words(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = words[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        out[w * kWordBits + b].set(r);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> indices) const {
  require(!indices.empty(), "select_columns: empty selection");
  BitMatrix m(rows_, indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    require(indices[c] < cols_, "select_columns: index out of range");
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, indices[c])) m.set(r, c);
  }
  return m;
}

std::size_t BitMatrix::popcount() const {
  std::size_t total = 0;
  for (Word w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix BitMatrix::complement() const {
  BitMatrix m = *this;
  m ^= ones(rows_, cols_);
  return m;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "xor: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

bool BitMatrix::is_canonical() const {
  const Word tail = tail_mask(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r * stride_ + stride_ - 1] & ~tail) return false;
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

// ---------------------------------------------------------------- kernels

namespace {

// Row r of the product is the XOR (or OR) of the rows of b selected by row r
// of a, so both products reduce to word-wide row accumulation.
template <class Combine>
BitMatrix row_product(const BitMatrix& a, const BitMatrix& b, Combine combine, const char* name) {
  require(a.cols() == b.rows(), std::string(name) + ": inner dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  std::vector<Word> acc(b.words_per_row());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (!a.get(r, t)) continue;
      const auto src = b.row_words(t);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] = combine(acc[w], src[w]);
    }
    for (std::size_t c = 0; c < b.cols(); ++c)
      if ((acc[c / kWordBits] >> (c % kWordBits)) & 1U) out.set(r, c);
  }
  assert(out.is_canonical());
  return out;
}

}  // namespace

BitMatrix gf2_mul(const BitMatrix& a, const BitMatrix& b) {
  return row_product(a, b, [](Word x, Word y) { return x ^ y; }, "gf2_mul");
}

BitMatrix bool_mul(const BitMatrix& a, const BitMatrix& b) {
  return row_product(a, b, [](Word x, Word y) { return x | y; }, "bool_mul");
}

std::size_t hamming_dist(const BitMatrix& a, const BitMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "hamming_dist: shape mismatch");
  std::size_t total = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto x = a.row_words(r);
    const auto y = b.row_words(r);
    for (std::size_t w = 0; w < x.size(); ++w)
      total += static_cast<std::size_t>(std::popcount(x[w] ^ y[w]));
  }
  return total;
}

std::size_t gf2_rank(const BitMatrix& a) {
  const std::size_t stride = a.words_per_row();
  std::vector<Word> rows;
  rows.reserve(a.rows() * stride);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto w = a.row_words(r);
    rows.insert(rows.end(), w.begin(), w.end());
  }
  auto row = [&](std::size_t r) { return rows.data() + r * stride; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    const std::size_t w = c / kWordBits;
    const Word mask = Word{1} << (c % kWordBits);
    std::size_t pivot = rank;
    while (pivot < a.rows() && !(row(pivot)[w] & mask)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + stride, row(rank));
    for (std::size_t r = rank + 1; r < a.rows(); ++r)
      if (row(r)[w] & mask)
        for (std::size_t x = w; x < stride; ++x) row(r)[x] ^= row(rank)[x];
    ++rank;
  }
  return rank;
}

BitVector gf2_combine_columns(const BitMatrix& p, const BitVector& c) {
  require(p.cols() == c.size(), "gf2_combine_columns: length mismatch");
  BitVector out(p.rows());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.get(i)) out ^= p.column(i);
  return out;
}

BitVector bool_union_columns(const BitMatrix& p, const BitVector& c) {
  require(p.cols() == c.size(), "bool_union_columns: length mismatch");
  BitVector out(p.rows());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.get(i)) out |= p.column(i);
  return out;
}

BitMatrix outer(const BitVector& u, const BitVector& v) {
  BitMatrix m(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    if (u.get(r))
      for (std::size_t c = 0; c < v.size(); ++c)
        if (v.get(c)) m.set(r, c);
  return m;
}

// ---------------------------------------------------------------- .bmx

namespace {

[[noreturn]] void bad(const std::string& message) { throw FormatError("bmx: " + message); }

std::size_t parse_count(const std::string& token) {
  if (token.empty() || token.size() > 18) bad("bad dimension '" + token + "'");
  if (token.size() > 1 && token[0] == '0') bad("leading zero in dimension '" + token + "'");
  std::size_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') bad("bad dimension '" + token + "'");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace

BitMatrix parse_bmx(const std::string& text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      if (pos < text.size()) bad("missing final newline");
      return false;
    }
    line.assign(text, pos, nl - pos);
    pos = nl + 1;
    return true;
  };

  std::string line;
  if (!next_line(line)) bad("empty input");
  const auto space = line.find(' ');
  if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
    bad("header must be \"d n\"");
  const std::size_t d = parse_count(line.substr(0, space));
  const std::size_t n = parse_count(line.substr(space + 1));
  if (d == 0 || n == 0) bad("dimensions must be at least 1");

  BitMatrix m(d, n);
  for (std::size_t r = 0; r < d; ++r) {
    if (!next_line(line)) bad("expected " + std::to_string(d) + " rows");
    if (line.size() != n) bad("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      if (line[c] == '1')
        m.set(r, c);
      else if (line[c] != '0')
        bad("row " + std::to_string(r) + " contains a non-binary character");
    }
  }
  if (pos != text.size()) bad("trailing content after last row");
  return m;
}

BitMatrix read_bmx(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bmx(buf.str());
}

std::string format_bmx(const BitMatrix& m) {
  return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.to_string();
}

void write_bmx(std::ostream& out, const BitMatrix& m) { out << format_bmx(m); }

BitMatrix load_bmx(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("bmx: cannot open '" + path + "'");
  return read_bmx(in);
}

void save_bmx(const std::string& path, const BitMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_bmx(out, m);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace binlr
