#include "binlr/hardness.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

#include "binlr/errors.hpp"
#include "binlr/search.hpp"

namespace binlr {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw DimensionError("SignMatrix: dimensions must be at least 1");
  data_.assign(rows * cols, 0);
}

SignMatrix SignMatrix::make(std::size_t rows, std::size_t cols, std::span<const int> entries) {
  SignMatrix w(rows, cols);
  if (entries.size() != rows * cols) throw DimensionError("SignMatrix::make: entry count mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) w.set(i / cols, i % cols, entries[i]);
  return w;
}

void SignMatrix::set(std::size_t r, std::size_t c, int value) {
  if (value < -1 || value > 1) throw DimensionError("SignMatrix: entry outside {-1,0,1}");
  data_[r * cols_ + c] = static_cast<std::int8_t>(value);
}

SignMatrix SignMatrix::negated() const {
  SignMatrix out = *this;
  for (auto& v : out.data_) v = static_cast<std::int8_t>(-v);
  return out;
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

std::int64_t bilinear(const SignMatrix& w, const BitVector& x, const BitVector& y) {
  if (x.size() != w.rows() || y.size() != w.cols()) throw DimensionError("bilinear: shape mismatch");
  std::int64_t total = 0;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    if (!x.get(r)) continue;
    for (std::size_t c = 0; c < w.cols(); ++c)
      if (y.get(c)) total += w.at(r, c);
  }
  return total;
}

std::vector<std::int64_t> int_product(const SignMatrix& a, const SignMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("int_product: inner dimension mismatch");
  std::vector<std::int64_t> out(a.rows() * b.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t t = 0; t < a.cols(); ++t)
      for (std::size_t c = 0; c < b.cols(); ++c) out[r * b.cols() + c] += a.at(r, t) * b.at(t, c);
  return out;
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

SignMatrix sylvester_hadamard(std::size_t m) {
  if (!is_power_of_two(m)) throw DimensionError("sylvester_hadamard: m must be a power of 2");
  SignMatrix h(m, m);
  // H[r][c] = (-1)^popcount(r & c) is the closed form of the doubling recursion.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) h.set(r, c, std::popcount(r & c) % 2 == 0 ? 1 : -1);
  return h;
}

SignMatrix kron_allones(const SignMatrix& w, std::size_t m) {
  if (m == 0) throw DimensionError("kron_allones: m must be at least 1");
  SignMatrix out(w.rows() * m, w.cols() * m);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out.set(r, c, w.at(r / m, c / m));
  return out;
}

SignMatrix tilde_reduction(const SignMatrix& w, std::size_t m) {
  const SignMatrix h = sylvester_hadamard(m);
  SignMatrix out(w.rows() * m, w.cols() * m);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) {
      const int weight = w.at(r / m, c / m);
      out.set(r, c, weight != 0 ? weight : h.at(r % m, c % m));
    }
  return out;
}

std::uint64_t default_m(std::size_t n) {
  if (n == 0) throw std::invalid_argument("default_m: n must be at least 1");
  const auto n4 = sat_pow(n, 4);
  const auto limit = sat_mul(4, n4);
  if (limit >= (std::uint64_t{1} << 63)) throw std::overflow_error("default_m: 4n^4 too large");
  std::uint64_t m = 1;
  while (m <= limit) m <<= 1;
  return m;
}

SignMatrix sign_from_binary(const BitMatrix& a) {
  SignMatrix w(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) w.set(r, c, a.get(r, c) ? 1 : -1);
  return w;
}

BitMatrix binary_from_sign(const SignMatrix& w) {
  BitMatrix a(w.rows(), w.cols());
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) {
      const int v = w.at(r, c);
      if (v == 0) throw DimensionError("binary_from_sign: zero weight has no binary preimage");
      if (v == 1) a.set(r, c);
    }
  return a;
}

namespace {

void check_enumerable(const char* what, std::size_t rows) {
  if (rows > kMaxEnumeratedRows)
    throw BudgetExceeded(what, sat_pow(2, rows), std::uint64_t{1} << kMaxEnumeratedRows);
}

// Column sums s = x^T W for the x encoded by `mask`.
void column_sums(const SignMatrix& w, const std::vector<int>& x, std::vector<std::int64_t>& s) {
  std::fill(s.begin(), s.end(), 0);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < w.cols(); ++c) s[c] += x[r] * w.at(r, c);
  }
}

}  // namespace

BicliqueResult max_biclique(const SignMatrix& w) {
  check_enumerable("max_biclique", w.rows());
  std::vector<int> x(w.rows());
  std::vector<std::int64_t> s(w.cols());
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  Word best_x = 0;
  for (Word mask = 0; mask < (Word{1} << w.rows()); ++mask) {
    for (std::size_t r = 0; r < w.rows(); ++r) x[r] = static_cast<int>((mask >> r) & 1U);
    column_sums(w, x, s);
    std::int64_t value = 0;
    for (auto v : s)
      if (v > 0) value += v;
    if (value > best) {
      best = value;
      best_x = mask;
    }
  }
  BicliqueResult out{best, BitVector::from_word(w.rows(), best_x), BitVector(w.cols())};
  for (std::size_t r = 0; r < w.rows(); ++r) x[r] = out.x.get(r) ? 1 : 0;
  column_sums(w, x, s);
  for (std::size_t c = 0; c < w.cols(); ++c)
    if (s[c] > 0) out.y.set(c);
  return out;
}

CutResult max_bipartite_cut(const SignMatrix& w) {
  check_enumerable("max_bipartite_cut", w.rows());
  std::vector<int> x(w.rows());
  std::vector<std::int64_t> s(w.cols());
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  Word best_x = 0;
  // Bit r of the mask set means x_r = -1, so mask 0 is the all-(+1) vector.
  for (Word mask = 0; mask < (Word{1} << w.rows()); ++mask) {
    for (std::size_t r = 0; r < w.rows(); ++r) x[r] = ((mask >> r) & 1U) ? -1 : 1;
    column_sums(w, x, s);
    std::int64_t value = 0;
    for (auto v : s) value += v < 0 ? -v : v;
    if (value > best) {
      best = value;
      best_x = mask;
    }
  }
  CutResult out{best, std::vector<int>(w.rows()), std::vector<int>(w.cols())};
  for (std::size_t r = 0; r < w.rows(); ++r) out.x[r] = ((best_x >> r) & 1U) ? -1 : 1;
  column_sums(w, out.x, s);
  for (std::size_t c = 0; c < w.cols(); ++c) out.y[c] = s[c] < 0 ? -1 : 1;
  return out;
}

IdentityCheck check_rank1_identity(const BitMatrix& a, const BitVector& u, const BitVector& v) {
  if (u.size() != a.rows() || v.size() != a.cols())
    throw DimensionError("check_rank1_identity: shape mismatch");
  IdentityCheck out;
  out.lhs = static_cast<std::int64_t>(hamming_dist(a, outer(u, v)));
  out.rhs = static_cast<std::int64_t>(a.popcount()) - bilinear(sign_from_binary(a), u, v);
  out.equal = out.lhs == out.rhs;
  return out;
}

namespace {

void check_gadget_size(const char* what, std::size_t n, std::size_t m) {
  if (n * m > kMaxGadgetSize)
    throw BudgetExceeded(what, sat_pow(2, n * m), std::uint64_t{1} << kMaxGadgetSize);
}

std::int64_t max_abs_bilinear(const SignMatrix& w) {
  return std::max(max_biclique(w).value, max_biclique(w.negated()).value);
}

}  // namespace

IdentityCheck verify_block_lemma(const SignMatrix& w, std::size_t m) {
  if (w.rows() != w.cols()) throw DimensionError("verify_block_lemma: W must be square");
  check_gadget_size("verify_block_lemma", w.rows(), m);
  IdentityCheck out;
  out.lhs = max_biclique(kron_allones(w, m)).value;
  out.rhs = static_cast<std::int64_t>(m * m) * max_biclique(w).value;
  out.equal = out.lhs == out.rhs;
  return out;
}

BoundCheck verify_lindsey(std::size_t m) {
  if (m > 16) throw BudgetExceeded("verify_lindsey", sat_pow(2, m), std::uint64_t{1} << 16);
  BoundCheck out;
  out.max_abs = max_abs_bilinear(sylvester_hadamard(m));
  out.bound_squared = static_cast<std::int64_t>(m * m * m);
  out.holds = out.max_abs * out.max_abs <= out.bound_squared;
  return out;
}

BoundCheck verify_tilde_gap(const SignMatrix& w, std::size_t m) {
  if (w.rows() != w.cols()) throw DimensionError("verify_tilde_gap: W must be square");
  check_gadget_size("verify_tilde_gap", w.rows(), m);
  const SignMatrix tilde = tilde_reduction(w, m);
  const SignMatrix plain = kron_allones(w, m);
  // The difference is H on zero blocks and 0 elsewhere, so it is a sign matrix.
  SignMatrix diff(tilde.rows(), tilde.cols());
  for (std::size_t r = 0; r < diff.rows(); ++r)
    for (std::size_t c = 0; c < diff.cols(); ++c) diff.set(r, c, tilde.at(r, c) - plain.at(r, c));
  const auto n = static_cast<std::int64_t>(w.rows());
  const auto mm = static_cast<std::int64_t>(m);
  BoundCheck out;
  out.max_abs = max_abs_bilinear(diff);
  out.bound_squared = n * n * n * n * mm * mm * mm;
  out.holds = out.max_abs * out.max_abs <= out.bound_squared;
  return out;
}

// ---------------------------------------------------------------- .smx

namespace {

[[noreturn]] void bad(const std::string& message) { throw FormatError("smx: " + message); }

std::size_t parse_dim(const std::string& token) {
  if (token.empty() || token.size() > 9 || token.find_first_not_of("0123456789") != std::string::npos ||
      (token.size() > 1 && token[0] == '0'))
    bad("bad dimension '" + token + "'");
  return std::stoul(token);
}

std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto sp = line.find(' ', start);
    out.push_back(line.substr(start, sp - start));
    if (sp == std::string::npos) break;
    start = sp + 1;
  }
  return out;
}

}  // namespace

SignMatrix parse_smx(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) bad("missing final newline");
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) bad("empty input");
  const auto header = split_spaces(lines[0]);
  if (header.size() != 2) bad("header must be \"d n\"");
  const std::size_t d = parse_dim(header[0]);
  const std::size_t n = parse_dim(header[1]);
  if (d == 0 || n == 0) bad("dimensions must be at least 1");
  if (lines.size() != d + 1) bad("expected " + std::to_string(d) + " rows");
  SignMatrix w(d, n);
  for (std::size_t r = 0; r < d; ++r) {
    const auto tokens = split_spaces(lines[r + 1]);
    if (tokens.size() != n) bad("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& t = tokens[c];
      if (t == "1")
        w.set(r, c, 1);
      else if (t == "-1")
        w.set(r, c, -1);
      else if (t != "0")
        bad("row " + std::to_string(r) + " contains '" + t + "'");
    }
  }
  return w;
}

std::string format_smx(const SignMatrix& w) {
  std::ostringstream out;
  out << w.rows() << ' ' << w.cols() << '\n';
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) out << (c ? " " : "") << w.at(r, c);
    out << '\n';
  }
  return out.str();
}

SignMatrix load_smx(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("smx: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_smx(buf.str());
}

void save_smx(const std::string& path, const SignMatrix& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_smx(w);
}

}  // namespace binlr
