#pragma once

// Rank-1 hardness machinery: {-1,0,1} weight matrices, the Sylvester Hadamard
// gadget, exact brute-force biclique / bipartite cut, and desk-scale checks of
// the lemmas the reduction rests on. Every comparison involving m^(3/2) is
// done on squared integers.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "binlr/bitmat.hpp"

namespace binlr {

class SignMatrix {
 public:
  SignMatrix(std::size_t rows, std::size_t cols);
  static SignMatrix make(std::size_t rows, std::size_t cols, std::span<const int> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int value);

  SignMatrix negated() const;
  SignMatrix transposed() const;
  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int8_t> data_;
};

/// x^T W y over the integers.
std::int64_t bilinear(const SignMatrix& w, const BitVector& x, const BitVector& y);
/// W1 * W2 over the integers, for checking H^T H = m I.
std::vector<std::int64_t> int_product(const SignMatrix& a, const SignMatrix& b);

bool is_power_of_two(std::size_t m);

SignMatrix sylvester_hadamard(std::size_t m);
/// W (x) J_m.
SignMatrix kron_allones(const SignMatrix& w, std::size_t m);
/// W (x) J_m with every zero block replaced by the m x m Sylvester matrix.
SignMatrix tilde_reduction(const SignMatrix& w, std::size_t m);
/// Smallest power of two strictly greater than 4 n^4.
std::uint64_t default_m(std::size_t n);

/// 2A - J, the {-1,1} weight matrix of the rank-1 objective.
SignMatrix sign_from_binary(const BitMatrix& a);
/// (W + J) / 2 entrywise; W must be a {-1,1} matrix.
BitMatrix binary_from_sign(const SignMatrix& w);

inline constexpr std::size_t kMaxEnumeratedRows = 24;

struct BicliqueResult {
  std::int64_t value = 0;
  BitVector x;
  BitVector y;
};

/// max x^T W y over x, y in {0,1}. For each x the best y takes exactly the
/// positive entries of x^T W. Ties: smallest x, then smallest y (as integers).
BicliqueResult max_biclique(const SignMatrix& w);

struct CutResult {
  std::int64_t value = 0;
  std::vector<int> x;  // entries in {-1, 1}
  std::vector<int> y;
};

/// max x^T W y over x, y in {-1,1}. For each x, y_j = sign((x^T W)_j) with 0 -> +1.
CutResult max_bipartite_cut(const SignMatrix& w);

struct IdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};

/// |A - u v^T| against |A| - u^T (2A - J) v.
IdentityCheck check_rank1_identity(const BitMatrix& a, const BitVector& u, const BitVector& v);

/// max biclique of W (x) J_m against m^2 times the max biclique of W.
IdentityCheck verify_block_lemma(const SignMatrix& w, std::size_t m);

struct BoundCheck {
  std::int64_t max_abs = 0;
  /// Compared against max_abs^2; the bound itself is sqrt(bound_squared).
  std::int64_t bound_squared = 0;
  bool holds = false;
};

/// max |x^T H y| over binary x, y for the Sylvester H, against m^(3/2).
BoundCheck verify_lindsey(std::size_t m);
/// max |u^T W~ v - u^T W' v| over binary u, v, against n^2 m^(3/2).
BoundCheck verify_tilde_gap(const SignMatrix& w, std::size_t m);

inline constexpr std::size_t kMaxGadgetSize = 14;

// .smx: "d n\n" then d lines of n space-separated integers from {-1,0,1}.
SignMatrix parse_smx(const std::string& text);
std::string format_smx(const SignMatrix& w);
SignMatrix load_smx(const std::string& path);
void save_smx(const std::string& path, const SignMatrix& w);

}  // namespace binlr
