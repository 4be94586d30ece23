#pragma once

// Brute-force optimal rank-k factorizations. These are the ground truth every
// approximation-ratio check compares against, so they refuse rather than
// approximate when the search space exceeds the budget.

#include <cstddef>
#include <cstdint>

#include "binlr/bitmat.hpp"
#include "binlr/coefficients.hpp"
#include "binlr/search.hpp"

namespace binlr {

struct Factorization {
  Semiring semiring = Semiring::gf2;
  BitMatrix u;  // d x k
  BitMatrix v;  // k x n
  std::uint64_t error = 0;
};

/// C(2^d + k - 1, k) * 2^k * n, saturating.
std::uint64_t opt_search_space(std::size_t d, std::size_t n, std::size_t k);

/// Minimum error over every U given as a non-decreasing k-multiset of
/// {0,1}^d (column vectors read as integers, bit r = row r), with V solved
/// per column. Ties go to the lexicographically smallest multiset.
Factorization opt_gf2(const BitMatrix& a, std::size_t k, const SearchOptions& options = {});
Factorization opt_bool(const BitMatrix& a, std::size_t k, const SearchOptions& options = {});
Factorization opt_factorization(Semiring s, const BitMatrix& a, std::size_t k,
                                const SearchOptions& options = {});

inline constexpr std::size_t kMaxRank1Rows = 24;

/// Rank-1 optimum: min over u of sum_j min(|a_j|, |a_j ^ u|). v_j = 1 only
/// when it strictly helps. Ties go to the smallest u.
Factorization opt_rank1(const BitMatrix& a);

struct Rank1Column {
  std::size_t column = 0;
  BitVector v;
  std::uint64_t error = 0;
};

/// opt_rank1 with u restricted to the columns of A; ties to the smallest index.
Rank1Column rank1_best_column(const BitMatrix& a);

}  // namespace binlr
