#pragma once

// Column subset selection over GF(2): the basis is k actual columns of A and
// the coefficients are solved optimally per column.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "binlr/bitmat.hpp"
#include "binlr/coefficients.hpp"
#include "binlr/rational.hpp"
#include "binlr/search.hpp"

namespace binlr {

/// k/2 + 1 + k/(2(2^k - 1)); the CSS approximation ratio over GF(2).
Rational ratio_bound(std::size_t k);
/// 0 for r = 0, otherwise (r/2)(1 + 1/(2^r - 1)).
Rational lambda_r(std::size_t r);

struct BoundParams {
  std::size_t k;

  Rational lambda(std::size_t r) const { return lambda_r(r); }
  /// Equal to 1 + lambda(k).
  Rational ratio() const { return ratio_bound(k); }
};

struct CssSolution {
  std::vector<std::size_t> subset;  // strictly increasing
  BitMatrix q;                      // k x n
  std::uint64_t error = 0;
  std::size_t k = 0;
};

/// Optimal coefficients Q (k x n) for basis P against every column of A.
/// Coefficient ties go to the smallest mask (bit i = coefficient of column i).
CoefficientFit gf2_best_coefficients(const BitMatrix& p, const BitMatrix& a);

/// Builds P from `subset` (any order, no duplicates) and solves Q.
CoefficientFit css_subset_error(const BitMatrix& a, std::span<const std::size_t> subset);

/// C(n, k) * 2^k * n column-cost evaluations, saturating.
std::uint64_t css_search_space(std::size_t n, std::size_t k);

/// Best k-subset of A's columns. Ties go to the lexicographically smallest
/// sorted index tuple.
CssSolution css_exhaustive(const BitMatrix& a, std::size_t k, const SearchOptions& options = {});

struct InducedBasisReport {
  BitMatrix b;                             // k x k, invertible over GF(2)
  std::vector<std::size_t> basis_indices;  // nearest column of A to each U b_i
  std::uint64_t error = 0;
};

/// Index of the column of `columns` nearest to `target`; ties to the smallest index.
std::size_t nearest_column(std::span<const BitVector> columns, const BitVector& target);

/// Uses the nearest neighbours of the columns of UB as the CSS basis.
InducedBasisReport induced_nn_basis(const BitMatrix& a, const BitMatrix& u, const BitMatrix& b);

/// All invertible k x k matrices over GF(2), ordered by their row-major bit
/// pattern read as an integer. k <= 3.
std::vector<BitMatrix> invertible_matrices(std::size_t k);

struct InducedBasisCheck {
  std::uint64_t min_induced_error = 0;
  bool holds = false;
  InducedBasisReport best;
};

/// Minimum induced_nn_basis error over every invertible B, and whether it is
/// within (1 + lambda_k) * opt_error. `u` is an optimal basis for (A, k) with
/// error `opt_error`. k = u.cols() <= 3.
InducedBasisCheck verify_thm3_consequence(const BitMatrix& a, const BitMatrix& u,
                                          std::uint64_t opt_error);

}  // namespace binlr
