#pragma once

// Generalized column subset selection over the Boolean semiring.
//
// A candidate is a selection of 2^k - 1 columns of A (repeats allowed) and an
// ordering S_1, ..., S_{2^k-1} of the non-empty subsets of {0, ..., k-1}.
// Writing D_l for the column assigned to S_l:
//
//   E[l][i]      = AND of D_l' over l' >= l with i in S_l'   (all-ones if none)
//   F(i, l1, l2) = E[l1+1][i] \ OR_{i' in S_l2} E[l1][i']    for l1 < l2, i in S_l1 & S_l2
//   B_i          = E[0][i] | OR of F(i, *, *)
//
// The basis B_1..B_k is then scored with optimal Boolean coefficients.
// Indices l are 0-based here.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "binlr/bitmat.hpp"
#include "binlr/coefficients.hpp"
#include "binlr/search.hpp"

namespace binlr {

/// Subsets of [k] are bit masks; bit i set means i is a member.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxGcssRank = 4;

struct FTerm {
  std::size_t i;
  std::size_t l1;
  std::size_t l2;
  BitVector bits;
};

struct GcssCandidate {
  std::size_t k = 0;
  std::vector<std::size_t> selection;  // 2^k - 1 column indices
  std::vector<SubsetMask> order;       // order[l] = S_l; a permutation of 1..2^k-1
  std::vector<BitVector> d;            // d[l] = D_{S_l}
  std::vector<std::vector<BitVector>> e;  // e[l][i]
  std::vector<FTerm> f;
  std::vector<BitVector> b;  // k basis columns
  std::uint64_t error = 0;
};

struct GcssSolution {
  std::vector<BitVector> b;
  BitMatrix q;  // k x n
  std::uint64_t error = 0;
  std::vector<std::size_t> selection;
  std::vector<SubsetMask> order;
  std::uint64_t order_rank = 0;  // lexicographic rank of `order` among all orderings
};

/// Per column, the subset S (empty allowed) whose union of basis columns is
/// nearest; ties go to the smallest indicator mask.
CoefficientFit bool_best_coefficients(const BitMatrix& basis, const BitMatrix& a);

/// The non-empty subsets of [k] in canonical (increasing mask) order.
std::vector<SubsetMask> canonical_subsets(std::size_t k);

/// Basis columns only; `error` left at 0.
GcssCandidate build_basis(const BitMatrix& a, std::size_t k, std::span<const std::size_t> selection,
                          std::span<const SubsetMask> order);
/// build_basis plus the Boolean coefficient error.
GcssCandidate build_candidate(const BitMatrix& a, std::size_t k,
                              std::span<const std::size_t> selection,
                              std::span<const SubsetMask> order);

/// E[l][i] subset of E[l+1][i] for every l, i.
bool e_monotone(const GcssCandidate& c);
/// For every l: OR_{i in S_l} B_i == OR_{i in S_l} E[l][i] | R_l, where R_l is
/// the union of F(i, l1, l2) over i in S_l and l <= l1 < l2.
bool reconstruction_identity(const GcssCandidate& c);
/// Every B_i lies inside the union of the selected columns.
bool basis_within_selection(const GcssCandidate& c);

/// n^(2^k-1) * (2^k-1)! * 2^k * n, saturating.
std::uint64_t gcss_search_space(std::size_t n, std::size_t k);

struct GcssOptions {
  SearchOptions search;
  /// Called for every built candidate. Invoked from worker threads when
  /// search.threads > 1.
  std::function<void(const GcssCandidate&)> on_candidate;
};

/// Exhaustive search over all selections (with repetition) and all orderings.
/// Ties resolve by (error, selection tuple, ordering rank).
GcssSolution gcss_exhaustive(const BitMatrix& a, std::size_t k, const GcssOptions& options = {});

/// 2^k, the GCSS approximation ratio.
std::uint64_t gcss_bound(std::size_t k);

}  // namespace binlr
