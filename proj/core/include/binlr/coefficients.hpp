#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "binlr/bitmat.hpp"

namespace binlr {

enum class Semiring { gf2, boolean };

std::string_view to_string(Semiring s);
BitMatrix mul(Semiring s, const BitMatrix& a, const BitMatrix& b);

inline constexpr std::size_t kMaxCoefficientBits = 20;

/// Every combination of a k-column basis, indexed by coefficient mask
/// (bit i = coefficient of basis column i). Over GF(2) the table is filled in
/// Gray-code order so each entry costs one XOR; over the Boolean semiring each
/// entry is the union of its mask minus the low bit and that low column.
/// Storage is reused across rebuilds.
class CombinationTable {
 public:
  CombinationTable(Semiring semiring, std::size_t length, std::size_t k);

  void rebuild(std::span<const BitVector> basis);

  std::size_t k() const { return k_; }
  const BitVector& combination(std::uint32_t mask) const { return table_[mask]; }

  /// Cheapest combination for `target`; ties go to the smallest mask.
  std::pair<std::uint32_t, std::size_t> best_fit(const BitVector& target) const;

 private:
  Semiring semiring_;
  std::size_t k_;
  std::vector<BitVector> table_;
};

struct CoefficientFit {
  BitMatrix coefficients;  // k x n
  std::uint64_t error = 0;
};

/// Per-column optimal coefficients for `targets` against the table's basis.
CoefficientFit fit_columns(const CombinationTable& table, std::span<const BitVector> targets);
/// Error only; no coefficient matrix is materialised.
std::uint64_t fit_error(const CombinationTable& table, std::span<const BitVector> targets);

}  // namespace binlr
