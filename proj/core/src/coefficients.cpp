#include "binlr/coefficients.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "binlr/errors.hpp"

namespace binlr {

std::string_view to_string(Semiring s) { return s == Semiring::gf2 ? "gf2" : "boolean"; }

BitMatrix mul(Semiring s, const BitMatrix& a, const BitMatrix& b) {
  return s == Semiring::gf2 ? gf2_mul(a, b) : bool_mul(a, b);
}

CombinationTable::CombinationTable(Semiring semiring, std::size_t length, std::size_t k)
    : semiring_(semiring), k_(k) {
  if (k > kMaxCoefficientBits)
    throw BudgetExceeded("coefficient enumeration", std::uint64_t{1} << std::min<std::size_t>(k, 63),
                         std::uint64_t{1} << kMaxCoefficientBits);
  table_.assign(std::size_t{1} << k, BitVector(length));
}

void CombinationTable::rebuild(std::span<const BitVector> basis) {
  if (basis.size() != k_) throw DimensionError("CombinationTable: basis size mismatch");
  const std::uint32_t count = std::uint32_t{1} << k_;
  table_[0].assign_zero();
  if (semiring_ == Semiring::gf2) {
    std::uint32_t prev = 0;
    for (std::uint32_t t = 1; t < count; ++t) {
      const std::uint32_t gray = t ^ (t >> 1);
      const auto bit = static_cast<std::size_t>(std::countr_zero(t));
      table_[gray].assign(table_[prev]);
      table_[gray] ^= basis[bit];
      prev = gray;
    }
  } else {
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      table_[mask].assign(table_[mask & (mask - 1)]);
      table_[mask] |= basis[low];
    }
  }
}

std::pair<std::uint32_t, std::size_t> CombinationTable::best_fit(const BitVector& target) const {
  std::uint32_t best_mask = 0;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t mask = 0; mask < table_.size(); ++mask) {
    const std::size_t cost = hamming_dist(table_[mask], target);
    if (cost < best_cost) {
      best_cost = cost;
      best_mask = mask;
      if (cost == 0) break;
    }
  }
  return {best_mask, best_cost};
}

CoefficientFit fit_columns(const CombinationTable& table, std::span<const BitVector> targets) {
  if (targets.empty()) throw DimensionError("fit_columns: no target columns");
  CoefficientFit fit{BitMatrix(table.k() == 0 ? 1 : table.k(), targets.size()), 0};
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const auto [mask, cost] = table.best_fit(targets[j]);
    fit.error += cost;
    for (std::size_t i = 0; i < table.k(); ++i)
      if ((mask >> i) & 1U) fit.coefficients.set(i, j);
  }
  return fit;
}

std::uint64_t fit_error(const CombinationTable& table, std::span<const BitVector> targets) {
  std::uint64_t error = 0;
  for (const auto& t : targets) error += table.best_fit(t).second;
  return error;
}

}  // namespace binlr
