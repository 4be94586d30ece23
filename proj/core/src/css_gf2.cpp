#include "binlr/css_gf2.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

#include "binlr/errors.hpp"

namespace binlr {

Rational ratio_bound(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ratio_bound: k must be at least 1");
  return Rational(1) + lambda_r(k);
}

Rational lambda_r(std::size_t r) {
  if (r == 0) return Rational(0);
  if (r > 61) throw std::invalid_argument("lambda_r: r too large for exact 64-bit arithmetic");
  const auto span_size = static_cast<std::int64_t>((std::uint64_t{1} << r) - 1);
  return Rational(static_cast<std::int64_t>(r), 2) * (Rational(1) + Rational(1, span_size));
}

CoefficientFit gf2_best_coefficients(const BitMatrix& p, const BitMatrix& a) {
  if (p.rows() != a.rows()) throw DimensionError("gf2_best_coefficients: row count mismatch");
  CombinationTable table(Semiring::gf2, p.rows(), p.cols());
  const auto basis = p.columns();
  table.rebuild(basis);
  const auto targets = a.columns();
  return fit_columns(table, targets);
}

namespace {

void check_subset(std::span<const std::size_t> subset, std::size_t n) {
  if (subset.empty()) throw DimensionError("subset is empty");
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= n) throw DimensionError("subset index out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DimensionError("subset contains a duplicate index");
}

// Advances a strictly increasing k-tuple over [0, n) in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct SubsetScore {
  std::uint64_t error;
  std::vector<std::size_t> subset;
};

}  // namespace

CoefficientFit css_subset_error(const BitMatrix& a, std::span<const std::size_t> subset) {
  check_subset(subset, a.cols());
  return gf2_best_coefficients(a.select_columns(subset), a);
}

std::uint64_t css_search_space(std::size_t n, std::size_t k) {
  return sat_mul(sat_mul(sat_binomial(n, k), sat_pow(2, k)), n);
}

CssSolution css_exhaustive(const BitMatrix& a, std::size_t k, const SearchOptions& options) {
  const std::size_t n = a.cols();
  if (k == 0 || k > n) throw DimensionError("css_exhaustive: need 1 <= k <= n");
  require_budget("css_exhaustive", css_search_space(n, k), options);

  const auto columns = a.columns();
  auto work = [&](unsigned worker, unsigned workers) -> std::optional<SubsetScore> {
    CombinationTable table(Semiring::gf2, a.rows(), k);
    std::vector<BitVector> basis(k, BitVector(a.rows()));
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::optional<SubsetScore> best;
    std::uint64_t ordinal = 0;
    do {
      if (ordinal++ % workers != worker) continue;
      for (std::size_t i = 0; i < k; ++i) basis[i].assign(columns[idx[i]]);
      table.rebuild(basis);
      const std::uint64_t err = fit_error(table, columns);
      if (!best || err < best->error) best = SubsetScore{err, idx};
    } while (next_subset(idx, n));
    return best;
  };
  auto less = [](const SubsetScore& x, const SubsetScore& y) {
    return std::tie(x.error, x.subset) < std::tie(y.error, y.subset);
  };
  const auto best = run_partitioned<SubsetScore>(options.threads, work, less);

  auto fit = css_subset_error(a, best->subset);
  return CssSolution{best->subset, std::move(fit.coefficients), fit.error, k};
}

std::size_t nearest_column(std::span<const BitVector> columns, const BitVector& target) {
  if (columns.empty()) throw DimensionError("nearest_column: no columns");
  std::size_t best = 0;
  std::size_t best_dist = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const std::size_t dist = hamming_dist(columns[j], target);
    if (dist < best_dist) {
      best_dist = dist;
      best = j;
    }
  }
  return best;
}

InducedBasisReport induced_nn_basis(const BitMatrix& a, const BitMatrix& u, const BitMatrix& b) {
  const std::size_t k = u.cols();
  if (u.rows() != a.rows()) throw DimensionError("induced_nn_basis: U row count mismatch");
  if (b.rows() != k || b.cols() != k) throw DimensionError("induced_nn_basis: B must be k x k");
  if (gf2_rank(b) != k) throw DimensionError("induced_nn_basis: B is singular over GF(2)");

  const auto columns = a.columns();
  const BitMatrix ub = gf2_mul(u, b);
  InducedBasisReport report{b, {}, 0};
  std::vector<BitVector> basis;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = nearest_column(columns, ub.column(i));
    report.basis_indices.push_back(j);
    basis.push_back(columns[j]);
  }
  CombinationTable table(Semiring::gf2, a.rows(), k);
  table.rebuild(basis);
  report.error = fit_error(table, columns);
  return report;
}

std::vector<BitMatrix> invertible_matrices(std::size_t k) {
  if (k == 0 || k > 3) throw DimensionError("invertible_matrices: supported for 1 <= k <= 3");
  std::vector<BitMatrix> out;
  const std::uint32_t cells = static_cast<std::uint32_t>(k * k);
  for (std::uint32_t bits = 0; bits < (1U << cells); ++bits) {
    BitMatrix m(k, k);
    // Entry (r, c) is bit (k*k - 1 - (r*k + c)), so integer order is row-major lexicographic.
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if ((bits >> (cells - 1 - (r * k + c))) & 1U) m.set(r, c);
    if (gf2_rank(m) == k) out.push_back(std::move(m));
  }
  return out;
}

InducedBasisCheck verify_thm3_consequence(const BitMatrix& a, const BitMatrix& u,
                                          std::uint64_t opt_error) {
  const std::size_t k = u.cols();
  if (k > 3) throw DimensionError("verify_thm3_consequence: k > 3 exceeds the GL(k,2) budget");
  std::optional<InducedBasisReport> best;
  for (const auto& b : invertible_matrices(k)) {
    auto report = induced_nn_basis(a, u, b);
    if (!best || report.error < best->error) best = std::move(report);
  }
  InducedBasisCheck check{best->error, false, std::move(*best)};
  check.holds = within_ratio(check.min_induced_error, ratio_bound(k), opt_error);
  return check;
}

}  // namespace binlr
