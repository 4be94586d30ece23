#include "binlr/gcss_bool.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <tuple>

#include "binlr/errors.hpp"

namespace binlr {

CoefficientFit bool_best_coefficients(const BitMatrix& basis, const BitMatrix& a) {
  if (basis.rows() != a.rows()) throw DimensionError("bool_best_coefficients: row count mismatch");
  CombinationTable table(Semiring::boolean, basis.rows(), basis.cols());
  const auto columns = basis.columns();
  table.rebuild(columns);
  const auto targets = a.columns();
  return fit_columns(table, targets);
}

std::vector<SubsetMask> canonical_subsets(std::size_t k) {
  if (k == 0 || k > kMaxGcssRank) throw DimensionError("canonical_subsets: need 1 <= k <= 4");
  std::vector<SubsetMask> out;
  for (SubsetMask s = 1; s < (SubsetMask{1} << k); ++s) out.push_back(s);
  return out;
}

namespace {

bool contains(SubsetMask s, std::size_t i) { return (s >> i) & 1U; }

void check_order(std::span<const SubsetMask> order, std::size_t k) {
  auto sorted = std::vector<SubsetMask>(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != canonical_subsets(k))
    throw DimensionError("subset ordering is not a bijection onto the non-empty subsets");
}

}  // namespace

GcssCandidate build_basis(const BitMatrix& a, std::size_t k, std::span<const std::size_t> selection,
                          std::span<const SubsetMask> order) {
  if (k == 0 || k > kMaxGcssRank) throw DimensionError("build_candidate: need 1 <= k <= 4");
  const std::size_t count = (std::size_t{1} << k) - 1;
  if (selection.size() != count) throw DimensionError("build_candidate: selection must have 2^k-1 entries");
  if (order.size() != count) throw DimensionError("build_candidate: ordering must have 2^k-1 entries");
  check_order(order, k);
  for (auto j : selection)
    if (j >= a.cols()) throw DimensionError("build_candidate: column index out of range");

  const std::size_t d = a.rows();
  GcssCandidate c;
  c.k = k;
  c.selection.assign(selection.begin(), selection.end());
  c.order.assign(order.begin(), order.end());
  for (auto j : selection) c.d.push_back(a.column(j));

  // Backward sweep: E[l][i] = E[l+1][i] & D_l when i is in S_l.
  c.e.assign(count, std::vector<BitVector>(k, BitVector(d)));
  std::vector<BitVector> running(k, BitVector::ones(d));
  for (std::size_t l = count; l-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      if (contains(order[l], i)) running[i] &= c.d[l];
      c.e[l][i] = running[i];
    }
  }

  c.b.assign(c.e[0].begin(), c.e[0].end());
  for (std::size_t l1 = 0; l1 < count; ++l1) {
    for (std::size_t l2 = l1 + 1; l2 < count; ++l2) {
      const SubsetMask shared = order[l1] & order[l2];
      if (shared == 0) continue;
      BitVector cover(d);
      for (std::size_t i = 0; i < k; ++i)
        if (contains(order[l2], i)) cover |= c.e[l1][i];
      for (std::size_t i = 0; i < k; ++i) {
        if (!contains(shared, i)) continue;
        BitVector bits = c.e[l1 + 1][i];
        bits.and_not(cover);
        c.b[i] |= bits;
        c.f.push_back(FTerm{i, l1, l2, std::move(bits)});
      }
    }
  }
  return c;
}

GcssCandidate build_candidate(const BitMatrix& a, std::size_t k,
                              std::span<const std::size_t> selection,
                              std::span<const SubsetMask> order) {
  auto c = build_basis(a, k, selection, order);
  CombinationTable table(Semiring::boolean, a.rows(), k);
  table.rebuild(c.b);
  const auto targets = a.columns();
  c.error = fit_error(table, targets);
  return c;
}

bool e_monotone(const GcssCandidate& c) {
  for (std::size_t l = 0; l + 1 < c.e.size(); ++l)
    for (std::size_t i = 0; i < c.k; ++i)
      if (!c.e[l][i].is_subset_of(c.e[l + 1][i])) return false;
  return true;
}

bool reconstruction_identity(const GcssCandidate& c) {
  const std::size_t d = c.b.empty() ? 0 : c.b.front().size();
  for (std::size_t l = 0; l < c.order.size(); ++l) {
    const SubsetMask s = c.order[l];
    BitVector lhs(d);
    BitVector rhs(d);
    for (std::size_t i = 0; i < c.k; ++i) {
      if (!contains(s, i)) continue;
      lhs |= c.b[i];
      rhs |= c.e[l][i];
    }
    for (const auto& term : c.f)
      if (contains(s, term.i) && term.l1 >= l) rhs |= term.bits;
    if (lhs != rhs) return false;
  }
  return true;
}

bool basis_within_selection(const GcssCandidate& c) {
  if (c.d.empty()) return true;
  BitVector all(c.d.front().size());
  for (const auto& col : c.d) all |= col;
  return std::all_of(c.b.begin(), c.b.end(), [&](const BitVector& b) { return b.is_subset_of(all); });
}

std::uint64_t gcss_search_space(std::size_t n, std::size_t k) {
  if (k >= 6) return kSaturated;
  const std::uint64_t count = (std::uint64_t{1} << k) - 1;
  return sat_mul(sat_mul(sat_mul(sat_pow(n, count), sat_factorial(count)), std::uint64_t{1} << k), n);
}

std::uint64_t gcss_bound(std::size_t k) {
  if (k == 0 || k > 63) throw std::invalid_argument("gcss_bound: need 1 <= k <= 63");
  return std::uint64_t{1} << k;
}

namespace {

struct Winner {
  std::uint64_t error;
  std::vector<std::size_t> selection;
  std::uint64_t order_rank;
  std::vector<SubsetMask> order;
};

bool next_selection(std::vector<std::size_t>& sel, std::size_t n) {
  for (std::size_t i = sel.size(); i-- > 0;) {
    if (++sel[i] < n) return true;
    sel[i] = 0;
  }
  return false;
}

}  // namespace

GcssSolution gcss_exhaustive(const BitMatrix& a, std::size_t k, const GcssOptions& options) {
  if (k == 0 || k > kMaxGcssRank) throw DimensionError("gcss_exhaustive: need 1 <= k <= 4");
  require_budget("gcss_exhaustive", gcss_search_space(a.cols(), k), options.search);

  const std::size_t count = (std::size_t{1} << k) - 1;
  const auto targets = a.columns();
  const auto subsets = canonical_subsets(k);

  auto work = [&](unsigned worker, unsigned workers) -> std::optional<Winner> {
    CombinationTable table(Semiring::boolean, a.rows(), k);
    std::optional<Winner> best;
    std::vector<std::size_t> sel(count, 0);
    std::uint64_t ordinal = 0;
    do {
      if (ordinal++ % workers != worker) continue;
      auto order = subsets;
      std::uint64_t rank = 0;
      do {
        auto cand = build_basis(a, k, sel, order);
        table.rebuild(cand.b);
        cand.error = fit_error(table, targets);
        if (options.on_candidate) options.on_candidate(cand);
        if (!best || cand.error < best->error) best = Winner{cand.error, sel, rank, order};
        ++rank;
      } while (std::next_permutation(order.begin(), order.end()));
    } while (next_selection(sel, a.cols()));
    return best;
  };
  auto less = [](const Winner& x, const Winner& y) {
    return std::tie(x.error, x.selection, x.order_rank) <
           std::tie(y.error, y.selection, y.order_rank);
  };
  const auto best = run_partitioned<Winner>(options.search.threads, work, less);

  auto cand = build_basis(a, k, best->selection, best->order);
  auto fit = bool_best_coefficients(BitMatrix::from_columns(cand.b), a);
  assert(fit.error == best->error);
  return GcssSolution{std::move(cand.b), std::move(fit.coefficients), fit.error,
                      best->selection, best->order, best->order_rank};
}

}  // namespace binlr
