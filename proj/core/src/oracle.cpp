#include "binlr/oracle.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "binlr/errors.hpp"

namespace binlr {

std::uint64_t opt_search_space(std::size_t d, std::size_t n, std::size_t k) {
  if (d >= 63) return kSaturated;
  const std::uint64_t vectors = std::uint64_t{1} << d;
  return sat_mul(sat_mul(sat_binomial(sat_add(vectors, k - 1), k), sat_pow(2, k)), n);
}

namespace {

struct Best {
  std::uint64_t error;
  std::vector<Word> multiset;
};

// Non-decreasing k-tuples over [0, limit) in lexicographic order.
bool next_multiset(std::vector<Word>& m, Word limit) {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] + 1 < limit) {
      ++m[i];
      std::fill(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.end(), m[i]);
      return true;
    }
  }
  return false;
}

}  // namespace

Factorization opt_factorization(Semiring s, const BitMatrix& a, std::size_t k,
                                const SearchOptions& options) {
  if (k == 0) throw DimensionError("opt: k must be at least 1");
  const std::size_t d = a.rows();
  require_budget(s == Semiring::gf2 ? "opt_gf2" : "opt_bool", opt_search_space(d, a.cols(), k),
                 options);
  // Passing the budget implies 2^d fits in a word.
  const Word limit = Word{1} << d;
  const auto targets = a.columns();

  auto work = [&](unsigned worker, unsigned workers) -> std::optional<Best> {
    CombinationTable table(s, d, k);
    std::vector<BitVector> basis(k, BitVector(d));
    std::vector<Word> m(k, 0);
    std::optional<Best> best;
    std::uint64_t ordinal = 0;
    do {
      if (ordinal++ % workers != worker) continue;
      for (std::size_t i = 0; i < k; ++i) basis[i].words()[0] = m[i];
      table.rebuild(basis);
      const std::uint64_t err = fit_error(table, targets);
      if (!best || err < best->error) {
        best = Best{err, m};
        if (err == 0) break;  // nothing later in this worker's share can win a tie
      }
    } while (next_multiset(m, limit));
    return best;
  };
  auto less = [](const Best& x, const Best& y) {
    return std::tie(x.error, x.multiset) < std::tie(y.error, y.multiset);
  };
  const auto best = run_partitioned<Best>(options.threads, work, less);

  std::vector<BitVector> basis;
  for (Word w : best->multiset) basis.push_back(BitVector::from_word(d, w));
  CombinationTable table(s, d, k);
  table.rebuild(basis);
  auto fit = fit_columns(table, targets);
  return Factorization{s, BitMatrix::from_columns(basis), std::move(fit.coefficients), fit.error};
}

Factorization opt_gf2(const BitMatrix& a, std::size_t k, const SearchOptions& options) {
  return opt_factorization(Semiring::gf2, a, k, options);
}

Factorization opt_bool(const BitMatrix& a, std::size_t k, const SearchOptions& options) {
  return opt_factorization(Semiring::boolean, a, k, options);
}

namespace {

// Error of the best v for a fixed u, and that v.
std::uint64_t rank1_cost(const std::vector<BitVector>& cols, const BitVector& u, BitVector* v) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::size_t keep = cols[j].popcount();
    const std::size_t use = hamming_dist(cols[j], u);
    if (use < keep) {
      total += use;
      if (v) v->set(j);
    } else {
      total += keep;
    }
  }
  return total;
}

}  // namespace

Factorization opt_rank1(const BitMatrix& a) {
  const std::size_t d = a.rows();
  if (d > kMaxRank1Rows)
    throw BudgetExceeded("opt_rank1", sat_pow(2, d), std::uint64_t{1} << kMaxRank1Rows);
  const auto cols = a.columns();
  BitVector u(d);
  Word best_u = 0;
  std::uint64_t best = kSaturated;
  for (Word w = 0; w < (Word{1} << d); ++w) {
    u.words()[0] = w;
    const std::uint64_t err = rank1_cost(cols, u, nullptr);
    if (err < best) {
      best = err;
      best_u = w;
      if (err == 0) break;
    }
  }
  const auto u_best = BitVector::from_word(d, best_u);
  BitVector v(a.cols());
  rank1_cost(cols, u_best, &v);
  BitMatrix um(d, 1);
  for (std::size_t r = 0; r < d; ++r)
    if (u_best.get(r)) um.set(r, 0);
  BitMatrix vm(1, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (v.get(j)) vm.set(0, j);
  return Factorization{Semiring::gf2, std::move(um), std::move(vm), best};
}

Rank1Column rank1_best_column(const BitMatrix& a) {
  const auto cols = a.columns();
  Rank1Column best{0, BitVector(a.cols()), kSaturated};
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::uint64_t err = rank1_cost(cols, cols[j], nullptr);
    if (err < best.error) {
      best.error = err;
      best.column = j;
    }
  }
  rank1_cost(cols, cols[best.column], &best.v);
  return best;
}

}  // namespace binlr
