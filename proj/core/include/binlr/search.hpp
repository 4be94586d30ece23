#pragma once

// Shared machinery for the exhaustive solvers: budgets measured in elementary
// column-cost evaluations, saturating counting, and a strided worker pool
// whose results are merged by a caller-supplied strict ordering.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "binlr/errors.hpp"

namespace binlr {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Worker count; results are identical for every value.
  unsigned threads = 1;
};

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t sat_binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t sat_factorial(std::uint64_t n);

/// Throws BudgetExceeded when `required` > options.budget.
void require_budget(const std::string& what, std::uint64_t required, const SearchOptions& options);

/// Runs work(worker, workers) on `threads` workers and keeps the least result
/// under `less`. Each worker owns the candidates whose enumeration index is
/// congruent to its id, so the merged minimum does not depend on the count.
template <class Result, class Work, class Less>
std::optional<Result> run_partitioned(unsigned threads, Work work, Less less) {
  const unsigned workers = threads == 0 ? 1U : threads;
  std::vector<std::optional<Result>> partial(workers);
  if (workers == 1) {
    partial[0] = work(0U, 1U);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { partial[w] = work(w, workers); });
    for (auto& t : pool) t.join();
  }
  std::optional<Result> best;
  for (auto& p : partial) {
    if (!p) continue;
    if (!best || less(*p, *best)) best = std::move(p);
  }
  return best;
}

}  // namespace binlr
