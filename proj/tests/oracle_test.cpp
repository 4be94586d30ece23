#include <gtest/gtest.h>

#include <algorithm>

#include "binlr/css_gf2.hpp"
#include "binlr/errors.hpp"
#include "binlr/gcss_bool.hpp"
#include "binlr/instances.hpp"
#include "binlr/oracle.hpp"
#include "support.hpp"

using namespace binlr;
using binlr::ref::from_rows;
using binlr::ref::random_matrix;

TEST(OptGf2, Examples) {
  EXPECT_EQ(opt_gf2(BitMatrix::identity(3), 1).error, 2U);
  const auto z = opt_gf2(BitMatrix(3, 4), 2);
  EXPECT_EQ(z.error, 0U);
  EXPECT_EQ(z.u, BitMatrix(3, 2));
  EXPECT_EQ(z.v, BitMatrix(2, 4));
  SplitMix64 rng(137);
  const auto u = random_matrix(rng, 5, 2);
  const auto v = random_matrix(rng, 2, 6);
  EXPECT_EQ(opt_gf2(gf2_mul(u, v), 2).error, 0U);
}

TEST(OptBool, Examples) {
  EXPECT_EQ(opt_bool(negated_identity(2).a, 2).error, 0U);
  EXPECT_EQ(opt_bool(BitMatrix::identity(2), 1).error, 1U);
  SplitMix64 rng(139);
  const auto u = random_matrix(rng, 4, 2);
  const auto v = random_matrix(rng, 2, 5);
  EXPECT_EQ(opt_bool(bool_mul(u, v), 2).error, 0U);
}

TEST(Oracle, MatchesFullTupleEnumeration) {
  // The reference enumerates all 2^{dk} U and 2^{kn} V, so it also checks that
  // restricting U to sorted multisets loses nothing.
  SplitMix64 rng(149);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(1, 3), rng.uniform(1, 3));
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto g = opt_gf2(a, k);
      const auto b = opt_bool(a, k);
      EXPECT_EQ(g.error, ref::naive_opt(a, k, false));
      EXPECT_EQ(b.error, ref::naive_opt(a, k, true));
      EXPECT_EQ(g.error, hamming_dist(a, gf2_mul(g.u, g.v)));
      EXPECT_EQ(b.error, hamming_dist(a, bool_mul(b.u, b.v)));
      EXPECT_EQ(g.semiring, Semiring::gf2);
      EXPECT_EQ(b.semiring, Semiring::boolean);
    }
  }
}

TEST(Oracle, ZeroErrorIffRankAtMostK) {
  SplitMix64 rng(151);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 6));
    for (std::size_t k = 1; k <= 3; ++k)
      EXPECT_EQ(opt_gf2(a, k).error == 0, gf2_rank(a) <= k);
  }
}

TEST(Oracle, MonotoneInKAndDominatedBySolvers) {
  SplitMix64 rng(157);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(2, 5), rng.uniform(2, 6));
    std::uint64_t prev_g = a.popcount();
    std::uint64_t prev_b = a.popcount();
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto g = opt_gf2(a, k).error;
      const auto b = opt_bool(a, k).error;
      EXPECT_LE(g, prev_g);
      EXPECT_LE(b, prev_b);
      prev_g = g;
      prev_b = b;
      if (k <= a.cols()) {
        EXPECT_GE(css_exhaustive(a, k).error, g);
      }
      EXPECT_GE(gcss_exhaustive(a, k).error, b);
    }
  }
}

TEST(Oracle, ThreadIndependent) {
  SplitMix64 rng(163);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_matrix(rng, 4, 5);
    for (auto s : {Semiring::gf2, Semiring::boolean}) {
      const auto ref = opt_factorization(s, a, 2);
      for (unsigned t : {2U, 3U}) {
        const auto par = opt_factorization(s, a, 2, {kDefaultBudget, t});
        EXPECT_EQ(par.error, ref.error);
        EXPECT_EQ(par.u, ref.u);
        EXPECT_EQ(par.v, ref.v);
      }
    }
  }
}

TEST(Oracle, BudgetRefusal) {
  SplitMix64 rng(167);
  const auto a = random_matrix(rng, 6, 6);
  // C(64 + 1, 2) * 4 * 6
  EXPECT_EQ(opt_search_space(6, 6, 2), 2080U * 4U * 6U);
  EXPECT_THROW(opt_gf2(a, 2, {opt_search_space(6, 6, 2) - 1, 1}), BudgetExceeded);
  EXPECT_EQ(opt_search_space(64, 10, 2), kSaturated);
  EXPECT_THROW(opt_gf2(a, 0), DimensionError);
}

TEST(Rank1, Examples) {
  EXPECT_EQ(opt_rank1(BitMatrix::ones(3, 3)).error, 0U);
  const auto j = opt_rank1(BitMatrix::ones(3, 3));
  EXPECT_EQ(j.u, BitMatrix::ones(3, 1));
  EXPECT_EQ(j.v, BitMatrix::ones(1, 3));
  EXPECT_EQ(opt_rank1(BitMatrix::identity(3)).error, 2U);
  EXPECT_EQ(opt_rank1(BitMatrix(4, 4)).error, 0U);

  const auto c = rank1_best_column(BitMatrix::identity(3));
  EXPECT_EQ(c.error, 2U);
  EXPECT_EQ(c.column, 0U);
  EXPECT_EQ(rank1_best_column(BitMatrix::ones(2, 2)).error, 0U);
}

TEST(Rank1, TieGoesToVZero) {
  // Column 1 equals u in one place and differs in one: |a ^ u| = |a|, so v = 0.
  const auto a = from_rows({"11", "10"});
  const auto f = opt_rank1(a);
  EXPECT_EQ(f.error, hamming_dist(a, gf2_mul(f.u, f.v)));
  const auto c = rank1_best_column(from_rows({"10", "01"}));
  EXPECT_EQ(c.column, 0U);
  EXPECT_EQ(c.v.to_string(), "10");
}

TEST(Rank1, ModelsCoincideAndBestColumnIsTwoApprox) {
  SplitMix64 rng(173);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(1, 6), rng.uniform(1, 8));
    const auto r1 = opt_rank1(a).error;
    EXPECT_EQ(r1, opt_gf2(a, 1).error);
    EXPECT_EQ(r1, opt_bool(a, 1).error);
    const auto col = rank1_best_column(a).error;
    EXPECT_GE(col, r1);
    EXPECT_LE(col, 2 * r1);
  }
}

TEST(Rank1, RefusesTallInputs) {
  EXPECT_THROW(opt_rank1(BitMatrix(kMaxRank1Rows + 1, 2)), BudgetExceeded);
}
