#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "binlr/bitmat.hpp"
#include "binlr/errors.hpp"
#include "binlr/rng.hpp"
#include "support.hpp"

using namespace binlr;
using binlr::ref::from_rows;
using binlr::ref::random_matrix;

TEST(BitMatrix, MakeExamples) {
  const std::vector<int> one{1};
  EXPECT_EQ(BitMatrix::make(1, 1, one).to_string(), "1\n");
  const std::vector<int> neg{0, 1, 1, 0};
  EXPECT_EQ(BitMatrix::make(2, 2, neg), from_rows({"01", "10"}));
  const std::vector<int> e{1, 0, 1, 0, 1, 1};
  const auto m = BitMatrix::make(2, 3, e);
  EXPECT_EQ(m.row(0).to_string(), "101");
  EXPECT_EQ(m.row(1).to_string(), "011");
}

TEST(BitMatrix, RejectsZeroDimensionsAndBadEntries) {
  EXPECT_THROW(BitMatrix(0, 3), DimensionError);
  EXPECT_THROW(BitMatrix(3, 0), DimensionError);
  const std::vector<int> bad{0, 2};
  EXPECT_THROW(BitMatrix::make(1, 2, bad), DimensionError);
  const std::vector<int> short_list{1};
  EXPECT_THROW(BitMatrix::make(1, 2, short_list), DimensionError);
}

TEST(BitMatrix, Gf2MulExamples) {
  const auto i2 = BitMatrix::identity(2);
  const auto b = from_rows({"1011", "0110"});
  EXPECT_EQ(gf2_mul(i2, b), b);
  EXPECT_EQ(gf2_mul(from_rows({"11", "01"}), from_rows({"1", "1"})), from_rows({"0", "1"}));
  EXPECT_EQ(gf2_mul(BitMatrix::ones(2, 2), BitMatrix::ones(2, 2)), BitMatrix(2, 2));
  EXPECT_THROW(gf2_mul(i2, BitMatrix(3, 1)), DimensionError);
}

TEST(BitMatrix, BoolMulExamples) {
  EXPECT_EQ(bool_mul(from_rows({"1", "1"}), from_rows({"11"})), BitMatrix::ones(2, 2));
  EXPECT_EQ(bool_mul(BitMatrix::ones(2, 2), BitMatrix::ones(2, 2)), BitMatrix::ones(2, 2));
  const auto b = from_rows({"10", "11"});
  EXPECT_EQ(bool_mul(BitMatrix::identity(2), b), b);
}

TEST(BitMatrix, HammingExamples) {
  const auto a = from_rows({"101", "010"});
  EXPECT_EQ(hamming_dist(a, a), 0U);
  EXPECT_EQ(hamming_dist(BitMatrix::identity(2), BitMatrix::ones(2, 2)), 2U);
  EXPECT_EQ(hamming_dist(BitMatrix(3, 3), BitMatrix::ones(3, 3)), 9U);
  EXPECT_THROW(hamming_dist(BitMatrix(2, 2), BitMatrix(2, 3)), DimensionError);
}

TEST(BitMatrix, RankExamples) {
  EXPECT_EQ(gf2_rank(BitMatrix::identity(3)), 3U);
  const std::vector<int> e{1, 0, 0, 1, 1, 1};
  EXPECT_EQ(gf2_rank(BitMatrix::make(3, 2, e)), 2U);
  EXPECT_EQ(gf2_rank(BitMatrix(4, 5)), 0U);
  EXPECT_EQ(gf2_rank(BitMatrix::ones(4, 4)), 1U);
}

TEST(BitMatrix, CombineColumnsExamples) {
  const auto p = from_rows({"10", "11"});
  EXPECT_TRUE(gf2_combine_columns(p, BitVector(2)).none());
  EXPECT_EQ(gf2_combine_columns(BitMatrix::identity(2), BitVector::ones(2)).to_string(), "11");
  EXPECT_EQ(gf2_combine_columns(p, BitVector::ones(2)).to_string(), "10");
  EXPECT_TRUE(bool_union_columns(p, BitVector(2)).none());
  EXPECT_EQ(bool_union_columns(BitMatrix::identity(2), BitVector::ones(2)).to_string(), "11");
  EXPECT_EQ(bool_union_columns(p, BitVector::ones(2)).to_string(), "11");
}

TEST(BitMatrix, WideMatricesKeepPaddingZero) {
  SplitMix64 rng(11);
  for (std::size_t cols : {63U, 64U, 65U, 130U}) {
    const auto a = random_matrix(rng, 3, cols);
    EXPECT_TRUE(a.is_canonical());
    EXPECT_TRUE(a.complement().is_canonical());
    EXPECT_TRUE(a.transpose().transpose() == a);
    EXPECT_EQ(a.popcount() + a.complement().popcount(), 3 * cols);
    EXPECT_TRUE(gf2_mul(a.transpose(), a).is_canonical());
    EXPECT_TRUE(bool_mul(a.transpose(), a).is_canonical());
  }
}

TEST(BitMatrix, MultiplicationMatchesNaiveOracle) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = rng.uniform(1, 9);
    const auto k = rng.uniform(1, 70);
    const auto n = rng.uniform(1, 70);
    const auto u = random_matrix(rng, d, k);
    const auto v = random_matrix(rng, k, n);
    const auto gu = ref::to_grid(u);
    const auto gv = ref::to_grid(v);
    EXPECT_EQ(gf2_mul(u, v), ref::from_grid(ref::naive_mul(gu, gv, false)));
    EXPECT_EQ(bool_mul(u, v), ref::from_grid(ref::naive_mul(gu, gv, true)));
  }
}

TEST(BitMatrix, ColumnsRoundTrip) {
  SplitMix64 rng(5);
  const auto a = random_matrix(rng, 7, 9);
  const auto cols = a.columns();
  ASSERT_EQ(cols.size(), 9U);
  EXPECT_EQ(BitMatrix::from_columns(cols), a);
  for (std::size_t c = 0; c < 9; ++c) EXPECT_EQ(cols[c], a.column(c));
  const std::vector<std::size_t> pick{4, 0, 4};
  const auto s = a.select_columns(pick);
  EXPECT_EQ(s.column(0), a.column(4));
  EXPECT_EQ(s.column(1), a.column(0));
  EXPECT_EQ(s.column(2), a.column(4));
}

TEST(BitMatrix, OuterProduct) {
  const auto u = BitVector::from_word(3, 0b101);
  const auto v = BitVector::from_word(2, 0b10);
  EXPECT_EQ(outer(u, v), from_rows({"01", "00", "01"}));
}

// Properties over random shapes.

TEST(BitMatrixProperty, Gf2AndBoolAssociative) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(1, 8), rng.uniform(1, 8));
    const auto b = random_matrix(rng, a.cols(), rng.uniform(1, 8));
    const auto c = random_matrix(rng, b.cols(), rng.uniform(1, 8));
    EXPECT_EQ(gf2_mul(gf2_mul(a, b), c), gf2_mul(a, gf2_mul(b, c)));
    EXPECT_EQ(bool_mul(bool_mul(a, b), c), bool_mul(a, bool_mul(b, c)));
  }
}

TEST(BitMatrixProperty, BoolMulMonotone) {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_matrix(rng, rng.uniform(1, 8), rng.uniform(1, 8));
    const auto b = random_matrix(rng, a.cols(), rng.uniform(1, 8));
    const auto before = bool_mul(a, b);
    a.set(rng.uniform(0, a.rows() - 1), rng.uniform(0, a.cols() - 1));
    const auto after = bool_mul(a, b);
    for (std::size_t r = 0; r < before.rows(); ++r)
      EXPECT_TRUE(before.row(r).is_subset_of(after.row(r)));
  }
}

TEST(BitMatrixProperty, HammingIsAMetric) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = rng.uniform(1, 8);
    const auto n = rng.uniform(1, 80);
    const auto a = random_matrix(rng, d, n);
    const auto b = random_matrix(rng, d, n);
    const auto c = random_matrix(rng, d, n);
    EXPECT_EQ(hamming_dist(a, b), hamming_dist(b, a));
    EXPECT_LE(hamming_dist(a, c), hamming_dist(a, b) + hamming_dist(b, c));
    EXPECT_EQ(hamming_dist(a, b), (a ^ b).popcount());
    EXPECT_EQ(hamming_dist(a, b), ref::naive_distance(ref::to_grid(a), ref::to_grid(b)));
  }
}

TEST(BitMatrixProperty, RankBoundedAndPermutationInvariant) {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = rng.uniform(1, 9);
    const auto n = rng.uniform(1, 9);
    const auto a = random_matrix(rng, d, n);
    const auto rank = gf2_rank(a);
    EXPECT_LE(rank, std::min(d, n));
    EXPECT_EQ(gf2_rank(a.transpose()), rank);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
    EXPECT_EQ(gf2_rank(a.select_columns(perm)), rank);
    std::vector<std::size_t> rperm(d);
    std::iota(rperm.begin(), rperm.end(), 0);
    for (std::size_t i = d; i > 1; --i) std::swap(rperm[i - 1], rperm[rng.uniform(0, i - 1)]);
    EXPECT_EQ(gf2_rank(a.transpose().select_columns(rperm)), rank);
  }
}

TEST(BitMatrixProperty, CombineColumnsIsLinearExhaustively) {
  SplitMix64 rng(31);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto p = random_matrix(rng, 6, k);
    for (std::uint64_t c1 = 0; c1 < (1U << k); ++c1)
      for (std::uint64_t c2 = 0; c2 < (1U << k); ++c2) {
        const auto v1 = BitVector::from_word(k, c1);
        const auto v2 = BitVector::from_word(k, c2);
        EXPECT_EQ(gf2_combine_columns(p, v1 ^ v2),
                  gf2_combine_columns(p, v1) ^ gf2_combine_columns(p, v2));
        EXPECT_EQ(bool_union_columns(p, v1 | v2),
                  bool_union_columns(p, v1) | bool_union_columns(p, v2));
      }
  }
}

// .bmx format.

TEST(Bmx, RoundTrip) {
  SplitMix64 rng(37);
  const auto a = random_matrix(rng, 4, 70);
  EXPECT_EQ(parse_bmx(format_bmx(a)), a);
  EXPECT_EQ(format_bmx(from_rows({"01", "10"})), "2 2\n01\n10\n");
}

TEST(Bmx, StrictParsing) {
  EXPECT_NO_THROW(parse_bmx("1 3\n101\n"));
  for (const char* bad : {"", "1 3\n101", "1 3\n10\n", "1 3\n1011\n", "1 3\n102\n", "1  3\n101\n",
                          " 1 3\n101\n", "1 3 \n101\n", "01 3\n101\n", "1 3\n101 \n", "1 3\n101\n\n",
                          "2 3\n101\n", "0 3\n", "1 0\n\n", "1 3\r\n101\r\n", "a b\n", "1 3\n101\n111\n"}) {
    EXPECT_THROW(parse_bmx(bad), FormatError) << '"' << bad << '"';
  }
}

TEST(Bmx, ReadFromStream) {
  std::istringstream in("2 1\n1\n0\n");
  EXPECT_EQ(read_bmx(in), from_rows({"1", "0"}));
}
