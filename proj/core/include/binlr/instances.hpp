#pragma once

#include <cstddef>
#include <cstdint>

#include "binlr/bitmat.hpp"
#include "binlr/coefficients.hpp"
#include "binlr/rational.hpp"

namespace binlr {

/// The CSS worst case A = LR + I_n. L (n x k) has k disjoint blocks of p = n/k
/// ones; R (k x n) lists every non-zero k-bit vector b_1..b_{2^k-1}, each
/// repeated q = n/(2^k-1) times, with the most significant bit in row 0.
struct LowerBoundInstance {
  std::size_t k;
  std::size_t n;
  std::size_t p;
  std::size_t q;
  BitMatrix l;
  BitMatrix r;
  BitMatrix a;
};

LowerBoundInstance lower_bound_instance(std::size_t k, std::size_t n);

/// n + q k 2^(k-1) - 2k. Proven to be the CSS error once p > 2k + 3; smaller
/// instances can do better.
std::uint64_t expected_css_error_lb(std::size_t k, std::size_t n);

/// The n x n negated identity, n = 2^(k/2), with its exact Boolean rank-k
/// factorization. Column (i, b) of U sits at index 2i + b.
struct NegIdInstance {
  std::size_t k;
  std::size_t n;
  BitMatrix a;
  BitMatrix u;
  BitMatrix v;
};

NegIdInstance negated_identity(std::size_t k);

struct PlantedInstance {
  BitMatrix a;
  BitMatrix u0;
  BitMatrix v0;
};

/// U0 and V0 are fair coin flips (U0 row-major, then V0 row-major), then
/// every entry of the product is flipped with probability `flip_prob`, in
/// row-major order, all from one SplitMix64 stream seeded with `seed`.
PlantedInstance planted(std::size_t d, std::size_t n, std::size_t k, Semiring semiring,
                        const Rational& flip_prob, std::uint64_t seed);

/// I.i.d. Bernoulli(p) entries in row-major order.
BitMatrix random_bernoulli(std::size_t d, std::size_t n, const Rational& p, std::uint64_t seed);

}  // namespace binlr
