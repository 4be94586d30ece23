#include "binlr/instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "binlr/errors.hpp"
#include "binlr/rng.hpp"

namespace binlr {

namespace {

void check_lower_bound_params(std::size_t k, std::size_t n) {
  if (k == 0 || k > 20) throw DimensionError("lower_bound_instance: need 1 <= k <= 20");
  const std::size_t nonzero = (std::size_t{1} << k) - 1;
  if (n == 0 || n % k != 0 || n % nonzero != 0)
    throw DimensionError("lower_bound_instance: n must be a positive multiple of k and 2^k-1");
}

void check_probability(const Rational& p) {
  if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("probability outside [0,1]");
}

}  // namespace

LowerBoundInstance lower_bound_instance(std::size_t k, std::size_t n) {
  check_lower_bound_params(k, n);
  const std::size_t nonzero = (std::size_t{1} << k) - 1;
  const std::size_t p = n / k;
  const std::size_t q = n / nonzero;

  BitMatrix l(n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = i * p; r < (i + 1) * p; ++r) l.set(r, i);

  BitMatrix r(k, n);
  for (std::size_t value = 1; value <= nonzero; ++value)
    for (std::size_t rep = 0; rep < q; ++rep) {
      const std::size_t col = (value - 1) * q + rep;
      for (std::size_t row = 0; row < k; ++row)
        if ((value >> (k - 1 - row)) & 1U) r.set(row, col);
    }

  const BitMatrix lr = gf2_mul(l, r);
  BitMatrix a = lr ^ BitMatrix::identity(n);
  if (hamming_dist(a, lr) != n || bool_mul(l, r) != lr)
    throw std::logic_error("lower_bound_instance: construction invariant violated");
  return LowerBoundInstance{k, n, p, q, std::move(l), std::move(r), std::move(a)};
}

std::uint64_t expected_css_error_lb(std::size_t k, std::size_t n) {
  check_lower_bound_params(k, n);
  const std::uint64_t q = n / ((std::size_t{1} << k) - 1);
  return n + q * k * (std::uint64_t{1} << (k - 1)) - 2 * k;
}

NegIdInstance negated_identity(std::size_t k) {
  if (k < 2 || k > 8 || k % 2 != 0) throw DimensionError("negated_identity: k must be even, 2..8");
  const std::size_t half = k / 2;
  const std::size_t n = std::size_t{1} << half;

  BitMatrix a = BitMatrix::ones(n, n) ^ BitMatrix::identity(n);
  BitMatrix u(n, k);
  BitMatrix v(k, n);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t b = 0; b <= 1; ++b) {
      const std::size_t col = 2 * i + b;
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t bit = (x >> i) & 1U;
        if (bit == b) u.set(x, col);
        if (bit != b) v.set(col, x);
      }
    }
  if (bool_mul(u, v) != a) throw std::logic_error("negated_identity: factorization mismatch");
  return NegIdInstance{k, n, std::move(a), std::move(u), std::move(v)};
}

PlantedInstance planted(std::size_t d, std::size_t n, std::size_t k, Semiring semiring,
                        const Rational& flip_prob, std::uint64_t seed) {
  if (k == 0 || k > std::min(d, n)) throw DimensionError("planted: need 1 <= k <= min(d, n)");
  check_probability(flip_prob);
  SplitMix64 rng(seed);
  BitMatrix u0(d, k);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (rng.coin()) u0.set(r, c);
  BitMatrix v0(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.coin()) v0.set(r, c);
  BitMatrix a = mul(semiring, u0, v0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.bernoulli(flip_prob)) a.flip(r, c);
  return PlantedInstance{std::move(a), std::move(u0), std::move(v0)};
}

BitMatrix random_bernoulli(std::size_t d, std::size_t n, const Rational& p, std::uint64_t seed) {
  check_probability(p);
  SplitMix64 rng(seed);
  BitMatrix m(d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.bernoulli(p)) m.set(r, c);
  return m;
}

}  // namespace binlr
