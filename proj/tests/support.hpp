#pragma once

// Independent reference implementations. They work on plain int grids and
// enumerate everything, so they share no code paths with the library.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "binlr/bitmat.hpp"
#include "binlr/hardness.hpp"
#include "binlr/rng.hpp"

namespace binlr::ref {

using Grid = std::vector<std::vector<int>>;

inline BitMatrix from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] == '1');
  return m;
}

inline Grid to_grid(const BitMatrix& m) {
  Grid g(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m.get(r, c);
  return g;
}

inline BitMatrix from_grid(const Grid& g) {
  BitMatrix m(g.size(), g.front().size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) m.set(r, c, g[r][c] != 0);
  return m;
}

inline Grid naive_mul(const Grid& a, const Grid& b, bool boolean) {
  Grid out(a.size(), std::vector<int>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      int acc = 0;
      for (std::size_t t = 0; t < b.size(); ++t) {
        const int term = a[i][t] * b[t][j];
        acc = boolean ? (acc | term) : (acc ^ term);
      }
      out[i][j] = acc;
    }
  return out;
}

inline std::uint64_t naive_distance(const Grid& a, const Grid& b) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) d += a[i][j] != b[i][j];
  return d;
}

inline Grid grid_from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
  Grid g(rows, std::vector<int>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g[r][c] = (bits >> (r * cols + c)) & 1U;
  return g;
}

/// min over every U in {0,1}^{d x k} and V in {0,1}^{k x n} of |A - UV|.
inline std::uint64_t naive_opt(const BitMatrix& a, std::size_t k, bool boolean) {
  const Grid g = to_grid(a);
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << (d * k)); ++ub) {
    const Grid u = grid_from_bits(d, k, ub);
    for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << (k * n)); ++vb) {
      const auto e = naive_distance(g, naive_mul(u, grid_from_bits(k, n, vb), boolean));
      if (e < best) best = e;
    }
  }
  return best;
}

/// min over every ordered k-tuple of distinct columns and every Q of |A - P Q| over GF(2).
inline std::uint64_t naive_css(const BitMatrix& a, std::size_t k) {
  const Grid g = to_grid(a);
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) distinct = distinct && idx[i] != idx[j];
    if (distinct) {
      Grid p(d, std::vector<int>(k));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < k; ++i) p[r][i] = g[r][idx[i]];
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t col_best = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t q = 0; q < (std::uint64_t{1} << k); ++q) {
          std::uint64_t cost = 0;
          for (std::size_t r = 0; r < d; ++r) {
            int v = 0;
            for (std::size_t i = 0; i < k; ++i) v ^= p[r][i] & static_cast<int>((q >> i) & 1U);
            cost += v != g[r][j];
          }
          if (cost < col_best) col_best = cost;
        }
        total += col_best;
      }
      if (total < best) best = total;
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == k) break;
  }
  return best;
}

/// Sylvester matrix by explicit doubling: H_{2m} = [[H, H], [H, -H]].
inline std::vector<std::vector<int>> recursive_sylvester(std::size_t m) {
  std::vector<std::vector<int>> h{{1}};
  while (h.size() < m) {
    const std::size_t s = h.size();
    std::vector<std::vector<int>> next(2 * s, std::vector<int>(2 * s));
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) {
        next[r][c] = h[r][c];
        next[r][c + s] = h[r][c];
        next[r + s][c] = h[r][c];
        next[r + s][c + s] = -h[r][c];
      }
    h = std::move(next);
  }
  return h;
}

/// max x^T W y over all binary (x, y) pairs.
inline std::int64_t naive_biclique(const SignMatrix& w) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << w.rows()); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << w.cols()); ++y) {
      std::int64_t v = 0;
      for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c)
          if (((x >> r) & 1U) && ((y >> c) & 1U)) v += w.at(r, c);
      if (v > best) best = v;
    }
  return best;
}

/// max x^T W y over all sign vectors.
inline std::int64_t naive_cut(const SignMatrix& w) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << w.rows()); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << w.cols()); ++y) {
      std::int64_t v = 0;
      for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c) {
          const int xs = ((x >> r) & 1U) ? -1 : 1;
          const int ys = ((y >> c) & 1U) ? -1 : 1;
          v += xs * ys * w.at(r, c);
        }
      if (v > best) best = v;
    }
  return best;
}

inline BitMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.coin());
  return m;
}

inline BitVector random_vector(SplitMix64& rng, std::size_t size) {
  BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i, rng.coin());
  return v;
}

inline SignMatrix random_signs(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  SignMatrix w(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) w.set(r, c, static_cast<int>(rng.uniform(0, 2)) - 1);
  return w;
}

}  // namespace binlr::ref
