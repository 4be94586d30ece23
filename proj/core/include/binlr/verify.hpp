#pragma once

// Seeded, exact-arithmetic verification runs for each approximation and
// hardness statement. Each run produces one line per trial; a run passes when
// no trial is violated. The CLI `verify` subcommand and the acceptance suite
// both drive these.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "binlr/search.hpp"

namespace binlr::verify {

struct Trial {
  std::string group;  // which property the trial exercises
  std::string label;  // reproducible instance description
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<Trial> trials;

  std::size_t count(const std::string& group = {}) const;
  std::size_t violations(const std::string& group = {}) const;
  bool pass() const { return violations() == 0; }
};

struct Thm1Params {
  std::size_t trials = 300;
  std::size_t dmax = 7;
  std::size_t nmax = 9;
  std::vector<std::size_t> kset{1, 2};
  std::uint64_t seed = 0;
  SearchOptions search;
};
/// CSS error <= ratio_bound(k) * OPT_gf2 on random Bernoulli instances.
Report thm1(const Thm1Params& p);

struct Thm2Params {
  std::size_t k = 1;
  std::size_t n = 6;
  SearchOptions search;
};
/// Exact CSS behaviour on the A = LR + I_n construction.
Report thm2_instance(const Thm2Params& p);

struct Thm3Params {
  std::size_t trials = 100;
  std::size_t dmax = 7;
  std::size_t nmax = 8;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  SearchOptions search;
};
/// Some invertible B makes the induced nearest-neighbour basis (1 + lambda_k)-optimal.
Report thm3(const Thm3Params& p);

struct Thm4Params {
  std::size_t trials = 200;
  std::size_t dmax = 6;
  std::size_t nmax = 7;
  std::vector<std::size_t> kset{1, 2};
  std::uint64_t seed = 0;
  /// Also check the E-monotonicity and reconstruction identities on every
  /// candidate the search builds (group "structure").
  bool check_structure = true;
  SearchOptions search;
};
/// GCSS error <= 2^k * OPT_bool.
Report thm4(const Thm4Params& p);

struct ExactRankParams {
  std::size_t trials = 100;  // per semiring
  std::size_t dmax = 6;
  std::size_t nmax = 7;
  std::size_t kmax = 2;
  std::uint64_t seed = 0;
  SearchOptions search;
};
/// Noiseless planted instances are recovered exactly by CSS (GF(2)) and GCSS (Boolean).
Report exact_rank(const ExactRankParams& p);

struct NegIdParams {
  std::vector<std::size_t> kset{2, 4};
};
/// The negated identity factorizes exactly with Boolean rank k.
Report negated_identity(const NegIdParams& p);

struct HardnessParams {
  std::size_t block_trials = 50;
  std::vector<std::size_t> block_ns{2, 3};
  std::vector<std::size_t> block_ms{2, 4};
  std::size_t block_max_mn = 12;
  std::vector<std::size_t> lindsey_ms{1, 2, 4, 8};
  std::size_t gap_trials = 20;
  std::size_t gap_n = 2;
  std::vector<std::size_t> gap_ms{2, 4};
  std::size_t identity_trials = 1000;
  std::size_t identity_max_dim = 8;
  std::uint64_t seed = 0;
};
Report hardness_lemmas(const HardnessParams& p);

struct Rank1Params {
  std::size_t trials = 300;
  std::size_t dmax = 12;
  std::size_t nmax = 12;
  std::size_t equivalence_trials = 100;
  std::uint64_t seed = 0;
};
/// Best-column rank-1 is a 2-approximation, and the GF(2), Boolean and
/// direct rank-1 optima coincide.
Report rank1_2approx(const Rank1Params& p);

struct StructuralParams {
  std::size_t cases = 500;
  std::size_t max_dim = 9;
  std::size_t coefficient_kmax = 3;
  std::uint64_t seed = 0;
};
/// Bitmat algebra (associativity, monotonicity, metric axioms, rank bounds,
/// linearity) and exhaustive coefficient optimality for k <= 3.
Report structural(const StructuralParams& p);

}  // namespace binlr::verify
