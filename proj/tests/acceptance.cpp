// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Seeds and sizes are pinned; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "binlr/css_gf2.hpp"
#include "binlr/instances.hpp"
#include "binlr/oracle.hpp"
#include "binlr/verify.hpp"

using namespace binlr;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string summary(const verify::Report& r, const std::vector<std::string>& groups) {
  std::string s;
  for (const auto& g : groups) {
    if (!s.empty()) s += ", ";
    s += g + " " + std::to_string(r.count(g) - r.violations(g)) + "/" + std::to_string(r.count(g));
  }
  for (const auto& t : r.trials)
    if (!t.pass) return s + "; first violation: " + t.group + " " + t.label + " " + t.detail;
  return s;
}

Outcome from_report(const verify::Report& r, const std::vector<std::string>& groups,
                    std::size_t expected_trials) {
  const bool complete = r.count() == expected_trials;
  return {r.pass() && complete,
          summary(r, groups) + (complete ? "" : " (unexpected trial count)")};
}

Outcome criterion1() {
  verify::Thm1Params p;
  p.trials = 300;
  p.dmax = 7;
  p.nmax = 9;
  p.kset = {1, 2};
  p.seed = 1;
  return from_report(verify::thm1(p), {"bound"}, 300);
}

Outcome criterion2() {
  std::string detail;
  bool ok = true;
  for (std::size_t n : {6U, 8U}) {
    const auto inst = lower_bound_instance(1, n);
    const auto css = css_exhaustive(inst.a, 1).error;
    const auto opt = opt_gf2(inst.a, 1).error;
    const bool exact = css == 2 * n - 2 && css == expected_css_error_lb(1, n);
    // css / opt >= 2 - 2/n, cross-multiplied: css * n >= (2n - 2) * opt.
    const bool ratio = opt > 0 && css * n >= (2 * n - 2) * opt;
    ok = ok && exact && ratio;
    detail += "k=1 n=" + std::to_string(n) + ": css=" + std::to_string(css) + " opt=" +
              std::to_string(opt) + " ratio=" + to_string(Rational(css, opt)) + " >= " +
              to_string(Rational(2 * n - 2, n)) + "; ";
  }
  const auto inst = lower_bound_instance(2, 18);
  const auto witness = hamming_dist(inst.a, gf2_mul(inst.l, inst.r));
  const auto css = css_exhaustive(inst.a, 2).error;
  const bool in_range = css >= 36 && css <= 38;
  // css / OPT >= css / witness >= 2 with OPT <= witness = 18.
  const bool ratio = witness == 18 && css >= 2 * witness;
  ok = ok && in_range && ratio;
  detail += "k=2 n=18: css=" + std::to_string(css) + " in [36,38], hamming(A,LR)=" +
            std::to_string(witness);
  return {ok, detail};
}

Outcome criterion3() {
  verify::Thm3Params p;
  p.trials = 100;
  p.dmax = 7;
  p.nmax = 8;
  p.k = 2;
  return from_report(verify::thm3(p), {"bound"}, 100);
}

verify::Report thm4_report;

Outcome criterion4() {
  verify::Thm4Params p;
  p.trials = 200;
  p.dmax = 6;
  p.nmax = 7;
  p.kset = {1, 2};
  p.check_structure = true;
  thm4_report = verify::thm4(p);
  const bool ok = thm4_report.count("bound") == 200 && thm4_report.violations("bound") == 0;
  return {ok, summary(thm4_report, {"bound"})};
}

Outcome criterion5() {
  verify::ExactRankParams p;
  p.trials = 100;
  p.kmax = 2;
  return from_report(verify::exact_rank(p), {"gf2", "boolean"}, 200);
}

Outcome criterion6() {
  verify::NegIdParams p;
  p.kset = {2, 4};
  const auto r = verify::negated_identity(p);
  // Both factorizations plus rank checks: opt_bool(A_2, 1) > 0 and opt_bool(A_4, 3) > 0.
  return from_report(r, {"factorization", "rank"}, 4);
}

Outcome criterion7() {
  verify::HardnessParams p;
  p.block_trials = 50;
  p.block_ns = {2, 3};
  p.block_ms = {2, 4};
  p.block_max_mn = 12;
  p.lindsey_ms = {1, 2, 4, 8};
  p.gap_trials = 20;
  p.gap_n = 2;
  p.gap_ms = {2, 4};
  p.identity_trials = 1000;
  return from_report(verify::hardness_lemmas(p), {"block", "lindsey", "tilde-gap", "rank1-identity"},
                     50 + 4 + 20 + 1000);
}

Outcome criterion8() {
  verify::Rank1Params p;
  p.trials = 300;
  p.dmax = 12;
  p.nmax = 12;
  p.equivalence_trials = 100;
  return from_report(verify::rank1_2approx(p), {"2-approx", "equivalence"}, 400);
}

Outcome criterion9() {
  verify::StructuralParams p;
  p.cases = 500;
  p.coefficient_kmax = 3;
  const auto r = verify::structural(p);
  const bool structure_ok =
      thm4_report.count("structure") == 200 && thm4_report.violations("structure") == 0;
  auto out = from_report(r,
                         {"gf2-associativity", "bool-associativity", "bool-monotone", "metric", "rank",
                          "linearity", "coefficients-gf2", "coefficients-bool"},
                         8 * 500);
  out.detail = "gcss-structure " + summary(thm4_report, {"structure"}) + "; " + out.detail;
  out.pass = out.pass && structure_ok;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "GF(2) CSS ratio bound", 60, criterion1},
      {2, "lower-bound construction exact values", 30, criterion2},
      {3, "induced nearest-neighbour basis", 60, criterion3},
      {4, "Boolean GCSS ratio bound", 300, criterion4},
      {5, "exact-rank recovery", 0, criterion5},
      {6, "negated identity Boolean rank", 5, criterion6},
      {7, "hardness lemmas", 60, criterion7},
      {8, "rank-1 best column 2-approximation", 60, criterion8},
      {9, "structural invariants", 0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::string limit = c.limit_s == 0 ? "" : " (limit " + std::to_string(static_cast<int>(c.limit_s)) + "s)";
    std::printf("[%s] criterion %d: %s: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
