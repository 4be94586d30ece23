#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "binlr/bitmat.hpp"
#include "binlr/css_gf2.hpp"
#include "binlr/errors.hpp"
#include "binlr/gcss_bool.hpp"
#include "binlr/hardness.hpp"
#include "binlr/instances.hpp"
#include "binlr/oracle.hpp"
#include "binlr/rng.hpp"
#include "binlr/verify.hpp"

namespace binlr::cli {

using Json = nlohmann::ordered_json;

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char ch = 0;
  while (in.get(ch)) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return fmt::format("fnv1a64:{:016x}", hash);
}

namespace {

struct Common {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  SearchOptions search() const { return {budget, threads}; }
};

Json rows_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
  return rows;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "binlr";
  for (const auto& a : args) s += " " + a;
  return s;
}

// Companion path: "out.bmx" + "U" -> "out.U.bmx".
std::string companion(const std::string& out, const std::string& tag, const std::string& ext) {
  std::filesystem::path p(out);
  std::filesystem::path stem = p.parent_path() / p.stem();
  return stem.string() + "." + tag + ext;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  std::size_t k = 1;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 2;
  std::string flip = "0";
  std::string density = "1/2";
  std::string semiring = "gf2";
  std::uint64_t seed = 0;
  std::string out;
  std::string in;
  bool export_lr = false;
};

Json cmd_gen(const GenArgs& g) {
  Json files = Json::array();
  auto write_bmx = [&](const std::string& path, const BitMatrix& m) {
    save_bmx(path, m);
    files.push_back({{"path", path}, {"rows", m.rows()}, {"cols", m.cols()}, {"digest", file_digest(path)}});
  };
  auto write_smx = [&](const std::string& path, const SignMatrix& w) {
    save_smx(path, w);
    files.push_back({{"path", path}, {"rows", w.rows()}, {"cols", w.cols()}, {"digest", file_digest(path)}});
  };
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };

  Json params;
  if (g.kind == "lowerbound") {
    const auto inst = lower_bound_instance(g.k, g.n);
    write_bmx(g.out, inst.a);
    if (g.export_lr) {
      write_bmx(companion(g.out, "L", ".bmx"), inst.l);
      write_bmx(companion(g.out, "R", ".bmx"), inst.r);
    }
    params = {{"k", g.k}, {"n", g.n}, {"p", inst.p}, {"q", inst.q},
              {"expected_css_error", expected_css_error_lb(g.k, g.n)}};
  } else if (g.kind == "negid") {
    const auto inst = negated_identity(g.k);
    write_bmx(g.out, inst.a);
    write_bmx(companion(g.out, "U", ".bmx"), inst.u);
    write_bmx(companion(g.out, "V", ".bmx"), inst.v);
    params = {{"k", g.k}, {"n", inst.n}};
  } else if (g.kind == "planted") {
    need(g.d > 0 && g.n > 0, "planted needs --d and --n");
    need(g.semiring == "gf2" || g.semiring == "boolean", "--semiring must be gf2 or boolean");
    const Semiring s = g.semiring == "gf2" ? Semiring::gf2 : Semiring::boolean;
    const auto inst = planted(g.d, g.n, g.k, s, parse_rational(g.flip), g.seed);
    write_bmx(g.out, inst.a);
    write_bmx(companion(g.out, "U", ".bmx"), inst.u0);
    write_bmx(companion(g.out, "V", ".bmx"), inst.v0);
    params = {{"d", g.d}, {"n", g.n}, {"k", g.k}, {"semiring", g.semiring}, {"flip", g.flip}, {"seed", g.seed}};
  } else if (g.kind == "bernoulli") {
    need(g.d > 0 && g.n > 0, "bernoulli needs --d and --n");
    write_bmx(g.out, random_bernoulli(g.d, g.n, parse_rational(g.density), g.seed));
    params = {{"d", g.d}, {"n", g.n}, {"p", g.density}, {"seed", g.seed}};
  } else if (g.kind == "signs") {
    need(g.n > 0, "signs needs --n");
    SplitMix64 rng(g.seed);
    SignMatrix w(g.n, g.n);
    for (std::size_t r = 0; r < g.n; ++r)
      for (std::size_t c = 0; c < g.n; ++c) w.set(r, c, static_cast<int>(rng.uniform(0, 2)) - 1);
    write_smx(g.out, w);
    params = {{"n", g.n}, {"seed", g.seed}};
  } else if (g.kind == "tilde") {
    need(!g.in.empty(), "tilde needs --in W.smx");
    const auto w = load_smx(g.in);
    const auto tilde = tilde_reduction(w, g.m);
    write_smx(g.out, tilde);
    // (W~ + J) / 2 is the binary matrix whose rank-1 objective is W~'s biclique.
    write_bmx(companion(g.out, "A", ".bmx"), binary_from_sign(tilde));
    params = {{"m", g.m}, {"default_m", default_m(w.rows())}, {"input_digest", file_digest(g.in)}};
  } else {
    throw std::invalid_argument("unknown generator kind '" + g.kind + "'");
  }
  return Json{{"kind", g.kind}, {"params", params}, {"files", files}};
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string solver;
  std::size_t k = 1;
  std::string in;
  bool with_opt = false;
};

Json ratio_json(std::uint64_t error, std::optional<std::uint64_t> opt) {
  if (!opt) return nullptr;
  if (*opt == 0) return error == 0 ? Json("exact") : Json(nullptr);
  return to_string(Rational(static_cast<std::int64_t>(error), static_cast<std::int64_t>(*opt)));
}

Json cmd_solve(const SolveArgs& s, const Common& common, Json& report) {
  const auto options = common.search();
  if (s.solver == "biclique" || s.solver == "maxcut") {
    const auto w = load_smx(s.in);
    report["input_digest"] = file_digest(s.in);
    report["solver"] = s.solver;
    if (s.solver == "biclique") {
      const auto r = max_biclique(w);
      report["value"] = r.value;
      report["witness"] = {{"x", r.x.to_string()}, {"y", r.y.to_string()}};
    } else {
      const auto r = max_bipartite_cut(w);
      report["value"] = r.value;
      report["witness"] = {{"x", r.x}, {"y", r.y}};
    }
    report["budget_consumed"] = std::uint64_t{1} << w.rows();
    return report;
  }

  const BitMatrix a = load_bmx(s.in);
  report["input_digest"] = file_digest(s.in);
  report["solver"] = s.solver;
  report["k"] = s.k;

  std::uint64_t error = 0;
  std::uint64_t consumed = 0;
  Json witness;
  std::optional<Semiring> oracle;
  bool rank1_oracle = false;

  if (s.solver == "css-gf2") {
    consumed = css_search_space(a.cols(), s.k);
    const auto sol = css_exhaustive(a, s.k, options);
    error = sol.error;
    witness = {{"subset", sol.subset}, {"Q", rows_json(sol.q)}};
    oracle = Semiring::gf2;
  } else if (s.solver == "gcss-bool") {
    consumed = gcss_search_space(a.cols(), s.k);
    const auto sol = gcss_exhaustive(a, s.k, {options, {}});
    error = sol.error;
    Json basis = Json::array();
    for (const auto& b : sol.b) basis.push_back(b.to_string());
    witness = {{"selection", sol.selection}, {"order", sol.order}, {"order_rank", sol.order_rank},
               {"B", basis}, {"Q", rows_json(sol.q)}};
    oracle = Semiring::boolean;
  } else if (s.solver == "opt-gf2" || s.solver == "opt-bool") {
    const Semiring sr = s.solver == "opt-gf2" ? Semiring::gf2 : Semiring::boolean;
    consumed = opt_search_space(a.rows(), a.cols(), s.k);
    const auto f = opt_factorization(sr, a, s.k, options);
    error = f.error;
    witness = {{"U", rows_json(f.u)}, {"V", rows_json(f.v)}};
  } else if (s.solver == "rank1-opt") {
    consumed = sat_mul(std::uint64_t{1} << std::min<std::size_t>(a.rows(), 63), a.cols());
    const auto f = opt_rank1(a);
    error = f.error;
    witness = {{"u", f.u.column(0).to_string()}, {"v", f.v.row(0).to_string()}};
  } else if (s.solver == "rank1-col") {
    consumed = a.cols() * a.cols();
    const auto r = rank1_best_column(a);
    error = r.error;
    witness = {{"column", r.column}, {"v", r.v.to_string()}};
    rank1_oracle = true;
  } else {
    throw std::invalid_argument("unknown solver '" + s.solver + "'");
  }

  std::optional<std::uint64_t> opt;
  if (s.with_opt) {
    if (rank1_oracle) {
      opt = opt_rank1(a).error;
    } else if (oracle) {
      consumed = sat_add(consumed, opt_search_space(a.rows(), a.cols(), s.k));
      opt = opt_factorization(*oracle, a, s.k, options).error;
    } else {
      opt = error;  // the solver is itself an oracle
    }
  }
  report["error"] = error;
  report["opt_error"] = opt ? Json(*opt) : Json(nullptr);
  report["ratio_vs_opt"] = ratio_json(error, opt);
  report["witness"] = witness;
  report["budget_consumed"] = consumed;
  return report;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> dmax;
  std::optional<std::size_t> nmax;
  std::vector<std::size_t> kset;
  std::vector<std::size_t> nlist;
  std::vector<std::size_t> mlist;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
};

verify::Report cmd_verify(const VerifyArgs& v, const Common& common) {
  const auto options = common.search();
  auto pick = [](const std::optional<std::size_t>& flag, std::size_t fallback) {
    return flag.value_or(fallback);
  };
  const std::string& t = v.suite;
  if (t == "thm1") {
    verify::Thm1Params p;
    p.trials = pick(v.trials, p.trials);
    p.dmax = pick(v.dmax, p.dmax);
    p.nmax = pick(v.nmax, p.nmax);
    if (!v.kset.empty()) p.kset = v.kset;
    p.seed = v.seed;
    p.search = options;
    return verify::thm1(p);
  }
  if (t == "thm2-instance") {
    verify::Thm2Params p;
    p.k = pick(v.k, p.k);
    if (!v.nlist.empty()) p.n = v.nlist.front();
    p.search = options;
    return verify::thm2_instance(p);
  }
  if (t == "thm3") {
    verify::Thm3Params p;
    p.trials = pick(v.trials, p.trials);
    p.dmax = pick(v.dmax, p.dmax);
    p.nmax = pick(v.nmax, p.nmax);
    p.k = pick(v.k, p.k);
    p.seed = v.seed;
    p.search = options;
    return verify::thm3(p);
  }
  if (t == "thm4") {
    verify::Thm4Params p;
    p.trials = pick(v.trials, p.trials);
    p.dmax = pick(v.dmax, p.dmax);
    p.nmax = pick(v.nmax, p.nmax);
    if (!v.kset.empty()) p.kset = v.kset;
    p.seed = v.seed;
    p.search = options;
    return verify::thm4(p);
  }
  if (t == "hardness-lemmas") {
    verify::HardnessParams p;
    p.block_trials = pick(v.trials, p.block_trials);
    if (!v.nlist.empty()) {
      p.block_ns = v.nlist;
      p.gap_n = v.nlist.front();
    }
    if (!v.mlist.empty()) {
      p.block_ms = v.mlist;
      p.gap_ms = v.mlist;
    }
    p.seed = v.seed;
    return verify::hardness_lemmas(p);
  }
  if (t == "rank1-2approx") {
    verify::Rank1Params p;
    p.trials = pick(v.trials, p.trials);
    p.dmax = pick(v.dmax, p.dmax);
    p.nmax = pick(v.nmax, p.nmax);
    p.seed = v.seed;
    return verify::rank1_2approx(p);
  }
  if (t == "exact-rank") {
    verify::ExactRankParams p;
    p.trials = pick(v.trials, p.trials);
    p.dmax = pick(v.dmax, p.dmax);
    p.nmax = pick(v.nmax, p.nmax);
    p.kmax = pick(v.k, p.kmax);
    p.seed = v.seed;
    p.search = options;
    return verify::exact_rank(p);
  }
  if (t == "negid") {
    verify::NegIdParams p;
    if (!v.kset.empty()) p.kset = v.kset;
    return verify::negated_identity(p);
  }
  if (t == "structural") {
    verify::StructuralParams p;
    p.cases = pick(v.trials, p.cases);
    p.seed = v.seed;
    return verify::structural(p);
  }
  throw std::invalid_argument("unknown verification suite '" + t + "'");
}

Json report_json(const verify::Report& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"group", t.group}, {"label", t.label}, {"pass", t.pass}, {"detail", t.detail}});
  return Json{{"verification", r.name},
              {"pass", r.pass()},
              {"trials_run", r.trials.size()},
              {"violations", r.violations()},
              {"trials", trials}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-rank approximation of binary matrices: column subset selection, oracles, verifiers", "binlr"};
  app.require_subcommand(1);
  Common common;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "lowerbound | negid | planted | bernoulli | signs | tilde")->required();
  gen_cmd->add_option("--k", gen.k, "Rank");
  gen_cmd->add_option("--n", gen.n, "Columns (or order)");
  gen_cmd->add_option("--d", gen.d, "Rows");
  gen_cmd->add_option("--m", gen.m, "Gadget block size (power of 2)");
  gen_cmd->add_option("--flip", gen.flip, "Flip probability for planted, e.g. 1/10");
  gen_cmd->add_option("--p", gen.density, "Density for bernoulli, e.g. 0.3");
  gen_cmd->add_option("--semiring", gen.semiring, "gf2 | boolean");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--in", gen.in, "Input .smx (tilde)");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();
  gen_cmd->add_flag("--export-lr", gen.export_lr, "Also write L and R (lowerbound)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on a .bmx (or .smx) file");
  solve_cmd->add_option("solver", solve.solver,
                        "css-gf2 | gcss-bool | opt-gf2 | opt-bool | rank1-opt | rank1-col | biclique | maxcut")
      ->required();
  solve_cmd->add_option("--k", solve.k, "Rank");
  solve_cmd->add_option("--in", solve.in, "Input matrix")->required();
  solve_cmd->add_flag("--with-opt", solve.with_opt, "Also run the brute-force oracle and report the ratio");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
  verify_cmd
      ->add_option("suite", ver.suite,
                   "thm1 | thm2-instance | thm3 | thm4 | hardness-lemmas | rank1-2approx | "
                   "exact-rank | negid | structural")
      ->required();
  verify_cmd->add_option("--trials", ver.trials);
  verify_cmd->add_option("--dmax", ver.dmax);
  verify_cmd->add_option("--nmax", ver.nmax);
  verify_cmd->add_option("--kset", ver.kset)->delimiter(',');
  verify_cmd->add_option("--n", ver.nlist)->delimiter(',');
  verify_cmd->add_option("--m", ver.mlist)->delimiter(',');
  verify_cmd->add_option("--k", ver.k);
  verify_cmd->add_option("--seed", ver.seed, "PRNG seed (default 0)");

  for (auto* sub : {solve_cmd, verify_cmd, gen_cmd}) {
    sub->add_option("--budget", common.budget, "Maximum elementary column-cost evaluations");
    sub->add_option("--threads", common.threads, "Worker threads; results do not depend on it");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "binlr: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report{{"command", join_command(args)}};
  try {
    if (*gen_cmd) {
      report.update(cmd_gen(gen));
    } else if (*solve_cmd) {
      cmd_solve(solve, common, report);
    } else {
      const auto r = cmd_verify(ver, common);
      report.update(report_json(r));
      report["elapsed_ms"] = elapsed_ms(start);
      out << report.dump(2) << "\n";
      return r.pass() ? kOk : kVerificationFailed;
    }
  } catch (const BudgetExceeded& e) {
    report["error"] = e.what();
    report["budget_required"] = e.required();
    report["budget"] = e.budget();
    out << report.dump(2) << "\n";
    err << "binlr: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const std::exception& e) {
    err << "binlr: " << e.what() << "\n";
    return kInputError;
  }
  report["elapsed_ms"] = elapsed_ms(start);
  out << report.dump(2) << "\n";
  return kOk;
}

}  // namespace binlr::cli
