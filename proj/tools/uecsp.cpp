// Command-line front end: instance generation, 2-core peeling, solving,
// threshold tables, second-moment evaluation, the interval-arithmetic
// verifier, and density sweeps.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure, 4 I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "uecsp/core2.hpp"
#include "uecsp/instance.hpp"
#include "uecsp/secondmoment.hpp"
#include "uecsp/solver.hpp"
#include "uecsp/sweep.hpp"
#include "uecsp/threshold.hpp"
#include "uecsp/verifier.hpp"

using namespace uecsp;

namespace {

int cmd_gen(int n, int m, double p, bool use_p, int d, uint64_t seed,
            const std::string& out) {
  Instance inst = use_p ? gen_unp(n, p, d, seed) : gen_unm(n, m, d, seed);
  if (out.empty())
    std::fputs(serialize(inst).c_str(), stdout);
  else
    save_instance(inst, out);
  return 0;
}

int cmd_core(const std::string& in, const std::string& out,
             const std::string& trace_path) {
  Instance inst = load_instance(in);
  PeelTrace trace = strip_2core(inst);
  if (out.empty())
    std::fputs(serialize(trace.core).c_str(), stdout);
  else
    save_instance(trace.core, out);
  if (!trace_path.empty()) {
    std::ofstream tf(trace_path);
    if (!tf) throw parse_error("cannot open " + trace_path + " for writing");
    for (const PeelStep& s : trace.order) {
      tf << "d " << s.var;
      if (s.clause_idx) tf << ' ' << *s.clause_idx;
      tf << '\n';
    }
  }
  std::fprintf(stderr, "core: %d/%d variables, %d/%d clauses\n",
               trace.core.n, inst.n, trace.core.m(), inst.m());
  return 0;
}

int cmd_solve(const std::string& in, long long budget, uint64_t seed) {
  Instance inst = load_instance(in);
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep = solve(inst, budget);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  const char* status = rep.status == SolveStatus::SAT
                           ? "SAT"
                           : (rep.status == SolveStatus::UNSAT ? "UNSAT"
                                                               : "UNKNOWN");
  std::printf(
      "{\"status\":\"%s\",\"decisions\":%lld,\"propagations\":%lld,"
      "\"seed\":%llu,\"wall_s\":%.6f}\n",
      status, rep.decisions, rep.propagations,
      static_cast<unsigned long long>(seed), secs);
  return 0;
}

int cmd_threshold(double grid_lo, double grid_hi, int grid_points) {
  double cs = c_star();
  std::printf("c_star %.9f\n", cs);
  std::printf("d_star %.9f\n", 6.0 * cs);
  std::printf("core_emptiness_threshold %.9f\n", core_emptiness_threshold());
  std::printf("c,x,gamma,v_frac,e_frac\n");
  for (int i = 0; i < grid_points; ++i) {
    double c = grid_lo + (grid_hi - grid_lo) * i / (grid_points - 1);
    auto x = largest_root_x(c);
    if (!x) {
      std::printf("%.6f,,,,\n", c);
      continue;
    }
    CoreLaw law = core_prediction(c);
    std::printf("%.6f,%.9f,%.9f,%.9f,%.9f\n", law.c, law.x, law.gamma,
                law.v_frac, law.e_frac);
  }
  return 0;
}

int cmd_moment(double c, double alpha, double r, double t, bool scan,
               int scan_points) {
  if (scan) {
    std::printf("alpha,r,t,f\n");
    for (int ia_ = 1; ia_ < scan_points; ++ia_) {
      double a = static_cast<double>(ia_) / scan_points;
      double rlo = 2 * a / (3 * c), rhi = 1 - 2 * (1 - a) / (3 * c);
      if (rlo >= rhi) continue;
      for (int ir = 1; ir < scan_points; ++ir) {
        double rr = rlo + (rhi - rlo) * ir / scan_points;
        double tlo = std::max(0.0, (3 * rr - 1) / 2), thi = rr;
        for (int it = 1; it < scan_points; ++it) {
          double tt = tlo + (thi - tlo) * it / scan_points;
          TriplePoint p{a, rr, tt};
          std::printf("%.6f,%.6f,%.6f,%.12f\n", a, rr, tt, f_eval(c, p));
        }
      }
    }
    return 0;
  }
  TriplePoint p{alpha, r, t};
  std::printf("f %.15g\n", f_eval(c, p));
  if (strictly_feasible(c, p)) {
    auto g = grad_f(c, p);
    auto res = stationary_residuals(c, p);
    std::printf("grad %.6e %.6e %.6e\n", g[0], g[1], g[2]);
    std::printf("stationary_residuals %.6e %.6e %.6e\n", res[0], res[1],
                res[2]);
  }
  HessianData h = hessian_at_max(c);
  std::printf("K %.15g\nD %.15g\n", h.K, h.D);
  std::printf("minors %.15g %.15g %.15g\n", h.minors[0], h.minors[1],
              h.minors[2]);
  return 0;
}

void print_report(const VerificationReport& rep) {
  std::printf("%-9s %s  margin=%.3e  bounded=%lld excluded=%lld "
              "infeasible=%lld out_of_range=%lld%s%s\n",
              rep.name.c_str(), rep.certified ? "CERTIFIED" : "FAILED",
              rep.min_margin, rep.bounded, rep.excluded, rep.infeasible,
              rep.out_of_range, rep.failure.empty() ? "" : "  ",
              rep.failure.c_str());
}

int cmd_verify(const std::string& what, double c_lo, double c_hi,
               int max_depth, int jobs, const std::string& cert,
               const std::string& replay) {
  if (!replay.empty()) {
    std::string err;
    if (replay_certificate(replay, err)) {
      std::printf("replay OK\n");
      return 0;
    }
    std::fprintf(stderr, "replay failed: %s\n", err.c_str());
    return 3;
  }
  VerifyConfig cfg;
  cfg.c_lo = c_lo;
  cfg.c_hi = c_hi;
  cfg.max_depth = max_depth;
  cfg.jobs = jobs;
  cfg.certificate_path = cert;
  bool ok = true;
  if (what == "all") {
    AggregateReport agg = verify_all(cfg);
    for (const auto& rep : agg.parts) print_report(rep);
    std::printf("aggregate %s min_margin=%.3e\n",
                agg.certified ? "CERTIFIED" : "FAILED", agg.min_margin);
    ok = agg.certified;
  } else if (what == "interior") {
    if (!cert.empty()) std::ofstream(cert, std::ios::trunc);
    VerificationReport rep = verify_interior(cfg);
    print_report(rep);
    ok = rep.certified;
  } else {
    int id = std::stoi(what);
    if (!cert.empty()) std::ofstream(cert, std::ios::trunc);
    VerificationReport rep = verify_boundary_case(id, cfg);
    print_report(rep);
    ok = rep.certified;
  }
  return ok ? 0 : 3;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out) {
  std::vector<SweepRow> rows = sweep(cfg);
  std::string csv = sweep_csv(rows);
  if (out.empty())
    std::fputs(csv.c_str(), stdout);
  else {
    std::ofstream f(out);
    if (!f) throw parse_error("cannot open " + out + " for writing");
    f << csv;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"random (3,d)-UE-CSP toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int n = 100, m = 90, d = 4;
  double p = -1;
  uint64_t seed = 1;
  std::string out, in, trace_path, cert, replay;
  gen->add_option("-n", n, "variables");
  gen->add_option("-m", m, "clauses (U_{n,m} model)");
  gen->add_option("-p", p, "clause probability (U_{n,p} model)");
  gen->add_option("-d", d, "domain size");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("-o,--out", out, "output file (default stdout)");

  // core
  auto* core = app.add_subcommand("core", "strip to the 2-core");
  core->add_option("input", in, "instance file")->required();
  core->add_option("-o,--out", out, "core instance file (default stdout)");
  core->add_option("--trace", trace_path, "peel trace sidecar file");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "decide satisfiability");
  long long budget = 10'000'000;
  solve_cmd->add_option("input", in, "instance file")->required();
  solve_cmd->add_option("--budget", budget, "max decisions");
  solve_cmd->add_option("--seed", seed, "seed recorded in the report");

  // threshold
  auto* thr = app.add_subcommand("threshold", "threshold constants and table");
  double grid_lo = 0.82, grid_hi = 1.2;
  int grid_points = 20;
  thr->add_option("--lo", grid_lo, "grid start");
  thr->add_option("--hi", grid_hi, "grid end");
  thr->add_option("--points", grid_points, "grid points");

  // moment
  auto* mom = app.add_subcommand("moment", "second-moment function suite");
  double c = 0.9, alpha = 0.25, r = 0.25, t = 0.0625;
  bool scan = false;
  int scan_points = 20;
  mom->add_option("-c", c, "clause density");
  mom->add_option("--alpha", alpha, "alpha");
  mom->add_option("-r", r, "r");
  mom->add_option("-t", t, "t");
  mom->add_flag("--scan", scan, "dump a CSV grid of f");
  mom->add_option("--scan-points", scan_points, "grid resolution");

  // verify
  auto* ver = app.add_subcommand("verify", "interval-arithmetic verifier");
  std::string what = "all";
  double c_lo = 0.67, c_hi = 1.0 - std::ldexp(1.0, -20);
  int max_depth = 96, jobs = 1;
  ver->add_option("--case", what, "interior | all | case id 1..28");
  ver->add_option("--c-range", [&c_lo, &c_hi](CLI::results_t res) {
        c_lo = std::stod(res.at(0));
        c_hi = std::stod(res.at(1));
        return true;
      },
      "density range lo hi")->expected(2);
  ver->add_option("--max-depth", max_depth, "bisection depth cap");
  ver->add_option("--jobs", jobs, "worker threads");
  ver->add_option("--certificate", cert, "write a region ledger");
  ver->add_option("--replay", replay, "re-check an existing ledger");

  // sweep
  auto* sw = app.add_subcommand("sweep", "density sweep experiment");
  SweepConfig scfg;
  std::vector<double> grid;
  sw->add_option("-n", scfg.n, "variables");
  sw->add_option("--grid", grid, "densities (ascending)")->expected(-1);
  sw->add_option("--trials", scfg.trials, "trials per density");
  sw->add_option("-d", scfg.d, "domain size");
  sw->add_option("--budget", scfg.budget, "solver decision budget");
  sw->add_option("--seed", scfg.seed, "base seed");
  sw->add_option("--jobs", scfg.jobs, "worker threads");
  sw->add_flag("--no-core", "solve without stripping first");
  sw->add_option("-o,--out", out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, m, p, p >= 0, d, seed, out);
    if (core->parsed()) return cmd_core(in, out, trace_path);
    if (solve_cmd->parsed()) return cmd_solve(in, budget, seed);
    if (thr->parsed()) return cmd_threshold(grid_lo, grid_hi, grid_points);
    if (mom->parsed()) return cmd_moment(c, alpha, r, t, scan, scan_points);
    if (ver->parsed())
      return cmd_verify(what, c_lo, c_hi, max_depth, jobs, cert, replay);
    if (sw->parsed()) {
      scfg.c_grid = grid.empty()
                        ? std::vector<double>{0.75, 0.85, 0.92, 1.0, 1.1}
                        : grid;
      scfg.strip_core_first = sw->count("--no-core") == 0;
      return cmd_sweep(scfg, out);
    }
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const ia::verification_failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
