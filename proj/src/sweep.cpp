#include "uecsp/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uecsp {

namespace {

struct TrialResult {
  int status = 0;  // 0 sat, 1 unsat, 2 unknown
  long long decisions = 0;
  double core_vfrac = 0;
};

TrialResult run_trial(const SweepConfig& cfg, double c, uint64_t trial_seed) {
  TrialResult tr;
  int m = static_cast<int>(std::llround(c * cfg.n));
  Instance inst = gen_unm(cfg.n, m, cfg.d, trial_seed);
  SolveReport rep;
  if (cfg.strip_core_first) {
    PeelTrace trace = strip_2core(inst);
    tr.core_vfrac = static_cast<double>(trace.core.n) / cfg.n;
    rep = solve(trace.core, cfg.budget);
    if (rep.status == SolveStatus::SAT) {
      std::vector<int> full = extend_assignment(inst, trace, rep.witness);
      if (!assignment_satisfies(inst, full))
        throw std::logic_error("core extension failed verification");
    }
  } else {
    PeelTrace trace = strip_2core(inst);
    tr.core_vfrac = static_cast<double>(trace.core.n) / cfg.n;
    rep = solve(inst, cfg.budget);
    if (rep.status == SolveStatus::SAT &&
        !assignment_satisfies(inst, rep.witness))
      throw std::logic_error("witness failed verification");
  }
  tr.decisions = rep.decisions;
  tr.status = rep.status == SolveStatus::SAT
                  ? 0
                  : (rep.status == SolveStatus::UNSAT ? 1 : 2);
  return tr;
}

} // namespace

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw invalid_input("sweep needs trials >= 1");
  for (size_t i = 1; i < cfg.c_grid.size(); ++i)
    if (cfg.c_grid[i] < cfg.c_grid[i - 1])
      throw invalid_input("c grid must be sorted ascending");

  std::vector<SweepRow> rows;
  for (size_t gi = 0; gi < cfg.c_grid.size(); ++gi) {
    double c = cfg.c_grid[gi];
    std::vector<TrialResult> results(cfg.trials);
    if (cfg.jobs <= 1) {
      for (int t = 0; t < cfg.trials; ++t)
        results[t] = run_trial(
            cfg, c, derive_seed(cfg.seed, gi * 1000003ull + t));
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
#endif
      for (int t = 0; t < cfg.trials; ++t)
        results[t] = run_trial(
            cfg, c, derive_seed(cfg.seed, gi * 1000003ull + t));
    }
    SweepRow row;
    row.c = c;
    row.n = cfg.n;
    row.trials = cfg.trials;
    double dsum = 0, vsum = 0;
    for (const TrialResult& tr : results) {  // fixed order: reproducible
      row.sat += tr.status == 0;
      row.unsat += tr.status == 1;
      row.unknown += tr.status == 2;
      dsum += static_cast<double>(tr.decisions);
      vsum += tr.core_vfrac;
    }
    row.mean_decisions = dsum / cfg.trials;
    row.mean_core_vfrac = vsum / cfg.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "c,n,trials,sat,unsat,unknown,mean_decisions,mean_core_vfrac\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%d,%d,%d,%d,%d,%.3f,%.6f\n", r.c,
                  r.n, r.trials, r.sat, r.unsat, r.unknown, r.mean_decisions,
                  r.mean_core_vfrac);
    out += buf;
  }
  return out;
}

} // namespace uecsp
