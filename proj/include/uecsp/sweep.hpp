#ifndef UECSP_SWEEP_HPP
#define UECSP_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uecsp/core2.hpp"
#include "uecsp/solver.hpp"

namespace uecsp {

struct SweepConfig {
  int n = 60;
  std::vector<double> c_grid;  // sorted ascending
  int trials = 100;
  int d = 4;
  long long budget = 10'000'000;
  uint64_t seed = 1;
  bool strip_core_first = true;
  int jobs = 1;
};

struct SweepRow {
  double c = 0;
  int n = 0;
  int trials = 0;
  int sat = 0, unsat = 0, unknown = 0;
  double mean_decisions = 0;
  double mean_core_vfrac = 0;
};

// One row per density; trial-parallel with per-trial derived seeds, and
// bit-identical output regardless of the number of jobs.  Every SAT count
// is backed by a witness verified clause by clause on the full instance.
std::vector<SweepRow> sweep(const SweepConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace uecsp

#endif
