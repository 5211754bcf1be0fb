// Times the serial reference path against the OpenMP region map for the two
// parallel kernels: verifier region processing and the solver sweep.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uecsp/sweep.hpp"
#include "uecsp/verifier.hpp"

using namespace uecsp;

namespace {

template <typename F>
double time_s(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main() {
  int hw = 1;
#ifdef _OPENMP
  hw = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n\n", hw);

  {
    VerifyConfig cfg;
    double margin_serial = 0, margin_par = 0;
    cfg.jobs = 1;
    double ts = time_s([&] { margin_serial = verify_interior(cfg).min_margin; });
    cfg.jobs = hw;
    double tp = time_s([&] { margin_par = verify_interior(cfg).min_margin; });
    std::printf("verify interior, full density range\n");
    std::printf("  serial    %8.3f s  margin %.6e\n", ts, margin_serial);
    std::printf("  %2d jobs   %8.3f s  margin %.6e  speedup %.2fx\n\n", hw,
                tp, margin_par, ts / tp);
  }

  {
    VerifyConfig cfg;
    double margin_serial = 0, margin_par = 0;
    cfg.jobs = 1;
    double ts = time_s([&] { margin_serial = verify_boundary_case(24, cfg).min_margin; });
    cfg.jobs = hw;
    double tp = time_s([&] { margin_par = verify_boundary_case(24, cfg).min_margin; });
    std::printf("verify boundary case 24, full density range\n");
    std::printf("  serial    %8.3f s  margin %.6e\n", ts, margin_serial);
    std::printf("  %2d jobs   %8.3f s  margin %.6e  speedup %.2fx\n\n", hw,
                tp, margin_par, ts / tp);
  }

  {
    SweepConfig cfg;
    cfg.n = 60;
    cfg.c_grid = {0.8, 0.9, 1.0};
    cfg.trials = 150;
    cfg.seed = 11;
    double sat_serial = 0, sat_par = 0;
    cfg.jobs = 1;
    double ts = time_s([&] { sat_serial = sweep(cfg)[0].sat; });
    cfg.jobs = hw;
    double tp = time_s([&] { sat_par = sweep(cfg)[0].sat; });
    std::printf("sweep n=60, 150 trials x 3 densities\n");
    std::printf("  serial    %8.3f s  sat %g\n", ts, sat_serial);
    std::printf("  %2d jobs   %8.3f s  sat %g  speedup %.2fx\n", hw, tp,
                sat_par, ts / tp);
  }
  return 0;
}
