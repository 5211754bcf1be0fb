// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "uecsp/core2.hpp"
#include "uecsp/secondmoment.hpp"
#include "uecsp/solver.hpp"
#include "uecsp/sweep.hpp"
#include "uecsp/threshold.hpp"
#include "uecsp/verifier.hpp"

using namespace uecsp;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id,
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

char sbuf[512];

// ---- criterion 1: threshold constants ----
void c1() {
  double cs = 0, thr = 0;
  double secs = timed([&] {
    cs = c_star();
    thr = core_emptiness_threshold();
  });
  bool ok = std::abs(cs - 0.917935) <= 1e-5 && std::abs(thr - 0.818469) <= 1e-5;
  std::snprintf(sbuf, sizeof sbuf,
                "c*=%.7f (0.917935 +- 1e-5), threshold=%.7f (0.818469 +- "
                "1e-5), %.2fs",
                cs, thr, secs);
  report(1, ok, sbuf);
}

// ---- criterion 2: catalog sizes + golden hash ----
void c2() {
  int q2 = 0, q3 = 0, q4 = 0;
  uint64_t hash = 0;
  double secs = timed([&] {
    q2 = enumerate(2).q();
    q3 = enumerate(3).q();
    q4 = enumerate(4).q();
    hash = enumerate(4).content_hash();
  });
  const uint64_t golden = 0x08e7deec37319925ull;
  bool ok = q2 == 2 && q3 == 12 && q4 == 576 && hash == golden;
  std::snprintf(sbuf, sizeof sbuf,
                "q(2)=%d q(3)=%d q(4)=%d hash=%016llx (golden %016llx), %.2fs",
                q2, q3, q4, static_cast<unsigned long long>(hash),
                static_cast<unsigned long long>(golden), secs);
  report(2, ok, sbuf);
}

// ---- criterion 3: pair-satisfaction fractions ----
void c3() {
  bool ok = true;
  double secs = timed([&] {
    ok = pair_sat_fraction(4, 0b111) == make_rational(1, 4) &&
         pair_sat_fraction(4, 0b110) == make_rational(0, 1) &&
         pair_sat_fraction(4, 0b101) == make_rational(0, 1) &&
         pair_sat_fraction(4, 0b011) == make_rational(0, 1) &&
         pair_sat_fraction(4, 0b100) == make_rational(1, 12) &&
         pair_sat_fraction(4, 0b010) == make_rational(1, 12) &&
         pair_sat_fraction(4, 0b001) == make_rational(1, 12) &&
         pair_sat_fraction(4, 0b000) == make_rational(1, 18);
  });
  std::snprintf(sbuf, sizeof sbuf,
                "exact fractions 1/4, 0, 1/12, 1/18 over all 576, %.2fs",
                secs);
  report(3, ok, sbuf);
}

// ---- criterion 4: critical point ----
void c4() {
  bool ok = true;
  double worst_f = 0, worst_r = 0;
  double secs = timed([&] {
    for (double c : {0.70, 0.80, 0.90, 0.99}) {
      TriplePoint p{0.25, 0.25, 0.0625};
      double gap = std::abs(f_eval(c, p) - 2 * (1 - c) * std::log(4.0));
      worst_f = std::max(worst_f, gap);
      auto res = stationary_residuals(c, p);
      for (double ri : res) worst_r = std::max(worst_r, std::abs(ri));
      auto g = grad_f(c, p);
      for (double gi : g) worst_r = std::max(worst_r, std::abs(gi));
    }
    ok = worst_f <= 1e-10 && worst_r <= 1e-10;
  });
  std::snprintf(sbuf, sizeof sbuf,
                "|f - 2(1-c)ln4| <= %.2e, stationary residuals <= %.2e, %.2fs",
                worst_f, worst_r, secs);
  report(4, ok, sbuf);
}

// ---- criterion 5: Hessian ----
void c5() {
  bool ok = true;
  double worst = 0;
  double secs = timed([&] {
    for (double c : {0.75, 0.9, 0.99}) {
      HessianData h = hessian_at_max(c);
      for (double m : h.minors) ok = ok && m > 0;
      double closed = std::pow(2.0, 15) / 9.0 * c * c * phi_closed(c) *
                      phi_closed(c);
      ok = ok && std::abs(h.D - closed) <= 1e-10 * std::abs(closed);
      ok = ok && std::abs(h.minors[2] - h.D) <= 1e-10 * std::abs(h.D);
      const double step = 1e-4;
      auto f1 = [&](double da, double dr, double dt) {
        return f_eval(c, {0.25 + da, 0.25 + dr, 0.0625 + dt});
      };
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double fd;
          double di[3] = {0, 0, 0}, dj[3] = {0, 0, 0};
          di[i] = step;
          dj[j] = step;
          if (i == j)
            fd = (f1(di[0], di[1], di[2]) - 2 * f1(0, 0, 0) +
                  f1(-di[0], -di[1], -di[2])) /
                 (step * step);
          else
            fd = (f1(di[0] + dj[0], di[1] + dj[1], di[2] + dj[2]) -
                  f1(di[0] - dj[0], di[1] - dj[1], di[2] - dj[2]) -
                  f1(dj[0] - di[0], dj[1] - di[1], dj[2] - di[2]) +
                  f1(-di[0] - dj[0], -di[1] - dj[1], -di[2] - dj[2])) /
                 (4 * step * step);
          double expect = -h.a[i][j];
          double rel = std::abs(expect) < 1e-9
                           ? std::abs(fd)
                           : std::abs(fd - expect) / std::abs(expect);
          worst = std::max(worst, rel);
        }
    }
    ok = ok && worst <= 1e-4;
  });
  std::snprintf(sbuf, sizeof sbuf,
                "FD Hessian = -(a_ij) within %.2e rel (<= 1e-4); D closed "
                "form to 1e-10; minors positive, %.2fs",
                worst, secs);
  report(5, ok, sbuf);
}

// ---- criterion 6: Laplace cancellation ----
void c6() {
  bool ok = true;
  double worst = 0;
  double secs = timed([&] {
    for (double c : {0.75, 0.9, 0.99})
      for (double n : {1e3, 1e4, 1e5})
        worst = std::max(worst, std::abs(second_moment_ratio(c, n) - 1.0));
    ok = worst <= 1e-10;
  });
  std::snprintf(sbuf, sizeof sbuf,
                "second-moment ratio = 1 within %.2e across c and n, %.2fs",
                worst, secs);
  report(6, ok, sbuf);
}

// ---- criterion 7: core law at n = 1e5 ----
void c7() {
  bool ok = true;
  std::string detail;
  double secs = timed([&] {
    const int n = 100000;
    for (double c : {0.85, 0.9179, 1.0}) {
      Instance inst = gen_unm(n, static_cast<int>(std::llround(c * n)), 4,
                              2026);
      PeelTrace tr = strip_2core(inst);
      CoreLaw law = core_prediction(c);
      double vf = static_cast<double>(tr.core.n) / n;
      double ratio = static_cast<double>(tr.core.m()) / tr.core.n;
      ok = ok && std::abs(vf - law.v_frac) <= 0.01;
      ok = ok && std::abs(ratio - law.gamma) <= 0.01;
      if (c == 0.9179) ok = ok && std::abs(ratio - 1.0) <= 0.01;
      char b[96];
      std::snprintf(b, sizeof b, " c=%.4f vfrac %.4f/%.4f m'/n' %.4f/%.4f;",
                    c, vf, law.v_frac, ratio, law.gamma);
      detail += b;
    }
  });
  std::snprintf(sbuf, sizeof sbuf, "core law within 0.01:%s %.1fs",
                detail.c_str(), secs);
  report(7, ok, sbuf);
}

// ---- criterion 8: extension property ----
void c8() {
  int solved = 0, extended = 0;
  double secs = timed([&] {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      Instance inst = gen_unm(50, 45, 4, seed);
      PeelTrace tr = strip_2core(inst);
      SolveReport rep = solve(tr.core, 5'000'000);
      if (rep.status != SolveStatus::SAT) continue;
      ++solved;
      std::vector<int> full = extend_assignment(inst, tr, rep.witness);
      if (assignment_satisfies(inst, full)) ++extended;
    }
  });
  bool ok = solved == extended && solved > 0;
  std::snprintf(sbuf, sizeof sbuf,
                "%d/%d solver-satisfied cores extended to full satisfying "
                "assignments, %.1fs",
                extended, solved, secs);
  report(8, ok, sbuf);
}

// ---- criterion 9: Stirling numbers ----
void c9() {
  bool ok = true;
  double last = 0;
  double secs = timed([&] {
    // exhaustive partition oracle (canonical block order) for i <= 12
    auto oracle = [](int i, int j) {
      std::vector<int> sizes;
      long long count = 0;
      auto rec = [&](auto&& self, int elem, int used) -> void {
        if (elem == i) {
          if (used == j) {
            for (int b = 0; b < used; ++b)
              if (sizes[b] < 2) return;
            ++count;
          }
          return;
        }
        for (int b = 0; b < used; ++b) {
          ++sizes[b];
          self(self, elem + 1, used);
          --sizes[b];
        }
        if (used < j) {
          sizes.push_back(1);
          self(self, elem + 1, used + 1);
          sizes.pop_back();
        }
      };
      rec(rec, 0, 0);
      return count;
    };
    for (int i = 0; i <= 12 && ok; ++i)
      for (int j = 0; j <= i / 2 && ok; ++j)
        ok = stirling_exact(i, j).to_double() ==
             static_cast<double>(oracle(i, j));
    double prev = 1e18;
    for (int i : {21, 42, 63}) {
      int j = i / 3;
      double rel = std::abs(
          std::expm1(stirling_asymptotic_log(i, j) - stirling_exact(i, j).log()));
      ok = ok && rel < prev;
      prev = rel;
      last = rel;
    }
    ok = ok && last <= 0.05;
  });
  std::snprintf(sbuf, sizeof sbuf,
                "exact DP = partition oracle (i <= 12); Gamma/S error "
                "shrinking, %.3f%% at i=63 (<= 5%%), %.1fs",
                last * 100, secs);
  report(9, ok, sbuf);
}

// ---- criterion 10: interior verification ----
void c10() {
  VerificationReport rep;
  VerifyConfig cfg;
  cfg.jobs = 8;
  double secs = timed([&] { rep = verify_interior(cfg); });
  bool ok = rep.certified && rep.min_margin >= 0.005;
  std::snprintf(sbuf, sizeof sbuf,
                "interior %s, min margin %.4f (>= 0.005), %lld regions, "
                "%.0fs",
                rep.certified ? "CERTIFIED" : "FAILED", rep.min_margin,
                rep.bounded + rep.out_of_range, secs);
  report(10, ok, sbuf);
}

// ---- criterion 11: all 28 boundary cases ----
void c11() {
  VerifyConfig cfg;
  cfg.jobs = 8;
  bool ok = true;
  std::string notes;
  double floors[29] = {0};
  floors[1] = 0.25;
  floors[21] = 0.10;
  floors[9] = 0.004;
  double secs = timed([&] {
    for (int id = 1; id <= 28; ++id) {
      VerificationReport rep = verify_boundary_case(id, cfg);
      bool this_ok = rep.certified && rep.min_margin > floors[id];
      if (!this_ok) {
        char b[160];
        std::snprintf(b, sizeof b, " case %d %s margin %.3e (floor %.3f);",
                      id, rep.certified ? "certified" : "FAILED",
                      rep.min_margin, floors[id]);
        notes += b;
      }
      ok = ok && this_ok;
    }
  });
  std::snprintf(sbuf, sizeof sbuf,
                "28 boundary cases%s%s, %.0fs",
                ok ? " all CERTIFIED with spot floors met" : " FAILURES:",
                notes.c_str(), secs);
  report(11, ok, sbuf);
}

// ---- criterion 12: empirical transition ----
void c12() {
  SweepConfig cfg;
  cfg.n = 60;
  cfg.c_grid = {0.75, 0.85, 0.95, 1.05, 1.10};
  cfg.trials = 200;
  cfg.seed = 31;
  cfg.jobs = 8;
  std::vector<SweepRow> rows;
  double secs = timed([&] { rows = sweep(cfg); });
  double first = static_cast<double>(rows.front().sat) / cfg.trials;
  double last = static_cast<double>(rows.back().sat) / cfg.trials;
  bool mono = true;
  for (size_t i = 1; i < rows.size(); ++i) {
    double p0 = static_cast<double>(rows[i - 1].sat) / cfg.trials;
    double p1 = static_cast<double>(rows[i].sat) / cfg.trials;
    double sd = std::sqrt((p0 * (1 - p0) + p1 * (1 - p1)) / cfg.trials);
    if (p1 > p0 + 2 * sd + 1e-12) mono = false;
  }
  bool ok = first >= 0.9 && last <= 0.1 && mono;
  std::snprintf(sbuf, sizeof sbuf,
                "sat fraction %.3f at c=0.75 (>=0.9), %.3f at c=1.10 "
                "(<=0.1), non-increasing within 2 sigma: %s, %.0fs",
                first, last, mono ? "yes" : "no", secs);
  report(12, ok, sbuf);
}

// ---- criterion 13: Lambda consistency ----
void c13() {
  McEstimate whole, cond;
  double secs = timed([&] {
    whole = lambda_mc(200, 190, 100000, 404);
    cond = lambda_mc_conditioned(200, 190, 50, 143, 12, 100000, 405);
  });
  double se = std::sqrt(whole.std_error * whole.std_error +
                        cond.std_error * cond.std_error);
  bool ok = std::abs(whole.value - cond.value) <= 3 * se;
  std::snprintf(sbuf, sizeof sbuf,
                "Lambda %.4f vs conditioned %.4f, |diff| %.4f <= 3 SE %.4f, "
                "%.0fs",
                whole.value, cond.value, std::abs(whole.value - cond.value),
                3 * se, secs);
  report(13, ok, sbuf);
}

} // namespace

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  c10();
  c11();
  c12();
  c13();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 13 acceptance criteria PASSED\n");
  return 0;
}
