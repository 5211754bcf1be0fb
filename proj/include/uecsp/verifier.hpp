#ifndef UECSP_VERIFIER_HPP
#define UECSP_VERIFIER_HPP

#include <cmath>
#include <string>
#include <vector>

#include "uecsp/interval_ext.hpp"

namespace uecsp {

// Certifies that the second-moment rate function stays below 2(1-c)ln4 by
// a positive margin at every interior stationary point with z > y and on
// the whole boundary of the feasible region (28 boundary cases).  Regions
// are discharged either by an interval enclosure of the case's F_B below
// the target or by certified infeasibility of the case's stationary-point
// equations; failures are reported, never suppressed.

struct VerifyConfig {
  double c_lo = 0.67;
  double c_hi = 1.0 - std::ldexp(1.0, -20);  // closed machine-representable sup
  int max_depth = 96;      // bisection depth cap per initial slice
  int jobs = 1;            // worker threads over initial slices
  int initial_splits = 48; // top-level subdivisions of the widest dimension
  // keep refining below this margin (when depth allows); reported margins
  // depend on the subdivision, so thin-but-positive ones get sharpened
  double interior_margin_goal = 0.0055;
  ia::BracketConfig bracket;
  std::string certificate_path;  // empty = no certificate written
};

struct VerificationReport {
  std::string name;         // "interior" or "case-<k>"
  bool certified = false;
  double min_margin = std::numeric_limits<double>::infinity();
  long long bounded = 0;    // regions certified by F enclosure
  long long excluded = 0;   // regions without stationary points
  long long infeasible = 0; // regions outside the case domain
  long long out_of_range = 0;
  std::string failure;      // non-empty when not certified
};

struct AggregateReport {
  std::vector<VerificationReport> parts;
  bool certified = false;
  double min_margin = std::numeric_limits<double>::infinity();
};

VerificationReport verify_interior(const VerifyConfig& cfg);
VerificationReport verify_boundary_case(int case_id, const VerifyConfig& cfg);
AggregateReport verify_all(const VerifyConfig& cfg);

// re-derive every enclosure recorded in a certificate ledger
bool replay_certificate(const std::string& path, std::string& error);

// --- internals shared by the case table, the engine and the tests ---
namespace detail {

struct Box {
  ia::I c, p1, p2;
  int depth = 0;
};

enum class Outcome { Infeasible, Excluded, Evaluated };

struct CaseDef {
  int id = 0;
  int nparams = 0;
  // outer bounding range of each free parameter over [c_lo, c_hi]
  ia::I (*p1_bound)(const ia::I& c);
  ia::I (*p2_bound)(const ia::I& c, const ia::I& p1);
  // shrink to the feasible hull; false = certainly infeasible
  bool (*clip)(Box& b);
  // false = stationary equations certifiably infeasible on the box
  bool (*filters)(const Box& b);
  // enclosure of the case's F_B over (box  intersect  domain closure)
  ia::I (*fb)(const Box& b);
  // refinement target for this case's reported margin (acceptance floors
  // plus slack); 0 = accept any positive margin
  double margin_goal = 0.0;
};

const std::vector<CaseDef>& boundary_cases();

// certified lower bound on 2(1-c)ln4 over the c interval (upper endpoint)
inline double margin_target(const ia::I& C) {
  return (2.0 * (1.0 - ia::pt(C.hi)) * ia::ln4_i()).lo;
}

// F(c, a, r, t, x, y, z) of the appendix, evaluated over interval arguments
ia::I F_interval(const ia::I& C, const ia::I& A, const ia::I& R,
                 const ia::I& T, const ia::I& X, const ia::I& Y,
                 const ia::I& Z);

// One interior region, re-derivable from its y interval alone: computes the
// z enclosure, the induced (c, x, alpha, r, t) intervals and F.  Returns
// false when the induced c interval misses [cfg.c_lo, cfg.c_hi].
bool interior_f_enclosure(const ia::I& Y, const VerifyConfig& cfg,
                          ia::I* c_out, ia::I* f_out);

} // namespace detail

} // namespace uecsp

#endif
