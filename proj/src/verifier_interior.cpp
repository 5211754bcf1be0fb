#include <cstdio>
#include <fstream>
#include <sstream>

#include "uecsp/verifier.hpp"

namespace uecsp {
namespace detail {

using ia::I;
using ia::pt;

// All stationary points with z > y have y in [0, x*], where x* is the
// largest root of mu(x) = 3.  The run covers that interval; each region is
// driven entirely by its y interval:
//   Z from the lambda fixed-point exclusion procedure,
//   c(y,z)    = (3(e^y-1)y + (e^z-1)z) / (3 (3(e^y-1-y) + e^z-1-z)),
//   x(c)      = largest root of mu(x) = 3c,
//   alpha     = (e^z-1-z) / (3(e^y-1-y) + e^z-1-z),
//   r         = (e^z-1)z / (3(e^y-1)y + (e^z-1)z),
//   t         = (e^z-1)^2 r / (3(e^y-1)^2 + (e^z-1)^2).
bool interior_f_enclosure(const I& Y, const VerifyConfig& cfg, I* c_out,
                          I* f_out) {
  I Z = ia::z_of_y_interval(Y, cfg.bracket);
  I ey = ia::em1_I(Y), ez = ia::em1_I(Z);
  I my = ia::expm1m_I(Y), mz = ia::expm1m_I(Z);
  I C = (3.0 * ey * Y + ez * Z) / (3.0 * (3.0 * my + mz));
  I Crun;
  if (!ia::try_intersect(C, I(cfg.c_lo, cfg.c_hi), Crun)) {
    if (c_out) *c_out = C;
    return false;
  }
  I X = ia::bracket_x(Crun);
  I A = mz / (3.0 * my + mz);
  I R = (ez * Z) / (3.0 * ey * Y + ez * Z);
  I T = sqr(ez) * R / (3.0 * sqr(ey) + sqr(ez));
  I F = F_interval(Crun, A, R, T, X, Y, Z);
  if (c_out) *c_out = Crun;
  if (f_out) *f_out = F;
  return true;
}

namespace {

struct InteriorSlice {
  double min_margin = std::numeric_limits<double>::infinity();
  long long bounded = 0, out_of_range = 0;
  bool failed = false;
  std::string failure;
  std::string cert;
};

void hexf2(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, " %a", v);
  out += buf;
}

void process_y(const I& Y, int depth, const VerifyConfig& cfg,
               InteriorSlice& res, bool want_cert) {
  if (res.failed) return;
  I C = pt(0.0), F = pt(0.0);
  bool evaluated = false;
  bool in_range = true;
  try {
    in_range = interior_f_enclosure(Y, cfg, &C, &F);
    evaluated = true;
  } catch (const std::exception&) {
    evaluated = false;  // exclusion search or a domain step failed: subdivide
  }
  if (evaluated && !in_range) {
    ++res.out_of_range;
    if (want_cert) {
      res.cert += "O";
      hexf2(res.cert, Y.lo);
      hexf2(res.cert, Y.hi);
      res.cert += '\n';
    }
    return;
  }
  if (evaluated) {
    double tgt = margin_target(C);
    if (F.hi < tgt &&
        (tgt - F.hi >= cfg.interior_margin_goal || depth >= cfg.max_depth)) {
      double margin = tgt - F.hi;
      ++res.bounded;
      if (margin < res.min_margin) res.min_margin = margin;
      if (want_cert) {
        res.cert += "I";
        hexf2(res.cert, Y.lo);
        hexf2(res.cert, Y.hi);
        hexf2(res.cert, C.lo);
        hexf2(res.cert, C.hi);
        hexf2(res.cert, F.lo);
        hexf2(res.cert, F.hi);
        hexf2(res.cert, margin);
        res.cert += '\n';
      }
      return;
    }
  }
  if (depth >= cfg.max_depth) {
    res.failed = true;
    std::ostringstream os;
    os << "interior: depth cap at y=[" << Y.lo << "," << Y.hi << "]";
    res.failure = os.str();
    return;
  }
  double m = Y.mid();
  process_y(I(Y.lo, m), depth + 1, cfg, res, want_cert);
  process_y(I(m, Y.hi), depth + 1, cfg, res, want_cert);
}

} // namespace

} // namespace detail

VerificationReport verify_interior(const VerifyConfig& cfg) {
  using namespace detail;
  VerificationReport rep;
  rep.name = "interior";

  double ystar = ia::mu_root_ub(3.0);  // x*, upper bound
  int slices = std::max(1, cfg.initial_splits);
  std::vector<I> roots;
  for (int s = 0; s < slices; ++s)
    roots.push_back(I(ystar * s / slices, ystar * (s + 1) / slices));

  std::vector<InteriorSlice> results(roots.size());
  bool want_cert = !cfg.certificate_path.empty();

  if (cfg.jobs <= 1) {
    for (size_t i = 0; i < roots.size(); ++i)
      process_y(roots[i], 0, cfg, results[i], want_cert);
  } else {
    long long count = static_cast<long long>(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
#endif
    for (long long i = 0; i < count; ++i)
      process_y(roots[i], 0, cfg, results[i], want_cert);
  }

  rep.certified = true;
  std::string cert;
  for (const InteriorSlice& r : results) {
    rep.bounded += r.bounded;
    rep.out_of_range += r.out_of_range;
    if (r.min_margin < rep.min_margin) rep.min_margin = r.min_margin;
    if (r.failed && rep.certified) {
      rep.certified = false;
      rep.failure = r.failure;
    }
    cert += r.cert;
  }
  if (rep.certified && !(rep.min_margin > 0)) {
    rep.certified = false;
    rep.failure = "nonpositive interior margin";
  }
  if (want_cert && rep.certified) {
    std::ofstream out(cfg.certificate_path, std::ios::app);
    char head[96];
    std::snprintf(head, sizeof head, "H %a %a\n", cfg.c_lo, cfg.c_hi);
    out << head << cert;
  }
  return rep;
}

} // namespace uecsp
