#ifndef UECSP_INTERVAL_HPP
#define UECSP_INTERVAL_HPP

// Closed intervals of IEEE-754 doubles with outward rounding: every
// operation returns an interval that provably contains the exact real
// result.  Two rounding policies, selected at build time:
//
//   default               round-to-nearest plus a one-ulp outward step on
//                         every endpoint (bit-level nextafter)
//   UECSP_IA_DIRECTED     directed rounding via fesetround around each
//                         basic operation
//
// Both policies must pass the same enclosure suite.  Transcendental
// functions (exp, expm1, log, log1p, sqrt) rely on the host libm being
// faithfully rounded; their results are inflated by two ulps in either
// policy.  That inflation is the axiom of this build environment, in the
// same way the original proof relied on an interval library.

#include <bit>
#include <cfenv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace uecsp::ia {

struct ia_domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double step_down(double x) {
  if (std::isnan(x)) throw ia_domain_error("NaN endpoint");
  if (x == kInf) return std::numeric_limits<double>::max();
  if (x == -kInf) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  uint64_t u = std::bit_cast<uint64_t>(x);
  u = x > 0 ? u - 1 : u + 1;
  return std::bit_cast<double>(u);
}

inline double step_up(double x) {
  if (std::isnan(x)) throw ia_domain_error("NaN endpoint");
  if (x == -kInf) return -std::numeric_limits<double>::max();
  if (x == kInf) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  uint64_t u = std::bit_cast<uint64_t>(x);
  u = x > 0 ? u + 1 : u - 1;
  return std::bit_cast<double>(u);
}

#ifdef UECSP_IA_DIRECTED
namespace detail {
// One basic operation under a directed rounding mode.  Operands and result
// are laundered through volatiles so the optimizer cannot hoist or sink the
// floating-point instruction across the fesetround calls.
enum class BasicOp { Add, Sub, Mul, Div };
inline double dir_op(int mode, double x, double y, BasicOp op) {
  std::fesetround(mode);
  volatile double vx = x, vy = y;
  volatile double r = op == BasicOp::Add   ? vx + vy
                      : op == BasicOp::Sub ? vx - vy
                      : op == BasicOp::Mul ? vx * vy
                                           : vx / vy;
  std::fesetround(FE_TONEAREST);
  return r;
}
inline double add_lo(double x, double y) { return dir_op(FE_DOWNWARD, x, y, BasicOp::Add); }
inline double add_hi(double x, double y) { return dir_op(FE_UPWARD, x, y, BasicOp::Add); }
inline double sub_lo(double x, double y) { return dir_op(FE_DOWNWARD, x, y, BasicOp::Sub); }
inline double sub_hi(double x, double y) { return dir_op(FE_UPWARD, x, y, BasicOp::Sub); }
inline double mul_lo(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return dir_op(FE_DOWNWARD, x, y, BasicOp::Mul);
}
inline double mul_hi(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return dir_op(FE_UPWARD, x, y, BasicOp::Mul);
}
} // namespace detail
#endif

struct I {
  double lo, hi;

  I() : lo(0), hi(0) {}
  explicit I(double v) : lo(v), hi(v) {
    if (std::isnan(v)) throw ia_domain_error("NaN point interval");
  }
  I(double l, double h) : lo(l), hi(h) {
    if (std::isnan(l) || std::isnan(h) || l > h)
      throw ia_domain_error("malformed interval");
  }

  double width() const { return hi - lo; }
  double mid() const {
    double m = 0.5 * (lo + hi);
    if (!std::isfinite(m)) m = lo + 0.5 * (hi - lo);
    if (!std::isfinite(m)) m = 0;
    return m;
  }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const I& o) const { return lo <= o.lo && o.hi <= hi; }
};

inline I pt(double v) { return I(v); }

inline I hull(const I& a, const I& b) {
  return I(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

inline bool disjoint(const I& a, const I& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

inline bool try_intersect(const I& a, const I& b, I& out) {
  double lo = a.lo > b.lo ? a.lo : b.lo;
  double hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo > hi) return false;
  out = I(lo, hi);
  return true;
}

inline I operator-(const I& a) { return I(-a.hi, -a.lo); }

#ifdef UECSP_IA_DIRECTED

inline I operator+(const I& a, const I& b) {
  return I(detail::add_lo(a.lo, b.lo), detail::add_hi(a.hi, b.hi));
}

inline I operator-(const I& a, const I& b) {
  return I(detail::sub_lo(a.lo, b.hi), detail::sub_hi(a.hi, b.lo));
}

inline I operator*(const I& a, const I& b) {
  double lo = std::fmin(
      std::fmin(detail::mul_lo(a.lo, b.lo), detail::mul_lo(a.lo, b.hi)),
      std::fmin(detail::mul_lo(a.hi, b.lo), detail::mul_lo(a.hi, b.hi)));
  double hi = std::fmax(
      std::fmax(detail::mul_hi(a.lo, b.lo), detail::mul_hi(a.lo, b.hi)),
      std::fmax(detail::mul_hi(a.hi, b.lo), detail::mul_hi(a.hi, b.hi)));
  return I(lo, hi);
}

#else

namespace detail {
// Exactness tests: when the rounded result is provably exact the outward
// step is skipped.  This keeps endpoints like 1 - [1,1] at a hard zero,
// which the degenerate-corner handling downstream depends on.
inline bool sum_exact(double a, double b, double s) {
  if (!std::isfinite(s)) return false;
  double bv = s - a;
  double av = s - bv;
  return (a - av) + (b - bv) == 0.0;  // TwoSum error term
}
// endpoint product with the closure convention 0 * inf = 0
inline double p0(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}
inline bool prod_exact_eq(double a, double b, double v) {
  if (a == 0.0 || b == 0.0) return v == 0.0;
  if (!std::isfinite(v)) return false;
  return a * b == v && std::fma(a, b, -v) == 0.0;
}
} // namespace detail

inline I operator+(const I& a, const I& b) {
  double lo = a.lo + b.lo, hi = a.hi + b.hi;
  return I(detail::sum_exact(a.lo, b.lo, lo) ? lo : step_down(lo),
           detail::sum_exact(a.hi, b.hi, hi) ? hi : step_up(hi));
}

inline I operator-(const I& a, const I& b) {
  double lo = a.lo - b.hi, hi = a.hi - b.lo;
  return I(detail::sum_exact(a.lo, -b.hi, lo) ? lo : step_down(lo),
           detail::sum_exact(a.hi, -b.lo, hi) ? hi : step_up(hi));
}

inline I operator*(const I& a, const I& b) {
  double c1 = detail::p0(a.lo, b.lo), c2 = detail::p0(a.lo, b.hi);
  double c3 = detail::p0(a.hi, b.lo), c4 = detail::p0(a.hi, b.hi);
  double lo = std::fmin(std::fmin(c1, c2), std::fmin(c3, c4));
  double hi = std::fmax(std::fmax(c1, c2), std::fmax(c3, c4));
  bool lo_exact = detail::prod_exact_eq(a.lo, b.lo, lo) ||
                  detail::prod_exact_eq(a.lo, b.hi, lo) ||
                  detail::prod_exact_eq(a.hi, b.lo, lo) ||
                  detail::prod_exact_eq(a.hi, b.hi, lo);
  bool hi_exact = detail::prod_exact_eq(a.lo, b.lo, hi) ||
                  detail::prod_exact_eq(a.lo, b.hi, hi) ||
                  detail::prod_exact_eq(a.hi, b.lo, hi) ||
                  detail::prod_exact_eq(a.hi, b.hi, hi);
  return I(lo_exact ? lo : step_down(lo), hi_exact ? hi : step_up(hi));
}

#endif

// Division.  Denominators containing 0 in the interior are a hard error;
// a zero endpoint yields a half-line (the closure limit), which downstream
// code treats like any other interval.
inline I operator/(const I& a, const I& b) {
  if (b.lo < 0 && b.hi > 0)
    throw ia_domain_error("division by interval containing zero");
  if (b.lo == 0 && b.hi == 0)
    throw ia_domain_error("division by zero interval");
  auto q = [](double x, double y) -> double {
    if (x == 0.0) return 0.0;
    if (y == 0.0) return x > 0 ? kInf : -kInf;
    return x / y;
  };
  auto quot_exact = [&](double x, double y, double v) {
    if (x == 0.0) return v == 0.0;
    if (y == 0.0 || !std::isfinite(v)) return !std::isfinite(v);
    return std::fma(v, y, -x) == 0.0;
  };
  double c1, c2;
  bool e1, e2;
  if (b.lo >= 0) {  // positive denominator (possibly touching 0)
    c1 = std::fmin(q(a.lo, b.lo), q(a.lo, b.hi));
    c2 = std::fmax(q(a.hi, b.lo), q(a.hi, b.hi));
    e1 = quot_exact(a.lo, b.lo, c1) || quot_exact(a.lo, b.hi, c1);
    e2 = quot_exact(a.hi, b.lo, c2) || quot_exact(a.hi, b.hi, c2);
  } else {  // negative denominator
    c1 = std::fmin(q(a.hi, b.lo), q(a.hi, b.hi));
    c2 = std::fmax(q(a.lo, b.lo), q(a.lo, b.hi));
    e1 = quot_exact(a.hi, b.lo, c1) || quot_exact(a.hi, b.hi, c1);
    e2 = quot_exact(a.lo, b.lo, c2) || quot_exact(a.lo, b.hi, c2);
  }
  return I(e1 ? c1 : step_down(c1), e2 ? c2 : step_up(c2));
}

inline I operator+(const I& a, double s) { return a + pt(s); }
inline I operator+(double s, const I& a) { return pt(s) + a; }
inline I operator-(const I& a, double s) { return a - pt(s); }
inline I operator-(double s, const I& a) { return pt(s) - a; }
inline I operator*(const I& a, double s) { return a * pt(s); }
inline I operator*(double s, const I& a) { return pt(s) * a; }
inline I operator/(const I& a, double s) { return a / pt(s); }
inline I operator/(double s, const I& a) { return pt(s) / a; }

inline I sqr(const I& a) {
  if (a.lo >= 0) return I(step_down(a.lo * a.lo), step_up(a.hi * a.hi));
  if (a.hi <= 0) return I(step_down(a.hi * a.hi), step_up(a.lo * a.lo));
  double m = std::fmax(-a.lo, a.hi);
  return I(0, step_up(m * m));
}

inline I ipow(const I& a, int n) {
  if (n == 0) return pt(1.0);
  if (n == 1) return a;
  if (n == 2) return sqr(a);
  I r = (n % 2 == 0) ? sqr(a) : a;
  I acc = sqr(a);
  for (int k = n % 2 == 0 ? 2 : 1; k + 2 <= n; k += 2) r = r * acc;
  return r;
}

// two-ulp inflation around the faithfully rounded libm value
inline double trans_lo(double v) { return step_down(step_down(v)); }
inline double trans_hi(double v) { return step_up(step_up(v)); }

inline I exp_i(const I& a) {
  double lo = a.lo == -kInf ? 0.0 : trans_lo(std::exp(a.lo));
  if (lo < 0) lo = 0;  // underflow steps below zero; exp is positive
  return I(lo, trans_hi(std::exp(a.hi)));
}

inline I expm1_i(const I& a) {
  return I(a.lo == -kInf ? -1.0 : trans_lo(std::expm1(a.lo)),
           trans_hi(std::expm1(a.hi)));
}

inline I log_i(const I& a) {
  if (!(a.lo > 0)) throw ia_domain_error("log of non-positive interval");
  return I(trans_lo(std::log(a.lo)),
           a.hi == kInf ? kInf : trans_hi(std::log(a.hi)));
}

inline I log1p_i(const I& a) {
  if (!(a.lo > -1)) throw ia_domain_error("log1p needs lo > -1");
  return I(trans_lo(std::log1p(a.lo)),
           a.hi == kInf ? kInf : trans_hi(std::log1p(a.hi)));
}

inline I sqrt_i(const I& a) {
  if (a.lo < 0) throw ia_domain_error("sqrt of negative interval");
  return I(trans_lo(std::sqrt(a.lo)),
           a.hi == kInf ? kInf : trans_hi(std::sqrt(a.hi)));
}

// Intersection with [0, inf).  A provably negative argument means the box
// has left the term's domain entirely (empty box-intersect-domain), for
// which any enclosure is vacuously sound; the degenerate point 0 keeps the
// evaluation total so region processing can terminate.
inline I clamp_nonneg(const I& a) {
  if (a.hi < 0) return I(0.0, 0.0);
  return I(a.lo < 0 ? 0.0 : a.lo, a.hi);
}

// frequently used logarithms as certified constants
inline const I& ln2_i() {
  static const I v = log_i(pt(2.0));
  return v;
}
inline const I& ln3_i() {
  static const I v = log_i(pt(3.0));
  return v;
}
inline const I& ln4_i() {
  static const I v = log_i(pt(4.0));
  return v;
}

} // namespace uecsp::ia

#endif
