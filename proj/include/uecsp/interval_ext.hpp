#ifndef UECSP_INTERVAL_EXT_HPP
#define UECSP_INTERVAL_EXT_HPP

// Interval enclosures of the scalar functions the verifier needs: the
// e^w-1-w family, the ratio map mu(w) = w(e^w-1)/(e^w-1-w) and its inverse
// (the implicit roots), Upsilon, w ln w, and the lambda fixed-point map of
// the interior analysis.  All functions here take nonnegative arguments.
//
// Monotone functions are evaluated at the two endpoints only, which keeps
// enclosures one ulp wide instead of suffering interval dependency.  The
// monotonicities used are elementary: e^w-1, e^w-1-w, and their series
// ratios all have nonnegative-coefficient expansions on w >= 0, and mu is
// the increasing map from the Stirling analysis.

#include "uecsp/interval.hpp"
#include "uecsp/kernels.hpp"

namespace uecsp::ia {

// ---- series kernels, point argument, w in [0, 1) ----

namespace detail {

// sum_{k>=0} w^k / (k+1)!  == (e^w-1)/w
inline I e1_series(const I& w) {
  I term = pt(1.0), sum = pt(1.0);
  for (int k = 2; k <= 21; ++k) {
    term = term * w / static_cast<double>(k);
    sum = sum + term;
  }
  // tail bound: term_{22} * sum of (w/23)^j <= term22 / (1 - w/23), w < 1
  I tail = term * w / 22.0;
  tail = I(0, (tail * pt(1.1)).hi);
  return sum + tail;
}

// sum_{k>=0} 2 w^k / (k+2)!  == 2(e^w-1-w)/w^2
inline I e2_series(const I& w) {
  I term = pt(1.0), sum = pt(1.0);
  for (int k = 1; k <= 21; ++k) {
    term = term * w / static_cast<double>(k + 2);
    sum = sum + term;
  }
  I tail = term * w / 24.0;
  tail = I(0, (tail * pt(1.1)).hi);
  return sum + tail;
}

// G(w) = sum_{k>=1} k w^{k-1} / (k+2)!; e1 - e2 = w G
inline I g_series(const I& w) {
  I sum = pt(0.0), wpow = pt(1.0);
  double fact = 6.0;
  for (int k = 1; k <= 20; ++k) {
    sum = sum + wpow * (k / fact);
    wpow = wpow * w;
    fact *= (k + 3);
  }
  I tail = wpow * (21.0 / fact);
  tail = I(0, (tail * pt(1.2)).hi);
  return sum + tail;
}

} // namespace detail

// ---- point evaluations (exact argument, interval result) ----

inline I expm1m_pt(double w) {
  if (w < 0) throw ia_domain_error("expm1m needs w >= 0");
  if (w < 1.0) {
    I wi = pt(w);
    return sqr(wi) * detail::e2_series(wi) / 2.0;
  }
  return expm1_i(pt(w)) - w;
}

inline I em1_pt(double w) { return expm1_i(pt(w)); }

inline I e2_pt(double w) {
  if (w < 0) throw ia_domain_error("e2 needs w >= 0");
  if (w < 1.0) return detail::e2_series(pt(w));
  I wi = pt(w);
  return 2.0 * (expm1_i(wi) - wi) / sqr(wi);
}

inline I mu_pt(double w) {
  if (w < 0) throw ia_domain_error("mu needs w >= 0");
  if (w < 1.0) {
    I wi = pt(w);
    return 2.0 * detail::e1_series(wi) / detail::e2_series(wi);
  }
  if (w <= 30.0) {
    I wi = pt(w);
    I em = expm1_i(wi);
    return wi * em / (em - wi);
  }
  // overflow-free form w(1-s)/(1-(1+w)s) with s = e^{-w}
  I wi = pt(w);
  I s = exp_i(-wi);
  return wi * (1.0 - s) / (1.0 - (1.0 + wi) * s);
}

// monotone increasing wrappers (endpoint evaluation)
inline I expm1m_I(const I& w) {
  I c = clamp_nonneg(w);
  return I(expm1m_pt(c.lo).lo, c.hi == kInf ? kInf : expm1m_pt(c.hi).hi);
}
inline I e2_I(const I& w) {
  I c = clamp_nonneg(w);
  return I(e2_pt(c.lo).lo, c.hi == kInf ? kInf : e2_pt(c.hi).hi);
}
inline I em1_I(const I& w) {
  I c = clamp_nonneg(w);
  return I(em1_pt(c.lo).lo, c.hi == kInf ? kInf : em1_pt(c.hi).hi);
}
inline I mu_I(const I& w) {
  I c = clamp_nonneg(w);
  double lo = c.lo == 0 ? 2.0 : mu_pt(c.lo).lo;
  return I(lo, c.hi == kInf ? kInf : mu_pt(c.hi).hi);
}

// ---- w ln w over w >= 0, with x ln x -> 0 at 0 ----

inline I xlnx_pt(double w) {
  if (w == 0.0) return pt(0.0);
  if (w == kInf) return I(kInf, kInf);
  return pt(w) * log_i(pt(w));
}

inline I xlnx_I(const I& w) {
  I c = clamp_nonneg(w);
  I a = xlnx_pt(c.lo), b = xlnx_pt(c.hi);
  I r = hull(a, b);
  // unimodal: single minimum -1/e at w = 1/e; inject it only when the
  // argument may actually contain 1/e
  static const I inv_e = pt(1.0) / exp_i(pt(1.0));
  if (c.lo <= inv_e.hi && c.hi >= inv_e.lo)
    r = I(std::fmin(r.lo, (-inv_e).lo), r.hi);
  return r;
}

// ---- Upsilon ----

// Upsilon(w) = mu(w) ln w - ln(e^w-1-w); Upsilon(0) = ln 2, one minimum at
// w = 1 of value -ln(e-2), increasing afterwards (paper observation).
inline I upsilon_pt(double w) {
  if (w < 0) throw ia_domain_error("Upsilon needs w >= 0");
  if (w < 0.5) {
    // 2 (w ln w) G/E2 + ln2 - ln E2
    I wi = pt(w);
    I E2 = detail::e2_series(wi);
    return 2.0 * xlnx_pt(w) * detail::g_series(wi) / E2 + ln2_i() - log_i(E2);
  }
  if (w <= 3.0) {
    I E = expm1m_pt(w);
    return mu_pt(w) * log_i(pt(w)) - log_i(E);
  }
  if (w == kInf) return I(kInf, kInf);
  // w(ln w - 1) + w^2 ln w/(e^w-1-w) - log1p(-(1+w)e^{-w}); exact identity,
  // stable for large w (the paper's linear bounds are the first term)
  I wi = pt(w);
  I lw = log_i(pt(w));
  I E = expm1m_pt(w);
  I corr = sqr(wi) * lw / E;
  I tailarg = -((1.0 + wi) * exp_i(-wi));
  return wi * (lw - 1.0) + corr - log1p_i(tailarg);
}

inline I upsilon_I(const I& w) {
  if (w.lo < 0) throw ia_domain_error("Upsilon needs w >= 0");
  I a = upsilon_pt(w.lo);
  I b = w.hi == kInf ? I(a.lo, kInf) : upsilon_pt(w.hi);
  I r = hull(a, b);
  if (w.contains(1.0)) {
    static const I min_val = -log_i(exp_i(pt(1.0)) - 2.0);
    r = I(std::fmin(r.lo, min_val.lo), r.hi);
  }
  return r;
}

// paper's large-w bounds, exposed for the test suite
inline I upsilon_linear_lower(double w) { return pt(w) * (log_i(pt(w)) - 1.0); }
inline I upsilon_linear_upper(double w) {
  return pt(w) * (log_i(pt(w)) - 1.0) + 1.0;
}

// ---- certified largest roots of mu(w) = ratio ----

// Certified lower bound on root(ratio): a value a with mu(a) <= ratio.
inline double mu_root_lb(double ratio) {
  if (ratio <= 2.0) return 0.0;
  double guess = mu_root(ratio);  // float hint
  double off = std::fmax(guess, 1.0) * 4e-16;
  for (int k = 0; k < 80; ++k) {
    double a = guess - off;
    if (a <= 0) return 0.0;
    if (mu_pt(a).hi <= ratio) return a;
    off *= 2;
  }
  // bracketing-lemma fallback: the root exceeds ratio - 2
  return std::fmax(0.0, step_down(ratio - 2.0));
}

// Certified upper bound on root(ratio): b with mu(b) >= ratio.
inline double mu_root_ub(double ratio) {
  if (ratio <= 2.0) return 0.0;
  if (ratio == kInf) return kInf;
  double guess = mu_root(ratio);
  double off = std::fmax(guess, 1.0) * 4e-16;
  for (int k = 0; k < 80; ++k) {
    double b = guess + off;
    if (mu_pt(b).lo >= ratio) return b;
    off *= 2;
  }
  return ratio;  // fallback: root < ratio (paper's bracketing lemma)
}

// enclosure of {root(rho) : rho in R}; mu is increasing so the root is too
inline I mu_root_I(const I& R) {
  if (R.hi <= 2.0) return pt(0.0);
  double lo = R.lo <= 2.0 ? 0.0 : mu_root_lb(R.lo);
  double hi = mu_root_ub(R.hi);
  return I(lo, hi);
}

// implicit-equation brackets used by the verifier; ratios may be half-lines
inline I bracket_x(const I& C) { return mu_root_I(3.0 * C); }
inline I bracket_y(const I& C, const I& A, const I& R) {
  I denom = clamp_nonneg(1.0 - A);
  I num = clamp_nonneg(3.0 * C * clamp_nonneg(1.0 - R));
  return mu_root_I(num / denom);
}
inline I bracket_z(const I& C, const I& A, const I& R) {
  I num = clamp_nonneg(3.0 * C * clamp_nonneg(R));
  return mu_root_I(num / clamp_nonneg(A));
}

// ---- the interior fixed-point map ----

// lambda(y, z) = y (3(e^y-1)^2 + (e^z-1)^2) / (2(e^y-1)^2 + 2(e^y-1)(e^z-1))
// rewritten with y/(e^y-1) = 1/e1(y) so that y = 0 is regular:
// lambda = (3 em1(y)^2 + em1(z)^2) / (2 e1(y) (em1(y) + em1(z)))
inline I lambda_map(const I& Y, const I& Z) {
  I cy = clamp_nonneg(Y);
  I ey = em1_I(cy);
  I ez = em1_I(clamp_nonneg(Z));
  auto e1p = [](double w) {  // (e^w-1)/w, increasing, 1 at w = 0
    if (w < 1.0) return detail::e1_series(pt(w));
    return expm1_i(pt(w)) / pt(w);
  };
  I e1y = I(e1p(cy.lo).lo, cy.hi == kInf ? kInf : e1p(cy.hi).hi);
  return (3.0 * sqr(ey) + sqr(ez)) / (2.0 * e1y * (ey + ez));
}

struct BracketConfig {
  double eps = 2.22e-16;
  int max_bisections = 200;
};

// Certified enclosure of the largest root z2 of z = lambda(y, z) for a
// point y.  The residual lambda - z is positive on (0, y), negative on
// (y, z2) and positive beyond z2 (exponential growth), with exactly the two
// roots y and z2 >= y.
inline I lambda_point_root(double y) {
  auto lamf = [&](double z) {
    double ey = std::expm1(y), ez = std::expm1(z);
    double e1y = uecsp::e1(y);
    return (3 * ey * ey + ez * ez) / (2 * e1y * (ey + ez));
  };
  // float hint: find a point inside (y, z2), then the first upward crossing
  double inside = -1;
  for (double d = 1e-12; d < 8; d *= 8) {
    double v = y + d;
    if (lamf(v) < v) {
      inside = v;
      break;
    }
  }
  double hint = y;  // merge case: z2 is within the probe step of y
  if (inside > 0) {
    double lo = inside, hi = std::fmax(inside * 1.5, inside + 0.5);
    for (int k = 0; k < 200 && lamf(hi) <= hi; ++k) hi = hi * 1.5 + 0.5;
    for (int k = 0; k < 100; ++k) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (lamf(mid) < mid)
        lo = mid;
      else
        hi = mid;
    }
    hint = 0.5 * (lo + hi);
  }
  I ypt = pt(y);
  // certified upper bound: b > y with inf lambda(y, b) > b  =>  b > z2
  double ub = kInf;
  double off = std::fmax(hint, 1.0) * 4e-16;
  for (int k = 0; k < 90; ++k) {
    double b = hint + off;
    if (b > y && lambda_map(ypt, pt(b)).lo > b) {
      ub = b;
      break;
    }
    off *= 2;
  }
  if (ub == kInf) throw verification_failure("no certified upper root bound");
  // certified lower bound: a > y with sup lambda(y, a) < a  =>  a < z2;
  // fall back to y itself (z2 >= y always)
  double lb = y;
  off = std::fmax(hint, 1.0) * 4e-16;
  for (int k = 0; k < 90; ++k) {
    double a = hint - off;
    if (a <= y) break;
    if (lambda_map(ypt, pt(a)).hi < a) {
      lb = a;
      break;
    }
    off *= 2;
  }
  return I(lb, ub);
}

// Z enclosing z(y) for every y in Y: point roots at both endpoints plus the
// paper's exclusion-band extension.
inline I z_of_y_interval(const I& Y, const BracketConfig& cfg = {}) {
  if (Y.lo < 0) throw ia_domain_error("y interval must be nonnegative");
  I z1 = lambda_point_root(Y.lo);
  I z2 = lambda_point_root(Y.hi);
  double lo0 = std::fmin(z1.lo, z2.lo);
  double hi0 = std::fmax(z1.hi, z2.hi);

  auto excluded = [&](double band_lo, double band_hi) {
    I band(band_lo, band_hi);
    I img = lambda_map(Y, band);
    return disjoint(img, band);
  };

  double eps = cfg.eps;
  double dlt = 0.0;
  bool ok = false;
  for (int k = 0; k < cfg.max_bisections; ++k) {
    if (excluded(hi0 + dlt, hi0 + dlt + eps)) {
      ok = true;
      break;
    }
    dlt = dlt == 0.0 ? eps : dlt * 2;
  }
  if (!ok) throw verification_failure("upper exclusion band not found");
  double dltp = 0.0;
  ok = false;
  for (int k = 0; k < cfg.max_bisections; ++k) {
    double bl = lo0 - dltp - eps;
    if (bl > 0 && excluded(bl, lo0 - dltp)) {
      ok = true;
      break;
    }
    if (bl <= 0) {  // root bounded below by 0 anyway
      dltp = lo0;
      ok = true;
      break;
    }
    dltp = dltp == 0.0 ? eps : dltp * 2;
  }
  if (!ok) throw verification_failure("lower exclusion band not found");
  return I(std::fmax(0.0, lo0 - dltp), hi0 + dlt);
}

} // namespace uecsp::ia

#endif
