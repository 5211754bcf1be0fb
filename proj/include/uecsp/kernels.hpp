#ifndef UECSP_KERNELS_HPP
#define UECSP_KERNELS_HPP

#include <cmath>

// Scalar kernels shared by the threshold / second-moment code.  The three
// implicit equations and the Upsilon function all evaluate e^w-1-w which
// cancels catastrophically near 0, so it gets a dedicated series kernel.

namespace uecsp {

// e^w - 1 - w.  Series for |w| < 0.5, expm1-based otherwise.
inline double expm1m(double w) {
  if (std::fabs(w) >= 0.5) return std::expm1(w) - w;
  // w^2/2! + w^3/3! + ...
  double term = w * w / 2.0, sum = term;
  for (int k = 3; k <= 22; ++k) {
    term *= w / k;
    sum += term;
  }
  return sum;
}

// (e^w - 1) / w, with the w = 0 limit 1
inline double e1(double w) {
  if (std::fabs(w) >= 0.5) return std::expm1(w) / w;
  double term = 1.0, sum = 1.0;
  for (int k = 2; k <= 22; ++k) {
    term *= w / k;
    sum += term;
  }
  return sum;
}

// 2(e^w - 1 - w) / w^2, with the w = 0 limit 1
inline double e2(double w) {
  if (std::fabs(w) >= 0.5) return 2.0 * (std::expm1(w) - w) / (w * w);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 22; ++k) {
    term *= w / (k + 2);
    sum += term;
  }
  return sum;
}

// mu(w) = w(e^w-1)/(e^w-1-w) = 2 e1(w)/e2(w); mu(0) = 2, monotone increasing
inline double mu_ratio(double w) {
  if (w > 500.0) {  // overflow-free closed form with s = e^{-w}
    double s = std::exp(-w);
    return w * (1.0 - s) / (1.0 - (1.0 + w) * s);
  }
  return 2.0 * e1(w) / e2(w);
}

// G(w) = sum_{k>=1} k w^{k-1}/(k+2)!, so that e1(w) - e2(w) = w G(w);
// series radius used below 0.5 only
inline double gk(double w) {
  double g = 0.0, wpow = 1.0, fact = 6.0; // fact = (k+2)!
  for (int k = 1; k <= 22; ++k) {
    g += k * wpow / fact;
    wpow *= w;
    fact *= (k + 3);
  }
  return g;
}

// w ln w with the limit 0 at w = 0
inline double xlnx(double w) { return w == 0.0 ? 0.0 : w * std::log(w); }

// Upsilon(w) = mu(w) ln w - ln(e^w-1-w); Upsilon(0) = ln 2.
// Stable form near 0: 2 w ln(w) G(w)/E2(w) + ln 2 - ln E2(w) where
// G(w) = sum_{k>=1} k w^{k-1}/(k+2)!  (so that e1-e2 = w G).
inline double upsilon(double w) {
  if (w < 0.5) {
    double E2 = e2(w);
    return 2.0 * xlnx(w) * gk(w) / E2 + std::log(2.0) - std::log(E2);
  }
  if (w > 30.0) {  // overflow-free: mu(w) ln w - w - log1p(-(1+w)e^{-w})
    double s = std::exp(-w);
    return mu_ratio(w) * std::log(w) - w - std::log1p(-(1.0 + w) * s);
  }
  double E = expm1m(w);
  return w * std::expm1(w) / E * std::log(w) - std::log(E);
}

// Largest w >= 0 with mu(w) = ratio; 0 when ratio <= 2.  mu is monotone
// increasing with mu(0) = 2, and ratio-2 < w < ratio (Lemma-style bracket).
inline double mu_root(double ratio) {
  if (ratio <= 2.0) return 0.0;
  double lo = std::max(0.0, ratio - 2.0), hi = ratio;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mu_ratio(mid) < ratio)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace uecsp

#endif
