#include "uecsp/threshold.hpp"

#include <cmath>

namespace uecsp {

namespace {

double residual(double c, double x) {
  double u = -std::expm1(-x);  // 1 - e^{-x}
  return x - 3.0 * c * u * u;
}

// minimizer of psi(x) = x / (3(1-e^{-x})^2) over x > 0, by golden section
// followed by bisection on the (finite-difference) derivative
double tangency_x() {
  auto psi = [](double x) {
    double u = -std::expm1(-x);
    return x / (3.0 * u * u);
  };
  double a = 0.1, b = 10.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = psi(x1), f2 = psi(x2);
  for (int i = 0; i < 120; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = psi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = psi(x2);
    }
  }
  // polish with bisection on the derivative
  auto dpsi = [&](double x) {
    double h = 1e-7;
    return (psi(x + h) - psi(x - h)) / (2 * h);
  };
  double lo = a - 1e-3, hi = b + 1e-3;
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    if (dpsi(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double tangency() {
  static const double xt = tangency_x();
  return xt;
}

} // namespace

std::optional<double> largest_root_x(double c, double tol) {
  if (!(c > 0)) throw undefined_error("largest_root_x needs c > 0");
  // scan downward from 3c in geometric steps for a sign change of
  // x - 3c(1-e^{-x})^2; the tangency abscissa is included as a probe so the
  // scan cannot step over a barely-born root pair
  double xt = tangency();
  double prev = 3.0 * c;
  if (residual(c, prev) < 0) prev = 3.0 * c + 1.0;  // cannot happen; guard
  double lo = -1, hi = -1;
  double x = prev;
  for (int i = 0; i < 20000 && x > 1e-12; ++i) {
    double next = x * 0.999;
    if (x > xt && next < xt) next = xt;  // probe the tangency point
    if (residual(c, next) <= 0) {
      lo = next;
      hi = x;
      break;
    }
    x = next;
  }
  if (lo < 0) return std::nullopt;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (residual(c, mid) <= 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < tol) break;
  }
  return 0.5 * (lo + hi);
}

double gamma_of(double c) {
  auto x = largest_root_x(c);
  if (!x) throw undefined_error("gamma undefined below the core threshold");
  double em = std::exp(-*x);
  double u = -std::expm1(-*x);  // 1 - e^{-x}
  return *x * u / (3.0 * (u - *x * em));
}

double core_emptiness_threshold() {
  double xt = tangency();
  double u = -std::expm1(-xt);
  return xt / (3.0 * u * u);
}

double c_star(double tol) {
  double lo = core_emptiness_threshold() + 1e-9, hi = 1.2;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (gamma_of(mid) < 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < tol) break;
  }
  return 0.5 * (lo + hi);
}

CoreLaw core_prediction(double c) {
  auto x = largest_root_x(c);
  if (!x) throw undefined_error("no non-empty core below the threshold");
  CoreLaw law;
  law.c = c;
  law.x = *x;
  double em = std::exp(-*x);
  double u = -std::expm1(-*x);
  law.gamma = *x * u / (3.0 * (u - *x * em));
  law.v_frac = u - *x * em;  // 1 - e^{-x} - x e^{-x}
  law.e_frac = u * u * u * c;
  return law;
}

} // namespace uecsp
