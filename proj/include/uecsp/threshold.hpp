#ifndef UECSP_THRESHOLD_HPP
#define UECSP_THRESHOLD_HPP

#include <optional>
#include <stdexcept>

namespace uecsp {

struct undefined_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// scalar laws of the 2-core at clause density c
struct CoreLaw {
  double c = 0;
  double x = 0;       // largest root of x = 3c(1-e^{-x})^2
  double gamma = 0;   // core clauses per core variable
  double v_frac = 0;  // core variables per original variable
  double e_frac = 0;  // core clauses per original variable
};

// largest positive solution of x = 3c(1-e^{-x})^2, or nothing when c is
// below the core-emptiness threshold
std::optional<double> largest_root_x(double c, double tol = 1e-13);

double gamma_of(double c);

// density where gamma(c) = 1; the satisfiability threshold 0.917935...
double c_star(double tol = 1e-11);

// min over x > 0 of x / (3 (1-e^{-x})^2) = 0.818469...
double core_emptiness_threshold();

CoreLaw core_prediction(double c);

} // namespace uecsp

#endif
