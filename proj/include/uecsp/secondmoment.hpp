#ifndef UECSP_SECONDMOMENT_HPP
#define UECSP_SECONDMOMENT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "uecsp/bigint.hpp"

namespace uecsp {

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// overlap parameters of a pair of assignments
struct TriplePoint {
  double alpha = 0, r = 0, t = 0;
};

struct ImplicitRoots {
  double x = 0, y = 0, z = 0;
};

struct OverlapProfile {
  long long T0 = 0, T2 = 0, T3 = 0;
};

struct HessianData {
  std::array<std::array<double, 3>, 3> a{};  // (a_ij), negated Hessian
  double K = 0;
  double D = 0;                 // det(a) in closed form, (2^15/9) K c
  std::array<double, 3> minors{};  // leading principal minors of (a_ij)
};

bool feasible(double c, const TriplePoint& p);
bool strictly_feasible(double c, const TriplePoint& p);

OverlapProfile overlap_profile(long long m, double r, double t);

// largest positive roots of the three implicit equations; y (resp. z) is 0
// exactly when r = 1 - 2(1-alpha)/(3c) (resp. r = 2 alpha/(3c))
ImplicitRoots solve_implicits(double c, double alpha, double r);

// the exponential-scale function f; boundary limits use the entropy
// convention 0 ln 0 = 0 and the roots' ratio->2 limits
double f_eval(double c, const TriplePoint& p);

// analytic gradient (strictly feasible points only)
std::array<double, 3> grad_f(double c, const TriplePoint& p);

// cleared-denominator stationary-point residuals, the verifier's filters
std::array<double, 3> stationary_residuals(double c, const TriplePoint& p);

HessianData hessian_at_max(double c);

// Phi(3cn, n) in the n-cancelled closed form sqrt(3c/(x(3c-1)-3c(3c-2)))
double phi_closed(double c);

// Phi(i, j) and chi(z0) from the Stirling approximation (i > 2j > 0)
double phi(double i, double j);
double chi_of(double z0);
double z0_solve(double i, double j);

// exact generalized Stirling number S(i, j, 2), i <= 400
BigUint stirling_exact(int i, int j);

// log of the asymptotic approximation Gamma(i, j)
double stirling_asymptotic_log(double i, double j);

// g of eq:g with the Lambda ratio fixed to 1; requires (alpha, r, t) inside
// the zeta-inset region I+
double g_eval(double c, double n, const TriplePoint& p, double zeta = 0.01);

// Laplace closed form for E(N^2)/E(N)^2; cancels to 1 in exact arithmetic
double second_moment_ratio(double c, double n);

// elementary border bounds (test oracles)
double elb1_log(double i);             // log i! lower bound: i(ln i - 1)
double eub1_log(double i);             // log upper bound with sqrt(2 pi i + 2)
double bub1_log(double n, double k);   // log (n e / k)^k
double eub2_log(double i, double j);   // log j^i
double eub3_log(double i, double j);   // log C(i,2j) (2j)!/2^j j^{i-2j}

// Monte Carlo estimate of the no-collision probability Lambda
struct McEstimate {
  double value = 0;
  double std_error = 0;
  long long samples = 0;
};

McEstimate lambda_mc(int n, int m, long long samples, uint64_t seed);
McEstimate lambda_mc_conditioned(int n, int m, int alpha_n, int r3m, int tm,
                                 long long samples, uint64_t seed);

} // namespace uecsp

#endif
