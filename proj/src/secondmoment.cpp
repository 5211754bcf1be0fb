#include "uecsp/secondmoment.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "uecsp/kernels.hpp"
#include "uecsp/rng.hpp"

namespace uecsp {

bool feasible(double c, const TriplePoint& p) {
  if (p.alpha < 0 || p.alpha > 1) return false;
  if (p.alpha == 0) return p.r == 0 && p.t == 0;
  if (p.alpha == 1) return p.r == 1 && p.t == 1;
  if (p.r < 2 * p.alpha / (3 * c) || p.r > 1 - 2 * (1 - p.alpha) / (3 * c))
    return false;
  return p.t >= std::max(0.0, (3 * p.r - 1) / 2) && p.t <= p.r;
}

bool strictly_feasible(double c, const TriplePoint& p) {
  if (!(p.alpha > 0 && p.alpha < 1)) return false;
  if (!(p.r > 2 * p.alpha / (3 * c) &&
        p.r < 1 - 2 * (1 - p.alpha) / (3 * c)))
    return false;
  return p.t > std::max(0.0, (3 * p.r - 1) / 2) && p.t < p.r;
}

OverlapProfile overlap_profile(long long m, double r, double t) {
  OverlapProfile o;
  o.T0 = std::llround(t * m);
  o.T2 = std::llround(3 * r * m) - 3 * o.T0;
  o.T3 = m - o.T0 - o.T2;
  if (o.T0 < 0 || o.T2 < 0 || o.T3 < 0)
    throw domain_error("overlap profile outside the feasible region");
  return o;
}

ImplicitRoots solve_implicits(double c, double alpha, double r) {
  if (!(c > 2.0 / 3.0)) throw domain_error("implicit roots need c > 2/3");
  if (alpha < 0 || alpha > 1) throw domain_error("alpha outside [0,1]");
  double rlo = 2 * alpha / (3 * c), rhi = 1 - 2 * (1 - alpha) / (3 * c);
  if (r < rlo - 1e-12 || r > rhi + 1e-12)
    throw domain_error("(c, alpha, r) infeasible");
  ImplicitRoots roots;
  roots.x = mu_root(3 * c);
  roots.y = alpha < 1 ? mu_root(3 * c * (1 - r) / (1 - alpha)) : roots.x;
  roots.z = alpha > 0 ? mu_root(3 * c * r / alpha) : roots.x;
  return roots;
}

double f_eval(double c, const TriplePoint& p) {
  if (!feasible(c, p)) throw domain_error("point outside the feasible region");
  const double ln2 = std::numbers::ln2, ln3 = std::log(3.0), ln4 = 2 * ln2;
  double a = p.alpha, r = p.r, t = p.t;
  double v = ln4 - c * ln4 + (1 - a) * ln3 - c * (2 + t - 3 * r) * ln3 +
             c * (1 - 3 * r + 2 * t) * ln2 - xlnx(a) - xlnx(1 - a) -
             c * xlnx(1 - 3 * r + 2 * t) - 3 * c * xlnx(r - t) - c * xlnx(t) +
             3 * c * xlnx(r) + 3 * c * xlnx(1 - r);
  double x = mu_root(3 * c);
  v += upsilon(x);
  // at the alpha extremes the paper's limit forms drop the vanishing-side
  // Upsilon term; elsewhere the implicit roots are well defined
  if (a > 0) {
    double z = mu_root(3 * c * r / a);
    v -= a * upsilon(z);
  }
  if (a < 1) {
    double y = mu_root(3 * c * (1 - r) / (1 - a));
    v -= (1 - a) * upsilon(y);
  }
  return v;
}

std::array<double, 3> grad_f(double c, const TriplePoint& p) {
  if (!strictly_feasible(c, p))
    throw domain_error("gradient needs a strictly feasible point");
  double a = p.alpha, r = p.r, t = p.t;
  ImplicitRoots w = solve_implicits(c, a, r);
  const double ln2 = std::numbers::ln2, ln3 = std::log(3.0);
  double da = -ln3 - std::log(a) + std::log(1 - a) +
              std::log(expm1m(w.z)) - std::log(expm1m(w.y));
  double dr = 3 * c *
              (ln3 - ln2 + std::log(1 - 3 * r + 2 * t) - std::log(r - t) +
               std::log(r) - std::log(1 - r) - std::log(w.z) + std::log(w.y));
  double dt = c * (-ln3 + 2 * ln2 - 2 * std::log(1 - 3 * r + 2 * t) +
                   3 * std::log(r - t) - std::log(t));
  return {da, dr, dt};
}

std::array<double, 3> stationary_residuals(double c, const TriplePoint& p) {
  double a = p.alpha, r = p.r, t = p.t;
  ImplicitRoots w = solve_implicits(c, a, r);
  double r1 = 3 * a * expm1m(w.y) - (1 - a) * expm1m(w.z);
  double r2 = 2 * w.z * (1 - r) * (r - t) - 3 * w.y * r * (1 - 3 * r + 2 * t);
  double r3 = 4 * std::pow(r - t, 3) - 3 * t * std::pow(1 - 3 * r + 2 * t, 2);
  return {r1, r2, r3};
}

double phi_closed(double c) {
  double x = mu_root(3 * c);
  return std::sqrt(3 * c / (x * (3 * c - 1) - 3 * c * (3 * c - 2)));
}

double phi(double i, double j) {
  if (!(i > 2 * j && j > 0)) throw domain_error("phi needs i > 2j > 0");
  double z0 = mu_root(i / j);
  return std::sqrt(i * j / (z0 * j * (i - j) - i * (i - 2 * j)));
}

double z0_solve(double i, double j) {
  if (!(i > 2 * j && j > 0)) throw domain_error("z0 needs i > 2j > 0");
  return mu_root(i / j);
}

double chi_of(double z0) {
  if (!(z0 > 0)) throw domain_error("chi needs z0 > 0");
  if (z0 < 0.5) {
    // chi^2 = 2 G E2 / (2 E1 E2 - E2^2 - 4 E1 G); removable singularity at 0
    double E1 = e1(z0), E2 = e2(z0), G = gk(z0);
    return std::sqrt(2 * G * E2 / (2 * E1 * E2 - E2 * E2 - 4 * E1 * G));
  }
  double rho = mu_ratio(z0);
  return std::sqrt((rho - 2) / (z0 * (rho - 1) - rho * (rho - 2)));
}

HessianData hessian_at_max(double c) {
  HessianData h;
  double x = mu_root(3 * c);
  h.K = 3 * c * c / (x * (3 * c - 1) - 3 * c * (3 * c - 2));
  h.a = {{{16.0 / 3 + 16 * h.K, -16 * h.K, 0},
          {-16 * h.K, 24 * c + 16 * h.K, -32 * c},
          {0, -32 * c, 128.0 * c / 3}}};
  h.minors[0] = h.a[0][0];
  h.minors[1] = h.a[0][0] * h.a[1][1] - h.a[0][1] * h.a[1][0];
  h.minors[2] =
      h.a[0][0] * (h.a[1][1] * h.a[2][2] - h.a[1][2] * h.a[2][1]) -
      h.a[0][1] * (h.a[1][0] * h.a[2][2] - h.a[1][2] * h.a[2][0]) +
      h.a[0][2] * (h.a[1][0] * h.a[2][1] - h.a[1][1] * h.a[2][0]);
  h.D = std::pow(2.0, 15) / 9.0 * h.K * c;
  return h;
}

BigUint stirling_exact(int i, int j) {
  if (i < 0 || j < 0) throw domain_error("stirling indices must be >= 0");
  if (i > 400) throw domain_error("stirling_exact limited to i <= 400");
  static std::mutex m;
  static std::vector<std::vector<BigUint>> table;  // [i][j], j <= i/2
  std::lock_guard<std::mutex> lock(m);
  if (static_cast<int>(table.size()) <= i) {
    size_t from = table.size();
    table.resize(i + 1);
    for (size_t ii = from; ii < table.size(); ++ii) {
      table[ii].resize(ii / 2 + 1);
      if (ii == 0) {
        table[0][0] = BigUint(1);
        continue;
      }
      for (size_t jj = 1; jj <= ii / 2; ++jj) {
        BigUint v = table[ii - 1].size() > jj
                        ? table[ii - 1][jj].times(static_cast<uint32_t>(jj))
                        : BigUint();
        if (ii >= 2 && table[ii - 2].size() > jj - 1)
          v += table[ii - 2][jj - 1].times(static_cast<uint32_t>(ii - 1));
        table[ii][jj] = v;
      }
    }
  }
  if (j > i / 2) return BigUint();  // some block would have < 2 elements
  if (i == 0 && j == 0) return BigUint(1);
  if (j == 0) return BigUint();
  return table[i][j];
}

double stirling_asymptotic_log(double i, double j) {
  if (!(i > 2 * j && j > 0))
    throw domain_error("stirling asymptotics need i > 2j > 0");
  double z0 = mu_root(i / j);
  return -std::lgamma(j + 1) + i * (std::log(i) - std::log(z0) - 1) +
         j * std::log(expm1m(z0)) + std::log(phi(i, j));
}

double g_eval(double c, double n, const TriplePoint& p, double zeta) {
  double a = p.alpha, r = p.r, t = p.t;
  if (a < zeta || a > 1 - zeta || r < (2 * a + zeta) / (3 * c) ||
      r > 1 - (2 * (1 - a) + zeta) / (3 * c) ||
      t < std::max(0.0, (3 * r - 1) / 2) + zeta || t > r - zeta)
    throw domain_error("point outside the inset region I+");
  double num = phi(r * 3 * c * n, a * n) *
               phi((1 - r) * 3 * c * n, (1 - a) * n);
  double den = phi(3 * c * n, n);
  double pi = std::numbers::pi;
  return num / den /
         (std::pow(2 * pi * n, 1.5) * c *
          std::sqrt(a * (1 - a) * (1 - 3 * r + 2 * t) * (3 * r - 3 * t) * t));
}

double second_moment_ratio(double c, double n) {
  if (!(c > 2.0 / 3.0 && c < 1.0))
    throw domain_error("second moment ratio needs 2/3 < c < 1");
  double pi = std::numbers::pi;
  double Phi = phi(3 * c * n, n);
  double D = hessian_at_max(c).D;
  return Phi * std::pow(n, 1.5) * (64.0 * c) / (3.0 * std::pow(pi, 1.5)) *
         std::pow(2 * pi, 1.5) * std::pow(D, -0.5) * std::pow(n, -1.5);
}

double elb1_log(double i) { return i * (std::log(i) - 1); }
double eub1_log(double i) {
  return i * (std::log(i) - 1) +
         0.5 * std::log(2 * std::numbers::pi * i + 2);
}
double bub1_log(double n, double k) {
  return k * (std::log(n) + 1 - std::log(k));
}
double eub2_log(double i, double j) { return i * std::log(j); }
double eub3_log(double i, double j) {
  return std::lgamma(i + 1) - std::lgamma(2 * j + 1) - std::lgamma(i - 2 * j + 1) +
         std::lgamma(2 * j + 1) - j * std::numbers::ln2 +
         (i - 2 * j) * std::log(j);
}

namespace {

int poisson(SplitMix64& rng, double mu) {
  double L = std::exp(-mu), p = 1.0;
  int k = 0;
  do {
    ++k;
    p *= rng.u01();
  } while (p > L);
  return k - 1;
}

int truncated_poisson2(SplitMix64& rng, double mu) {
  for (;;) {
    int k = poisson(rng, mu);
    if (k >= 2) return k;
  }
}

// loads for `buckets` buckets, each >= 2, conditioned on summing to `total`
bool sample_loads(SplitMix64& rng, int buckets, int total, double mu,
                  std::vector<int>& loads, int max_tries = 200000) {
  for (int tr = 0; tr < max_tries; ++tr) {
    int sum = 0;
    loads.clear();
    for (int i = 0; i < buckets; ++i) {
      int k = truncated_poisson2(rng, mu);
      loads.push_back(k);
      sum += k;
      if (sum > total) break;
    }
    if (sum == total && static_cast<int>(loads.size()) == buckets) return true;
  }
  return false;
}

// place `elems` shuffled elements into buckets by loads; bucket_of filled
void place(SplitMix64& rng, const std::vector<int>& loads,
           std::vector<int>& perm, std::vector<int>& bucket_of) {
  int total = static_cast<int>(perm.size());
  for (int i = 0; i < total; ++i) perm[i] = i;
  for (int i = total - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(i + 1)]);
  int pos = 0;
  for (size_t b = 0; b < loads.size(); ++b)
    for (int k = 0; k < loads[b]; ++k)
      bucket_of[perm[pos++]] = static_cast<int>(b);
}

} // namespace

McEstimate lambda_mc(int n, int m, long long samples, uint64_t seed) {
  if (3 * m < 2 * n) throw domain_error("lambda needs 3m >= 2n");
  if (n < 1 || m < 1) throw domain_error("lambda needs n, m >= 1");
  double mu = mu_root(3.0 * m / n);
  SplitMix64 rng(seed);
  std::vector<int> loads, perm(3 * m), bucket_of(3 * m);
  long long ok = 0, done = 0;
  for (long long s = 0; s < samples; ++s) {
    if (!sample_loads(rng, n, 3 * m, mu, loads))
      throw domain_error("load sampling rejected too often");
    place(rng, loads, perm, bucket_of);
    bool collision = false;
    for (int j = 0; j < m && !collision; ++j) {
      int b0 = bucket_of[3 * j], b1 = bucket_of[3 * j + 1],
          b2 = bucket_of[3 * j + 2];
      collision = b0 == b1 || b0 == b2 || b1 == b2;
    }
    ok += !collision;
    ++done;
  }
  McEstimate e;
  e.samples = done;
  e.value = static_cast<double>(ok) / done;
  e.std_error = std::sqrt(e.value * (1 - e.value) / done);
  return e;
}

McEstimate lambda_mc_conditioned(int n, int m, int alpha_n, int r3m, int tm,
                                 long long samples, uint64_t seed) {
  int T0 = tm, T2 = r3m - 3 * tm, T3 = m - r3m + 2 * tm;
  int bn = n - alpha_n, b_elems = 3 * m - r3m;
  if (T0 < 0 || T2 < 0 || T3 < 0 || alpha_n <= 0 || bn <= 0 ||
      r3m < 2 * alpha_n || b_elems < 2 * bn)
    throw domain_error("infeasible conditioned counts");
  double muA = mu_root(static_cast<double>(r3m) / alpha_n);
  double muB = mu_root(static_cast<double>(b_elems) / bn);
  SplitMix64 rng(seed);
  std::vector<int> loadsA, loadsB, permA(r3m), permB(b_elems),
      bucketA(r3m), bucketB(b_elems);
  long long ok = 0, done = 0;
  for (long long s = 0; s < samples; ++s) {
    if (!sample_loads(rng, alpha_n, r3m, muA, loadsA) ||
        !sample_loads(rng, bn, b_elems, muB, loadsB))
      throw domain_error("load sampling rejected too often");
    place(rng, loadsA, permA, bucketA);
    place(rng, loadsB, permB, bucketB);
    // A side: elements 0..3*T0-1 are the T0 full triples, the rest singles
    bool collision = false;
    for (int j = 0; j < T0 && !collision; ++j) {
      int b0 = bucketA[3 * j], b1 = bucketA[3 * j + 1],
          b2 = bucketA[3 * j + 2];
      collision = b0 == b1 || b0 == b2 || b1 == b2;
    }
    // B side: first 3*T3 elements form the T3 full triples, then T2 pairs
    for (int j = 0; j < T3 && !collision; ++j) {
      int b0 = bucketB[3 * j], b1 = bucketB[3 * j + 1],
          b2 = bucketB[3 * j + 2];
      collision = b0 == b1 || b0 == b2 || b1 == b2;
    }
    for (int j = 0; j < T2 && !collision; ++j)
      collision = bucketB[3 * T3 + 2 * j] == bucketB[3 * T3 + 2 * j + 1];
    ok += !collision;
    ++done;
  }
  McEstimate e;
  e.samples = done;
  e.value = static_cast<double>(ok) / done;
  e.std_error = std::sqrt(e.value * (1 - e.value) / done);
  return e;
}

} // namespace uecsp
