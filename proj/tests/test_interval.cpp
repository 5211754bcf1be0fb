// Enclosure suite for the interval layer.  Built twice: with the default
// one-ulp outward stepping and with UECSP_IA_DIRECTED (fesetround).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "uecsp/interval_ext.hpp"
#include "uecsp/kernels.hpp"
#include "uecsp/rng.hpp"

using namespace uecsp;
using ia::I;
using ia::pt;

TEST_CASE("basic arithmetic enclosures") {
  I a = I(1, 2) + I(3, 4);
  CHECK(a.lo <= 4.0);
  CHECK(a.hi >= 6.0);
  CHECK(a.hi - 6.0 <= 1e-14);

  I m = I(-1, 1) * I(-1, 1);
  CHECK(m.contains(I(-1, 1)));

  I e = ia::exp_i(pt(0.0));
  CHECK(e.contains(1.0));
  CHECK(e.width() < 1e-15);

  CHECK_THROWS_AS(I(2, 3) / I(-1, 1), ia::ia_domain_error);
  CHECK_THROWS_AS(ia::log_i(I(-1, 1)), ia::ia_domain_error);

  // half-line division at a zero endpoint
  I h = I(1, 2) / I(0, 0.5);
  CHECK(h.hi == ia::kInf);
  CHECK(h.lo <= 2.0);
}

TEST_CASE("random point enclosures for the arithmetic ops") {
  SplitMix64 rng(123);
  for (int i = 0; i < 100000; ++i) {
    double x = (rng.u01() - 0.5) * 200;
    double y = (rng.u01() - 0.5) * 200;
    I X = pt(x), Y = pt(y);
    CHECK((X + Y).contains(x + y));
    CHECK((X - Y).contains(x - y));
    CHECK((X * Y).contains(x * y));
    if (std::fabs(y) > 1e-9) CHECK((X / Y).contains(x / y));
    CHECK(ia::sqr(X).contains(x * x));
    CHECK(ia::exp_i(pt(x / 20)).contains(std::exp(x / 20)));
    if (x > 0) CHECK(ia::log_i(X).contains(std::log(x)));
    if (x > 0) CHECK(ia::sqrt_i(X).contains(std::sqrt(x)));
  }
}

TEST_CASE("inclusion monotonicity on sampled cases") {
  SplitMix64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    double a = rng.u01() * 5, w = rng.u01();
    I inner(a + 0.2 * w, a + 0.5 * w);
    I outer(a, a + w);
    CHECK(outer.contains(inner));
    CHECK(ia::exp_i(outer).contains(ia::exp_i(inner)));
    CHECK(ia::sqr(outer).contains(ia::sqr(inner)));
    CHECK(ia::xlnx_I(outer).contains(ia::xlnx_I(inner)));
    CHECK(ia::upsilon_I(outer).contains(ia::upsilon_I(inner)));
    CHECK(ia::mu_I(outer).contains(ia::mu_I(inner)));
  }
}

TEST_CASE("kernel enclosures contain the plain-float values") {
  SplitMix64 rng(77);
  for (int i = 0; i < 100000; ++i) {
    double w = rng.u01() * 10;
    CHECK(ia::expm1m_pt(w).contains(expm1m(w)));
    CHECK(ia::mu_pt(w).hi >= mu_ratio(w) * (1 - 1e-13));
    CHECK(ia::mu_pt(w).lo <= mu_ratio(w) * (1 + 1e-13));
    CHECK(ia::upsilon_pt(w).contains(upsilon(w)));
    CHECK(ia::xlnx_pt(w).contains(xlnx(w)));
  }
  // tiny arguments: the series path
  for (double w : {0.0, 1e-12, 1e-6, 0.01, 0.49999}) {
    CHECK(ia::upsilon_pt(w).contains(upsilon(w)));
    CHECK(ia::e2_pt(w).contains(e2(w)));
  }
}

TEST_CASE("Upsilon shape facts") {
  // value at 0 is ln 2
  CHECK(ia::upsilon_pt(0.0).contains(std::log(2.0)));
  // minimum at w = 1 with value -ln(e-2)
  CHECK(ia::upsilon_pt(1.0).contains(-std::log(std::exp(1.0) - 2)));
  CHECK(ia::upsilon_I(I(0, 5)).lo <= -std::log(std::exp(1.0) - 2));
  // large-w bounds of the appendix
  for (double w : {2.6, 5.0, 10.0, 50.0}) {
    I u = ia::upsilon_pt(w);
    CHECK(u.lo >= ia::upsilon_linear_lower(w).lo - 1e-12);
    CHECK(u.hi <= ia::upsilon_linear_upper(w).hi + 1e-12);
  }
  // w = 10 value sits inside the linear band
  I u10 = ia::upsilon_I(I(10, 10));
  CHECK(u10.lo >= 10 * (std::log(10.0) - 1) - 1e-9);
  CHECK(u10.hi <= 10 * (std::log(10.0) - 1) + 1 + 1e-9);
  CHECK_THROWS_AS(ia::upsilon_I(I(-1, 1)), ia::ia_domain_error);
}

TEST_CASE("x ln x enclosure handles the dip") {
  I r = ia::xlnx_I(I(0.0, 1.0));
  CHECK(r.lo <= -1.0 / std::exp(1.0));
  CHECK(r.hi >= 0.0);
  CHECK(ia::xlnx_I(I(0, 0)).contains(0.0));
}

TEST_CASE("certified mu roots bracket the float solver") {
  for (double ratio : {2.0001, 2.01, 2.5, 2.7, 3.0, 9.0, 100.0, 1e6}) {
    double w = mu_root(ratio);
    I enc = ia::mu_root_I(pt(ratio));
    CHECK(enc.lo <= w * (1 + 1e-12));
    CHECK(enc.hi >= w * (1 - 1e-12));
    CHECK(enc.hi - enc.lo <= std::max(1e-10, 1e-10 * w));
    // residual sign change across the enclosure certifies the root
    if (enc.lo > 0) {
      CHECK(ia::mu_pt(enc.lo).lo <= ratio);
      CHECK(ia::mu_pt(enc.hi).hi >= ratio);
    }
  }
  CHECK(ia::mu_root_I(pt(1.5)).hi == 0.0);
  // x* = 2.1491... and Upsilon(x*) ~ 0.60355 as printed; high-precision
  // evaluation gives 0.6035701674..., so the printed value is off in the
  // last digit and the comparison is kept at 1e-4
  I xstar = ia::mu_root_I(pt(3.0));
  CHECK(std::abs(xstar.mid() - 2.1491) < 1e-4);
  I uxs = ia::upsilon_I(xstar);
  CHECK(std::abs(uxs.mid() - 0.60355) < 1e-4);
  CHECK(uxs.contains(0.603570167445232));
  // point interval bracket widths stay tight
  I xb = ia::bracket_x(pt(0.9));
  CHECK(xb.width() <= 1e-10);
}

TEST_CASE("interval brackets against the float implicit solver") {
  const double c = 0.9, alpha = 0.3, r = 0.28;
  double x = mu_root(3 * c);
  double y = mu_root(3 * c * (1 - r) / (1 - alpha));
  double z = mu_root(3 * c * r / alpha);
  CHECK(ia::bracket_x(pt(c)).contains(x));
  CHECK(ia::bracket_y(pt(c), pt(alpha), pt(r)).contains(y));
  CHECK(ia::bracket_z(pt(c), pt(alpha), pt(r)).contains(z));
  // Lemma-style bracket: 3c - 2 < x < 3c at c = 1/3*3=1 -> (1,3)
  I x1 = ia::bracket_x(pt(1.0));
  CHECK(x1.lo > 1.0);
  CHECK(x1.hi < 3.0);
  // ratio -> 2+ brings the root to 0
  CHECK(ia::bracket_z(pt(c), pt(alpha), pt(2 * alpha / (3 * c))).lo == 0.0);
}

TEST_CASE("z(y) enclosure via the exclusion procedure") {
  // y = 0: largest root of 2z = e^z - 1
  I z0 = ia::z_of_y_interval(I(0, 0));
  double root = 0;
  {
    double lo = 1, hi = 2;
    for (int i = 0; i < 200; ++i) {
      root = 0.5 * (lo + hi);
      (std::expm1(root) > 2 * root ? hi : lo) = root;
    }
  }
  CHECK(z0.contains(root));
  CHECK(z0.width() < 1e-9);

  // point y = 1: contains the z > y root, excludes z < y
  I z1 = ia::z_of_y_interval(I(1, 1));
  CHECK(z1.lo > 1.0);

  // enclosure monotone under widening, and the wide interval contains the
  // pointwise roots
  I narrow = ia::z_of_y_interval(I(0.5, 0.6));
  I wide = ia::z_of_y_interval(I(0.4, 0.7));
  CHECK(wide.contains(narrow));
  for (double y : {0.5, 0.55, 0.6})
    CHECK(narrow.hi >= ia::z_of_y_interval(I(y, y)).lo);
}

TEST_CASE("lambda root structure: exactly two roots, z = y and one above") {
  for (double y : {0.3, 1.0, 1.8}) {
    auto lam = [&](double z) {
      double ey = std::expm1(y), ez = std::expm1(z);
      return (3 * ey * ey + ez * ez) / (2 * (e1(y)) * (ey + ez));
    };
    // scan z - lambda over (0, 20]: down-crossing at z = y, up-crossing at
    // the largest root, nothing else
    std::vector<double> crossings;
    double prev = lam(1e-4) - 1e-4;
    for (double z = 1e-4; z <= 20; z += 1e-4) {
      double cur = lam(z) - z;
      if ((prev > 0) != (cur > 0)) crossings.push_back(z);
      prev = cur;
    }
    REQUIRE(crossings.size() == 2);
    CHECK(crossings[0] == doctest::Approx(y).epsilon(1e-3));
    I enc = ia::z_of_y_interval(I(y, y));
    // the scan quantizes crossings to the grid; the enclosure is far tighter
    CHECK(std::abs(crossings[1] - enc.mid()) < 2e-4);
    CHECK(enc.hi > y);
    // beyond the largest root the residual is positive again
    CHECK(lam(enc.hi + 1e-2) > enc.hi + 1e-2);
  }
}

TEST_CASE("lambda map first/second derivative signs (interval check)") {
  // first derivative of the RHS of the interior equation: negative for
  // 0 < z < y, positive for z > y; second derivative positive for z > y
  auto first = [](const I& Y, const I& Z) {
    I ey = ia::em1_I(Y), ez = ia::em1_I(Z);
    return ia::exp_i(Z) * (ez - ey) * (ez + 3.0 * ey) /
           (2.0 * ey * ia::sqr(ez + ey));
  };
  auto second = [](const I& Y, const I& Z) {
    I ey = ia::em1_I(Y), ez = ia::em1_I(Z);
    return ia::exp_i(Z) *
           ((ez + ey) * (ez - ey) * (ez + 3.0 * ey) +
            8.0 * ia::exp_i(Z) * ia::sqr(ey)) /
           (2.0 * ey * (ez + ey));
  };
  I Y(1.0, 1.1);
  CHECK(first(Y, I(0.3, 0.9)).hi < 0);
  CHECK(first(Y, I(1.2, 3.0)).lo > 0);
  CHECK(second(Y, I(1.2, 3.0)).lo > 0);
}
