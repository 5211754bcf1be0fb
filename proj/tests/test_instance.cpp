#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "uecsp/instance.hpp"

using namespace uecsp;

TEST_CASE("gen_unm basics") {
  Instance i1 = gen_unm(3, 1, 4, 5);
  REQUIRE(i1.m() == 1);
  std::set<int> vars(i1.clauses[0].v, i1.clauses[0].v + 3);
  CHECK(vars == std::set<int>{1, 2, 3});

  Instance i0 = gen_unm(100, 0, 4, 5);
  CHECK(i0.m() == 0);

  CHECK_THROWS_AS(gen_unm(2, 1, 4, 5), invalid_input);
}

TEST_CASE("gen_unm determinism and seed sensitivity") {
  Instance a = gen_unm(200, 180, 4, 99);
  Instance b = gen_unm(200, 180, 4, 99);
  CHECK(a == b);
  Instance c = gen_unm(200, 180, 4, 100);
  CHECK_FALSE(a == c);
}

TEST_CASE("gen_unm degree concentration") {
  const int n = 10000, m = 9179;
  Instance inst = gen_unm(n, m, 4, 7);
  long long total = 0;
  for (auto& [deg, cnt] : degree_profile(inst).histogram)
    total += static_cast<long long>(deg) * cnt;
  CHECK(total == 3LL * m);
  // mean degree 3m/n with binomial-ish fluctuations
  double mean = static_cast<double>(total) / n;
  CHECK(mean == doctest::Approx(3.0 * m / n));
}

TEST_CASE("gen_unm triple uniformity (chi-square at small n)") {
  const int n = 5;
  std::map<std::array<int, 3>, int> freq;
  Instance inst = gen_unm(n, 120000, 4, 3);
  for (const Clause& cl : inst.clauses)
    ++freq[{cl.v[0], cl.v[1], cl.v[2]}];
  int cells = n * (n - 1) * (n - 2);
  double expect = static_cast<double>(inst.m()) / cells;
  double chi = 0;
  for (auto& [k, v] : freq) chi += (v - expect) * (v - expect) / expect;
  CHECK(freq.size() == static_cast<size_t>(cells));
  // 59 dof: mean 59, sd ~ 10.9; allow 6 sigma
  CHECK(chi < 59 + 6 * 10.9);
}

TEST_CASE("gen_unp model") {
  CHECK(gen_unp(10, 0.0, 4, 1).m() == 0);
  Instance full = gen_unp(5, 1.0, 4, 1);
  CHECK(full.m() == 10);

  const int n = 500;
  const double cdens = 0.9, p = 6 * cdens / (static_cast<double>(n) * n);
  Instance inst = gen_unp(n, p, 4, 17);
  double cn3 = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  double mean = cn3 * p;
  double sigma = std::sqrt(mean * (1 - p));
  CHECK(std::abs(inst.m() - mean) < 4 * sigma);
  CHECK_THROWS_AS(gen_unp(10, 1.5, 4, 1), invalid_input);
}

TEST_CASE("serialize round trips byte for byte") {
  Instance empty = gen_unm(4, 0, 4, 1);
  CHECK(serialize(empty) == "p uecsp 3 4 4 0\n");
  Instance one = gen_unm(5, 1, 4, 2);
  CHECK(serialize(one).find("e ") != std::string::npos);

  Instance big = gen_unm(2000, 10000, 4, 4);
  std::string text = serialize(big);
  Instance back = parse(text);
  CHECK(back == big);
  CHECK(serialize(back) == text);
}

TEST_CASE("parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse("q uecsp 3 4 4 0\n"),
                       "line 1: malformed header, expected 'p uecsp k d n m'",
                       parse_error);
  CHECK_THROWS_WITH_AS(parse("p uecsp 3 4 4 1\ne 1 2 9 0\n"),
                       "line 2: variable id out of range", parse_error);
  CHECK_THROWS_WITH_AS(parse("p uecsp 3 4 4 1\ne 1 2 2 0\n"),
                       "line 2: duplicate variable in clause", parse_error);
  CHECK_THROWS_WITH_AS(parse("p uecsp 3 4 4 1\ne 1 2 3 600\n"),
                       "line 2: constraint id out of range", parse_error);
  // comments before the header are allowed
  Instance ok = parse("# generated\np uecsp 3 4 4 1\ne 1 2 3 0\n");
  CHECK(ok.m() == 1);
}

TEST_CASE("degree profile") {
  Instance empty = gen_unm(10, 0, 4, 1);
  auto prof = degree_profile(empty);
  CHECK(prof.histogram.at(0) == 10);

  Instance one = gen_unm(10, 1, 4, 1);
  prof = degree_profile(one);
  CHECK(prof.histogram.at(1) == 3);
  CHECK(prof.histogram.at(0) == 7);

  // Poisson limit: fraction of degree-0 variables ~ e^{-3c}
  const int n = 100000;
  const double cdens = 0.9;
  Instance big = gen_unm(n, static_cast<int>(cdens * n), 4, 8);
  prof = degree_profile(big);
  double frac0 = static_cast<double>(prof.histogram.at(0)) / n;
  CHECK(std::abs(frac0 - std::exp(-3 * cdens)) < 0.01);
}
