#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "uecsp/constraints.hpp"

using namespace uecsp;

TEST_CASE("unique extendibility test on small tables") {
  CHECK(is_uniquely_extendible(2, {1, 2, 2, 1}));       // XOR
  CHECK_FALSE(is_uniquely_extendible(2, {1, 1, 1, 1})); // constant
  // cyclic group table: rows and columns are permutations
  std::vector<int> cyc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) cyc.push_back((a + b) % 4 + 1);
  CHECK(is_uniquely_extendible(4, cyc));
  // identity rows z_{ab} = b repeat values down every column: not a Latin
  // square, and the first-position extension is not unique
  std::vector<int> ident;
  for (int a = 0; a < 4; ++a)
    for (int b = 1; b <= 4; ++b) ident.push_back(b);
  CHECK_FALSE(is_uniquely_extendible(4, ident));
  CHECK_THROWS_AS(is_uniquely_extendible(2, {1, 2, 5, 1}), invalid_input);
}

TEST_CASE("catalog sizes from independent brute force") {
  CHECK(enumerate(2).q() == 2);

  // d=3 oracle: filter all 3^9 tables
  int count3 = 0;
  std::vector<int> t(9);
  for (int code = 0; code < 19683; ++code) {
    int x = code;
    for (int i = 0; i < 9; ++i) {
      t[i] = x % 3 + 1;
      x /= 3;
    }
    if (is_uniquely_extendible(3, t)) ++count3;
  }
  CHECK(count3 == 12);
  CHECK(enumerate(3).q() == 12);

  // d=4 oracle: all quadruples of row permutations, filtered by columns
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int count4 = 0;
  std::vector<int> tbl(16);
  for (const auto& r0 : perms)
    for (const auto& r1 : perms)
      for (const auto& r2 : perms)
        for (const auto& r3 : perms) {
          for (int b = 0; b < 4; ++b) {
            tbl[b] = r0[b];
            tbl[4 + b] = r1[b];
            tbl[8 + b] = r2[b];
            tbl[12 + b] = r3[b];
          }
          bool cols = true;
          for (int b = 0; b < 4 && cols; ++b) {
            unsigned seen = 0;
            for (int a = 0; a < 4; ++a) seen |= 1u << (tbl[a * 4 + b] - 1);
            cols = seen == 0b1111u;
          }
          if (cols) ++count4;
        }
  CHECK(count4 == 576);
  CHECK(enumerate(4).q() == 576);

  CHECK_THROWS_AS(enumerate(6), unsupported_domain);
  CHECK_THROWS_AS(enumerate(1), unsupported_domain);
}

TEST_CASE("golden hash of the d=4 catalog") {
  // constraint ids are part of the file format; the canonical catalog
  // must never change
  CHECK(enumerate(4).content_hash() == 0x08e7deec37319925ull);
  CHECK(enumerate(4).content_hash() == ConstraintCatalog::get(4).content_hash());
}

TEST_CASE("catalog order and round trips") {
  const ConstraintCatalog& cat = enumerate(4);
  // strictly increasing row-major lexicographic order
  for (int i = 1; i < cat.q(); ++i)
    CHECK(std::lexicographical_compare(cat.at(i - 1).raw().begin(),
                                       cat.at(i - 1).raw().end(),
                                       cat.at(i).raw().begin(),
                                       cat.at(i).raw().end()));
  // every entry passes the filter
  for (int i = 0; i < cat.q(); ++i) {
    std::vector<int> t;
    for (uint8_t b : cat.at(i).raw()) t.push_back(b + 1);
    CHECK(is_uniquely_extendible(4, t));
  }
}

TEST_CASE("extend and satisfies agree in all directions") {
  const ConstraintCatalog& cat = enumerate(4);
  for (int id = 0; id < cat.q(); id += 7) {
    const Constraint& c = cat.at(id);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        int g = c.forced(a, b);
        CHECK(satisfies(c, a, b, g));
        CHECK(extend(c, 3, a, b) == g);
        CHECK(extend(c, 2, a, g) == b);
        CHECK(extend(c, 1, b, g) == a);
        // at-most-one-extendibility: any single-coordinate change breaks it
        for (int v = 1; v <= 4; ++v) {
          if (v != g) CHECK_FALSE(satisfies(c, a, b, v));
          if (v != b) CHECK_FALSE(satisfies(c, a, v, g));
          if (v != a) CHECK_FALSE(satisfies(c, v, b, g));
        }
      }
  }
  // exactly one satisfying g per (a,b)
  const Constraint& c0 = cat.at(0);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      int hits = 0;
      for (int g = 1; g <= 4; ++g) hits += satisfies(c0, a, b, g);
      CHECK(hits == 1);
    }
}

TEST_CASE("XOR table lookups") {
  const ConstraintCatalog& cat = enumerate(2);
  // [[1,2],[2,1]] is the first catalog entry
  const Constraint& x = cat.at(0);
  CHECK(x.forced(1, 1) == 1);
  CHECK(extend(x, 3, 1, 2) == 2);
  CHECK(extend(x, 1, 2, 2) == 1);
  CHECK(satisfies(x, 1, 2, 2));
  CHECK_FALSE(satisfies(x, 1, 2, 1));
}

TEST_CASE("pair satisfaction fractions, exact") {
  CHECK(pair_sat_fraction(4, 0b111) == make_rational(1, 4));
  CHECK(pair_sat_fraction(4, 0b011) == make_rational(0, 1));
  CHECK(pair_sat_fraction(4, 0b101) == make_rational(0, 1));
  CHECK(pair_sat_fraction(4, 0b110) == make_rational(0, 1));
  CHECK(pair_sat_fraction(4, 0b001) == make_rational(1, 12));
  CHECK(pair_sat_fraction(4, 0b010) == make_rational(1, 12));
  CHECK(pair_sat_fraction(4, 0b100) == make_rational(1, 12));
  CHECK(pair_sat_fraction(4, 0b000) == make_rational(1, 18));
}

TEST_CASE("pair fraction independent of the value choices") {
  // exhaustive: every base triple and every choice of disagreeing values
  const ConstraintCatalog& cat = enumerate(4);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<long long> seen;
    int s[3], t[3];
    for (s[0] = 1; s[0] <= 4; ++s[0])
      for (s[1] = 1; s[1] <= 4; ++s[1])
        for (s[2] = 1; s[2] <= 4; ++s[2])
          for (t[0] = 1; t[0] <= 4; ++t[0])
            for (t[1] = 1; t[1] <= 4; ++t[1])
              for (t[2] = 1; t[2] <= 4; ++t[2]) {
                bool fits = true;
                for (int i = 0; i < 3; ++i) {
                  bool agree = (mask >> i) & 1;
                  if (agree != (s[i] == t[i])) fits = false;
                }
                if (!fits) continue;
                long long hits = 0;
                for (const Constraint& c : cat.list())
                  if (satisfies(c, s[0], s[1], s[2]) &&
                      satisfies(c, t[0], t[1], t[2]))
                    ++hits;
                seen.insert(hits);
              }
    CHECK(seen.size() == 1);
  }
}

TEST_CASE("uniform sampling frequencies") {
  const ConstraintCatalog& cat = enumerate(4);
  SplitMix64 rng(42);
  const int draws = 1'000'000;
  std::vector<int> freq(cat.q(), 0);
  for (int i = 0; i < draws; ++i) ++freq[cat.sample_uniform(rng)];
  // each id within 5 sigma of the binomial mean
  double mean = static_cast<double>(draws) / cat.q();
  double sigma = std::sqrt(mean * (1.0 - 1.0 / cat.q()));
  for (int id = 0; id < cat.q(); ++id)
    CHECK(std::abs(freq[id] - mean) < 5 * sigma);
  // determinism
  SplitMix64 a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(cat.sample_uniform(a) == cat.sample_uniform(b));
}
