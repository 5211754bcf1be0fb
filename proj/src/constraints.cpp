#include "uecsp/constraints.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace uecsp {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational{num, den};
}

bool is_uniquely_extendible(int d, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != d * d)
    throw invalid_input("table size does not match domain");
  for (int v : table)
    if (v < 1 || v > d) throw invalid_input("table entry out of range");
  for (int a = 0; a < d; ++a) {
    unsigned row = 0, col = 0;
    for (int b = 0; b < d; ++b) {
      row |= 1u << (table[a * d + b] - 1);
      col |= 1u << (table[b * d + a] - 1);
    }
    unsigned full = (d == 32) ? ~0u : ((1u << d) - 1);
    if (row != full || col != full) return false;
  }
  return true;
}

// Enumerate Latin squares row by row; rows tried in lexicographic order of
// their own values, which yields ascending row-major table order overall.
static void enumerate_rows(int d, int row, std::vector<uint8_t>& table,
                           std::vector<unsigned>& col_used,
                           std::vector<Constraint>& out) {
  if (row == d) {
    out.emplace_back(d, table);
    return;
  }
  std::vector<uint8_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int b = 0; b < d; ++b)
      if (col_used[b] & (1u << perm[b])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int b = 0; b < d; ++b) {
      table[row * d + b] = perm[b];
      col_used[b] |= 1u << perm[b];
    }
    enumerate_rows(d, row + 1, table, col_used, out);
    for (int b = 0; b < d; ++b) col_used[b] &= ~(1u << perm[b]);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

ConstraintCatalog::ConstraintCatalog(int d) : d_(d) {
  if (d < 2 || d > 5)
    throw unsupported_domain("domain size outside supported range 2..5");
  std::vector<uint8_t> table(d * d, 0);
  std::vector<unsigned> col_used(d, 0);
  enumerate_rows(d, 0, table, col_used, list_);
}

const ConstraintCatalog& ConstraintCatalog::get(int d) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<ConstraintCatalog>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(d);
  if (it == cache.end())
    it = cache.emplace(d, std::unique_ptr<ConstraintCatalog>(
                              new ConstraintCatalog(d)))
             .first;
  return *it->second;
}

uint64_t ConstraintCatalog::content_hash() const {
  uint64_t h = 0xCBF29CE484222325ull;
  for (const Constraint& c : list_)
    for (uint8_t b : c.raw()) {
      h ^= b;
      h *= 0x100000001B3ull;
    }
  return h;
}

ConstraintCatalog enumerate(int d) { return ConstraintCatalog::get(d); }

int extend(const Constraint& c, int missing_position, int known1, int known2) {
  int d = c.d();
  if (known1 < 1 || known1 > d || known2 < 1 || known2 > d)
    throw invalid_input("known value out of range");
  switch (missing_position) {
    case 3:
      return c.forced(known1, known2);
    case 2: { // find b with table[a][b] = z, a = known1, z = known2
      for (int b = 1; b <= d; ++b)
        if (c.forced(known1, b) == known2) return b;
      break;
    }
    case 1: { // find a with table[a][b] = z, b = known1, z = known2
      for (int a = 1; a <= d; ++a)
        if (c.forced(a, known1) == known2) return a;
      break;
    }
    default:
      throw invalid_input("missing_position must be 1, 2 or 3");
  }
  // unreachable for a Latin square: rows and columns are permutations
  throw invalid_input("constraint table is not uniquely extendible");
}

bool satisfies(const Constraint& c, int a, int b, int g) {
  int d = c.d();
  if (a < 1 || a > d || b < 1 || b > d || g < 1 || g > d)
    throw invalid_input("triple value out of range");
  return c.forced(a, b) == g;
}

Rational pair_sat_fraction(int d, unsigned agreement_mask) {
  const ConstraintCatalog& cat = ConstraintCatalog::get(d);
  // fixed representative pair: sigma = (1,1,1); tau differs at the
  // non-agreeing positions (value 2).  The result does not depend on these
  // choices; the property test sweeps all of them.
  int s[3] = {1, 1, 1};
  int t[3];
  for (int i = 0; i < 3; ++i) t[i] = (agreement_mask & (1u << i)) ? s[i] : 2;
  long long hits = 0;
  for (const Constraint& c : cat.list())
    if (satisfies(c, s[0], s[1], s[2]) && satisfies(c, t[0], t[1], t[2]))
      ++hits;
  return make_rational(hits, cat.q());
}

} // namespace uecsp
