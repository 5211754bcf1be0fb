#ifndef UECSP_CONSTRAINTS_HPP
#define UECSP_CONSTRAINTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uecsp/rng.hpp"

namespace uecsp {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_domain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational, reduced, for the pair-satisfaction fractions.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};
Rational make_rational(long long num, long long den);

// A uniquely extendible constraint of arity 3 over {1..d}: a d x d Latin
// square giving the forced third value.  table(a,b) is stored 0-based
// internally; domain values are 1-based at the API surface.
class Constraint {
public:
  Constraint(int d, std::vector<uint8_t> table) : d_(d), t_(std::move(table)) {}

  int d() const { return d_; }
  // forced third value for first two values a, b (all 1-based)
  int forced(int a, int b) const { return t_[(a - 1) * d_ + (b - 1)] + 1; }

  const std::vector<uint8_t>& raw() const { return t_; }

private:
  int d_;
  std::vector<uint8_t> t_; // row-major, 0-based values
};

// row and column permutation test == unique extendibility for arity 3
bool is_uniquely_extendible(int d, const std::vector<int>& table);

// Catalog of all order-d Latin squares in ascending row-major
// lexicographic order.  The index of a constraint in `list` is its id,
// which is part of the instance file format.
class ConstraintCatalog {
public:
  static const ConstraintCatalog& get(int d); // cached, immutable

  int d() const { return d_; }
  int q() const { return static_cast<int>(list_.size()); }
  const Constraint& at(int id) const { return list_[id]; }
  const std::vector<Constraint>& list() const { return list_; }

  int sample_uniform(SplitMix64& rng) const {
    return static_cast<int>(rng.below(list_.size()));
  }

  // FNV-1a over the concatenated raw tables, for the golden-hash test
  uint64_t content_hash() const;

private:
  explicit ConstraintCatalog(int d);
  int d_;
  std::vector<Constraint> list_;
};

ConstraintCatalog enumerate(int d);

// unique value completing a satisfying triple; missing_position in {1,2,3},
// known = the two assigned values in clause order
int extend(const Constraint& c, int missing_position, int known1, int known2);

bool satisfies(const Constraint& c, int a, int b, int g);

// Fraction of order-d constraints satisfied by both of two assignments that
// agree exactly on `agreement` (bitmask over positions 1..3, bit i-1 set =
// values agree at position i).  Independent of the concrete disagreeing
// values; asserted in tests.
Rational pair_sat_fraction(int d, unsigned agreement_mask);

} // namespace uecsp

#endif
