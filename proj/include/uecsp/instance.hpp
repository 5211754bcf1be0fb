#ifndef UECSP_INSTANCE_HPP
#define UECSP_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "uecsp/constraints.hpp"

namespace uecsp {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Clause {
  int v[3];  // 1-based variable ids, pairwise distinct
  int cid;   // index into the canonical catalog for d
  bool operator==(const Clause&) const = default;
};

// A (3,d)-UE-CSP instance.  Clauses are ordered (the constraint table is
// orientation sensitive) and sampled with replacement: the paper's Omega
// counts clauses via "places", leaving multiset-vs-set ambiguous, and
// duplicates occur with probability O(m^2/n^3), so the multiset choice
// matches the asymptotics.  This is the documented model.
struct Instance {
  int k = 3;
  int d = 4;
  int n = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  bool operator==(const Instance&) const = default;
};

struct DegreeProfile {
  std::map<int, long long> histogram; // degree -> count of variables
};

// m clauses, each an independently uniform ordered triple of distinct
// variables with an independently uniform constraint id
Instance gen_unm(int n, int m, int d, uint64_t seed);

// every unordered variable triple kept with probability p, given a uniform
// random order and constraint
Instance gen_unp(int n, double p, int d, uint64_t seed);

std::string serialize(const Instance& inst);
Instance parse(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

DegreeProfile degree_profile(const Instance& inst);

} // namespace uecsp

#endif
