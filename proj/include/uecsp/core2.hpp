#ifndef UECSP_CORE2_HPP
#define UECSP_CORE2_HPP

#include <optional>
#include <vector>

#include "uecsp/instance.hpp"

namespace uecsp {

struct contract_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One deletion event of the CORE procedure: a variable of degree <= 1 and
// the clause (original index) deleted with it, if any.
struct PeelStep {
  int var;                        // original 1-based id
  std::optional<int> clause_idx;  // index into the original clause list
};

struct PeelTrace {
  std::vector<PeelStep> order;  // deletions, in the order performed
  Instance core;                // surviving subformula, variables renumbered
  std::vector<int> core_var_old;  // new id (1-based) -> original id
  std::vector<int> core_clause_old;  // core clause index -> original index

  int core_n() const { return core.n; }
  int core_m() const { return core.m(); }
};

// CORE: repeatedly delete the lowest-id variable occurring in at most one
// clause, together with that clause.  The output is the unique 2-core; the
// deletion order is recorded for constructive extension.
PeelTrace strip_2core(const Instance& inst);

// same procedure with highest-id tie-breaking, for the order-independence test
PeelTrace strip_2core_reversed(const Instance& inst);

// Extend a satisfying assignment of the core (indexed by core variable ids)
// to the full instance: deleted variables are restored in reverse order, each
// forced by its deleted clause, or set to 1 if it had none.
// values vectors are 1-based (index 0 unused); unassigned entries are 0.
std::vector<int> extend_assignment(const Instance& inst, const PeelTrace& trace,
                                   const std::vector<int>& core_assignment);

// Monte Carlo check that the 2-core, conditioned on its size, is uniform
// over the minimum-degree-2 ensemble: compares core degree histograms of
// peeled U_{n,m} against direct rejection samples of Psi_{n',m'}.
struct UniformityReport {
  int core_n = 0, core_m = 0;
  long long peel_samples = 0, direct_samples = 0;
  double chi_square = 0.0;
  int dof = 0;
  double p_value = 1.0;
  bool inconclusive = true;
};

UniformityReport core_uniformity_check(int n, int m, int d, int trials,
                                       uint64_t seed);

} // namespace uecsp

#endif
