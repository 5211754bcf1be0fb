#ifndef UECSP_SOLVER_HPP
#define UECSP_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "uecsp/instance.hpp"

namespace uecsp {

enum class SolveStatus { SAT, UNSAT, UNKNOWN };

struct SolveReport {
  SolveStatus status = SolveStatus::UNKNOWN;
  std::vector<int> witness;  // 1-based values; empty unless SAT
  long long decisions = 0;
  long long propagations = 0;
  bool budget_exhausted = false;
};

// closure under unique-extension forcing: a clause with two assigned
// variables forces the third.  Returns false on conflict.  `partial` is
// 1-based with 0 = unassigned and is updated in place.
bool propagate(const Instance& inst, std::vector<int>& partial,
               long long* propagations = nullptr);

// Unique-extension propagation plus backtracking; branch variable = highest
// degree, values tried in ascending order.  UNSAT only on full exhaustion
// within the decision budget.
SolveReport solve(const Instance& inst, long long budget = 1'000'000);

// exact satisfying-assignment count by exhaustive enumeration (n <= 16)
long long count_solutions(const Instance& inst);

bool assignment_satisfies(const Instance& inst, const std::vector<int>& values);

} // namespace uecsp

#endif
