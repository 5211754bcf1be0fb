#include "uecsp/solver.hpp"

#include <algorithm>

namespace uecsp {

bool assignment_satisfies(const Instance& inst,
                          const std::vector<int>& values) {
  const ConstraintCatalog& cat = ConstraintCatalog::get(inst.d);
  for (const Clause& cl : inst.clauses)
    if (!satisfies(cat.at(cl.cid), values.at(cl.v[0]), values.at(cl.v[1]),
                   values.at(cl.v[2])))
      return false;
  return true;
}

namespace {

struct Occ {
  std::vector<std::vector<int>> by_var;  // variable -> clause indices
  explicit Occ(const Instance& inst) : by_var(inst.n + 1) {
    for (int ci = 0; ci < inst.m(); ++ci)
      for (int i = 0; i < 3; ++i) by_var[inst.clauses[ci].v[i]].push_back(ci);
  }
};

// returns false on conflict; appends forced variables to `trail`
bool propagate_from(const Instance& inst, const Occ& occ,
                    std::vector<int>& values, std::vector<int>& queue,
                    std::vector<int>& trail, long long& props) {
  const ConstraintCatalog& cat = ConstraintCatalog::get(inst.d);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int ci : occ.by_var[v]) {
      const Clause& cl = inst.clauses[ci];
      int a = values[cl.v[0]], b = values[cl.v[1]], g = values[cl.v[2]];
      int unassigned = (a == 0) + (b == 0) + (g == 0);
      if (unassigned >= 2) continue;
      const Constraint& con = cat.at(cl.cid);
      if (unassigned == 0) {
        if (!satisfies(con, a, b, g)) return false;
        continue;
      }
      int pos = a == 0 ? 1 : (b == 0 ? 2 : 3);
      int k1, k2;
      if (pos == 1) {
        k1 = b;
        k2 = g;
      } else if (pos == 2) {
        k1 = a;
        k2 = g;
      } else {
        k1 = a;
        k2 = b;
      }
      int w = cl.v[pos - 1];
      int forced = extend(con, pos, k1, k2);
      ++props;
      values[w] = forced;
      trail.push_back(w);
      queue.push_back(w);
    }
  }
  return true;
}

struct Searcher {
  const Instance& inst;
  const Occ occ;
  std::vector<int> values;
  std::vector<int> order;  // variables sorted by descending degree
  long long budget;
  long long decisions = 0, propagations = 0;
  bool exhausted_budget = false;

  explicit Searcher(const Instance& i, long long b)
      : inst(i), occ(i), values(i.n + 1, 0), budget(b) {
    std::vector<int> deg(inst.n + 1, 0);
    for (const Clause& cl : inst.clauses)
      for (int j = 0; j < 3; ++j) ++deg[cl.v[j]];
    order.resize(inst.n);
    for (int v = 1; v <= inst.n; ++v) order[v - 1] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return deg[x] > deg[y]; });
  }

  int pick_unassigned() const {
    for (int v : order)
      if (values[v] == 0) return v;
    return 0;
  }

  // returns SAT found / exhausted-subtree / budget-stop via status
  enum class R { SAT, EXHAUSTED, STOPPED };

  R dfs() {
    int v = pick_unassigned();
    if (v == 0) return R::SAT;
    for (int val = 1; val <= inst.d; ++val) {
      if (decisions >= budget) {
        exhausted_budget = true;
        return R::STOPPED;
      }
      ++decisions;
      std::vector<int> trail;
      values[v] = val;
      trail.push_back(v);
      std::vector<int> queue{v};
      bool ok = propagate_from(inst, occ, values, queue, trail, propagations);
      if (ok) {
        R r = dfs();
        if (r != R::EXHAUSTED) return r;
      }
      for (int w : trail) values[w] = 0;
    }
    return R::EXHAUSTED;
  }
};

}  // namespace

bool propagate(const Instance& inst, std::vector<int>& partial,
               long long* propagations) {
  for (int v = 1; v <= inst.n; ++v)
    if (partial.at(v) < 0 || partial.at(v) > inst.d)
      throw invalid_input("partial assignment value out of range");
  Occ occ(inst);
  long long props = 0;
  std::vector<int> queue, trail;
  for (int v = 1; v <= inst.n; ++v)
    if (partial[v] != 0) queue.push_back(v);
  // also catch fully-assigned violated clauses with no assigned neighbors
  bool ok = propagate_from(inst, occ, partial, queue, trail, props);
  if (propagations) *propagations = props;
  return ok;
}

SolveReport solve(const Instance& inst, long long budget) {
  if (budget < 0) throw invalid_input("negative budget");
  SolveReport rep;
  Searcher s(inst, budget);
  // top-level propagation of any unit structure is a no-op here (nothing
  // assigned), so the search starts clean
  Searcher::R r = s.dfs();
  rep.decisions = s.decisions;
  rep.propagations = s.propagations;
  rep.budget_exhausted = s.exhausted_budget;
  if (r == Searcher::R::SAT) {
    rep.status = SolveStatus::SAT;
    rep.witness = s.values;
    if (!assignment_satisfies(inst, rep.witness))
      throw std::logic_error("internal: witness fails verification");
  } else if (r == Searcher::R::EXHAUSTED) {
    rep.status = SolveStatus::UNSAT;
  } else {
    rep.status = SolveStatus::UNKNOWN;
  }
  return rep;
}

long long count_solutions(const Instance& inst) {
  if (inst.n > 16) throw invalid_input("count_solutions limited to n <= 16");
  const ConstraintCatalog& cat = ConstraintCatalog::get(inst.d);
  // clauses indexed by their highest variable so each is checked as soon as
  // fully assigned
  std::vector<std::vector<int>> by_max(inst.n + 1);
  for (int ci = 0; ci < inst.m(); ++ci) {
    const Clause& cl = inst.clauses[ci];
    by_max[std::max({cl.v[0], cl.v[1], cl.v[2]})].push_back(ci);
  }
  std::vector<int> values(inst.n + 1, 0);
  long long count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > inst.n) {
      ++count;
      return;
    }
    for (int val = 1; val <= inst.d; ++val) {
      values[v] = val;
      bool ok = true;
      for (int ci : by_max[v]) {
        const Clause& cl = inst.clauses[ci];
        if (!satisfies(cat.at(cl.cid), values[cl.v[0]], values[cl.v[1]],
                       values[cl.v[2]])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
    values[v] = 0;
  };
  rec(rec, 1);
  return count;
}

} // namespace uecsp
