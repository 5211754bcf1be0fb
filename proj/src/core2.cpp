#include "uecsp/core2.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace uecsp {

static PeelTrace peel(const Instance& inst, bool lowest_first) {
  const int n = inst.n;
  const int m = inst.m();
  std::vector<int> degree(n + 1, 0);
  std::vector<std::vector<int>> occ(n + 1);  // variable -> clause indices
  for (int ci = 0; ci < m; ++ci)
    for (int i = 0; i < 3; ++i) {
      int v = inst.clauses[ci].v[i];
      ++degree[v];
      occ[v].push_back(ci);
    }

  std::vector<char> var_dead(n + 1, 0), clause_dead(m, 0);
  std::set<int> pending;  // variables with current degree <= 1
  for (int v = 1; v <= n; ++v)
    if (degree[v] <= 1) pending.insert(v);

  PeelTrace trace;
  while (!pending.empty()) {
    int v = lowest_first ? *pending.begin() : *pending.rbegin();
    pending.erase(v);
    if (var_dead[v]) continue;
    var_dead[v] = 1;
    PeelStep step{v, std::nullopt};
    for (int ci : occ[v]) {
      if (clause_dead[ci]) continue;
      step.clause_idx = ci;
      clause_dead[ci] = 1;
      for (int i = 0; i < 3; ++i) {
        int w = inst.clauses[ci].v[i];
        if (w == v || var_dead[w]) continue;
        if (--degree[w] <= 1) pending.insert(w);
      }
    }
    trace.order.push_back(step);
  }

  // assemble the core with a compact renumbering
  std::vector<int> new_id(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (!var_dead[v]) {
      new_id[v] = static_cast<int>(trace.core_var_old.size()) + 1;
      trace.core_var_old.push_back(v);
    }
  trace.core.k = inst.k;
  trace.core.d = inst.d;
  trace.core.n = static_cast<int>(trace.core_var_old.size());
  for (int ci = 0; ci < m; ++ci) {
    if (clause_dead[ci]) continue;
    Clause cl = inst.clauses[ci];
    for (int i = 0; i < 3; ++i) cl.v[i] = new_id[cl.v[i]];
    trace.core.clauses.push_back(cl);
    trace.core_clause_old.push_back(ci);
  }
  trace.core_var_old.insert(trace.core_var_old.begin(), 0);  // 1-based
  return trace;
}

PeelTrace strip_2core(const Instance& inst) { return peel(inst, true); }
PeelTrace strip_2core_reversed(const Instance& inst) {
  return peel(inst, false);
}

std::vector<int> extend_assignment(const Instance& inst,
                                   const PeelTrace& trace,
                                   const std::vector<int>& core_assignment) {
  const ConstraintCatalog& cat = ConstraintCatalog::get(inst.d);
  std::vector<int> full(inst.n + 1, 0);
  // core values back onto original ids
  for (int nv = 1; nv <= trace.core.n; ++nv) {
    int val = core_assignment.at(nv);
    if (val < 1 || val > inst.d)
      throw contract_violation("core assignment value out of range");
    full[trace.core_var_old[nv]] = val;
  }
  // verify the premise: the core assignment satisfies the core
  for (const Clause& cl : trace.core.clauses)
    if (!satisfies(cat.at(cl.cid), core_assignment.at(cl.v[0]),
                   core_assignment.at(cl.v[1]), core_assignment.at(cl.v[2])))
      throw contract_violation("core assignment does not satisfy the core");

  for (auto it = trace.order.rbegin(); it != trace.order.rend(); ++it) {
    if (!it->clause_idx) {
      full[it->var] = 1;
      continue;
    }
    const Clause& cl = inst.clauses[*it->clause_idx];
    const Constraint& con = cat.at(cl.cid);
    int pos = cl.v[0] == it->var ? 1 : (cl.v[1] == it->var ? 2 : 3);
    int other1, other2;
    if (pos == 1) {
      other1 = cl.v[1];
      other2 = cl.v[2];
    } else if (pos == 2) {
      other1 = cl.v[0];
      other2 = cl.v[2];
    } else {
      other1 = cl.v[0];
      other2 = cl.v[1];
    }
    if (full[other1] == 0 || full[other2] == 0)
      throw contract_violation("restoration order violated");
    full[it->var] = extend(con, pos, full[other1], full[other2]);
  }
  return full;
}

UniformityReport core_uniformity_check(int n, int m, int d, int trials,
                                       uint64_t seed) {
  UniformityReport rep;
  if (trials < 100) return rep;

  // first pass: find the modal non-empty core size
  std::map<std::pair<int, int>, int> sizes;
  for (int t = 0; t < trials; ++t) {
    Instance inst = gen_unm(n, m, d, derive_seed(seed, t));
    PeelTrace tr = strip_2core(inst);
    if (tr.core.n > 0) ++sizes[{tr.core.n, tr.core.m()}];
  }
  if (sizes.empty()) return rep;  // all cores empty: trivially uniform
  auto best = std::max_element(
      sizes.begin(), sizes.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  rep.core_n = best->first.first;
  rep.core_m = best->first.second;

  const int max_deg = 8;  // degrees >= max_deg pooled
  std::vector<long long> peel_hist(max_deg + 1, 0),
      direct_hist(max_deg + 1, 0);

  for (int t = 0; t < trials; ++t) {
    Instance inst = gen_unm(n, m, d, derive_seed(seed, t));
    PeelTrace tr = strip_2core(inst);
    if (tr.core.n != rep.core_n || tr.core.m() != rep.core_m) continue;
    ++rep.peel_samples;
    for (auto& [deg, cnt] : degree_profile(tr.core).histogram)
      peel_hist[std::min(deg, max_deg)] += cnt;
  }

  // rejection sampling of Psi_{n',m'}: uniform instances conditioned on
  // minimum degree two
  SplitMix64 seeder(derive_seed(seed, 0x9999));
  long long attempts = 0, max_attempts = 400LL * trials;
  while (rep.direct_samples < rep.peel_samples && attempts < max_attempts) {
    ++attempts;
    Instance inst = gen_unm(rep.core_n, rep.core_m, d, seeder.next());
    DegreeProfile prof = degree_profile(inst);
    if (prof.histogram.count(0) || prof.histogram.count(1)) continue;
    ++rep.direct_samples;
    for (auto& [deg, cnt] : prof.histogram)
      direct_hist[std::min(deg, max_deg)] += cnt;
  }
  if (rep.direct_samples < 50 || rep.peel_samples < 50) return rep;

  // two-sample chi-square over pooled degree bins
  double stat = 0.0;
  int dof = 0;
  double tot1 = static_cast<double>(rep.peel_samples) * rep.core_n;
  double tot2 = static_cast<double>(rep.direct_samples) * rep.core_n;
  for (int dgr = 2; dgr <= max_deg; ++dgr) {
    double o1 = static_cast<double>(peel_hist[dgr]);
    double o2 = static_cast<double>(direct_hist[dgr]);
    if (o1 + o2 < 10) continue;
    double k1 = std::sqrt(tot2 / tot1), k2 = std::sqrt(tot1 / tot2);
    stat += (k1 * o1 - k2 * o2) * (k1 * o1 - k2 * o2) / (o1 + o2);
    ++dof;
  }
  if (dof <= 1) return rep;
  --dof;  // totals matched
  rep.chi_square = stat;
  rep.dof = dof;

  // p-value via the regularized upper incomplete gamma Q(dof/2, stat/2)
  auto gammaq = [](double a, double x) {
    if (x <= 0) return 1.0;
    auto gln = std::lgamma(a);
    if (x < a + 1.0) {  // series for P, return 1-P
      double ap = a, sum = 1.0 / a, del = sum;
      for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-14) break;
      }
      return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q
    double b = x + 1.0 - a, c = 1e300, dd = 1.0 / b, h = dd;
    for (int i = 1; i <= 500; ++i) {
      double an = -i * (i - a);
      b += 2.0;
      dd = an * dd + b;
      if (std::fabs(dd) < 1e-300) dd = 1e-300;
      c = b + an / c;
      if (std::fabs(c) < 1e-300) c = 1e-300;
      dd = 1.0 / dd;
      double del = dd * c;
      h *= del;
      if (std::fabs(del - 1.0) < 1e-14) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
  };
  rep.p_value = gammaq(dof / 2.0, stat / 2.0);
  rep.inconclusive = false;
  return rep;
}

} // namespace uecsp
