#include "uecsp/instance.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace uecsp {

Instance gen_unm(int n, int m, int d, uint64_t seed) {
  if (n < 3) throw invalid_input("gen_unm needs n >= 3");
  if (m < 0) throw invalid_input("gen_unm needs m >= 0");
  const ConstraintCatalog& cat = ConstraintCatalog::get(d);
  SplitMix64 rng(seed);
  Instance inst;
  inst.d = d;
  inst.n = n;
  inst.clauses.reserve(m);
  for (int i = 0; i < m; ++i) {
    Clause cl;
    cl.v[0] = static_cast<int>(rng.below(n)) + 1;
    do {
      cl.v[1] = static_cast<int>(rng.below(n)) + 1;
    } while (cl.v[1] == cl.v[0]);
    do {
      cl.v[2] = static_cast<int>(rng.below(n)) + 1;
    } while (cl.v[2] == cl.v[0] || cl.v[2] == cl.v[1]);
    cl.cid = static_cast<int>(rng.below(cat.q()));
    inst.clauses.push_back(cl);
  }
  return inst;
}

Instance gen_unp(int n, double p, int d, uint64_t seed) {
  if (n < 3) throw invalid_input("gen_unp needs n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_input("p outside [0,1]");
  const ConstraintCatalog& cat = ConstraintCatalog::get(d);
  SplitMix64 rng(seed);
  Instance inst;
  inst.d = d;
  inst.n = n;
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int a = 1; a <= n - 2; ++a)
    for (int b = a + 1; b <= n - 1; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (rng.u01() >= p) continue;
        int trip[3] = {a, b, c};
        const int* pm = perms[rng.below(6)];
        Clause cl;
        cl.v[0] = trip[pm[0]];
        cl.v[1] = trip[pm[1]];
        cl.v[2] = trip[pm[2]];
        cl.cid = static_cast<int>(rng.below(cat.q()));
        inst.clauses.push_back(cl);
      }
  return inst;
}

std::string serialize(const Instance& inst) {
  std::string out;
  char buf[96];
  std::snprintf(buf, sizeof buf, "p uecsp %d %d %d %d\n", inst.k, inst.d,
                inst.n, inst.m());
  out += buf;
  for (const Clause& cl : inst.clauses) {
    std::snprintf(buf, sizeof buf, "e %d %d %d %d\n", cl.v[0], cl.v[1],
                  cl.v[2], cl.cid);
    out += buf;
  }
  return out;
}

static parse_error at_line(int line, const std::string& what) {
  return parse_error("line " + std::to_string(line) + ": " + what);
}

Instance parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Instance inst;
  bool have_header = false;
  int q = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw at_line(lineno, "empty line");
    if (line[0] == '#') {
      if (have_header) throw at_line(lineno, "comment after header");
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!have_header) {
      std::string fmt;
      int k = 0, d = 0, n = 0, m = 0;
      if (tag != "p" || !(ls >> fmt >> k >> d >> n >> m) || fmt != "uecsp")
        throw at_line(lineno, "malformed header, expected 'p uecsp k d n m'");
      if (k != 3) throw at_line(lineno, "only k=3 supported");
      if (d < 2 || d > 5) throw at_line(lineno, "domain size outside 2..5");
      if (n < 0 || m < 0) throw at_line(lineno, "negative n or m");
      inst.k = k;
      inst.d = d;
      inst.n = n;
      inst.clauses.reserve(m);
      q = ConstraintCatalog::get(d).q();
      have_header = true;
      continue;
    }
    if (tag != "e") throw at_line(lineno, "expected clause line 'e ...'");
    Clause cl;
    if (!(ls >> cl.v[0] >> cl.v[1] >> cl.v[2] >> cl.cid))
      throw at_line(lineno, "malformed clause line");
    std::string rest;
    if (ls >> rest) throw at_line(lineno, "trailing tokens on clause line");
    for (int i = 0; i < 3; ++i)
      if (cl.v[i] < 1 || cl.v[i] > inst.n)
        throw at_line(lineno, "variable id out of range");
    if (cl.v[0] == cl.v[1] || cl.v[0] == cl.v[2] || cl.v[1] == cl.v[2])
      throw at_line(lineno, "duplicate variable in clause");
    if (cl.cid < 0 || cl.cid >= q)
      throw at_line(lineno, "constraint id out of range");
    inst.clauses.push_back(cl);
  }
  if (!have_header) throw parse_error("line 1: missing header");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open " + path + " for writing");
  out << serialize(inst);
}

DegreeProfile degree_profile(const Instance& inst) {
  std::vector<long long> deg(inst.n + 1, 0);
  for (const Clause& cl : inst.clauses)
    for (int i = 0; i < 3; ++i) ++deg[cl.v[i]];
  DegreeProfile p;
  for (int v = 1; v <= inst.n; ++v) ++p.histogram[static_cast<int>(deg[v])];
  return p;
}

} // namespace uecsp
