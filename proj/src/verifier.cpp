#include "uecsp/verifier.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uecsp {
namespace detail {

using ia::I;
using ia::pt;

static I clamp01(const I& a) {
  double lo = a.lo < 0 ? 0 : a.lo;
  double hi = a.hi > 1 ? 1 : a.hi;
  if (lo > hi) throw ia::ia_domain_error("interval outside [0,1]");
  return I(lo, hi);
}

I F_interval(const I& C, const I& A0, const I& R0, const I& T0, const I& X,
             const I& Y, const I& Z) {
  const I& LN2 = ia::ln2_i();
  const I& LN3 = ia::ln3_i();
  const I& LN4 = ia::ln4_i();
  I A = clamp01(A0), R = clamp01(R0), T = clamp01(T0);
  I u = 1.0 - 3.0 * R + 2.0 * T;  // 1-3r+2t
  I v = R - T;
  I F = LN4 - C * LN4 + (1.0 - A) * LN3 - C * (2.0 + T - 3.0 * R) * LN3 +
        C * ia::clamp_nonneg(u) * LN2 - ia::xlnx_I(A) - ia::xlnx_I(1.0 - A) -
        C * ia::xlnx_I(u) - 3.0 * C * ia::xlnx_I(v) - C * ia::xlnx_I(T) +
        3.0 * C * ia::xlnx_I(R) + 3.0 * C * ia::xlnx_I(1.0 - R);
  F = F + ia::upsilon_I(ia::clamp_nonneg(X)) -
      A * ia::upsilon_I(ia::clamp_nonneg(Z)) -
      (1.0 - A) * ia::upsilon_I(ia::clamp_nonneg(Y));
  return F;
}

namespace {

void hexf(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, " %a", v);
  out += buf;
}

struct SliceResult {
  double min_margin = std::numeric_limits<double>::infinity();
  long long bounded = 0, excluded = 0, infeasible = 0;
  bool failed = false;
  std::string failure;
  std::string cert;
};

struct BoundaryWorker {
  const CaseDef& cd;
  const VerifyConfig& cfg;
  SliceResult res;
  bool want_cert;

  void record(char tag, const Box& b, const I* fb, double margin) {
    if (!want_cert) return;
    res.cert += 'B' == tag ? "B" : (tag == 'X' ? "X" : "N");
    char head[16];
    std::snprintf(head, sizeof head, " %d %d", cd.id, cd.nparams);
    res.cert += head;
    hexf(res.cert, b.c.lo);
    hexf(res.cert, b.c.hi);
    if (cd.nparams >= 1) {
      hexf(res.cert, b.p1.lo);
      hexf(res.cert, b.p1.hi);
    }
    if (cd.nparams >= 2) {
      hexf(res.cert, b.p2.lo);
      hexf(res.cert, b.p2.hi);
    }
    if (tag == 'B') {
      hexf(res.cert, fb->lo);
      hexf(res.cert, fb->hi);
      hexf(res.cert, margin);
    }
    res.cert += '\n';
  }

  void process(const Box& in) {
    if (res.failed) return;
    Box b = in;
    // feasibility clip
    bool maybe_feasible = true;
    try {
      maybe_feasible = cd.clip(b);
    } catch (const ia::ia_domain_error&) {
      b = in;
    }
    if (!maybe_feasible) {
      ++res.infeasible;
      record('N', in, nullptr, 0);
      return;
    }
    // stationary-equation filters
    bool may_have_stationary = true;
    try {
      may_have_stationary = cd.filters(b);
    } catch (const ia::ia_domain_error&) {
      may_have_stationary = true;
    }
    if (!may_have_stationary) {
      ++res.excluded;
      record('X', b, nullptr, 0);
      return;
    }
    // F_B enclosure against the conservative target
    try {
      I fb = cd.fb(b);
      double tgt = margin_target(b.c);
      if (fb.hi < tgt) {
        double margin = tgt - fb.hi;
        if (margin >= cd.margin_goal || b.depth >= cfg.max_depth) {
          ++res.bounded;
          if (margin < res.min_margin) res.min_margin = margin;
          record('B', b, &fb, margin);
          return;
        }
        // certified but thin: refine toward the case's margin goal
      }
    } catch (const ia::ia_domain_error&) {
      // undecided: forces subdivision
    }
    if (b.depth >= cfg.max_depth) {
      res.failed = true;
      std::ostringstream os;
      os << "case " << cd.id << ": depth cap at c=[" << b.c.lo << ","
         << b.c.hi << "] p1=[" << b.p1.lo << "," << b.p1.hi << "] p2=["
         << b.p2.lo << "," << b.p2.hi << "]";
      res.failure = os.str();
      return;
    }
    // bisect the relatively widest live dimension
    double wc = b.c.width() / std::fmax(1e-300, cfg.c_hi - cfg.c_lo);
    double w1 = cd.nparams >= 1 ? b.p1.width() : -1;
    double w2 = cd.nparams >= 2 ? b.p2.width() : -1;
    Box lo = b, hi = b;
    lo.depth = hi.depth = b.depth + 1;
    if (wc >= w1 && wc >= w2) {
      double m = b.c.mid();
      lo.c = I(b.c.lo, m);
      hi.c = I(m, b.c.hi);
    } else if (w1 >= w2) {
      double m = b.p1.mid();
      lo.p1 = I(b.p1.lo, m);
      hi.p1 = I(m, b.p1.hi);
    } else {
      double m = b.p2.mid();
      lo.p2 = I(b.p2.lo, m);
      hi.p2 = I(m, b.p2.hi);
    }
    process(lo);
    process(hi);
  }
};

} // namespace

VerificationReport run_boundary_case(const CaseDef& cd,
                                     const VerifyConfig& cfg,
                                     std::string* cert_out) {
  VerificationReport rep;
  rep.name = "case-" + std::to_string(cd.id);
  if (!(cfg.c_lo < cfg.c_hi))
    throw std::invalid_argument("empty c range");

  I Cfull(cfg.c_lo, cfg.c_hi);
  I P1 = cd.nparams >= 1 ? cd.p1_bound(Cfull) : pt(0.0);
  I P2 = cd.nparams >= 2 ? cd.p2_bound(Cfull, P1) : pt(0.0);

  // initial slices along c for the parallel map
  int slices = std::max(1, cfg.initial_splits);
  std::vector<Box> roots;
  for (int s = 0; s < slices; ++s) {
    double a = cfg.c_lo + (cfg.c_hi - cfg.c_lo) * s / slices;
    double b = cfg.c_lo + (cfg.c_hi - cfg.c_lo) * (s + 1) / slices;
    Box box;
    box.c = I(a, b);
    box.p1 = P1;
    box.p2 = P2;
    roots.push_back(box);
  }

  std::vector<SliceResult> results(roots.size());
  bool want_cert = cert_out != nullptr;

  if (cfg.jobs <= 1) {
    // serial reference path, kept for testing against the parallel map
    for (size_t i = 0; i < roots.size(); ++i) {
      BoundaryWorker w{cd, cfg, {}, want_cert};
      w.process(roots[i]);
      results[i] = std::move(w.res);
    }
  } else {
    long long count = static_cast<long long>(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
#endif
    for (long long i = 0; i < count; ++i) {
      BoundaryWorker w{cd, cfg, {}, want_cert};
      w.process(roots[i]);
      results[i] = std::move(w.res);
    }
  }

  rep.certified = true;
  for (const SliceResult& r : results) {
    rep.bounded += r.bounded;
    rep.excluded += r.excluded;
    rep.infeasible += r.infeasible;
    if (r.min_margin < rep.min_margin) rep.min_margin = r.min_margin;
    if (r.failed && rep.certified) {
      rep.certified = false;
      rep.failure = r.failure;
    }
    if (want_cert) *cert_out += r.cert;
  }
  if (rep.certified && rep.min_margin <= 0) {
    rep.certified = false;
    rep.failure = "nonpositive margin";
  }
  return rep;
}

} // namespace detail

VerificationReport verify_boundary_case(int case_id, const VerifyConfig& cfg) {
  for (const detail::CaseDef& cd : detail::boundary_cases())
    if (cd.id == case_id) {
      std::string cert;
      VerificationReport rep = detail::run_boundary_case(
          cd, cfg, cfg.certificate_path.empty() ? nullptr : &cert);
      if (!cfg.certificate_path.empty()) {
        std::ofstream out(cfg.certificate_path, std::ios::app);
        out << cert;
      }
      return rep;
    }
  throw std::invalid_argument("unknown boundary case id");
}

AggregateReport verify_all(const VerifyConfig& cfg) {
  AggregateReport agg;
  if (!cfg.certificate_path.empty()) {
    std::ofstream out(cfg.certificate_path, std::ios::trunc);  // fresh file
  }
  agg.parts.push_back(verify_interior(cfg));
  for (const detail::CaseDef& cd : detail::boundary_cases())
    agg.parts.push_back(verify_boundary_case(cd.id, cfg));
  agg.certified = true;
  for (const VerificationReport& r : agg.parts) {
    agg.certified = agg.certified && r.certified;
    if (r.min_margin < agg.min_margin) agg.min_margin = r.min_margin;
  }
  return agg;
}

// ---- certificate replay ----

namespace {
// %a-formatted endpoints; istream numeric extraction cannot parse
// hex-floats, so go through strtod
bool next_hexf(std::istringstream& ls, double& out) {
  std::string tok;
  if (!(ls >> tok)) return false;
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end && *end == '\0';
}
} // namespace

bool replay_certificate(const std::string& path, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open " + path;
    return false;
  }
  const auto& cases = detail::boundary_cases();
  std::string line;
  long long lineno = 0;
  double run_clo = 0.67, run_chi = 1.0 - std::ldexp(1.0, -20);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      error = "line " + std::to_string(lineno) + ": " + why;
      return false;
    };
    if (tag == "B" || tag == "X" || tag == "N") {
      int id = 0, np = 0;
      ls >> id >> np;
      const detail::CaseDef* cd = nullptr;
      for (const auto& c : cases)
        if (c.id == id) cd = &c;
      if (!cd || cd->nparams != np) return fail("bad case header");
      double v[6] = {0, 0, 0, 0, 0, 0};
      int need = 2 + 2 * np;
      for (int k = 0; k < need; ++k)
        if (!next_hexf(ls, v[k])) return fail("truncated box");
      detail::Box b;
      b.c = ia::I(v[0], v[1]);
      b.p1 = np >= 1 ? ia::I(v[2], v[3]) : ia::pt(0.0);
      b.p2 = np >= 2 ? ia::I(v[4], v[5]) : ia::pt(0.0);
      if (tag == "N") {
        bool feas = true;
        try {
          detail::Box copy = b;
          feas = cd->clip(copy);
        } catch (const ia::ia_domain_error&) {
          feas = true;
        }
        if (feas) return fail("recorded-infeasible box not re-derived");
        continue;
      }
      detail::Box copy = b;
      try {
        cd->clip(copy);
      } catch (const ia::ia_domain_error&) {
        copy = b;
      }
      if (tag == "X") {
        bool may = true;
        try {
          may = cd->filters(copy);
        } catch (const ia::ia_domain_error&) {
          may = true;
        }
        if (may) return fail("recorded exclusion not re-derived");
        continue;
      }
      double flo, fhi, margin;
      if (!next_hexf(ls, flo) || !next_hexf(ls, fhi) ||
          !next_hexf(ls, margin))
        return fail("truncated F record");
      ia::I fb = cd->fb(copy);
      double tgt = detail::margin_target(copy.c);
      if (!(fb.hi <= fhi) || !(tgt - fb.hi >= margin))
        return fail("F enclosure not re-derived");
    } else if (tag == "H") {
      if (!next_hexf(ls, run_clo) || !next_hexf(ls, run_chi))
        return fail("truncated header");
    } else if (tag == "I" || tag == "O") {
      double v[7];
      int need = tag == "I" ? 7 : 2;
      for (int k = 0; k < need; ++k)
        if (!next_hexf(ls, v[k])) return fail("truncated interior record");
      VerifyConfig cfg;
      cfg.c_lo = run_clo;
      cfg.c_hi = run_chi;
      ia::I C = ia::pt(0.0);
      ia::I F = ia::pt(0.0);
      bool in_range = true;
      try {
        in_range =
            detail::interior_f_enclosure(ia::I(v[0], v[1]), cfg, &C, &F);
      } catch (const std::exception& e) {
        return fail(std::string("interior re-derivation failed: ") + e.what());
      }
      if (tag == "O") {
        if (in_range) return fail("recorded out-of-range region re-derives");
        continue;
      }
      if (!in_range) return fail("recorded interior region now out of range");
      if (!(F.hi <= v[5])) return fail("interior F enclosure not re-derived");
      if (!(detail::margin_target(C) - F.hi >= v[6]))
        return fail("interior margin not re-derived");
    } else {
      return fail("unknown record tag");
    }
  }
  return true;
}

} // namespace uecsp
