// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria with a time budget are timed individually.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qgl/suites.hpp"

using namespace qgl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int idx, const std::string& what, bool ok) {
  std::cout << "criterion " << idx << " (" << what << "): " << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) ++g_failures;
}

bool all_pass(const std::vector<Check>& checks,
              const std::function<bool(const std::string&)>& select, int* matched = nullptr) {
  int count = 0;
  bool ok = true;
  for (const Check& c : checks)
    if (select(c.name)) {
      ++count;
      ok = ok && c.passed();
    }
  if (matched) *matched = count;
  return ok && count > 0;
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main() {
  RunConfig cfg;
  cfg.n = 3;
  cfg.mode = "both";
  cfg.seed = 0;

  // criterion 1: braid + Hecke residuals, n = 1..3, under 5 s
  auto t1 = Clock::now();
  std::vector<Check> rm = run_rmatrix_suite(cfg);
  double dt1 = seconds_since(t1);
  bool c1 = dt1 < 5.0 &&
            all_pass(rm, [](const std::string& s) {
              return has_prefix(s, "braid-relation") || has_prefix(s, "hecke-condition");
            });
  line(1, "braid and Hecke residuals n=1..3, <5s", c1);

  std::vector<Check> bm = run_bimodule_suite(cfg);

  // criterion 2: cubic, projector algebra, reconstruction, n=2 ranks
  bool c2 = all_pass(bm, [](const std::string& s) {
    return has_prefix(s, "braiding-cubic") || has_prefix(s, "projector-") ||
           has_prefix(s, "braiding-spectral-sum");
  });
  bool ranks_present = all_pass(bm, [](const std::string& s) { return s == "projector-ranks-n2"; });
  line(2, "braiding cubic, projector algebra, n=2 ranks (9,1,3,3)", c2 && ranks_present);

  // criterion 3: generalized-permutation suite with random members at n=2,3
  int random_checks = 0;
  bool c3 = all_pass(bm,
                     [](const std::string& s) {
                       return has_prefix(s, "gp-") || has_prefix(s, "alpha-") ||
                              has_prefix(s, "wedge-") || has_prefix(s, "inverse-pair");
                     }) &&
            all_pass(bm, [](const std::string& s) { return s.find("random") != std::string::npos; },
                     &random_checks) &&
            random_checks >= 10;  // >= 5 members at each of n=2 and n=3
  line(3, "generalized permutations: wedge twist, alpha round-trip, closures", c3);

  // criterion 4: basis-change route equality (n=1,2) and theta swap
  std::vector<Check> ca = run_calculus_suite(cfg);
  bool c4 = all_pass(ca, [](const std::string& s) {
    return has_prefix(s, "route-agreement") || has_prefix(s, "invariant-swap");
  });
  line(4, "basis-change routes agree; theta swap exact", c4);

  // criterion 5 (master): the anchor identity for n = 1..3
  std::vector<Check> cn = run_connection_suite(cfg, nullptr);
  bool c5 = all_pass(cn, [](const std::string& s) { return has_prefix(s, "anchor"); });
  line(5, "anchor identity n=1..3", c5);

  // criterion 6: torsion, global sign, closed form, commutative limits
  bool c6 = all_pass(cn, [](const std::string& s) {
    return has_prefix(s, "torsion-") || has_prefix(s, "leibniz-sign") ||
           has_prefix(s, "closed-form") || has_prefix(s, "staircase") ||
           has_prefix(s, "limit-");
  });
  line(6, "connection suite: torsion, signs, closed form, limits", c6);

  // criterion 7: uniqueness (n=2 exact, n=3 certificate) and scaling witness
  auto t7 = Clock::now();
  bool uniq2 = uniqueness_nullspace_dim(cached_geometry(2)) == 0;
  bool uniq3 = uniqueness_fullrank_modp(3);
  double dt7 = seconds_since(t7);
  bool witness = all_pass(ca, [](const std::string& s) { return s == "qdet-functional-scaling"; });
  line(7, "connection uniqueness n=2,3 with scaling witness, <5min", uniq2 && uniq3 && witness && dt7 < 300.0);

  // criterion 8: exchange algebra, centrality at n=2 under 30 s
  auto t8 = Clock::now();
  bool central2 = qdet_central(RewriteSystem::derive(2, RuleMode::t_only));
  double dt8 = seconds_since(t8);
  std::vector<Check> np = run_ncpoly_suite(cfg);
  bool c8 = central2 && dt8 < 30.0 &&
            all_pass(np, [](const std::string& s) {
              return has_prefix(s, "relations-reduce") || has_prefix(s, "quadratic-dimension") ||
                     has_prefix(s, "confluence") || has_prefix(s, "exchange-rules");
            });
  line(8, "exchange relations, centrality (<30s), diamond", c8);

  // criterion 9: numeric star-structure tolerances
  std::vector<Check> in = run_involution_suite(cfg);
  bool c9 = all_pass(in, [](const std::string&) { return true; });
  line(9, "unit-circle star structure within tolerances", c9);

  // criterion 10: byte-identical reports for identical config and seed
  RunConfig d;
  d.n = 2;
  d.seed = 7;
  std::string r1 = run_verify(d).to_json().dump(2);
  std::string r2 = run_verify(d).to_json().dump(2);
  line(10, "deterministic JSON report", r1 == r2 && !r1.empty());

  // criterion 11: end-to-end budget
  auto t11 = Clock::now();
  Report full = run_verify(cfg);
  double full_s = seconds_since(t11);
  auto t11b = Clock::now();
  RunConfig two;
  two.n = 2;
  Report small = run_verify(two);
  double small_s = seconds_since(t11b);
  line(11, "runtime budget: full <10min, n=2 <60s",
       full.all_passed() && small.all_passed() && full_s < 600.0 && small_s < 60.0);

  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return g_failures == 0 ? 0 : 1;
}
