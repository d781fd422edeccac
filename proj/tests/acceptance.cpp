// Acceptance runner: one line per criterion, exact equalities throughout,
// fixed seeds and sizes, with a wall-clock budget per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "wheelgebra/checks.hpp"

using namespace wg;

int main() {
  CheckOptions opt;
  opt.seed = 0;
  opt.max_len = 4;
  opt.max_deg = 3;
  opt.cases = 200;
  opt.dims = {2, 3};

  std::map<std::string, CheckReport> reports;
  for (const auto& name : suite_names()) reports[name] = run_suite(name, opt);

  struct Criterion {
    const char* label;
    std::string suite;
    std::vector<std::string> properties;  // empty = all of the suite
    double budget;
  };
  std::vector<Criterion> criteria = {
      {"1: wheelspace contraction associativity and equivariance", "wheel", {}, 10},
      {"2: double bracket axioms", "doublepoisson", {}, 30},
      {"3: involutive necklace bialgebra", "bialgebra", {}, 30},
      {"4: flat BV operator (square zero, BV identity)", "bv", {}, 60},
      {"5: torsion route equivalence", "curvature", {"torsion routes agree"}, 10},
      {"6: curvature law for the squared operator",
       "curvature",
       {"square of the operator is contraction with the curvature trace",
        "trace-flat connections square to zero"},
       60},
      {"7: divergence determines the operator", "curvature",
       {"equal divergence gives the same operator"}, 10},
      {"8: operator filtration, shadow relations, second symbol", "diffops", {}, 30},
      {"9: representation oracle (Poisson bracket and odd Laplacian)",
       "oracle",
       {"necklace bracket evaluates to the Poisson bracket",
        "flat operator evaluates to the odd Laplacian"},
       120},
      {"10: rank element evaluates to the dimension", "oracle",
       {"rank element evaluates to the dimension"}, 1},
      {"11: quadratic operators realize the symplectic relations", "weil", {}, 5},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const CheckReport& rep = reports.at(c.suite);
    bool pass = true;
    int cases = 0;
    double seconds = 0;
    std::string why;
    for (const auto& p : rep.properties) {
      bool wanted = c.properties.empty();
      for (const auto& want : c.properties)
        if (p.id == want) wanted = true;
      if (!wanted) continue;
      cases += p.cases;
      seconds += p.seconds;
      if (!p.pass) {
        pass = false;
        if (why.empty()) why = p.id + " [" + p.counterexample + "]";
      }
    }
    if (seconds >= c.budget) {
      pass = false;
      if (why.empty())
        why = "took " + std::to_string(seconds) + "s, budget " + std::to_string(c.budget) + "s";
    }
    std::printf("%s criterion %s  (%d checks, %.2fs)\n", pass ? "PASS" : "FAIL", c.label,
                cases, seconds);
    if (!pass) {
      std::printf("     %s\n", why.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
