#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folbound/branch.hpp"
#include "folbound/foliation.hpp"
#include "folbound/tower.hpp"

namespace folbound {

struct CorpusEntry {
  std::string name;
  PuiseuxBranch branch;
  std::optional<PlaneFoliation> foliation;
  std::map<std::string, int> expected;
};

/// (t^p, t^q) with p x dy - q y dx.
CorpusEntry gen_monomial(int p, int q);
/// (t^{30n}, t^{30n+30} + t^{30n+45} + t^{30n+55} + t^{30n+56}), class only.
CorpusEntry gen_gamma_family(int n);
/// (t^{2n}, t^{2n+2} + t^{2n+3}), class only.
CorpusEntry gen_two_pair(int n);

/// omega = a h df - c f dh, saturated, with a d = c d' = lcm(d, d') where d and
/// d' are the orders of f and h along D_divisor.
struct FirstIntegralForm {
  int d = 0;
  int d_prime = 0;
  int a = 0;
  int c = 0;
  PlaneFoliation omega;
};
FirstIntegralForm first_integral_form(const BiPoly& f, const BiPoly& h, const ResolutionTower& tower, int divisor);

/// a L df - c f dL along the last divisor of the tower of `branch`.
CorpusEntry gen_sharp(const BiPoly& f, const BiPoly& L, const PuiseuxBranch& branch, const std::string& name = "sharp");
/// f = y^2 - x^3, L = x, branch (t^4, t^6 sqrt(1 + t)) known through t^truncation.
CorpusEntry sharp_example(int truncation = 48);
PuiseuxBranch sharp_branch(int truncation);

/// True when xi's strict transform meets the divisor of weight q_{g-1} in the
/// last clamped component of the configuration where only D_k is bad, away
/// from corners and transversally.
bool xi_meets_clamped_divisor(const ResolutionTower& tower, const BranchInvariants& inv, const PuiseuxBranch& xi);

/// df paired with a parametrization of f = 0.
CorpusEntry gen_differential(const std::string& name, const BiPoly& f, const PuiseuxBranch& branch);

/// First-integral foliations a h df - c f dh over small branch classes, with
/// assorted dicritical divisors.
std::vector<CorpusEntry> dicritical_fixtures();

/// Pairs of foliations for compare_lambda: (first, second) over one branch.
struct FixturePair {
  std::string name;
  PuiseuxBranch branch;
  PlaneFoliation first;
  PlaneFoliation second;
};
std::vector<FixturePair> lambda_fixture_pairs();

/// Entries with a foliation, followed by class-only entries.
std::vector<CorpusEntry> default_corpus();

}  // namespace folbound
