#include "folbound/branch.hpp"

#include <numeric>
#include <string>

#include "folbound/error.hpp"

namespace folbound {

int Truncation::order() const {
  if (!order_) throw Error(ErrorCode::InvalidArgument, "exact parametrization has no truncation order");
  return *order_;
}

const PuiseuxBranch& validate(const PuiseuxBranch& branch) {
  if (branch.n < 1) throw Error(ErrorCode::InvalidArgument, "x-exponent n must be positive");
  int prev = -1;
  int g = branch.n;
  for (const auto& term : branch.terms) {
    if (term.exponent < branch.n)
      throw Error(ErrorCode::ExponentBelowN,
                  "exponent " + std::to_string(term.exponent) + " < n = " + std::to_string(branch.n) +
                      "; swap the coordinates so that the x-part is t^n with n minimal");
    if (term.exponent <= prev) throw Error(ErrorCode::InvalidArgument, "exponents must be strictly increasing");
    if (term.coeff.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero coefficient stored");
    prev = term.exponent;
    g = std::gcd(g, term.exponent);
  }
  if (!branch.truncation.is_exact() && branch.truncation.order() < branch.max_exponent())
    throw Error(ErrorCode::InvalidArgument, "truncation order below the largest stored exponent");
  if (g != 1)
    throw Error(ErrorCode::NotReduced, "gcd of n and the support is " + std::to_string(g) + "; parametrization is not injective");
  return branch;
}

bool is_smooth(const PuiseuxBranch& branch) { return branch.n == 1; }

void require_singular(const PuiseuxBranch& branch) {
  if (is_smooth(branch)) throw Error(ErrorCode::SmoothBranch, "branch is smooth (genus 0)");
}

BranchInvariants invariants(const PuiseuxBranch& branch) {
  validate(branch);
  BranchInvariants inv;
  inv.multiplicity = branch.n;
  inv.partial_multiplicities.push_back(1);
  int m = branch.n;
  for (const auto& term : branch.terms) {
    int next = std::gcd(m, term.exponent);
    inv.gcd_sequence[term.exponent] = next;
    if (next < m) {
      int q = branch.n / next;
      inv.ratios.push_back(m / next);
      inv.partial_multiplicities.push_back(q);
      inv.characteristic_exponents.push_back({term.exponent, q, term.exponent / next});
      m = next;
    }
  }
  inv.genus = static_cast<int>(inv.characteristic_exponents.size());
  return inv;
}

int multiplicity(const PuiseuxBranch& branch) { return validate(branch).n; }

int virtual_multiplicity(const BranchInvariants& inv) {
  if (inv.genus < 1) throw Error(ErrorCode::SmoothBranch, "virtual multiplicity needs genus >= 1");
  return inv.partial_multiplicities[static_cast<size_t>(inv.genus - 1)];
}

int virtual_multiplicity(const PuiseuxBranch& branch) { return virtual_multiplicity(invariants(branch)); }

PuiseuxBranch truncate_to_class(const PuiseuxBranch& branch) {
  BranchInvariants inv = invariants(branch);
  PuiseuxBranch out{branch.n, {}, Truncation::exact()};
  for (const auto& term : branch.terms)
    for (const auto& ce : inv.characteristic_exponents)
      if (ce.exponent == term.exponent) out.terms.push_back(term);
  return out;
}

std::pair<TruncSeries, TruncSeries> to_series(const PuiseuxBranch& branch, int working_order) {
  const int order = branch.truncation.is_exact() ? working_order : branch.truncation.order();
  if (order < branch.max_exponent())
    throw Error(ErrorCode::InsufficientPrecision, "working order below the largest exponent");
  TruncSeries x = TruncSeries::monomial(1, branch.n, order);
  std::vector<Rat> yc(static_cast<size_t>(order) + 1);
  for (const auto& term : branch.terms) yc[static_cast<size_t>(term.exponent)] = term.coeff;
  return {x, TruncSeries(std::move(yc), order)};
}

}  // namespace folbound
