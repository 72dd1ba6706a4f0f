#pragma once

#include "folbound/foliation.hpp"
#include "folbound/tower.hpp"

namespace folbound {

/// Number of invariant neighbors of a divisor. The branch is not counted.
int nondicritical_valence(const ResolutionTower& tower, const IndexLedger& ledger, int id);

struct HertlingReport {
  int lhs = 0;              // nu_0(F)
  int kappa_term = 0;       // sum of w(D) kappa_P, with tang_P on non-invariant D
  int dicritical_term = 0;  // sum over non-invariant D of w(D) (2 - v_d(D))
  int rhs = 0;
  bool holds = false;
};

HertlingReport hertling_terms(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger);
HertlingReport verify_hertling(const PlaneFoliation& f, const ResolutionTower& tower);

struct ClsReport {
  int weighted_kappa = 0;  // sum of w(D) kappa_P
  int nu0 = 0;
  bool holds = false;       // weighted_kappa == nu0 + 1
};

/// Throws DicriticalPresent when some divisor is not invariant.
ClsReport cls_terms(const PlaneFoliation& f, const IndexLedger& ledger);
ClsReport verify_cls(const PlaneFoliation& f, const ResolutionTower& tower);

}  // namespace folbound
