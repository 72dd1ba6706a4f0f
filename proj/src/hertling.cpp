#include "folbound/hertling.hpp"

#include "folbound/error.hpp"

namespace folbound {

int nondicritical_valence(const ResolutionTower& tower, const IndexLedger& ledger, int id) {
  int v = 0;
  for (int o : tower.node(id).adjacent)
    if (ledger.at(o).invariant) ++v;
  return v;
}

HertlingReport hertling_terms(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger) {
  HertlingReport r;
  r.lhs = order(f);
  for (const auto& rec : ledger.records) {
    if (rec.invariant) {
      r.kappa_term += rec.weight * *rec.sum_kappa;
    } else {
      r.kappa_term += rec.weight * *rec.sum_tang;
      r.dicritical_term += rec.weight * (2 - nondicritical_valence(tower, ledger, rec.divisor));
    }
  }
  r.rhs = r.kappa_term + r.dicritical_term - 1;
  r.holds = r.lhs == r.rhs;
  return r;
}

HertlingReport verify_hertling(const PlaneFoliation& f, const ResolutionTower& tower) {
  return hertling_terms(f, tower, build_ledger(f, tower));
}

ClsReport cls_terms(const PlaneFoliation& f, const IndexLedger& ledger) {
  ClsReport r;
  r.nu0 = order(f);
  for (const auto& rec : ledger.records) {
    if (!rec.invariant) throw Error(ErrorCode::DicriticalPresent, "D" + std::to_string(rec.divisor) + " is not invariant");
    r.weighted_kappa += rec.weight * *rec.sum_kappa;
  }
  r.holds = r.weighted_kappa == r.nu0 + 1;
  return r;
}

ClsReport verify_cls(const PlaneFoliation& f, const ResolutionTower& tower) {
  return cls_terms(f, build_ledger(f, tower));
}

}  // namespace folbound
