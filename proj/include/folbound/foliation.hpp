#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folbound/branch.hpp"
#include "folbound/polynomial.hpp"
#include "folbound/tower.hpp"

namespace folbound {

/// Foliation given by the 1-form A dx + B dy with gcd(A, B) = 1. The dual
/// vector field is X = B d/dx - A d/dy.
class PlaneFoliation {
 public:
  /// Throws NotCoprime when A and B share a factor, InvalidArgument for (0, 0).
  PlaneFoliation(BiPoly A, BiPoly B);
  /// Divides out gcd(A, B) first.
  static PlaneFoliation saturate(const BiPoly& A, const BiPoly& B);
  /// X = a d/dx + b d/dy, i.e. omega = b dx - a dy. field_x/field_y then
  /// return -X, which defines the same foliation.
  static PlaneFoliation from_vector_field(const BiPoly& a, const BiPoly& b);

  const BiPoly& A() const { return a_; }
  const BiPoly& B() const { return b_; }
  BiPoly field_x() const { return b_; }
  BiPoly field_y() const { return -a_; }

  bool operator==(const PlaneFoliation&) const = default;
  std::string str() const;

 private:
  BiPoly a_;
  BiPoly b_;
};

/// nu_0 = min(ord A, ord B).
int order(const PlaneFoliation& f);

struct InvarianceVerdict {
  enum class Kind { ExactInvariant, InvariantUpToN, NotInvariant };
  Kind kind = Kind::NotInvariant;
  int order = 0;  // checked order for InvariantUpToN, witness order for NotInvariant
  bool invariant() const { return kind != Kind::NotInvariant; }
  std::string str() const;
};

int default_check_order(const PlaneFoliation& f, const PuiseuxBranch& branch);

/// Evaluates omega(gamma'(t)). For truncated branches the reported order is the
/// smaller of `check_order` and the order the data actually supports.
InvarianceVerdict is_invariant(const PlaneFoliation& f, const PuiseuxBranch& branch, std::optional<int> check_order = {});

/// A 1-form in chart coordinates (u, v): A du + B dv.
struct ChartFoliation {
  LocalChart chart;
  BiPoly A;
  BiPoly B;
  int removed_u = 0;
  int removed_v = 0;
};

/// Pulls back the form (A, B), given at the chart's base, and divides by the
/// largest power of the chart's fresh variable dividing both coefficients.
ChartFoliation transform_to_chart(const BiPoly& A, const BiPoly& B, const LocalChart& chart);
ChartFoliation transform_to_chart(const PlaneFoliation& f, const LocalChart& chart);

/// Strict transforms in canonical coordinates at P_0 .. P_k.
std::vector<ChartFoliation> canonical_foliations(const PlaneFoliation& f, const ResolutionTower& tower);

/// {u = 0} is invariant iff B(0, v) vanishes identically.
bool divisor_invariant(const ChartFoliation& cf);
/// Both charts of one divisor; throws InconsistentCharts on disagreement.
bool divisor_invariant(const ChartFoliation& chart_a, const ChartFoliation& chart_b);

int aleph_at(const ChartFoliation& cf, const Rat& v0);
int tang_at(const ChartFoliation& cf, const Rat& v0);
/// Zeros with multiplicity over chart A's line plus the chart B origin.
int aleph_sum(const ChartFoliation& chart_a, const ChartFoliation& chart_b);
int tang_sum(const ChartFoliation& chart_a, const ChartFoliation& chart_b);

/// Residue at t = 0 of num(t) / den(t).
Rat residue_at_zero(const UniPoly& num, const UniPoly& den);

struct CamachoSad {
  Rat along_divisor;   // along {u = 0}
  Rat along_neighbor;  // along {v = v0}
  int aleph_divisor = 0;
  int aleph_neighbor = 0;
  bool diagonal_nonzero = false;
};
/// Indices at the corner (0, v0) of two invariant curves {u = 0} and {v = v0}.
CamachoSad cs_at_corner(const ChartFoliation& cf, const Rat& v0);

struct CornerEntry {
  int other = 0;
  ChartSlot chart = ChartSlot::A;
  Rat coordinate;
  bool other_invariant = false;
  std::optional<int> aleph;          // when this divisor is invariant
  std::optional<int> tang;           // when it is not
  std::optional<CamachoSad> cs;      // when both components are invariant
};

struct DivisorIndexRecord {
  int divisor = 0;
  int weight = 0;
  bool invariant = false;
  std::optional<int> sum_aleph;
  std::optional<int> sum_kappa;
  std::optional<int> sum_tang;
  std::vector<CornerEntry> corners;
  std::optional<int> gamma_entry;  // value at gamma_k on D_k
};

struct IndexLedger {
  std::vector<DivisorIndexRecord> records;
  const DivisorIndexRecord& at(int id) const { return records.at(static_cast<size_t>(id - 1)); }
  std::vector<bool> invariant_flags() const;
};

/// Per-divisor index data. Tangencies on non-invariant divisors are summed over
/// every point, singular or not.
IndexLedger build_ledger(const PlaneFoliation& f, const ResolutionTower& tower);

}  // namespace folbound
