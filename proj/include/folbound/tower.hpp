#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "folbound/branch.hpp"
#include "folbound/polynomial.hpp"
#include "folbound/series.hpp"

namespace folbound {

/// Position of the next center P_j on the newest divisor D_j, seen from the
/// canonical coordinates (x, y) at P_{j-1}: either the direction y = c x, or the
/// direction x = 0.
struct Direction {
  enum class Kind { Slope, Vertical };
  Kind kind = Kind::Slope;
  Rat slope;

  static Direction with_slope(Rat c) { return {Kind::Slope, std::move(c)}; }
  static Direction vertical() { return {Kind::Vertical, Rat(0)}; }
  bool is_vertical() const { return kind == Kind::Vertical; }
  bool operator==(const Direction&) const = default;
  std::string str() const;
};

/// A parametrized germ (x(t), y(t)) in some local coordinates.
struct ParamBranch {
  TruncSeries x;
  TruncSeries y;
};

enum class CenterKind { NonCorner, Corner };

struct BlowupStep {
  ParamBranch branch;  // strict transform, recentered at the new point
  Direction direction;
};

/// Blow up the origin and follow the branch. Canonical coordinates after the
/// step put the new divisor at {x = 0}:
///   Slope c : (x, y) = (X, X (Y + c))
///   Vertical: (x, y) = (X Y, X)
BlowupStep blowup_once(const ParamBranch& branch);

/// Polynomial map from chart coordinates (u, v) to the canonical coordinates at
/// P_base. `fresh` marks the divisor created by the last blow-up in this chart.
struct LocalChart {
  enum class Fresh { U, V, None };
  int base_level = 0;
  BiPoly x;
  BiPoly y;
  Fresh fresh = Fresh::None;
};

enum class ChartSlot { A, B };

/// Intersection of a divisor with a neighbor, located in one of the divisor's
/// two charts as the point u = 0, v = coordinate.
struct CornerRecord {
  int other = 0;
  ChartSlot chart = ChartSlot::A;
  Rat coordinate;
};

/// Each divisor D = {u = 0} is covered by two charts. Chart A sees all of D
/// except one point, which is the origin of chart B (the spot where later
/// centers on D were placed, or the branch point on the last divisor).
struct DivisorNode {
  int id = 0;
  int weight = 0;
  std::set<int> adjacent;
  std::vector<CornerRecord> corners;
  bool carries_gamma = false;
  LocalChart chart_a;
  LocalChart chart_b;
};

struct DualGraph {
  std::vector<int> weights;            // weights[l-1] = w(D_l)
  std::vector<std::set<int>> adjacent; // adjacent[l-1] = neighbors of D_l
  int valence(int id) const { return static_cast<int>(adjacent.at(static_cast<size_t>(id - 1)).size()); }
  bool operator==(const DualGraph&) const = default;
};

struct StopCheck {
  bool smooth = false;
  bool single_component = false;
  bool transverse = false;
  bool non_corner = false;
  bool all() const { return smooth && single_component && transverse && non_corner; }
};

class ResolutionTower {
 public:
  /// Tower of blow-ups where directions[j-1] places P_j on D_j (j = 1..k).
  static ResolutionTower from_directions(std::vector<Direction> directions);

  int k() const { return static_cast<int>(dirs_.size()); }
  const std::vector<Direction>& directions() const { return dirs_; }
  const std::vector<DivisorNode>& nodes() const { return nodes_; }
  const DivisorNode& node(int id) const;
  /// Divisors through P_level (empty for level 0).
  std::vector<int> divisors_through(int level) const;
  CenterKind center_kind(int level) const;
  /// Older divisor through P_level besides D_level, if any.
  std::optional<int> other_divisor(int level) const { return other_.at(static_cast<size_t>(level)); }

  DualGraph graph() const;
  int valence(int id) const { return static_cast<int>(node(id).adjacent.size()); }
  std::vector<int> valences() const;
  /// Valence-3 divisors plus D_k, increasing.
  std::vector<int> characteristic_divisors() const;

  /// Chart from canonical coordinates at P_level to those at P_{level-1}.
  LocalChart step_chart(int level) const;
  /// Original (x, y) as polynomials in the canonical coordinates at P_level.
  std::pair<BiPoly, BiPoly> canonical_map(int level) const;
  /// Original (x, y) as polynomials in the chart's (u, v).
  std::pair<BiPoly, BiPoly> composed_map(const LocalChart& chart) const;
  /// Vanishing order of h o pi along D_id.
  int divisor_order(const BiPoly& h, int id) const;

  /// Strict transforms gamma_0 .. gamma_k (empty unless built from a branch).
  const std::vector<ParamBranch>& strict_branches() const { return strict_; }
  const std::vector<StopCheck>& stop_checks() const { return stops_; }

  /// DOT rendering; when `invariant` is given, non-invariant divisors are drawn
  /// as grey boxes and `bad` ids get a bold outline.
  std::string emit_dot(const std::vector<bool>* invariant = nullptr, const std::vector<int>& bad = {}) const;

 private:
  friend ResolutionTower desingularize(const PuiseuxBranch& branch);
  std::vector<Direction> dirs_;
  std::vector<std::optional<int>> other_;  // index = level 0..k
  std::vector<DivisorNode> nodes_;
  std::vector<ParamBranch> strict_;
  std::vector<StopCheck> stops_;
};

StopCheck stop_check(const ParamBranch& branch, std::optional<int> other_divisor);

/// Minimal tower after which the strict transform is smooth and meets the
/// exceptional divisor transversally at a non-corner point of D_k.
ResolutionTower desingularize(const PuiseuxBranch& branch);

/// Where a second branch leaves the tower: the level at which its strict
/// transform stops passing through the tower's centers.
struct BranchExit {
  int divisor = 0;             // D_divisor the branch meets
  Direction position;          // its point on that divisor, in the blow-up coordinates
  bool at_corner = false;
  bool smooth = false;
  bool transverse = false;
  bool through_last_center = false;  // followed the tower all the way to P_k
};
BranchExit follow_branch(const ResolutionTower& tower, const PuiseuxBranch& branch);

/// Dual graph of the minimal resolution from the characteristic exponents
/// alone. Multiplicities come from the Euclidean algorithm; weights and
/// adjacency come from the proximity relations.
struct OracleGraph {
  std::vector<int> multiplicities;              // m_0 .. m_{k-1}
  std::vector<std::vector<int>> proximate_to;   // for P_j: the earlier points it is proximate to
  DualGraph graph;
};
OracleGraph combinatorial_oracle(const BranchInvariants& inv);

}  // namespace folbound
