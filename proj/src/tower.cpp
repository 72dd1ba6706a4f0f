#include "folbound/tower.hpp"

#include <algorithm>
#include <sstream>

#include "folbound/error.hpp"

namespace folbound {

namespace {

const BiPoly kU = BiPoly::x();
const BiPoly kV = BiPoly::y();

constexpr int kMaxBlowups = 100000;

Error precision_error(const std::string& what) { return Error(ErrorCode::InsufficientPrecision, what); }

template <typename Build>
auto with_precision_retry(const PuiseuxBranch& branch, Build build) {
  int working = 2 * (branch.max_exponent() + branch.n) + 8;
  for (int attempt = 0;; ++attempt) {
    try {
      return build(working);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientPrecision || !branch.truncation.is_exact() || attempt >= 6) throw;
      working *= 2;
    }
  }
}

}  // namespace

std::string Direction::str() const {
  return is_vertical() ? std::string("vertical") : "slope " + slope.str();
}

BlowupStep blowup_once(const ParamBranch& b) {
  const auto ox = b.x.known_order();
  const auto oy = b.y.known_order();
  if (!ox && !oy) throw precision_error("both coordinates vanish through their truncation order");
  if ((ox && *ox == 0) || (oy && *oy == 0))
    throw Error(ErrorCode::InvalidArgument, "branch does not pass through the blown-up point");

  bool slope_chart = false;
  if (ox && oy) {
    slope_chart = *ox <= *oy;
  } else if (ox) {
    if (b.y.truncation() < *ox) throw precision_error("cannot compare coordinate orders");
    slope_chart = true;
  } else {
    if (b.x.truncation() < *oy) throw precision_error("cannot compare coordinate orders");
    slope_chart = false;
  }

  if (slope_chart) {
    TruncSeries y_over_x = TruncSeries::divide(b.y, b.x);
    Rat c = y_over_x.coeff(0);
    y_over_x -= TruncSeries::constant(c, y_over_x.truncation());
    return {{b.x, std::move(y_over_x)}, Direction::with_slope(std::move(c))};
  }
  TruncSeries x_over_y = TruncSeries::divide(b.x, b.y);
  if (x_over_y.coeff(0) != Rat(0)) throw Error(ErrorCode::InternalInconsistency, "vertical chart with nonzero center");
  return {{b.y, std::move(x_over_y)}, Direction::vertical()};
}

StopCheck stop_check(const ParamBranch& branch, std::optional<int> other_divisor) {
  StopCheck s;
  const auto ox = branch.x.known_order();
  const auto oy = branch.y.known_order();
  s.smooth = (ox && *ox == 1) || (oy && *oy == 1);
  s.transverse = ox && *ox == 1;
  s.single_component = !other_divisor.has_value();
  s.non_corner = !other_divisor.has_value();
  return s;
}

// ---------------------------------------------------------------------------

const DivisorNode& ResolutionTower::node(int id) const {
  if (id < 1 || id > k()) throw Error(ErrorCode::InvalidArgument, "no divisor D" + std::to_string(id));
  return nodes_[static_cast<size_t>(id - 1)];
}

std::vector<int> ResolutionTower::divisors_through(int level) const {
  if (level <= 0) return {};
  std::vector<int> r{level};
  if (other_[static_cast<size_t>(level)]) r.push_back(*other_[static_cast<size_t>(level)]);
  return r;
}

CenterKind ResolutionTower::center_kind(int level) const {
  return divisors_through(level).size() == 2 ? CenterKind::Corner : CenterKind::NonCorner;
}

DualGraph ResolutionTower::graph() const {
  DualGraph g;
  for (const auto& n : nodes_) {
    g.weights.push_back(n.weight);
    g.adjacent.push_back(n.adjacent);
  }
  return g;
}

std::vector<int> ResolutionTower::valences() const {
  std::vector<int> v;
  for (const auto& n : nodes_) v.push_back(static_cast<int>(n.adjacent.size()));
  return v;
}

std::vector<int> ResolutionTower::characteristic_divisors() const {
  std::vector<int> ids;
  for (const auto& n : nodes_)
    if (n.adjacent.size() == 3 || n.id == k()) ids.push_back(n.id);
  return ids;
}

LocalChart ResolutionTower::step_chart(int level) const {
  if (level < 1 || level > k()) throw Error(ErrorCode::InvalidArgument, "no blow-up at level " + std::to_string(level));
  const Direction& d = dirs_[static_cast<size_t>(level - 1)];
  LocalChart c;
  c.base_level = level - 1;
  c.fresh = LocalChart::Fresh::U;
  if (d.is_vertical()) {
    c.x = kU * kV;
    c.y = kU;
  } else {
    c.x = kU;
    c.y = kU * kV + kU * d.slope;
  }
  return c;
}

std::pair<BiPoly, BiPoly> ResolutionTower::canonical_map(int level) const {
  BiPoly X = BiPoly::x(), Y = BiPoly::y();
  for (int j = 1; j <= level; ++j) {
    LocalChart s = step_chart(j);
    BiPoly nx = X.compose(s.x, s.y);
    BiPoly ny = Y.compose(s.x, s.y);
    X = std::move(nx);
    Y = std::move(ny);
  }
  return {X, Y};
}

std::pair<BiPoly, BiPoly> ResolutionTower::composed_map(const LocalChart& chart) const {
  auto [X, Y] = canonical_map(chart.base_level);
  return {X.compose(chart.x, chart.y), Y.compose(chart.x, chart.y)};
}

int ResolutionTower::divisor_order(const BiPoly& h, int id) const {
  node(id);
  BiPoly p = h;
  for (int j = 1; j < id; ++j) {
    LocalChart s = step_chart(j);
    p = p.compose(s.x, s.y);
  }
  Order o = p.order();
  if (o.is_infinite()) throw Error(ErrorCode::InvalidArgument, "order of the zero function along a divisor");
  return o.value();
}

ResolutionTower ResolutionTower::from_directions(std::vector<Direction> directions) {
  if (directions.empty()) throw Error(ErrorCode::InvalidArgument, "a tower needs at least one blow-up");
  ResolutionTower t;
  t.dirs_ = std::move(directions);
  const int k = t.k();

  t.other_.assign(static_cast<size_t>(k) + 1, std::nullopt);
  for (int j = 1; j <= k; ++j) {
    const Direction& d = t.dirs_[static_cast<size_t>(j - 1)];
    if (d.is_vertical())
      t.other_[static_cast<size_t>(j)] = j >= 2 ? std::optional<int>(j - 1) : std::nullopt;
    else
      t.other_[static_cast<size_t>(j)] = d.slope.is_zero() ? t.other_[static_cast<size_t>(j - 1)] : std::nullopt;
  }

  t.nodes_.resize(static_cast<size_t>(k));
  auto nd = [&t](int id) -> DivisorNode& { return t.nodes_[static_cast<size_t>(id - 1)]; };
  for (int j = 1; j <= k; ++j) {
    DivisorNode& n = nd(j);
    n.id = j;
    n.carries_gamma = j == k;
    if (j == 1) {
      n.weight = 1;
      continue;
    }
    const auto prev_other = t.other_[static_cast<size_t>(j - 1)];
    n.weight = nd(j - 1).weight + (prev_other ? nd(*prev_other).weight : 0);
    if (prev_other) {
      nd(j - 1).adjacent.erase(*prev_other);
      nd(*prev_other).adjacent.erase(j - 1);
      n.adjacent.insert(*prev_other);
      nd(*prev_other).adjacent.insert(j);
    }
    n.adjacent.insert(j - 1);
    nd(j - 1).adjacent.insert(j);
  }

  for (int j = 1; j <= k; ++j) {
    DivisorNode& n = nd(j);
    const Direction& d = t.dirs_[static_cast<size_t>(j - 1)];
    n.chart_a.base_level = j - 1;
    n.chart_a.fresh = LocalChart::Fresh::U;
    if (d.is_vertical()) {
      n.chart_a.x = kU;
      n.chart_a.y = kU * kV;
    } else {
      n.chart_a.x = kU * kV;
      n.chart_a.y = kU + kU * kV * d.slope;
    }

    std::optional<int> special_creation_neighbor;
    if (j >= 2) {
      const auto prev_other = t.other_[static_cast<size_t>(j - 1)];
      if (d.is_vertical()) {
        special_creation_neighbor = j - 1;
        if (prev_other) n.corners.push_back({*prev_other, ChartSlot::A, Rat(0)});
      } else {
        n.corners.push_back({j - 1, ChartSlot::A, Rat(0)});
        if (prev_other) {
          if (d.slope.is_zero())
            special_creation_neighbor = *prev_other;
          else
            n.corners.push_back({*prev_other, ChartSlot::A, -(Rat(1) / d.slope)});
        }
      }
    }

    if (j == k) {
      n.chart_b.base_level = k;
      n.chart_b.x = kU;
      n.chart_b.y = kV;
      n.chart_b.fresh = LocalChart::Fresh::None;
      if (special_creation_neighbor) n.corners.push_back({*special_creation_neighbor, ChartSlot::B, Rat(0)});
    } else {
      int last = j;
      while (last + 1 <= k - 1) {
        auto through = t.divisors_through(last + 1);
        if (std::find(through.begin(), through.end(), j) == through.end()) break;
        ++last;
      }
      n.chart_b.base_level = last;
      n.chart_b.fresh = LocalChart::Fresh::V;
      if (last == j) {
        n.chart_b.x = kU * kV;
        n.chart_b.y = kV;
      } else {
        n.chart_b.x = kV;
        n.chart_b.y = kU * kV;
      }
      n.corners.push_back({last + 1, ChartSlot::B, Rat(0)});
    }
  }

  for (const auto& n : t.nodes_) {
    std::set<int> from_corners;
    for (const auto& c : n.corners) from_corners.insert(c.other);
    if (from_corners != n.adjacent || from_corners.size() != n.corners.size())
      throw Error(ErrorCode::InternalInconsistency, "corner records of D" + std::to_string(n.id) + " disagree with the dual graph");
  }
  return t;
}

std::string ResolutionTower::emit_dot(const std::vector<bool>* invariant, const std::vector<int>& bad) const {
  std::ostringstream os;
  os << "digraph resolution {\n  edge [dir=none];\n";
  for (const auto& n : nodes_) {
    std::string label = "D" + std::to_string(n.id) + " w=" + std::to_string(n.weight);
    std::vector<std::string> attrs;
    bool is_bad = std::find(bad.begin(), bad.end(), n.id) != bad.end();
    if (invariant && !(*invariant)[static_cast<size_t>(n.id - 1)]) {
      label += " dicritical";
      attrs.emplace_back("shape=box");
      attrs.emplace_back("style=filled");
      attrs.emplace_back("fillcolor=gray");
    }
    if (is_bad) {
      label += " bad";
      attrs.emplace_back("penwidth=3");
    }
    if (n.carries_gamma) attrs.emplace_back("peripheries=2");
    os << "  D" << n.id << " [label=\"" << label << "\"";
    for (const auto& a : attrs) os << ", " << a;
    os << "];\n";
  }
  for (const auto& n : nodes_)
    for (int o : n.adjacent)
      if (o > n.id) os << "  D" << n.id << " -> D" << o << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

ResolutionTower desingularize(const PuiseuxBranch& branch) {
  validate(branch);
  require_singular(branch);
  const BranchInvariants inv = invariants(branch);

  return with_precision_retry(branch, [&](int working) {
    auto [x, y] = to_series(branch, working);
    ParamBranch cur{std::move(x), std::move(y)};
    std::vector<ParamBranch> strict{cur};
    std::vector<StopCheck> stops{StopCheck{}};
    std::vector<Direction> dirs;
    std::optional<int> other;
    for (int level = 1;; ++level) {
      if (level > kMaxBlowups) throw Error(ErrorCode::InternalInconsistency, "resolution does not terminate");
      BlowupStep step = blowup_once(cur);
      if (step.direction.is_vertical())
        other = level >= 2 ? std::optional<int>(level - 1) : std::nullopt;
      else if (!step.direction.slope.is_zero())
        other = std::nullopt;
      dirs.push_back(step.direction);
      cur = std::move(step.branch);
      strict.push_back(cur);
      stops.push_back(stop_check(cur, other));
      if (stops.back().all()) break;
    }

    ResolutionTower t = ResolutionTower::from_directions(std::move(dirs));
    t.strict_ = std::move(strict);
    t.stops_ = std::move(stops);

    const auto chars = t.characteristic_divisors();
    if (static_cast<int>(chars.size()) != inv.genus)
      throw Error(ErrorCode::InternalInconsistency, "number of characteristic divisors differs from the genus");
    for (size_t i = 0; i < chars.size(); ++i)
      if (t.node(chars[i]).weight != inv.partial_multiplicities[i + 1])
        throw Error(ErrorCode::InternalInconsistency, "characteristic divisor weight differs from the partial multiplicity");
    if (t.node(t.k()).weight != inv.multiplicity)
      throw Error(ErrorCode::InternalInconsistency, "last weight differs from the multiplicity");
    return t;
  });
}

namespace {

// Coordinate in the divisor's chart A of the point reached in `pos`, for a
// divisor created with direction `dir` (pos != dir).
Rat chart_a_coordinate(const Direction& dir, const Direction& pos) {
  if (dir.is_vertical()) {
    // chart A = (u, u v): direction [1 : v]
    return pos.slope;
  }
  // chart A = (u v, u (1 + c v)): direction [v : 1 + c v]
  if (pos.is_vertical()) return Rat(0);
  return Rat(1) / (pos.slope - dir.slope);
}

}  // namespace

BranchExit follow_branch(const ResolutionTower& tower, const PuiseuxBranch& branch) {
  validate(branch);
  return with_precision_retry(branch, [&](int working) {
    auto [x, y] = to_series(branch, working);
    ParamBranch cur{std::move(x), std::move(y)};
    for (int j = 1; j <= tower.k(); ++j) {
      BlowupStep step = blowup_once(cur);
      const Direction& dir = tower.directions()[static_cast<size_t>(j - 1)];
      if (step.direction != dir) {
        BranchExit e;
        e.divisor = j;
        e.position = step.direction;
        Rat v = chart_a_coordinate(dir, step.direction);
        for (const auto& c : tower.node(j).corners)
          if (c.chart == ChartSlot::A && c.coordinate == v) e.at_corner = true;
        StopCheck s = stop_check(step.branch, std::nullopt);
        e.smooth = s.smooth;
        e.transverse = s.transverse;
        return e;
      }
      cur = std::move(step.branch);
    }
    BranchExit e;
    e.divisor = tower.k();
    e.position = tower.directions().back();
    e.through_last_center = true;
    StopCheck s = stop_check(cur, tower.other_divisor(tower.k()));
    e.at_corner = !s.non_corner;
    e.smooth = s.smooth;
    e.transverse = s.transverse;
    return e;
  });
}

// ---------------------------------------------------------------------------

OracleGraph combinatorial_oracle(const BranchInvariants& inv) {
  if (inv.genus < 1) throw Error(ErrorCode::SmoothBranch, "oracle needs genus >= 1");
  OracleGraph out;
  auto& m = out.multiplicities;
  int prev_beta = 0;
  int e = inv.multiplicity;
  for (const auto& ce : inv.characteristic_exponents) {
    int a = ce.exponent - prev_beta;
    int b = e;
    while (a > 0 && b > 0) {
      if (a >= b) {
        m.insert(m.end(), static_cast<size_t>(a / b), b);
        a %= b;
      } else {
        m.insert(m.end(), static_cast<size_t>(b / a), a);
        b %= a;
      }
    }
    e = a + b;
    prev_beta = ce.exponent;
  }
  if (e != 1) throw Error(ErrorCode::InternalInconsistency, "Euclidean algorithm did not end at gcd 1");

  const int k = static_cast<int>(m.size());
  auto mult = [&](int j) { return j < k ? m[static_cast<size_t>(j)] : 1; };
  out.proximate_to.assign(static_cast<size_t>(k), {});
  std::vector<int> last_proximate(static_cast<size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    int sum = 0;
    int j = i;
    while (sum < mult(i)) {
      ++j;
      sum += mult(j);
      if (j < k) {
        out.proximate_to[static_cast<size_t>(j)].push_back(i);
        last_proximate[static_cast<size_t>(i)] = j;
      }
    }
    if (sum != mult(i)) throw Error(ErrorCode::InternalInconsistency, "proximity equality fails");
  }

  // D_{j+1} is the divisor of P_j.
  out.graph.weights.assign(static_cast<size_t>(k), 0);
  out.graph.adjacent.assign(static_cast<size_t>(k), {});
  out.graph.weights[0] = 1;
  for (int j = 1; j < k; ++j) {
    int w = 0;
    for (int i : out.proximate_to[static_cast<size_t>(j)]) w += out.graph.weights[static_cast<size_t>(i)];
    out.graph.weights[static_cast<size_t>(j)] = w;
  }
  for (int i = 0; i < k; ++i) {
    int j = last_proximate[static_cast<size_t>(i)];
    if (j < 0) continue;
    out.graph.adjacent[static_cast<size_t>(i)].insert(j + 1);
    out.graph.adjacent[static_cast<size_t>(j)].insert(i + 1);
  }
  return out;
}

}  // namespace folbound
