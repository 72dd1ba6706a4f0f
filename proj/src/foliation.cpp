#include "folbound/foliation.hpp"

#include <algorithm>
#include <sstream>

#include "folbound/error.hpp"
#include "folbound/series.hpp"

namespace folbound {

PlaneFoliation::PlaneFoliation(BiPoly A, BiPoly B) : a_(std::move(A)), b_(std::move(B)) {
  if (a_.is_zero() && b_.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero form defines no foliation");
  BiPoly g = BiPoly::gcd(a_, b_);
  if (!g.is_constant()) throw Error(ErrorCode::NotCoprime, "coefficients share the factor " + g.str());
}

PlaneFoliation PlaneFoliation::saturate(const BiPoly& A, const BiPoly& B) {
  if (A.is_zero() && B.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero form defines no foliation");
  BiPoly g = BiPoly::gcd(A, B);
  auto a = BiPoly::divide_exact(A, g);
  auto b = BiPoly::divide_exact(B, g);
  if (!a || !b) throw Error(ErrorCode::InternalInconsistency, "gcd does not divide the coefficients");
  return PlaneFoliation(std::move(*a), std::move(*b));
}

PlaneFoliation PlaneFoliation::from_vector_field(const BiPoly& a, const BiPoly& b) { return PlaneFoliation(b, -a); }

std::string PlaneFoliation::str() const { return "(" + a_.str() + ") dx + (" + b_.str() + ") dy"; }

int order(const PlaneFoliation& f) { return std::min(f.A().order(), f.B().order()).value(); }

std::string InvarianceVerdict::str() const {
  switch (kind) {
    case Kind::ExactInvariant: return "ExactInvariant";
    case Kind::InvariantUpToN: return "InvariantUpToN(" + std::to_string(order) + ")";
    case Kind::NotInvariant: return "NotInvariant(" + std::to_string(order) + ")";
  }
  return {};
}

int default_check_order(const PlaneFoliation& f, const PuiseuxBranch& branch) {
  return 2 * (branch.n + branch.max_exponent() + order(f) * branch.n);
}

InvarianceVerdict is_invariant(const PlaneFoliation& f, const PuiseuxBranch& branch, std::optional<int> check_order) {
  validate(branch);
  const int wanted = check_order ? *check_order : default_check_order(f, branch);
  if (wanted < 0) throw Error(ErrorCode::InvalidArgument, "negative check order");
  const int degree = std::max(f.A().total_degree(), f.B().total_degree());
  const int exact_order = (degree + 1) * branch.max_exponent() + branch.n + 1;

  auto [x, y] = to_series(branch, exact_order);
  TruncSeries e = substitute(f.A(), x, y) * x.derivative() + substitute(f.B(), x, y) * y.derivative();
  const auto witness = e.known_order();

  if (branch.truncation.is_exact()) {
    if (!witness) return {InvarianceVerdict::Kind::ExactInvariant, wanted};
    return {InvarianceVerdict::Kind::NotInvariant, *witness};
  }
  const int achieved = std::min(wanted, e.truncation());
  if (witness && *witness <= achieved) return {InvarianceVerdict::Kind::NotInvariant, *witness};
  return {InvarianceVerdict::Kind::InvariantUpToN, achieved};
}

// ---------------------------------------------------------------------------

ChartFoliation transform_to_chart(const BiPoly& A, const BiPoly& B, const LocalChart& chart) {
  const BiPoly Ac = A.compose(chart.x, chart.y);
  const BiPoly Bc = B.compose(chart.x, chart.y);
  ChartFoliation cf;
  cf.chart = chart;
  cf.A = Ac * chart.x.dx() + Bc * chart.y.dx();
  cf.B = Ac * chart.x.dy() + Bc * chart.y.dy();
  if (cf.A.is_zero() && cf.B.is_zero()) throw Error(ErrorCode::InternalInconsistency, "pullback of a form vanished");
  switch (chart.fresh) {
    case LocalChart::Fresh::U: {
      int m = std::min(cf.A.x_adic_order(), cf.B.x_adic_order()).value();
      cf.A = cf.A.divide_monomial(m, 0);
      cf.B = cf.B.divide_monomial(m, 0);
      cf.removed_u = m;
      break;
    }
    case LocalChart::Fresh::V: {
      int m = std::min(cf.A.y_adic_order(), cf.B.y_adic_order()).value();
      cf.A = cf.A.divide_monomial(0, m);
      cf.B = cf.B.divide_monomial(0, m);
      cf.removed_v = m;
      break;
    }
    case LocalChart::Fresh::None:
      break;
  }
  return cf;
}

ChartFoliation transform_to_chart(const PlaneFoliation& f, const LocalChart& chart) {
  return transform_to_chart(f.A(), f.B(), chart);
}

std::vector<ChartFoliation> canonical_foliations(const PlaneFoliation& f, const ResolutionTower& tower) {
  std::vector<ChartFoliation> out;
  ChartFoliation base;
  base.chart.base_level = 0;
  base.chart.x = BiPoly::x();
  base.chart.y = BiPoly::y();
  base.A = f.A();
  base.B = f.B();
  out.push_back(std::move(base));
  for (int j = 1; j <= tower.k(); ++j) {
    const ChartFoliation& prev = out.back();
    out.push_back(transform_to_chart(prev.A, prev.B, tower.step_chart(j)));
  }
  return out;
}

bool divisor_invariant(const ChartFoliation& cf) { return cf.B.restrict_x0().is_zero(); }

bool divisor_invariant(const ChartFoliation& chart_a, const ChartFoliation& chart_b) {
  bool a = divisor_invariant(chart_a);
  bool b = divisor_invariant(chart_b);
  if (a != b) throw Error(ErrorCode::InconsistentCharts, "the two charts of a divisor disagree on its invariance");
  return a;
}

namespace {

int finite_order_at(const UniPoly& p, const Rat& v0) {
  Order o = p.order_at(v0);
  if (o.is_infinite()) throw Error(ErrorCode::IdenticallyZeroRestriction, "restriction to the divisor vanishes identically");
  return o.value();
}

int point_count(const UniPoly& on_a, const UniPoly& on_b) {
  if (on_a.is_zero() || on_b.is_zero())
    throw Error(ErrorCode::IdenticallyZeroRestriction, "restriction to the divisor vanishes identically");
  return on_a.degree() + finite_order_at(on_b, Rat(0));
}

}  // namespace

int aleph_at(const ChartFoliation& cf, const Rat& v0) {
  if (!divisor_invariant(cf)) throw Error(ErrorCode::DivisorNotInvariant, "aleph needs an invariant divisor");
  return finite_order_at(cf.A.restrict_x0(), v0);
}

int tang_at(const ChartFoliation& cf, const Rat& v0) {
  if (divisor_invariant(cf)) throw Error(ErrorCode::DivisorInvariant, "tang needs a non-invariant divisor");
  return finite_order_at(cf.B.restrict_x0(), v0);
}

int aleph_sum(const ChartFoliation& chart_a, const ChartFoliation& chart_b) {
  if (!divisor_invariant(chart_a, chart_b)) throw Error(ErrorCode::DivisorNotInvariant, "aleph needs an invariant divisor");
  return point_count(chart_a.A.restrict_x0(), chart_b.A.restrict_x0());
}

int tang_sum(const ChartFoliation& chart_a, const ChartFoliation& chart_b) {
  if (divisor_invariant(chart_a, chart_b)) throw Error(ErrorCode::DivisorInvariant, "tang needs a non-invariant divisor");
  return point_count(chart_a.B.restrict_x0(), chart_b.B.restrict_x0());
}

Rat residue_at_zero(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ResidueUndefined, "residue with a zero denominator");
  const int m = den.low_order().value();
  if (m == 0 || num.is_zero()) return Rat(0);
  const int n = m - 1;
  std::vector<Rat> d(den.coeffs().begin() + m, den.coeffs().end());
  std::vector<Rat> a(num.coeffs().begin(), num.coeffs().end());
  TruncSeries ds(std::vector<Rat>(d.begin(), d.end()), std::max(n, static_cast<int>(d.size()) - 1));
  TruncSeries as(std::move(a), std::max(n, num.degree()));
  TruncSeries q = as.truncated(n) * ds.truncated(n).inverse();
  return q.coeff(n);
}

CamachoSad cs_at_corner(const ChartFoliation& cf, const Rat& v0) {
  const BiPoly A = cf.A.shift_y(v0);
  const BiPoly B = cf.B.shift_y(v0);
  if (!B.restrict_x0().is_zero() || !A.restrict_y0().is_zero())
    throw Error(ErrorCode::DivisorNotInvariant, "Camacho-Sad index needs two invariant curves");
  const BiPoly B1 = B.divide_monomial(1, 0);
  const BiPoly A1 = A.divide_monomial(0, 1);

  CamachoSad cs;
  cs.along_divisor = residue_at_zero(B1.restrict_x0(), -A.restrict_x0());
  cs.along_neighbor = residue_at_zero(-A1.restrict_y0(), B.restrict_y0());
  cs.aleph_divisor = finite_order_at(A.restrict_x0(), Rat(0));
  cs.aleph_neighbor = finite_order_at(B.restrict_y0(), Rat(0));
  cs.diagonal_nonzero = !B1.coeff(0, 0).is_zero() && !A1.coeff(0, 0).is_zero();
  return cs;
}

// ---------------------------------------------------------------------------

std::vector<bool> IndexLedger::invariant_flags() const {
  std::vector<bool> flags;
  for (const auto& r : records) flags.push_back(r.invariant);
  return flags;
}

IndexLedger build_ledger(const PlaneFoliation& f, const ResolutionTower& tower) {
  const auto canon = canonical_foliations(f, tower);
  const int k = tower.k();

  std::vector<ChartFoliation> ca, cb;
  std::vector<bool> invariant;
  for (const auto& node : tower.nodes()) {
    const auto& base_a = canon[static_cast<size_t>(node.chart_a.base_level)];
    ca.push_back(transform_to_chart(base_a.A, base_a.B, node.chart_a));
    const auto& base_b = canon[static_cast<size_t>(node.chart_b.base_level)];
    cb.push_back(transform_to_chart(base_b.A, base_b.B, node.chart_b));
    invariant.push_back(divisor_invariant(ca.back(), cb.back()));
  }

  IndexLedger ledger;
  for (const auto& node : tower.nodes()) {
    const size_t idx = static_cast<size_t>(node.id - 1);
    DivisorIndexRecord r;
    r.divisor = node.id;
    r.weight = node.weight;
    r.invariant = invariant[idx];
    int invariant_corners = 0;
    for (const auto& c : node.corners) {
      const ChartFoliation& cf = c.chart == ChartSlot::A ? ca[idx] : cb[idx];
      CornerEntry e;
      e.other = c.other;
      e.chart = c.chart;
      e.coordinate = c.coordinate;
      e.other_invariant = invariant[static_cast<size_t>(c.other - 1)];
      if (r.invariant) {
        e.aleph = aleph_at(cf, c.coordinate);
        if (e.other_invariant) {
          ++invariant_corners;
          try {
            e.cs = cs_at_corner(cf, c.coordinate);
          } catch (const Error& err) {
            if (err.code() != ErrorCode::ResidueUndefined) throw;
          }
        }
      } else {
        e.tang = tang_at(cf, c.coordinate);
      }
      r.corners.push_back(std::move(e));
    }
    if (r.invariant) {
      r.sum_aleph = aleph_sum(ca[idx], cb[idx]);
      r.sum_kappa = *r.sum_aleph - invariant_corners;
      if (*r.sum_kappa < 0) throw Error(ErrorCode::InternalInconsistency, "negative kappa sum");
    } else {
      r.sum_tang = tang_sum(ca[idx], cb[idx]);
    }
    if (node.id == k) r.gamma_entry = r.invariant ? aleph_at(cb[idx], Rat(0)) : tang_at(cb[idx], Rat(0));
    ledger.records.push_back(std::move(r));
  }
  return ledger;
}

}  // namespace folbound
