#include <doctest.h>

#include "folbound/corpus.hpp"
#include "folbound/error.hpp"
#include "folbound/foliation.hpp"

using namespace folbound;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

PuiseuxBranch exact(int n, std::vector<int> exps) {
  PuiseuxBranch b{n, {}, Truncation::exact()};
  for (int e : exps) b.terms.push_back({e, Rat(1)});
  return b;
}

// (x, y) = (u, uv) at the origin, with u the new divisor
LocalChart blowup_chart() {
  LocalChart c;
  c.base_level = 0;
  c.x = X;
  c.y = X * Y;
  c.fresh = LocalChart::Fresh::U;
  return c;
}

ChartFoliation raw(BiPoly A, BiPoly B) {
  ChartFoliation cf;
  cf.A = std::move(A);
  cf.B = std::move(B);
  return cf;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

PlaneFoliation linear(int p, int q) { return PlaneFoliation(Y * Rat(-q), X * Rat(p)); }
PlaneFoliation radial() { return PlaneFoliation(-Y, X); }
PlaneFoliation cusp_df() { return PlaneFoliation::saturate(X * X * Rat(-3), Y * Rat(2)); }

}  // namespace

TEST_CASE("construction and order") {
  CHECK(code_of([] { PlaneFoliation(X * X, X * Y); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { PlaneFoliation(BiPoly(), BiPoly()); }) == ErrorCode::InvalidArgument);
  auto s = PlaneFoliation::saturate(X * X * Y, X * Y * Y);
  CHECK(s.A() * Y == s.B() * X);
  CHECK(order(s) == 1);

  auto sharp_field = PlaneFoliation::from_vector_field(X * Y * Rat(8), Y * Y * Rat(13) - pow(X, 3));
  CHECK(order(sharp_field) == 2);
  CHECK(order(linear(2, 3)) == 1);
  CHECK(order(cusp_df()) == 1);
}

TEST_CASE("the dual field annihilates the form") {
  for (const auto& f : {linear(3, 5), radial(), cusp_df(), *sharp_example().foliation}) {
    CHECK((f.A() * f.field_x() + f.B() * f.field_y()).is_zero());
  }
  auto f = PlaneFoliation::from_vector_field(X * Rat(2), Y * Rat(-3));
  CHECK(f.A() == Y * Rat(-3));
  CHECK(f.B() == X * Rat(-2));
  CHECK(f.field_x() == -(X * Rat(2)));
  CHECK(f.field_y() == -(Y * Rat(-3)));
}

TEST_CASE("is_invariant") {
  auto v = is_invariant(linear(2, 3), exact(2, {3}));
  CHECK(v.kind == InvarianceVerdict::Kind::ExactInvariant);
  auto w = is_invariant(radial(), exact(2, {3}));
  CHECK(w.kind == InvarianceVerdict::Kind::NotInvariant);
  CHECK(w.order == 4);
  CHECK(is_invariant(linear(5, 7), exact(5, {7})).invariant());

  auto sharp = sharp_example();
  auto s40 = is_invariant(*sharp.foliation, sharp.branch, 40);
  CHECK(s40.kind == InvarianceVerdict::Kind::InvariantUpToN);
  CHECK(s40.order == 40);
  // the data only supports what the truncation allows
  auto capped = is_invariant(*sharp.foliation, sharp.branch, 1000);
  CHECK(capped.kind == InvarianceVerdict::Kind::InvariantUpToN);
  CHECK(capped.order < 1000);
  CHECK(capped.order >= 40);
  CHECK_FALSE(is_invariant(radial(), sharp.branch, 40).invariant());
}

TEST_CASE("transform_to_chart on (u, uv)") {
  auto rad = transform_to_chart(radial(), blowup_chart());
  CHECK(rad.A.is_zero());
  CHECK(rad.B == BiPoly(Rat(1)));
  CHECK(rad.removed_u == 2);

  auto lin = transform_to_chart(linear(2, 5), blowup_chart());
  CHECK(lin.A == Y * Rat(-3));
  CHECK(lin.B == X * Rat(2));
  CHECK(lin.removed_u == 1);

  auto cusp = transform_to_chart(cusp_df(), blowup_chart());
  // equal up to a scalar
  const Rat s = cusp.B.coeff(1, 1) / Rat(2);
  CHECK(cusp.A == (Y * Y * Rat(2) - X * Rat(3)) * s);
  CHECK(cusp.B == X * Y * Rat(2) * s);
}

TEST_CASE("divisor invariance") {
  CHECK_FALSE(divisor_invariant(transform_to_chart(radial(), blowup_chart())));
  CHECK(divisor_invariant(transform_to_chart(linear(2, 3), blowup_chart())));
  CHECK(divisor_invariant(transform_to_chart(cusp_df(), blowup_chart())));
  CHECK(code_of([] { divisor_invariant(raw(Y, X), raw(Y, BiPoly(Rat(1)))); }) == ErrorCode::InconsistentCharts);
}

TEST_CASE("aleph and tang at points") {
  auto lin = transform_to_chart(linear(2, 3), blowup_chart());
  CHECK(aleph_at(lin, Rat(0)) == 1);
  CHECK(aleph_at(lin, Rat(5)) == 0);
  auto cusp = transform_to_chart(cusp_df(), blowup_chart());
  CHECK(aleph_at(cusp, Rat(0)) == 2);
  auto rad = transform_to_chart(radial(), blowup_chart());
  CHECK(tang_at(rad, Rat(0)) == 0);
  CHECK(code_of([&] { aleph_at(rad, Rat(0)); }) == ErrorCode::DivisorNotInvariant);
  CHECK(code_of([&] { tang_at(lin, Rat(0)); }) == ErrorCode::DivisorInvariant);
}

TEST_CASE("point sums over the single blow-up") {
  auto t = ResolutionTower::from_directions({Direction::with_slope(Rat(0))});
  auto pair = [&](const PlaneFoliation& f) {
    auto canon = canonical_foliations(f, t);
    auto at = [&](const LocalChart& c) {
      const auto& base = canon.at(static_cast<size_t>(c.base_level));
      return transform_to_chart(base.A, base.B, c);
    };
    return std::pair{at(t.node(1).chart_a), at(t.node(1).chart_b)};
  };
  auto [la, lb] = pair(linear(2, 3));
  CHECK(aleph_sum(la, lb) == 2);
  auto [ra, rb] = pair(radial());
  CHECK(tang_sum(ra, rb) == 0);
  // (-xy + y^3) dx + x^2 dy: one simple tangency with D_1
  auto [ta, tb] = pair(PlaneFoliation(pow(Y, 3) - X * Y, X * X));
  CHECK(tang_sum(ta, tb) == 1);
  CHECK(code_of([&] { aleph_sum(ra, rb); }) == ErrorCode::DivisorNotInvariant);
  CHECK(code_of([] { aleph_sum(raw(BiPoly(), X), raw(BiPoly(), X)); }) == ErrorCode::IdenticallyZeroRestriction);
}

TEST_CASE("residues") {
  CHECK(residue_at_zero(UniPoly::constant(Rat(3)), UniPoly::monomial(Rat(-2), 1)) == Rat(-3, 2));
  CHECK(residue_at_zero(UniPoly::constant(Rat(1)), UniPoly({Rat(1), Rat(1)})) == Rat(0));
  // 1 / (t^2 (1 + t)) = t^-2 - t^-1 + ...
  CHECK(residue_at_zero(UniPoly::constant(Rat(1)), UniPoly({Rat(0), Rat(0), Rat(1), Rat(1)})) == Rat(-1));
  CHECK(code_of([] { residue_at_zero(UniPoly::constant(Rat(1)), UniPoly()); }) == ErrorCode::ResidueUndefined);
}

TEST_CASE("Camacho-Sad at a linear corner") {
  // X = p x d/dx - q y d/dy, i.e. q y dx + p x dy
  const int p = 2, q = 7;
  auto cs = cs_at_corner(raw(Y * Rat(q), X * Rat(p)), Rat(0));
  CHECK(cs.along_divisor == Rat(-p, q));
  CHECK(cs.along_neighbor == Rat(-q, p));
  CHECK(cs.along_divisor * cs.along_neighbor == Rat(1));
  CHECK(cs.aleph_divisor == 1);
  CHECK(cs.aleph_neighbor == 1);
  CHECK(cs.diagonal_nonzero);

  // X = x d/dx + lambda y d/dy
  const Rat lambda(5, 3);
  auto lin = cs_at_corner(raw(-Y * lambda, X), Rat(0));
  CHECK(lin.along_divisor == Rat(1) / lambda);

  // corner away from the origin of the chart
  auto shifted = cs_at_corner(raw((Y - BiPoly(Rat(4))) * Rat(q), X * Rat(p)), Rat(4));
  CHECK(shifted.along_divisor == Rat(-p, q));
  CHECK(code_of([] { cs_at_corner(raw(Y, BiPoly(Rat(1))), Rat(0)); }) == ErrorCode::DivisorNotInvariant);
}

TEST_CASE("ledger of d(y^2 - x^3) over the cusp") {
  auto t = desingularize(exact(2, {3}));
  auto ledger = build_ledger(cusp_df(), t);
  int weighted = 0;
  for (const auto& r : ledger.records) {
    CHECK(r.invariant);
    weighted += r.weight * *r.sum_kappa;
  }
  CHECK(weighted == 2);
  CHECK(ledger.at(3).gamma_entry.has_value());
}

TEST_CASE("ledger of the radial foliation") {
  auto t = ResolutionTower::from_directions({Direction::with_slope(Rat(0))});
  auto ledger = build_ledger(radial(), t);
  CHECK_FALSE(ledger.at(1).invariant);
  CHECK(ledger.at(1).sum_tang == 0);
  CHECK_FALSE(ledger.at(1).sum_kappa.has_value());
}

TEST_CASE("ledger of the sharp pair") {
  auto e = sharp_example();
  auto t = desingularize(e.branch);
  auto ledger = build_ledger(*e.foliation, t);
  int non_invariant = 0;
  for (const auto& r : ledger.records)
    if (!r.invariant) {
      ++non_invariant;
      CHECK(r.divisor == t.k());
      CHECK(r.sum_tang == 0);
    }
  CHECK(non_invariant == 1);
}

TEST_CASE("ledger properties over the corpus") {
  for (const auto& e : default_corpus()) {
    if (!e.foliation) continue;
    CAPTURE(e.name);
    auto t = desingularize(e.branch);
    for (const auto& cf : canonical_foliations(*e.foliation, t)) CHECK(BiPoly::gcd(cf.A, cf.B).is_constant());
    auto ledger = build_ledger(*e.foliation, t);
    CHECK(static_cast<int>(ledger.records.size()) == t.k());
    for (const auto& r : ledger.records) {
      CHECK(r.weight == t.node(r.divisor).weight);
      CHECK(r.invariant == r.sum_kappa.has_value());
      CHECK(r.invariant != r.sum_tang.has_value());
      if (r.sum_kappa) CHECK(*r.sum_kappa >= 0);
      if (r.sum_tang) CHECK(*r.sum_tang >= 0);
      CHECK(r.corners.size() == t.node(r.divisor).adjacent.size());
      for (const auto& c : r.corners) {
        if (c.aleph) CHECK(*c.aleph >= 0);
        if (c.cs && c.cs->aleph_divisor == 1 && c.cs->aleph_neighbor == 1 && c.cs->diagonal_nonzero)
          CHECK(c.cs->along_divisor * c.cs->along_neighbor == Rat(1));
      }
    }
  }
}
