#include <doctest.h>

#include "folbound/branch.hpp"
#include "folbound/error.hpp"

using namespace folbound;

namespace {

PuiseuxBranch exact(int n, std::vector<int> exps) {
  PuiseuxBranch b{n, {}, Truncation::exact()};
  for (int e : exps) b.terms.push_back({e, Rat(1)});
  return b;
}

ErrorCode code_of(const PuiseuxBranch& b) {
  try {
    validate(b);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(exact(2, {3})));
  CHECK(code_of(exact(2, {4})) == ErrorCode::NotReduced);
  CHECK_NOTHROW(validate(exact(4, {6, 7})));
  CHECK(code_of(exact(3, {2})) == ErrorCode::ExponentBelowN);
  CHECK(code_of(exact(2, {5, 3})) == ErrorCode::InvalidArgument);
  CHECK(code_of(PuiseuxBranch{2, {{3, Rat(0)}}, Truncation::exact()}) == ErrorCode::InvalidArgument);
  CHECK(code_of(PuiseuxBranch{2, {{3, Rat(1)}}, Truncation::at(2)}) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(validate(exact(1, {})));
  CHECK_THROWS_AS(require_singular(exact(1, {})), Error);
}

TEST_CASE("invariants of the cusp") {
  auto inv = invariants(exact(2, {3}));
  CHECK(inv.genus == 1);
  CHECK(inv.partial_multiplicities == std::vector<int>{1, 2});
  CHECK(inv.ratios == std::vector<int>{2});
  CHECK(inv.characteristic_exponents.size() == 1);
  CHECK(inv.characteristic_exponents[0].exponent == 3);
  CHECK(inv.characteristic_exponents[0].numerator == 3);
  CHECK(inv.characteristic_exponents[0].denominator == 2);
}

TEST_CASE("invariants of gamma_2 and of (4; 6, 7)") {
  auto g2 = invariants(exact(60, {90, 105, 115, 116}));
  CHECK(g2.genus == 4);
  CHECK(g2.partial_multiplicities == std::vector<int>{1, 2, 4, 12, 60});
  CHECK(g2.ratios == std::vector<int>{2, 2, 3, 5});
  CHECK(g2.gcd_sequence.at(105) == 15);

  auto b = exact(4, {6, 7});
  auto inv = invariants(b);
  CHECK(inv.genus == 2);
  CHECK(inv.partial_multiplicities == std::vector<int>{1, 2, 4});
  CHECK(multiplicity(b) == 4);
  CHECK(virtual_multiplicity(b) == 2);
  CHECK(virtual_multiplicity(exact(2, {3})) == 1);
  CHECK(virtual_multiplicity(exact(60, {90, 105, 115, 116})) == 12);
  CHECK(multiplicity(exact(60, {90, 105, 115, 116})) == 60);
  CHECK_THROWS_AS(virtual_multiplicity(exact(1, {})), Error);
}

TEST_CASE("partial multiplicity laws") {
  for (auto b : {exact(2, {3}), exact(4, {6, 7}), exact(6, {8, 9}), exact(60, {90, 105, 115, 116}), exact(8, {12, 14, 15})}) {
    auto inv = invariants(b);
    CHECK(inv.partial_multiplicities.front() == 1);
    CHECK(inv.partial_multiplicities.back() == b.n);
    for (int i = 1; i <= inv.genus; ++i) {
      const int prev = inv.partial_multiplicities[static_cast<size_t>(i - 1)];
      CHECK(inv.partial_multiplicities[static_cast<size_t>(i)] == prev * inv.ratios[static_cast<size_t>(i - 1)]);
      CHECK(inv.ratios[static_cast<size_t>(i - 1)] >= 2);
    }
    CHECK((1 << inv.genus) <= b.n);
    CHECK(virtual_multiplicity(inv) >= (1 << (inv.genus - 1)));
  }
}

TEST_CASE("truncate_to_class") {
  auto b = exact(4, {6, 7, 9});
  auto t = truncate_to_class(b);
  CHECK(t == exact(4, {6, 7}));
  auto same = [](const BranchInvariants& a, const BranchInvariants& c) {
    return a.genus == c.genus && a.partial_multiplicities == c.partial_multiplicities && a.ratios == c.ratios;
  };
  CHECK(same(invariants(t), invariants(b)));
  CHECK(truncate_to_class(exact(2, {3})) == exact(2, {3}));
  auto g2 = exact(60, {90, 105, 115, 116});
  CHECK(truncate_to_class(g2) == g2);
}

TEST_CASE("to_series respects truncation") {
  PuiseuxBranch b{2, {{3, Rat(1)}, {5, Rat(1, 2)}}, Truncation::at(7)};
  auto [x, y] = to_series(b, 100);
  CHECK(x.truncation() == 7);
  CHECK(y.coeff(5) == Rat(1, 2));
  auto [xe, ye] = to_series(exact(2, {3}), 12);
  CHECK(ye.truncation() == 12);
  CHECK_THROWS_AS(to_series(exact(4, {6, 7}), 5), Error);
}
