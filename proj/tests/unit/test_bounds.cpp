#include <doctest.h>

#include <random>

#include "folbound/bounds.hpp"
#include "folbound/corpus.hpp"
#include "folbound/error.hpp"

using namespace folbound;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

PuiseuxBranch exact(int n, std::vector<int> exps) {
  PuiseuxBranch b{n, {}, Truncation::exact()};
  for (int e : exps) b.terms.push_back({e, Rat(1)});
  return b;
}

// Lambda straight from the definition, by flood fill on the dual graph.
int lambda_oracle(const DualGraph& g, const std::vector<bool>& inv) {
  const int k = static_cast<int>(g.weights.size());
  std::vector<int> comp(static_cast<size_t>(k), -1);
  std::vector<int> comp_weight;
  for (int s = 0; s < k; ++s) {
    if (!inv[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] >= 0) continue;
    const int c = static_cast<int>(comp_weight.size());
    comp_weight.push_back(1 << 30);
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp_weight.back() = std::min(comp_weight.back(), g.weights[static_cast<size_t>(v)]);
      for (int o : g.adjacent[static_cast<size_t>(v)]) {
        const auto oi = static_cast<size_t>(o - 1);
        if (inv[oi] && comp[oi] < 0) {
          comp[oi] = c;
          stack.push_back(o - 1);
        }
      }
    }
  }
  int total = g.weights.back() - 1;
  const int last = comp.back();
  for (int c = 0; c < static_cast<int>(comp_weight.size()); ++c)
    if (c != last) total += comp_weight[static_cast<size_t>(c)];
  for (int v = 0; v < k; ++v) {
    if (inv[static_cast<size_t>(v)]) continue;
    int val = v == k - 1 ? 1 : 0;
    for (int o : g.adjacent[static_cast<size_t>(v)]) val += inv[static_cast<size_t>(o - 1)] ? 1 : 0;
    total += g.weights[static_cast<size_t>(v)] * (2 - val);
  }
  return total;
}

std::vector<bool> all_invariant(const ResolutionTower& t) { return std::vector<bool>(static_cast<size_t>(t.k()), true); }

std::vector<bool> with_dicritical(const ResolutionTower& t, std::vector<int> ids) {
  auto f = all_invariant(t);
  for (int id : ids) f[static_cast<size_t>(id - 1)] = false;
  return f;
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

}  // namespace

TEST_CASE("lambda on the cusp tower") {
  auto t = desingularize(exact(2, {3}));
  auto all = lambda(t, all_invariant(t));
  CHECK(all.lambda_I == 0);
  CHECK(all.lambda_N == 0);
  CHECK(all.lambda == 1);

  auto last = lambda(t, with_dicritical(t, {3}));
  CHECK(last.lambda_I == 2);
  CHECK(last.lambda_N == -2);
  CHECK(last.lambda == 1);

  auto first = lambda(t, with_dicritical(t, {1}));
  CHECK(first.lambda_I == 0);
  CHECK(first.lambda_N == 1);
  CHECK(first.lambda == 2);
}

TEST_CASE("lambda agrees with a flood-fill oracle") {
  std::mt19937 rng(7);
  for (auto b : {exact(2, {3}), exact(4, {6, 7}), exact(6, {9, 10}), exact(8, {12, 14, 15}), exact(5, {7})}) {
    auto t = desingularize(b);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<bool> flags;
      for (int i = 0; i < t.k(); ++i) flags.push_back(std::bernoulli_distribution(0.7)(rng));
      CHECK(lambda(t, flags).lambda == lambda_oracle(t.graph(), flags));
    }
  }
}

TEST_CASE("inv decomposition") {
  auto t = desingularize(exact(4, {6, 7}));
  auto all = inv_decomposition(t, all_invariant(t));
  CHECK(all.components.size() == 1);
  CHECK(all.last_component == 0u);
  CHECK(all.tilde().empty());

  auto e = sharp_example();
  auto st = desingularize(e.branch);
  auto ledger = build_ledger(*e.foliation, st);
  auto d = inv_decomposition(st, ledger.invariant_flags());
  CHECK(d.components.size() == 2);
  CHECK_FALSE(d.last_component.has_value());
  std::set<int> covered;
  for (const auto& c : d.components)
    for (int id : c.divisors) covered.insert(id);
  CHECK(static_cast<int>(covered.size()) == st.k() - 1);
}

TEST_CASE("adjusted valence") {
  auto t = desingularize(exact(4, {6, 7}));
  CHECK(adjusted_valence(t, all_invariant(t), 5) == 3);
  CHECK(adjusted_valence(t, with_dicritical(t, {3}), 5) == 2);
  CHECK(adjusted_valence(t, all_invariant(t), 1) == 1);
  CHECK(adjusted_valence(t, with_dicritical(t, {3}), 3) == 3);
}

TEST_CASE("bad divisors") {
  auto t = desingularize(exact(4, {6, 7}));
  CHECK(bad_divisor_ids(t, all_invariant(t)).empty());
  CHECK(bad_divisor_ids(t, with_dicritical(t, {5})) == std::vector<int>{5});
  CHECK(bad_divisor_ids(t, with_dicritical(t, {3})) == std::vector<int>{3});
  // neighbours of a dicritical divisor are never bad
  CHECK(bad_divisor_ids(t, with_dicritical(t, {3, 5})).empty());
  CHECK(bad_divisor_ids(t, with_dicritical(t, {1})).empty());
  auto cfg = bad_divisors(t, with_dicritical(t, {5}));
  CHECK(cfg.indices == std::vector<int>{2});
  CHECK(code_of([&] { configuration_from_indices(t, {1, 2}); }) == ErrorCode::InvalidConfiguration);
}

TEST_CASE("configuration bound") {
  auto c = invariants(exact(2, {3}));
  CHECK(configuration_bound(c, std::vector<int>{}, std::vector<int>{}).lambda_G == 1);
  CHECK(configuration_bound(c, std::vector<int>{}, std::vector<int>{}).bound == 1);

  auto b467 = invariants(exact(4, {6, 7}));
  auto t467 = desingularize(exact(4, {6, 7}));
  CHECK(configuration_bound(b467, configuration_from_indices(t467, {2})).bound == 2);

  auto g2 = invariants(gen_gamma_family(2).branch);
  auto tg2 = desingularize(gen_gamma_family(2).branch);
  CHECK(configuration_bound(g2, configuration_from_indices(tg2, {4})).bound == 12);
  CHECK(configuration_bound(g2, std::vector<int>{}, std::vector<int>{}).lambda_G == 59);
}

TEST_CASE("multiplicity bound") {
  for (int n : {2, 3, 5}) {
    auto m = multiplicity_bound(invariants(gen_two_pair(n).branch));
    CHECK(m.mu == n);
    CHECK(m.two_power == 2);
  }
  auto g2 = multiplicity_bound(invariants(gen_gamma_family(2).branch));
  CHECK(g2.mu == 12);
  CHECK(g2.two_power == 8);
  auto cusp = multiplicity_bound(invariants(exact(2, {3})));
  CHECK(cusp.mu == 1);
  CHECK(cusp.two_power == 1);
  CHECK(code_of([] { multiplicity_bound(invariants(exact(1, {}))); }) == ErrorCode::SmoothBranch);
}

TEST_CASE("configurations") {
  auto cusp = enumerate_configurations(desingularize(exact(2, {3})), invariants(exact(2, {3})));
  REQUIRE(cusp.size() == 2);
  CHECK(cusp[0].config.indices.empty());
  CHECK(cusp[1].config.indices == std::vector<int>{1});

  // D_3 and D_5 touch
  auto b467 = enumerate_configurations(desingularize(exact(4, {6, 7})), invariants(exact(4, {6, 7})));
  CHECK(b467.size() == 3);
  auto t469 = desingularize(exact(4, {6, 9}));
  CHECK(t469.node(3).adjacent.count(6) == 0);
  CHECK(enumerate_configurations(t469, invariants(exact(4, {6, 9}))).size() == 4);

  for (auto b : {exact(4, {6, 7}), exact(6, {9, 10}), exact(8, {12, 14, 15}), gen_gamma_family(2).branch}) {
    auto t = desingularize(b);
    auto inv = invariants(b);
    auto q = inv.partial_multiplicities;
    for (const auto& r : enumerate_configurations(t, inv)) {
      CAPTURE(r.config.indices.size());
      CHECK(r.closed_form.lambda_G >= r.closed_form.bound);
      CHECK(r.closed_form.lambda_G == r.lambda_from_flags);
      CHECK(r.lambda_from_flags == lambda_oracle(t.graph(), synthesized_flags(t, r.config)));
      const auto& idx = r.config.indices;
      for (size_t l = 0; l < idx.size(); ++l) {
        CHECK(r.config.clamped_weights[l] == q[static_cast<size_t>(idx[l] - 1)]);
        const int prev = l == 0 ? 1 : q[static_cast<size_t>(idx[l - 1])];
        CHECK(r.config.free_weights[l] >= prev);
      }
      int bound = q.back();
      if (!idx.empty()) bound -= q[static_cast<size_t>(idx.back())];
      else bound -= 1;
      for (int j : idx) bound += q[static_cast<size_t>(j - 1)];
      CHECK(r.closed_form.bound == bound);
    }
  }
}

TEST_CASE("alternative theorem") {
  auto cusp = desingularize(exact(2, {3}));
  auto df = PlaneFoliation::saturate(X * X * Rat(-3), Y * Rat(2));
  auto a = classify_alternative(df, cusp, build_ledger(df, cusp), invariants(exact(2, {3})));
  CHECK(a.kind == Alternative::FirstCase);
  CHECK(a.chain_holds);
  CHECK(a.equality_case);
  CHECK(a.equality_ok);

  auto e = sharp_example();
  auto st = desingularize(e.branch);
  auto s = classify_alternative(*e.foliation, st, build_ledger(*e.foliation, st), invariants(e.branch));
  CHECK(s.kind == Alternative::RadialBadLast);
  CHECK(to_string(s.kind) == "RadialBadLast");
}

TEST_CASE("compare_lambda") {
  for (const auto& p : lambda_fixture_pairs()) {
    CAPTURE(p.name);
    auto t = desingularize(p.branch);
    auto r = compare_lambda(p.first, p.second, t, p.branch);
    CHECK(r.strictly_greater);
    CHECK(r.second.lambda > r.first.lambda);
  }
  auto t = desingularize(exact(2, {3}));
  auto df = PlaneFoliation::saturate(X * X * Rat(-3), Y * Rat(2));
  CHECK(code_of([&] { compare_lambda(df, df, t, exact(2, {3})); }) == ErrorCode::HypothesesNotMet);
  auto t467 = desingularize(exact(4, {6, 7}));
  // the second flagging changes the bad set
  CHECK(code_of([&] { compare_lambda(t467, all_invariant(t467), with_dicritical(t467, {5})); }) ==
        ErrorCode::HypothesesNotMet);
  auto r = compare_lambda(t467, with_dicritical(t467, {5}), with_dicritical(t467, {5, 1}));
  CHECK(r.strictly_greater);
}

TEST_CASE("bound report over the corpus") {
  for (const auto& e : default_corpus()) {
    if (!e.foliation) continue;
    CAPTURE(e.name);
    auto t = desingularize(e.branch);
    auto inv = invariants(e.branch);
    auto ledger = build_ledger(*e.foliation, t);
    auto r = bound_report(*e.foliation, t, ledger, inv);
    const int nu = order(*e.foliation);
    CHECK(r.nu0_foliation == nu);
    CHECK(r.nu0_gamma == e.branch.n);
    CHECK(r.lambda.lambda == lambda_oracle(t.graph(), ledger.invariant_flags()));
    CHECK(nu >= r.lambda.lambda + r.tang_weight_sum);
    CHECK(r.tang_weight_sum >= r.ni_weight_sum);
    CHECK(r.ni_weight_sum >= 0);
    CHECK(nu >= r.closed_form.bound + r.ni_weight_sum);
    CHECK(nu >= r.mu);
    CHECK(r.mu >= r.two_power);
    CHECK(r.estimate_chain);
    CHECK(r.configuration_estimate);
    CHECK(r.mu_bound);
    CHECK(r.genus_bound);
    CHECK(r.component_inequality);
    CHECK(r.alternative.chain_holds);
    CHECK(r.alternative.equality_ok);
    if (e.expected.count("nu0")) CHECK(nu == e.expected.at("nu0"));
    if (e.expected.count("mu")) CHECK(r.mu == e.expected.at("mu"));
  }
}
