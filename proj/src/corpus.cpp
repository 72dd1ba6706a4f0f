#include "folbound/corpus.hpp"

#include <numeric>

#include "folbound/bounds.hpp"
#include "folbound/error.hpp"

namespace folbound {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

PuiseuxBranch exact_branch(int n, std::vector<int> exponents) {
  PuiseuxBranch b{n, {}, Truncation::exact()};
  for (int e : exponents) b.terms.push_back({e, Rat(1)});
  return b;
}

}  // namespace

CorpusEntry gen_monomial(int p, int q) {
  if (p < 2 || q <= p) throw Error(ErrorCode::InvalidArgument, "monomial family needs 2 <= p < q");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::NotCoprime, "p and q must be coprime");
  CorpusEntry e;
  e.name = "monomial_" + std::to_string(p) + "_" + std::to_string(q);
  e.branch = exact_branch(p, {q});
  e.foliation = PlaneFoliation(Y * Rat(-q), X * Rat(p));
  e.expected = {{"nu0", 1}, {"mu", 1}};
  return e;
}

CorpusEntry gen_gamma_family(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "gamma family needs n >= 2");
  const int m = 30 * n;
  CorpusEntry e;
  e.name = "gamma_" + std::to_string(n);
  e.branch = exact_branch(m, {m + 30, m + 45, m + 55, m + 56});
  e.expected = {{"q1", n}, {"q2", 2 * n}, {"q3", 6 * n}, {"q4", 30 * n}, {"mu", 6 * n}};
  return e;
}

CorpusEntry gen_two_pair(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "two-pair family needs n >= 2");
  CorpusEntry e;
  e.name = "two_pair_" + std::to_string(n);
  e.branch = exact_branch(2 * n, {2 * n + 2, 2 * n + 3});
  e.expected = {{"q1", n}, {"q2", 2 * n}, {"mu", n}};
  return e;
}

FirstIntegralForm first_integral_form(const BiPoly& f, const BiPoly& h, const ResolutionTower& tower, int divisor) {
  FirstIntegralForm r{0, 0, 0, 0, PlaneFoliation(BiPoly(Rat(1)), BiPoly())};
  r.d = tower.divisor_order(f, divisor);
  r.d_prime = tower.divisor_order(h, divisor);
  if (r.d == 0 || r.d_prime == 0) throw Error(ErrorCode::DegenerateData, "f and h must vanish along the divisor");
  const int l = std::lcm(r.d, r.d_prime);
  r.a = l / r.d;
  r.c = l / r.d_prime;
  const BiPoly A = h * f.dx() * Rat(r.a) - f * h.dx() * Rat(r.c);
  const BiPoly B = h * f.dy() * Rat(r.a) - f * h.dy() * Rat(r.c);
  r.omega = PlaneFoliation::saturate(A, B);
  return r;
}

PuiseuxBranch sharp_branch(int truncation) {
  if (truncation < 6) throw Error(ErrorCode::InvalidArgument, "truncation must reach t^6");
  const TruncSeries s = series_sqrt1p(truncation - 6);
  PuiseuxBranch b{4, {}, Truncation::at(truncation)};
  for (int i = 0; i <= truncation - 6; ++i)
    if (!s.coeff(i).is_zero()) b.terms.push_back({i + 6, s.coeff(i)});
  return b;
}

CorpusEntry gen_sharp(const BiPoly& f, const BiPoly& L, const PuiseuxBranch& branch, const std::string& name) {
  const ResolutionTower tower = desingularize(branch);
  const FirstIntegralForm form = first_integral_form(f, L, tower, tower.k());
  CorpusEntry e;
  e.name = name;
  e.branch = branch;
  e.foliation = form.omega;
  e.expected = {{"d", form.d}, {"d_prime", form.d_prime}, {"a", form.a}, {"c", form.c}};
  return e;
}

CorpusEntry sharp_example(int truncation) {
  CorpusEntry e = gen_sharp(Y * Y - pow(X, 3), X, sharp_branch(truncation));
  e.expected["nu0"] = 2;
  e.expected["mu"] = 2;
  return e;
}

bool xi_meets_clamped_divisor(const ResolutionTower& tower, const BranchInvariants& inv, const PuiseuxBranch& xi) {
  const BadConfiguration config = configuration_from_indices(tower, {inv.genus});
  const auto& clamped = config.clamped_components.back();
  const int target_weight = virtual_multiplicity(inv);
  std::optional<int> target;
  for (int id : clamped)
    if (tower.node(id).weight == target_weight) {
      if (target) return false;
      target = id;
    }
  if (!target) return false;
  const BranchExit exit = follow_branch(tower, xi);
  return !exit.through_last_center && exit.divisor == *target && !exit.at_corner && exit.smooth && exit.transverse;
}

CorpusEntry gen_differential(const std::string& name, const BiPoly& f, const PuiseuxBranch& branch) {
  CorpusEntry e;
  e.name = name;
  e.branch = branch;
  e.foliation = PlaneFoliation::saturate(f.dx(), f.dy());
  return e;
}

std::vector<CorpusEntry> dicritical_fixtures() {
  struct Spec {
    std::string name;
    BiPoly f;
    PuiseuxBranch branch;
    BiPoly h;
    int divisor;
  };
  const BiPoly cusp = Y * Y - pow(X, 3);
  const BiPoly c35 = pow(Y, 3) - pow(X, 5);
  const BiPoly f467 = pow(cusp, 2) - pow(X, 5) * Y * Rat(4) - pow(X, 7);
  const PuiseuxBranch b23 = exact_branch(2, {3});
  const PuiseuxBranch b35 = exact_branch(3, {5});
  const PuiseuxBranch b467 = exact_branch(4, {6, 7});
  const std::vector<Spec> specs = {
      {"cusp_x2_D1", cusp, b23, X * X, 1},
      {"cusp_y_D2", cusp, b23, Y, 2},
      {"cusp_x_D3", cusp, b23, X, 3},
      {"c35_x_D1", c35, b35, X, 1},
      {"c35_y_D2", c35, b35, Y, 2},
      {"c35_x_D3", c35, b35, X, 3},
      {"c467_x_D1", f467, b467, X, 1},
      {"c467_y_D3", f467, b467, Y, 3},
      {"c467_xy_D3", f467, b467, X * Y, 3},
      {"c467_xy_D1", f467, b467, X * Y, 1},
      {"c467_x_D5", f467, b467, X, 5},
      {"c467_cusp_D4", f467, b467, cusp, 4},
  };
  std::vector<CorpusEntry> out;
  for (const auto& s : specs) {
    const ResolutionTower tower = desingularize(s.branch);
    const FirstIntegralForm form = first_integral_form(s.f, s.h, tower, s.divisor);
    CorpusEntry e;
    e.name = s.name;
    e.branch = s.branch;
    e.foliation = form.omega;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FixturePair> lambda_fixture_pairs() {
  std::map<std::string, CorpusEntry> by_name;
  for (auto& e : default_corpus()) by_name.emplace(e.name, e);
  const std::vector<std::pair<std::string, std::string>> names = {
      {"df_cusp", "cusp_x2_D1"},    {"df_cusp", "cusp_y_D2"},       {"df_3_5", "c35_x_D1"},
      {"df_3_5", "c35_y_D2"},       {"df_3_5", "c35_x_D3"},         {"df_4_6_7", "c467_x_D1"},
      {"df_4_6_7", "c467_xy_D1"},   {"df_4_6_7", "c467_cusp_D4"},
  };
  std::vector<FixturePair> out;
  for (const auto& [a, b] : names) {
    const CorpusEntry& first = by_name.at(a);
    const CorpusEntry& second = by_name.at(b);
    out.push_back({a + "_vs_" + b, first.branch, *first.foliation, *second.foliation});
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {5, 7}}) out.push_back(gen_monomial(p, q));
  const BiPoly cusp = Y * Y - pow(X, 3);
  out.push_back(gen_differential("df_cusp", cusp, exact_branch(2, {3})));
  out.push_back(gen_differential("df_3_5", pow(Y, 3) - pow(X, 5), exact_branch(3, {5})));
  out.push_back(gen_differential("df_4_6_7", pow(cusp, 2) - pow(X, 5) * Y * Rat(4) - pow(X, 7), exact_branch(4, {6, 7})));
  out.push_back(sharp_example());
  for (auto& e : dicritical_fixtures()) out.push_back(std::move(e));
  for (int n : {2, 3, 4}) out.push_back(gen_gamma_family(n));
  for (int n : {2, 3, 5}) out.push_back(gen_two_pair(n));
  return out;
}

}  // namespace folbound
