#include "folbound/bounds.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "folbound/error.hpp"

namespace folbound {

namespace {

// Connected components of the dual graph restricted to divisors accepted by `keep`.
std::vector<std::vector<int>> components(const ResolutionTower& tower, const std::function<bool(int)>& keep) {
  const int k = tower.k();
  std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= k; ++start) {
    if (seen[static_cast<size_t>(start)] || !keep(start)) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      comp.push_back(d);
      for (int o : tower.node(d).adjacent) {
        if (seen[static_cast<size_t>(o)] || !keep(o)) continue;
        seen[static_cast<size_t>(o)] = true;
        stack.push_back(o);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int min_weight(const ResolutionTower& tower, const std::vector<int>& ids) {
  int w = tower.node(ids.front()).weight;
  for (int id : ids) w = std::min(w, tower.node(id).weight);
  return w;
}

bool touches(const ResolutionTower& tower, const std::vector<int>& comp, int divisor) {
  const auto& adj = tower.node(divisor).adjacent;
  return std::any_of(comp.begin(), comp.end(), [&](int id) { return adj.count(id) > 0; });
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void check_flags(const ResolutionTower& tower, const InvarianceFlags& invariant) {
  if (static_cast<int>(invariant.size()) != tower.k())
    throw Error(ErrorCode::InvalidArgument, "one invariance flag per divisor is required");
}

bool is_inv(const InvarianceFlags& invariant, int id) { return invariant[static_cast<size_t>(id - 1)]; }

void check_indices(const std::vector<int>& indices, int genus) {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > genus) throw Error(ErrorCode::InvalidConfiguration, "configuration index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) throw Error(ErrorCode::InvalidConfiguration, "configuration indices must increase");
  }
}

}  // namespace

std::vector<InvComponent> InvDecomposition::tilde() const {
  std::vector<InvComponent> r;
  for (const auto& c : components)
    if (!c.contains_last) r.push_back(c);
  return r;
}

InvDecomposition inv_decomposition(const ResolutionTower& tower, const InvarianceFlags& invariant) {
  check_flags(tower, invariant);
  InvDecomposition d;
  for (auto& ids : components(tower, [&](int id) { return is_inv(invariant, id); })) {
    InvComponent c;
    c.weight = min_weight(tower, ids);
    c.contains_last = contains(ids, tower.k());
    c.divisors = std::move(ids);
    if (c.contains_last) d.last_component = d.components.size();
    d.components.push_back(std::move(c));
  }
  return d;
}

int adjusted_valence(const ResolutionTower& tower, const InvarianceFlags& invariant, int id) {
  check_flags(tower, invariant);
  int v = 0;
  for (int o : tower.node(id).adjacent)
    if (is_inv(invariant, o)) ++v;
  if (id == tower.k()) ++v;
  if (v > 3) throw Error(ErrorCode::InternalInconsistency, "adjusted valence above 3 at D" + std::to_string(id));
  return v;
}

LambdaValue lambda(const ResolutionTower& tower, const InvarianceFlags& invariant) {
  LambdaValue l;
  for (const auto& c : inv_decomposition(tower, invariant).tilde()) l.lambda_I += c.weight;
  for (const auto& n : tower.nodes())
    if (!is_inv(invariant, n.id)) l.lambda_N += n.weight * (2 - adjusted_valence(tower, invariant, n.id));
  l.lambda = tower.node(tower.k()).weight - 1 + l.lambda_I + l.lambda_N;
  return l;
}

std::vector<int> bad_divisor_ids(const ResolutionTower& tower, const InvarianceFlags& invariant) {
  check_flags(tower, invariant);
  std::vector<int> bad;
  for (int a : tower.characteristic_divisors()) {
    if (is_inv(invariant, a)) continue;
    const auto& adj = tower.node(a).adjacent;
    if (std::all_of(adj.begin(), adj.end(), [&](int o) { return is_inv(invariant, o); })) bad.push_back(a);
  }
  return bad;
}

BadConfiguration configuration_from_indices(const ResolutionTower& tower, const std::vector<int>& indices) {
  const auto chars = tower.characteristic_divisors();
  check_indices(indices, static_cast<int>(chars.size()));
  BadConfiguration c;
  c.indices = indices;
  for (int j : indices) c.bad.push_back(chars[static_cast<size_t>(j - 1)]);
  for (size_t i = 0; i < c.bad.size(); ++i)
    for (size_t l = i + 1; l < c.bad.size(); ++l)
      if (tower.node(c.bad[i]).adjacent.count(c.bad[l]))
        throw Error(ErrorCode::InvalidConfiguration,
                    "D" + std::to_string(c.bad[i]) + " and D" + std::to_string(c.bad[l]) + " are adjacent");

  const auto comps = components(tower, [&](int id) { return !contains(c.bad, id); });
  for (size_t l = 0; l < c.bad.size(); ++l) {
    std::optional<size_t> free;
    for (size_t i = 0; i < comps.size(); ++i) {
      bool ok = l == 0 ? contains(comps[i], 1) : touches(tower, comps[i], c.bad[l - 1]) && touches(tower, comps[i], c.bad[l]);
      if (!ok) continue;
      if (free) throw Error(ErrorCode::InvalidConfiguration, "free component is not unique");
      free = i;
    }
    if (!free || !touches(tower, comps[*free], c.bad[l]))
      throw Error(ErrorCode::InvalidConfiguration, "missing free component F" + std::to_string(l + 1));
    std::optional<size_t> clamped;
    for (size_t i = 0; i < comps.size(); ++i) {
      if (i == *free || !touches(tower, comps[i], c.bad[l]) || contains(comps[i], tower.k())) continue;
      bool other_bad = false;
      for (size_t m = 0; m < c.bad.size(); ++m)
        if (m != l && touches(tower, comps[i], c.bad[m])) other_bad = true;
      if (other_bad) continue;
      if (clamped) throw Error(ErrorCode::InternalInconsistency, "clamped component is not unique");
      clamped = i;
    }
    if (!clamped) throw Error(ErrorCode::InvalidConfiguration, "missing clamped component C" + std::to_string(l + 1));
    c.free_components.push_back(comps[*free]);
    c.free_weights.push_back(min_weight(tower, comps[*free]));
    c.clamped_components.push_back(comps[*clamped]);
    c.clamped_weights.push_back(min_weight(tower, comps[*clamped]));
  }
  return c;
}

BadConfiguration bad_divisors(const ResolutionTower& tower, const InvarianceFlags& invariant) {
  const auto chars = tower.characteristic_divisors();
  std::vector<int> indices;
  for (int b : bad_divisor_ids(tower, invariant))
    indices.push_back(static_cast<int>(std::find(chars.begin(), chars.end(), b) - chars.begin()) + 1);
  return configuration_from_indices(tower, indices);
}

InvarianceFlags synthesized_flags(const ResolutionTower& tower, const BadConfiguration& config) {
  InvarianceFlags flags(static_cast<size_t>(tower.k()), true);
  for (int b : config.bad) flags[static_cast<size_t>(b - 1)] = false;
  return flags;
}

ConfigurationValue configuration_bound(const BranchInvariants& inv, const std::vector<int>& indices, const std::vector<int>& free_weights) {
  check_indices(indices, inv.genus);
  if (free_weights.size() != indices.size())
    throw Error(ErrorCode::InvalidConfiguration, "one free weight per bad divisor is required");
  const auto& q = inv.partial_multiplicities;
  auto qa = [&](int i) { return q[static_cast<size_t>(i)]; };
  const int qg = qa(inv.genus);
  ConfigurationValue v;
  v.lambda_G = qg - 1;
  v.bound = indices.empty() ? qg - 1 : qg - qa(indices.back());
  for (size_t l = 0; l < indices.size(); ++l) {
    v.lambda_G += -qa(indices[l]) + qa(indices[l] - 1) + free_weights[l];
    v.bound += qa(indices[l] - 1);
  }
  return v;
}

ConfigurationValue configuration_bound(const BranchInvariants& inv, const BadConfiguration& config) {
  return configuration_bound(inv, config.indices, config.free_weights);
}

MultiplicityBound multiplicity_bound(const BranchInvariants& inv) {
  if (inv.genus < 1) throw Error(ErrorCode::SmoothBranch, "bounds need a singular branch");
  return {virtual_multiplicity(inv), 1 << (inv.genus - 1)};
}

std::vector<ConfigurationResult> enumerate_configurations(const ResolutionTower& tower, const BranchInvariants& inv) {
  const int g = inv.genus;
  if (g < 1) throw Error(ErrorCode::SmoothBranch, "bounds need a singular branch");
  if (static_cast<int>(tower.characteristic_divisors().size()) != g)
    throw Error(ErrorCode::InternalInconsistency, "tower and invariants disagree on the genus");
  const auto& q = inv.partial_multiplicities;
  std::vector<ConfigurationResult> out;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> indices;
    for (int j = 1; j <= g; ++j)
      if (mask & (1u << (j - 1))) indices.push_back(j);
    ConfigurationResult r;
    try {
      r.config = configuration_from_indices(tower, indices);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidConfiguration) continue;
      throw;
    }
    r.closed_form = configuration_bound(inv, r.config);
    r.lambda_from_flags = lambda(tower, synthesized_flags(tower, r.config)).lambda;
    r.clamped_weights_match = true;
    r.free_weights_bounded = true;
    for (size_t l = 0; l < indices.size(); ++l) {
      if (r.config.clamped_weights[l] != q[static_cast<size_t>(indices[l] - 1)]) r.clamped_weights_match = false;
      const int prev = l == 0 ? 0 : indices[l - 1];
      if (r.config.free_weights[l] < q[static_cast<size_t>(prev)]) r.free_weights_bounded = false;
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const ConfigurationResult& a, const ConfigurationResult& b) {
    return a.config.indices.size() != b.config.indices.size() ? a.config.indices.size() < b.config.indices.size()
                                                              : a.config.indices < b.config.indices;
  });
  return out;
}

std::string to_string(Alternative a) { return a == Alternative::RadialBadLast ? "RadialBadLast" : "FirstCase"; }

AlternativeReport classify_alternative(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger,
                                       const BranchInvariants& inv) {
  const auto flags = ledger.invariant_flags();
  const int k = tower.k();
  const auto& last = ledger.at(k);
  const bool last_bad = contains(bad_divisor_ids(tower, flags), k);
  const bool radial = !last.invariant && *last.sum_tang == 0;

  AlternativeReport r;
  if (last_bad && radial) {
    r.kind = Alternative::RadialBadLast;
    return r;
  }
  const int nu_f = order(f);
  const int nu_gamma = inv.multiplicity;
  const int middle = 2 * virtual_multiplicity(inv) * (inv.ratios.back() - 1);
  r.chain_holds = nu_gamma <= middle && middle <= 2 * nu_f;
  r.equality_case = nu_gamma == 2 * nu_f;
  if (r.equality_case)
    r.equality_ok = nu_gamma == 2 && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
  return r;
}

LambdaComparison compare_lambda(const ResolutionTower& tower, const InvarianceFlags& first, const InvarianceFlags& second) {
  const auto bad1 = bad_divisor_ids(tower, first);
  const auto bad2 = bad_divisor_ids(tower, second);
  if (bad1 != bad2) throw Error(ErrorCode::HypothesesNotMet, "the two foliations have different bad divisors");
  int count1 = 0, count2 = 0;
  for (int id = 1; id <= tower.k(); ++id) {
    if (!is_inv(first, id)) {
      ++count1;
      if (!contains(bad1, id)) throw Error(ErrorCode::HypothesesNotMet, "first foliation has a non-invariant good divisor");
    }
    if (!is_inv(second, id)) ++count2;
  }
  if (count2 <= count1) throw Error(ErrorCode::HypothesesNotMet, "second foliation needs more non-invariant divisors");
  LambdaComparison c;
  c.first = lambda(tower, first);
  c.second = lambda(tower, second);
  c.strictly_greater = c.second.lambda > c.first.lambda;
  return c;
}

LambdaComparison compare_lambda(const PlaneFoliation& f, const PlaneFoliation& g, const ResolutionTower& tower,
                                const PuiseuxBranch& branch) {
  if (!is_invariant(f, branch).invariant() || !is_invariant(g, branch).invariant())
    throw Error(ErrorCode::HypothesesNotMet, "both foliations must leave the branch invariant");
  return compare_lambda(tower, build_ledger(f, tower).invariant_flags(), build_ledger(g, tower).invariant_flags());
}

bool component_inequality_holds(const ResolutionTower& tower, const IndexLedger& ledger) {
  for (const auto& h : inv_decomposition(tower, ledger.invariant_flags()).components) {
    int total = 0;
    for (int id : h.divisors) total += ledger.at(id).weight * *ledger.at(id).sum_kappa;
    if (total < h.weight) return false;
  }
  return true;
}

BoundReport bound_report(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger,
                         const BranchInvariants& inv) {
  const auto flags = ledger.invariant_flags();
  BoundReport r;
  r.lambda = lambda(tower, flags);
  r.nu0_foliation = order(f);
  r.nu0_gamma = tower.node(tower.k()).weight;
  const auto mt = multiplicity_bound(inv);
  r.mu = mt.mu;
  r.two_power = mt.two_power;
  r.configuration = bad_divisors(tower, flags);
  r.closed_form = configuration_bound(inv, r.configuration);
  for (const auto& rec : ledger.records) {
    if (rec.invariant) continue;
    r.tang_weight_sum += rec.weight * *rec.sum_tang;
    if (*rec.sum_tang >= 1) r.ni_weight_sum += rec.weight;
  }
  const int L = r.lambda.lambda;
  r.estimate_chain = r.nu0_foliation >= L + r.tang_weight_sum && r.tang_weight_sum >= r.ni_weight_sum && r.ni_weight_sum >= 0;
  r.configuration_estimate = r.nu0_foliation >= r.closed_form.bound + r.ni_weight_sum;
  r.mu_bound = r.nu0_foliation >= r.mu && r.mu >= r.two_power;
  r.genus_bound = r.two_power <= r.nu0_foliation;
  r.component_inequality = component_inequality_holds(tower, ledger);
  r.alternative = classify_alternative(f, tower, ledger, inv);
  return r;
}

}  // namespace folbound
