#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folbound/branch.hpp"
#include "folbound/foliation.hpp"
#include "folbound/tower.hpp"

namespace folbound {

/// Flags indexed by divisor id - 1; true means invariant.
using InvarianceFlags = std::vector<bool>;

struct InvComponent {
  std::vector<int> divisors;  // increasing ids
  int weight = 0;             // minimum weight in the component
  bool contains_last = false;
};

struct InvDecomposition {
  std::vector<InvComponent> components;
  std::optional<size_t> last_component;  // index of the component holding D_k
  /// Components not containing D_k.
  std::vector<InvComponent> tilde() const;
};

InvDecomposition inv_decomposition(const ResolutionTower& tower, const InvarianceFlags& invariant);

/// Invariant neighbors, plus one on D_k for the branch. Throws if above 3.
int adjusted_valence(const ResolutionTower& tower, const InvarianceFlags& invariant, int id);

struct LambdaValue {
  int lambda_I = 0;
  int lambda_N = 0;
  int lambda = 0;
};
LambdaValue lambda(const ResolutionTower& tower, const InvarianceFlags& invariant);

struct BadConfiguration {
  std::vector<int> indices;  // j_1 < ... < j_p, 1-based positions among characteristic divisors
  std::vector<int> bad;      // b_l = a_{j_l}
  std::vector<std::vector<int>> free_components;
  std::vector<int> free_weights;
  std::vector<std::vector<int>> clamped_components;
  std::vector<int> clamped_weights;
  bool operator==(const BadConfiguration&) const = default;
};

/// Bad divisors of a flagging: non-invariant characteristic divisors whose
/// neighbors are all invariant.
std::vector<int> bad_divisor_ids(const ResolutionTower& tower, const InvarianceFlags& invariant);
BadConfiguration bad_divisors(const ResolutionTower& tower, const InvarianceFlags& invariant);
/// Free and clamped components for a chosen index set. Throws
/// InvalidConfiguration when two chosen divisors are adjacent.
BadConfiguration configuration_from_indices(const ResolutionTower& tower, const std::vector<int>& indices);
/// Only the chosen bad divisors are non-invariant.
InvarianceFlags synthesized_flags(const ResolutionTower& tower, const BadConfiguration& config);

struct ConfigurationValue {
  int lambda_G = 0;  // closed form from the free weights
  int bound = 0;     // q_g - q_{j_p} + sum q_{j_l - 1}
};
ConfigurationValue configuration_bound(const BranchInvariants& inv, const std::vector<int>& indices, const std::vector<int>& free_weights);
ConfigurationValue configuration_bound(const BranchInvariants& inv, const BadConfiguration& config);

struct MultiplicityBound {
  int mu = 0;         // q_{g-1}
  int two_power = 0;  // 2^{g-1}
};
MultiplicityBound multiplicity_bound(const BranchInvariants& inv);

struct ConfigurationResult {
  BadConfiguration config;
  ConfigurationValue closed_form;
  int lambda_from_flags = 0;
  bool clamped_weights_match = false;  // w(C_l) = q_{j_l - 1}
  bool free_weights_bounded = false;   // w(F_l) >= q_{j_{l-1}}
};
std::vector<ConfigurationResult> enumerate_configurations(const ResolutionTower& tower, const BranchInvariants& inv);

enum class Alternative { FirstCase, RadialBadLast };
std::string to_string(Alternative a);

struct AlternativeReport {
  Alternative kind = Alternative::FirstCase;
  bool chain_holds = true;     // FirstCase: nu_0(gamma) <= 2 q_{g-1}(r_g - 1) <= 2 nu_0(F)
  bool equality_case = false;  // nu_0(gamma) = 2 nu_0(F)
  bool equality_ok = true;     // then nu_0(gamma) = 2 and every divisor is invariant
};
AlternativeReport classify_alternative(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger,
                                       const BranchInvariants& inv);

struct LambdaComparison {
  LambdaValue first;
  LambdaValue second;
  bool strictly_greater = false;  // second.lambda > first.lambda
};
/// Throws HypothesesNotMet unless both flaggings share their bad divisors, the
/// first has no non-invariant divisor besides them, and the second has strictly
/// more non-invariant divisors.
LambdaComparison compare_lambda(const ResolutionTower& tower, const InvarianceFlags& first, const InvarianceFlags& second);
LambdaComparison compare_lambda(const PlaneFoliation& f, const PlaneFoliation& g, const ResolutionTower& tower,
                                const PuiseuxBranch& branch);

struct BoundReport {
  LambdaValue lambda;
  int nu0_foliation = 0;
  int nu0_gamma = 0;
  int mu = 0;
  int two_power = 0;
  BadConfiguration configuration;
  ConfigurationValue closed_form;
  int ni_weight_sum = 0;    // sum of w(D) over non-invariant D with a tangency
  int tang_weight_sum = 0;  // sum of w(D) tang over non-invariant D
  bool estimate_chain = false;
  bool configuration_estimate = false;
  bool mu_bound = false;
  bool genus_bound = false;
  bool component_inequality = false;
  AlternativeReport alternative;
};

/// Per-component check: sum of w(D) kappa over H is at least w(H).
bool component_inequality_holds(const ResolutionTower& tower, const IndexLedger& ledger);

BoundReport bound_report(const PlaneFoliation& f, const ResolutionTower& tower, const IndexLedger& ledger,
                         const BranchInvariants& inv);

}  // namespace folbound
