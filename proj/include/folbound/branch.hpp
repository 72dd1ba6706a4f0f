#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folbound/rational.hpp"
#include "folbound/series.hpp"

namespace folbound {

/// Where knowledge of a parametrization stops: either an exact polynomial, or
/// known through t^N.
class Truncation {
 public:
  static Truncation exact() { return Truncation(std::nullopt); }
  static Truncation at(int order) { return Truncation(order); }

  bool is_exact() const { return !order_; }
  int order() const;  // throws for exact

  bool operator==(const Truncation&) const = default;

 private:
  explicit Truncation(std::optional<int> o) : order_(o) {}
  std::optional<int> order_;
};

struct PuiseuxTerm {
  int exponent;
  Rat coeff;
  bool operator==(const PuiseuxTerm&) const = default;
};

/// gamma(t) = (t^n, sum_j a_j t^j) with all j >= n.
struct PuiseuxBranch {
  int n = 1;
  std::vector<PuiseuxTerm> terms;
  Truncation truncation = Truncation::exact();

  int max_exponent() const { return terms.empty() ? n : terms.back().exponent; }
  bool operator==(const PuiseuxBranch&) const = default;
};

struct CharacteristicExponent {
  int exponent;     // beta_i, the exponent where the gcd drops
  int denominator;  // q_i: the exponent written as p_i / q_i after dividing by n / q_i
  int numerator;    // p_i
};

struct BranchInvariants {
  int genus = 0;
  int multiplicity = 1;
  std::vector<int> partial_multiplicities;  // q_0 = 1 < ... < q_g = n
  std::vector<int> ratios;                  // r_1 .. r_g
  std::vector<CharacteristicExponent> characteristic_exponents;
  std::map<int, int> gcd_sequence;          // exponent j -> m_j (support exponents only)
};

/// Throws NotReduced or ExponentBelowN, else InvalidArgument. Smooth branches pass;
/// operations that need a singular branch call require_singular().
const PuiseuxBranch& validate(const PuiseuxBranch& branch);
bool is_smooth(const PuiseuxBranch& branch);
void require_singular(const PuiseuxBranch& branch);

BranchInvariants invariants(const PuiseuxBranch& branch);
int multiplicity(const PuiseuxBranch& branch);
/// q_{g-1}; throws SmoothBranch for g = 0.
int virtual_multiplicity(const PuiseuxBranch& branch);
int virtual_multiplicity(const BranchInvariants& inv);
/// Keeps only the terms where the gcd sequence drops.
PuiseuxBranch truncate_to_class(const PuiseuxBranch& branch);

/// Parametrization as a pair of series. Exact branches are expanded through
/// `working_order`; truncated ones keep their own truncation order.
std::pair<TruncSeries, TruncSeries> to_series(const PuiseuxBranch& branch, int working_order);

}  // namespace folbound
