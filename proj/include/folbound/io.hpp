#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "folbound/bounds.hpp"
#include "folbound/branch.hpp"
#include "folbound/corpus.hpp"
#include "folbound/foliation.hpp"
#include "folbound/hertling.hpp"
#include "folbound/tower.hpp"

namespace folbound {

using Json = nlohmann::ordered_json;

struct InputDocument {
  PuiseuxBranch branch;
  std::optional<PlaneFoliation> foliation;
  bool operator==(const InputDocument&) const = default;
};

/// Throws ParseError for malformed documents; branch and foliation errors keep
/// their own codes.
InputDocument parse_input(const std::string& text);
Json input_to_json(const InputDocument& doc);
std::string emit_input(const InputDocument& doc);
InputDocument to_input(const CorpusEntry& entry);

Json branch_json(const PuiseuxBranch& branch);
Json invariants_json(const BranchInvariants& inv);
Json tower_json(const ResolutionTower& tower);
Json verdict_json(const InvarianceVerdict& v);
Json ledger_json(const IndexLedger& ledger);
Json hertling_json(const HertlingReport& h);
Json cls_json(const ClsReport& c);
Json configuration_json(const BadConfiguration& c);
Json bound_report_json(const BoundReport& r);
Json configurations_json(const std::vector<ConfigurationResult>& results);

struct AnalyzeOptions {
  std::optional<int> check_order;
  bool configurations = false;
};

struct Analysis {
  Json report;
  std::optional<InvarianceVerdict> verdict;
  bool identities_hold = true;  // every exact identity and inequality checked
  ResolutionTower tower;
  std::optional<IndexLedger> ledger;
};

/// Full pipeline on one document. Stops after the invariance check when the
/// branch is not invariant.
Analysis analyze(const InputDocument& doc, const AnalyzeOptions& options = {});

}  // namespace folbound
