#include "folbound/io.hpp"

#include <tuple>

#include "folbound/error.hpp"

namespace folbound {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw parse_error(std::string("missing field \"") + name + "\"");
  return obj.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rat as_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw parse_error("coefficients must be fraction or decimal strings");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error&) {
    throw parse_error("bad coefficient \"" + j.get<std::string>() + "\"");
  }
}

BiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("polynomial must be a list of [i, j, coeff]");
  std::vector<std::tuple<int, int, Rat>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw parse_error("polynomial term must be [i, j, coeff]");
    int i = as_int(t[0], "exponent");
    int k = as_int(t[1], "exponent");
    if (i < 0 || k < 0) throw parse_error("negative exponent");
    terms.emplace_back(i, k, as_rat(t[2]));
  }
  return BiPoly::from_terms(terms);
}

Json poly_to_json(const BiPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e.first, e.second, c.str()}));
  return arr;
}

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

// ---------------------------------------------------------------------------

InputDocument parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(e.what());
  }
  const Json& b = field(doc, "branch");
  InputDocument out;
  out.branch.n = as_int(field(b, "n"), "n");
  const Json& terms = field(b, "terms");
  if (!terms.is_array()) throw parse_error("terms must be a list");
  for (const auto& t : terms) out.branch.terms.push_back({as_int(field(t, "e"), "e"), as_rat(field(t, "c"))});
  const Json& tr = b.contains("truncated_at") ? b.at("truncated_at") : Json("exact");
  if (tr.is_string()) {
    if (tr.get<std::string>() != "exact") throw parse_error("truncated_at must be an integer or \"exact\"");
    out.branch.truncation = Truncation::exact();
  } else {
    out.branch.truncation = Truncation::at(as_int(tr, "truncated_at"));
  }
  validate(out.branch);

  if (doc.contains("foliation") && !doc.at("foliation").is_null()) {
    const Json& f = doc.at("foliation");
    if (f.contains("vector_field")) {
      const Json& vf = f.at("vector_field");
      out.foliation = PlaneFoliation::from_vector_field(poly_from_json(field(vf, "a")), poly_from_json(field(vf, "b")));
    } else {
      out.foliation = PlaneFoliation(poly_from_json(field(f, "A")), poly_from_json(field(f, "B")));
    }
  }
  return out;
}

Json branch_json(const PuiseuxBranch& branch) {
  Json terms = Json::array();
  for (const auto& t : branch.terms) terms.push_back({{"e", t.exponent}, {"c", t.coeff.str()}});
  Json tr = branch.truncation.is_exact() ? Json("exact") : Json(branch.truncation.order());
  return {{"n", branch.n}, {"terms", terms}, {"truncated_at", tr}};
}

Json input_to_json(const InputDocument& doc) {
  Json j;
  j["branch"] = branch_json(doc.branch);
  if (doc.foliation) j["foliation"] = {{"A", poly_to_json(doc.foliation->A())}, {"B", poly_to_json(doc.foliation->B())}};
  return j;
}

std::string emit_input(const InputDocument& doc) { return input_to_json(doc).dump(2) + "\n"; }

InputDocument to_input(const CorpusEntry& entry) { return {entry.branch, entry.foliation}; }

// ---------------------------------------------------------------------------

Json invariants_json(const BranchInvariants& inv) {
  Json ce = Json::array();
  for (const auto& c : inv.characteristic_exponents) ce.push_back({{"exponent", c.exponent}, {"p", c.numerator}, {"q", c.denominator}});
  Json j = {{"genus", inv.genus},
            {"multiplicity", inv.multiplicity},
            {"partial_multiplicities", inv.partial_multiplicities},
            {"ratios", inv.ratios},
            {"characteristic_exponents", ce}};
  j["virtual_multiplicity"] = inv.genus >= 1 ? Json(virtual_multiplicity(inv)) : Json(nullptr);
  return j;
}

Json tower_json(const ResolutionTower& tower) {
  Json weights = Json::array(), edges = Json::array(), dirs = Json::array();
  for (const auto& n : tower.nodes()) {
    weights.push_back(n.weight);
    for (int o : n.adjacent)
      if (o > n.id) edges.push_back(Json::array({n.id, o}));
  }
  for (const auto& d : tower.directions()) dirs.push_back(d.is_vertical() ? Json("vertical") : Json(d.slope.str()));
  return {{"k", tower.k()},
          {"weights", weights},
          {"edges", edges},
          {"valences", tower.valences()},
          {"characteristic_divisors", tower.characteristic_divisors()},
          {"directions", dirs}};
}

Json verdict_json(const InvarianceVerdict& v) {
  static const char* names[] = {"ExactInvariant", "InvariantUpToN", "NotInvariant"};
  return {{"verdict", names[static_cast<int>(v.kind)]}, {"order", v.order}};
}

Json ledger_json(const IndexLedger& ledger) {
  Json arr = Json::array();
  for (const auto& r : ledger.records) {
    Json corners = Json::array();
    for (const auto& c : r.corners) {
      Json cj = {{"other", c.other},
                 {"chart", c.chart == ChartSlot::A ? "A" : "B"},
                 {"coordinate", c.coordinate.str()},
                 {"other_invariant", c.other_invariant},
                 {"aleph", opt(c.aleph)},
                 {"tang", opt(c.tang)}};
      cj["cs_divisor"] = c.cs ? Json(c.cs->along_divisor.str()) : Json(nullptr);
      cj["cs_neighbor"] = c.cs ? Json(c.cs->along_neighbor.str()) : Json(nullptr);
      corners.push_back(std::move(cj));
    }
    arr.push_back({{"divisor", r.divisor},
                   {"weight", r.weight},
                   {"invariant", r.invariant},
                   {"sum_aleph", opt(r.sum_aleph)},
                   {"sum_kappa", opt(r.sum_kappa)},
                   {"sum_tang", opt(r.sum_tang)},
                   {"gamma_entry", opt(r.gamma_entry)},
                   {"corners", corners}});
  }
  return arr;
}

Json hertling_json(const HertlingReport& h) {
  return {{"lhs", h.lhs}, {"kappa_term", h.kappa_term}, {"dicritical_term", h.dicritical_term}, {"rhs", h.rhs}, {"holds", h.holds}};
}

Json cls_json(const ClsReport& c) { return {{"weighted_kappa", c.weighted_kappa}, {"nu0", c.nu0}, {"holds", c.holds}}; }

Json configuration_json(const BadConfiguration& c) {
  return {{"indices", c.indices},
          {"bad", c.bad},
          {"free_components", c.free_components},
          {"free_weights", c.free_weights},
          {"clamped_components", c.clamped_components},
          {"clamped_weights", c.clamped_weights}};
}

Json bound_report_json(const BoundReport& r) {
  return {{"lambda_I", r.lambda.lambda_I},
          {"lambda_N", r.lambda.lambda_N},
          {"lambda", r.lambda.lambda},
          {"nu0", r.nu0_foliation},
          {"nu0_gamma", r.nu0_gamma},
          {"mu", r.mu},
          {"two_power", r.two_power},
          {"configuration", configuration_json(r.configuration)},
          {"closed_form_lambda", r.closed_form.lambda_G},
          {"closed_form_bound", r.closed_form.bound},
          {"ni_weight_sum", r.ni_weight_sum},
          {"tang_weight_sum", r.tang_weight_sum},
          {"estimate_chain", r.estimate_chain},
          {"configuration_estimate", r.configuration_estimate},
          {"mu_bound", r.mu_bound},
          {"genus_bound", r.genus_bound},
          {"component_inequality", r.component_inequality},
          {"alternative", to_string(r.alternative.kind)},
          {"alternative_chain_holds", r.alternative.chain_holds},
          {"equality_case", r.alternative.equality_case},
          {"equality_ok", r.alternative.equality_ok}};
}

Json configurations_json(const std::vector<ConfigurationResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results)
    arr.push_back({{"configuration", configuration_json(r.config)},
                   {"closed_form_lambda", r.closed_form.lambda_G},
                   {"closed_form_bound", r.closed_form.bound},
                   {"lambda_from_flags", r.lambda_from_flags},
                   {"clamped_weights_match", r.clamped_weights_match},
                   {"free_weights_bounded", r.free_weights_bounded}});
  return arr;
}

// ---------------------------------------------------------------------------

Analysis analyze(const InputDocument& doc, const AnalyzeOptions& options) {
  Analysis a;
  const BranchInvariants inv = invariants(doc.branch);
  a.report["branch"] = branch_json(doc.branch);
  a.report["invariants"] = invariants_json(inv);
  a.tower = desingularize(doc.branch);
  a.report["tower"] = tower_json(a.tower);

  if (options.configurations) {
    auto configs = enumerate_configurations(a.tower, inv);
    for (const auto& c : configs)
      if (c.closed_form.lambda_G != c.lambda_from_flags || c.closed_form.lambda_G < c.closed_form.bound || !c.clamped_weights_match ||
          !c.free_weights_bounded)
        a.identities_hold = false;
    a.report["configurations"] = configurations_json(configs);
  }

  if (!doc.foliation) {
    const auto mt = multiplicity_bound(inv);
    a.report["bounds"] = {{"mu", mt.mu}, {"two_power", mt.two_power}};
    return a;
  }

  const PlaneFoliation& f = *doc.foliation;
  a.report["foliation"] = {{"A", poly_to_json(f.A())}, {"B", poly_to_json(f.B())}, {"order", order(f)}};
  a.verdict = is_invariant(f, doc.branch, options.check_order);
  a.report["invariance"] = verdict_json(*a.verdict);
  if (!a.verdict->invariant()) return a;

  a.ledger = build_ledger(f, a.tower);
  a.report["ledger"] = ledger_json(*a.ledger);
  const HertlingReport h = hertling_terms(f, a.tower, *a.ledger);
  a.report["hertling"] = hertling_json(h);
  a.identities_hold = a.identities_hold && h.holds;

  const auto flags = a.ledger->invariant_flags();
  if (std::all_of(flags.begin(), flags.end(), [](bool b) { return b; })) {
    const ClsReport c = cls_terms(f, *a.ledger);
    a.report["cls"] = cls_json(c);
    a.identities_hold = a.identities_hold && c.holds;
  } else {
    a.report["cls"] = nullptr;
  }

  const BoundReport br = bound_report(f, a.tower, *a.ledger, inv);
  a.report["bounds"] = bound_report_json(br);
  a.identities_hold = a.identities_hold && br.estimate_chain && br.configuration_estimate && br.mu_bound && br.genus_bound &&
                      br.component_inequality && br.alternative.chain_holds && br.alternative.equality_ok;
  return a;
}

}  // namespace folbound
