#include <doctest.h>

#include "folbound/corpus.hpp"
#include "folbound/error.hpp"
#include "folbound/io.hpp"

using namespace folbound;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

const char* kCuspDf = R"({
  "branch": {"n": 2, "terms": [{"e": 3, "c": "1"}], "truncated_at": "exact"},
  "foliation": {"A": [[2, 0, "-3"]], "B": [[0, 1, "2"]]}
})";

}  // namespace

TEST_CASE("parse a document") {
  auto doc = parse_input(kCuspDf);
  CHECK(doc.branch.n == 2);
  CHECK(doc.branch.truncation.is_exact());
  REQUIRE(doc.foliation.has_value());
  CHECK(doc.foliation->A() == BiPoly::monomial(Rat(-3), 2, 0));

  auto vf = parse_input(R"({"branch": {"n": 3, "terms": [{"e": 5, "c": "1/2"}], "truncated_at": 20},
                           "foliation": {"vector_field": {"a": [[1, 0, "3"]], "b": [[0, 1, "5"]]}}})");
  CHECK(vf.branch.truncation.order() == 20);
  CHECK(vf.branch.terms[0].coeff == Rat(1, 2));
  CHECK(vf.foliation->A() == BiPoly::monomial(Rat(5), 0, 1));
  CHECK(vf.foliation->B() == BiPoly::monomial(Rat(-3), 1, 0));

  auto dec = parse_input(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": "0.25"}]}})");
  CHECK(dec.branch.terms[0].coeff == Rat(1, 4));
  CHECK_FALSE(dec.foliation.has_value());
}

TEST_CASE("parse errors") {
  CHECK(parse_code("{") == ErrorCode::ParseError);
  CHECK(parse_code("{}") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"terms": []}})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": 1.5}]}})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": "x"}]}})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [], "truncated_at": "soon"}})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [{"e": 4, "c": "1"}]}})") == ErrorCode::NotReduced);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": "1"}]}, "foliation": {"A": [[1, 0]], "B": []}})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": "1"}]},
                       "foliation": {"A": [[1, 0, "1"]], "B": [[2, 0, "1"]]}})") == ErrorCode::NotCoprime);
}

TEST_CASE("round trip over the corpus") {
  for (const auto& e : default_corpus()) {
    CAPTURE(e.name);
    auto doc = to_input(e);
    CHECK(parse_input(emit_input(doc)) == doc);
  }
}

TEST_CASE("report field names") {
  auto a = analyze(parse_input(kCuspDf));
  CHECK(a.identities_hold);
  const Json& r = a.report;
  CHECK(keys(r) == std::vector<std::string>{"branch", "invariants", "tower", "foliation", "invariance", "ledger", "hertling",
                                            "cls", "bounds"});
  CHECK(keys(r["invariants"]) == std::vector<std::string>{"genus", "multiplicity", "partial_multiplicities", "ratios",
                                                          "characteristic_exponents", "virtual_multiplicity"});
  CHECK(keys(r["tower"]) ==
        std::vector<std::string>{"k", "weights", "edges", "valences", "characteristic_divisors", "directions"});
  CHECK(keys(r["invariance"]) == std::vector<std::string>{"verdict", "order"});
  CHECK(keys(r["ledger"][0]) == std::vector<std::string>{"divisor", "weight", "invariant", "sum_aleph", "sum_kappa",
                                                         "sum_tang", "gamma_entry", "corners"});
  CHECK(keys(r["ledger"][2]["corners"][0]) == std::vector<std::string>{"other", "chart", "coordinate", "other_invariant",
                                                                       "aleph", "tang", "cs_divisor", "cs_neighbor"});
  CHECK(keys(r["hertling"]) == std::vector<std::string>{"lhs", "kappa_term", "dicritical_term", "rhs", "holds"});
  CHECK(keys(r["cls"]) == std::vector<std::string>{"weighted_kappa", "nu0", "holds"});
  CHECK(keys(r["bounds"]) ==
        std::vector<std::string>{"lambda_I",      "lambda_N",        "lambda",          "nu0",
                                 "nu0_gamma",     "mu",              "two_power",       "configuration",
                                 "closed_form_lambda",  "closed_form_bound",     "ni_weight_sum",   "tang_weight_sum",
                                 "estimate_chain", "configuration_estimate",       "mu_bound",    "genus_bound",
                                 "component_inequality",          "alternative",     "alternative_chain_holds", "equality_case",
                                 "equality_ok"});
  CHECK(r["hertling"]["holds"] == true);
  CHECK(r["bounds"]["mu"] == 1);
  CHECK(r["invariance"]["verdict"] == "ExactInvariant");
}

TEST_CASE("sharp report") {
  auto a = analyze(to_input(sharp_example()));
  CHECK(a.identities_hold);
  CHECK(a.report["bounds"]["mu"] == 2);
  CHECK(a.report["bounds"]["nu0"] == 2);
  CHECK(a.report["bounds"]["alternative"] == "RadialBadLast");
  CHECK(a.report["cls"].is_null());
  CHECK(a.report["invariance"]["verdict"] == "InvariantUpToN");
}

TEST_CASE("branch-only and configuration reports") {
  AnalyzeOptions opts;
  opts.configurations = true;
  auto a = analyze(to_input(gen_gamma_family(2)), opts);
  CHECK(a.identities_hold);
  CHECK_FALSE(a.report.contains("ledger"));
  CHECK(keys(a.report["bounds"]) == std::vector<std::string>{"mu", "two_power"});
  CHECK(a.report["bounds"]["mu"] == 12);
  CHECK(a.report["configurations"].size() == 9);
  CHECK(keys(a.report["configurations"][0]) ==
        std::vector<std::string>{"configuration", "closed_form_lambda", "closed_form_bound", "lambda_from_flags",
                                 "clamped_weights_match", "free_weights_bounded"});
  CHECK(keys(a.report["configurations"][0]["configuration"]) ==
        std::vector<std::string>{"indices", "bad", "free_components", "free_weights", "clamped_components",
                                 "clamped_weights"});
}

TEST_CASE("non-invariant input stops after the verdict") {
  auto doc = parse_input(R"({"branch": {"n": 2, "terms": [{"e": 3, "c": "1"}]},
                             "foliation": {"A": [[0, 1, "-1"]], "B": [[1, 0, "1"]]}})");
  auto a = analyze(doc);
  REQUIRE(a.verdict.has_value());
  CHECK_FALSE(a.verdict->invariant());
  CHECK(a.report["invariance"]["order"] == 4);
  CHECK_FALSE(a.report.contains("ledger"));
}
