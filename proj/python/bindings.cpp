#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "folbound/corpus.hpp"
#include "folbound/error.hpp"
#include "folbound/io.hpp"

namespace py = pybind11;
using namespace folbound;

namespace {

InputDocument generated(const std::string& family, const std::vector<int>& params, int truncation) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      throw Error(ErrorCode::InvalidArgument, family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "monomial") {
    need(2);
    return to_input(gen_monomial(params[0], params[1]));
  }
  if (family == "gamma") {
    need(1);
    return to_input(gen_gamma_family(params[0]));
  }
  if (family == "two-pair") {
    need(1);
    return to_input(gen_two_pair(params[0]));
  }
  if (family == "sharp") {
    need(0);
    return to_input(sharp_example(truncation));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family " + family);
}

std::string analyze_json(const std::string& document, std::optional<int> truncation, bool configs) {
  AnalyzeOptions options;
  options.check_order = truncation;
  options.configurations = configs;
  Analysis a = analyze(parse_input(document), options);
  a.report["identities_hold"] = a.identities_hold;
  return a.report.dump();
}

std::string dot(const std::string& document) {
  const InputDocument doc = parse_input(document);
  const ResolutionTower tower = desingularize(doc.branch);
  if (!doc.foliation) return tower.emit_dot();
  const auto flags = build_ledger(*doc.foliation, tower).invariant_flags();
  return tower.emit_dot(&flags, bad_divisor_ids(tower, flags));
}

std::string branch_summary(const std::string& document) {
  const InputDocument doc = parse_input(document);
  Json j;
  j["invariants"] = invariants_json(invariants(doc.branch));
  j["tower"] = tower_json(desingularize(doc.branch));
  j["oracle_agrees"] = desingularize(doc.branch).graph() == combinatorial_oracle(invariants(doc.branch)).graph;
  return j.dump();
}

std::vector<std::string> corpus_documents() {
  std::vector<std::string> out;
  for (const auto& e : default_corpus()) {
    Json j = input_to_json(to_input(e));
    j["name"] = e.name;
    out.push_back(j.dump());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_folbound, m) {
  m.doc() = "Resolution of plane branches and multiplicity bounds for foliations";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "FolboundError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(error.get_stored().ptr(), args.ptr());
    }
  });

  m.def("analyze", &analyze_json, py::arg("document"), py::arg("truncation") = py::none(), py::arg("configs") = false);
  m.def("dot", &dot, py::arg("document"));
  m.def("branch_summary", &branch_summary, py::arg("document"));
  m.def(
      "generate",
      [](const std::string& family, const std::vector<int>& params, int truncation) {
        return input_to_json(generated(family, params, truncation)).dump();
      },
      py::arg("family"), py::arg("params"), py::arg("truncation") = 48);
  m.def("corpus", &corpus_documents);
}
