#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folbound/corpus.hpp"
#include "folbound/error.hpp"
#include "folbound/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kNotInvariant = 3;
constexpr int kInconsistent = 4;

int exit_code_for(folbound::ErrorCode code) {
  using folbound::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotReduced:
    case ErrorCode::ExponentBelowN:
    case ErrorCode::SmoothBranch:
    case ErrorCode::NotCoprime:
      return kInputError;
    case ErrorCode::NotInvariant:
      return kNotInvariant;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::InconsistentCharts:
    case ErrorCode::IdenticallyZeroRestriction:
      return kInconsistent;
    default:
      return kFailure;
  }
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  out << text;
  return true;
}

int run_analyze(const std::string& input, const std::string& dot_path, const std::string& json_path,
                std::optional<int> truncation, bool configs) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot read " << input << "\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  const folbound::InputDocument doc = folbound::parse_input(buf.str());
  folbound::AnalyzeOptions options;
  options.check_order = truncation;
  options.configurations = configs;
  const folbound::Analysis a = folbound::analyze(doc, options);

  if (!dot_path.empty()) {
    std::string dot;
    if (a.ledger) {
      const auto flags = a.ledger->invariant_flags();
      dot = a.tower.emit_dot(&flags, folbound::bad_divisor_ids(a.tower, flags));
    } else {
      dot = a.tower.emit_dot();
    }
    if (!write_text(dot_path, dot)) return kFailure;
  }
  if (!write_text(json_path, a.report.dump(2) + "\n")) return kFailure;

  if (a.verdict && !a.verdict->invariant()) {
    std::cerr << "branch is not invariant: " << a.verdict->str() << "\n";
    return kNotInvariant;
  }
  if (!a.identities_hold) {
    std::cerr << "an exact identity failed; see the report\n";
    return kInconsistent;
  }
  return kOk;
}

int run_generate(const std::vector<std::string>& args, const std::string& output, int truncation) {
  if (args.empty()) {
    std::cerr << "generate needs a family: monomial | gamma | two-pair | sharp\n";
    return kInputError;
  }
  auto number = [&](size_t i) {
    if (i >= args.size()) throw folbound::Error(folbound::ErrorCode::InvalidArgument, "missing parameter");
    try {
      size_t used = 0;
      int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      return v;
    } catch (const std::logic_error&) {
      throw folbound::Error(folbound::ErrorCode::InvalidArgument, "bad integer \"" + args[i] + "\"");
    }
  };
  const std::string& family = args[0];
  folbound::CorpusEntry entry;
  size_t expected_args = 0;
  if (family == "monomial") {
    entry = folbound::gen_monomial(number(1), number(2));
    expected_args = 3;
  } else if (family == "gamma") {
    entry = folbound::gen_gamma_family(number(1));
    expected_args = 2;
  } else if (family == "two-pair") {
    entry = folbound::gen_two_pair(number(1));
    expected_args = 2;
  } else if (family == "sharp") {
    entry = folbound::sharp_example(truncation);
    expected_args = 1;
  } else {
    std::cerr << "unknown family " << family << "\n";
    return kInputError;
  }
  if (args.size() != expected_args) {
    std::cerr << "wrong number of parameters for " << family << "\n";
    return kInputError;
  }
  return write_text(output, folbound::emit_input(folbound::to_input(entry))) ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resolution of plane branches and multiplicity bounds for foliations"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a branch, optionally with a foliation");
  std::string input, dot_path, json_path;
  std::optional<int> truncation;
  bool configs = false;
  analyze->add_option("input", input, "Input JSON document")->required();
  analyze->add_option("--dot", dot_path, "Write the dual graph in DOT format");
  analyze->add_option("--json", json_path, "Write the report here instead of stdout");
  analyze->add_option("--truncation", truncation, "Order up to which invariance is checked");
  analyze->add_flag("--configs", configs, "Enumerate all bad-divisor configurations");

  auto* generate = app.add_subcommand("generate", "Write an input document for a corpus family");
  std::vector<std::string> gen_args;
  std::string gen_output;
  int sharp_truncation = 48;
  generate->add_option("family", gen_args, "monomial P Q | gamma N | two-pair N | sharp")->required();
  generate->add_option("-o,--output", gen_output, "Output file (default stdout)");
  generate->add_option("--truncation", sharp_truncation, "Truncation order of the sharp branch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(input, dot_path, json_path, truncation, configs);
    return run_generate(gen_args, gen_output, sharp_truncation);
  } catch (const folbound::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
}
