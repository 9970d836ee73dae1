#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ditkin/approx_identity.hpp"
#include "ditkin/classifier.hpp"
#include "ditkin/errors.hpp"
#include "ditkin/json.hpp"

namespace ditkin::cli {

namespace {

using json::Json;

enum class Format { kDefault, kJson, kCsv, kTable };

struct RunConfig {
  Index horizon = kDefaultHorizon;
  std::string slack_text;
  std::string format_text;
  std::string output_path;
  std::string input_path;
  // Command-specific parameters.
  std::string indices_text;
  Index count = 0;
  std::string weights_path;
  bool repro_json = false;

  Format format = Format::kDefault;
  std::optional<Rational> slack;

  EvalOptions eval() const { return EvalOptions{horizon}; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path.empty()) throw InputError("no input file given");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Accepts a bare family or an object holding it under "weights".
WeightFamily weights_of(const Json& doc) {
  if (doc.is_object() && doc.contains("weights")) return json::weights_from_json(doc["weights"], "$.weights");
  return json::weights_from_json(doc, "$");
}

const Json& require(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(ErrorCode::kParseError, std::string("$: missing field \"") + name + "\"");
  }
  return doc[name];
}

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value == 0) throw InputError("--indices: bad index \"" + item + "\"");
    out.push_back(value);
  }
  return out;
}

Format resolve_format(const RunConfig& cfg, Format fallback) {
  return cfg.format == Format::kDefault ? fallback : cfg.format;
}

void reject_format(Format format, Format unsupported, const char* command) {
  if (format == unsupported) {
    throw InputError(std::string(command) + " does not support this output format");
  }
}

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

std::string classify(const RunConfig& cfg) {
  const Json doc = read_json(cfg.input_path);
  const WeightFamily w = weights_of(doc);
  const PropertyReport report = property_report(w);
  const Format format = resolve_format(cfg, Format::kJson);
  reject_format(format, Format::kCsv, "classify");
  if (format == Format::kJson) return json::to_json(report).dump(2) + "\n";

  std::ostringstream os;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << pad("ditkin", 22) << flag(report.ditkin) << "\n"
     << pad("strongly_regular", 22) << flag(report.strongly_regular) << "\n"
     << pad("spectral_synthesis", 22) << flag(report.spectral_synthesis) << "\n"
     << pad("separable", 22) << flag(report.separable) << "\n"
     << pad("strong_ditkin", 22) << flag(report.strong_ditkin) << "\n"
     << pad("m_infinity_has_bai", 22) << flag(report.m_infinity_has_bai) << "\n"
     << pad("bru_bade", 22) << flag(report.bru_bade) << "\n"
     << pad("bru_dales", 22) << flag(report.bru_dales) << "\n"
     << pad("dales_bound", 22) << (report.dales_bound ? report.dales_bound->str() : "-") << "\n";
  return os.str();
}

std::string norm_cmd(const RunConfig& cfg) {
  const Json doc = read_json(cfg.input_path);
  const WeightFamily w = weights_of(doc);
  const Element f = json::element_from_json(require(doc, "element"), "$.element");
  const NormResult sup = sup_norm(f, cfg.eval());
  const NormResult variation = weighted_variation(f, w, cfg.eval());
  const NormResult total = sup + variation;

  const Format format = resolve_format(cfg, Format::kJson);
  reject_format(format, Format::kCsv, "norm");
  if (format == Format::kJson) {
    Json out = {{"sup_norm", json::to_json(sup)},
                {"weighted_variation", json::to_json(variation)},
                {"norm", json::to_json(total)}};
    return out.dump(2) + "\n";
  }
  return pad("sup_norm", 20) + sup.str() + "\n" + pad("weighted_variation", 20) + variation.str() + "\n" +
         pad("norm", 20) + total.str() + "\n";
}

std::string residuals(const RunConfig& cfg) {
  const Json doc = read_json(cfg.input_path);
  const WeightFamily w = weights_of(doc);
  const Element f = json::element_from_json(require(doc, "element"), "$.element");

  std::vector<Index> indices;
  if (!cfg.indices_text.empty()) {
    indices = parse_index_list(cfg.indices_text);
  } else {
    const Json& list = require(doc, "indices");
    if (!list.is_array()) throw Error(ErrorCode::kParseError, "$.indices: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_number_unsigned() || list[i].get<Index>() == 0) {
        throw Error(ErrorCode::kParseError, "$.indices[" + std::to_string(i) + "]: expected a positive integer");
      }
      indices.push_back(list[i].get<Index>());
    }
  }

  const auto rows = truncation_diagnostics(f, w, indices, cfg.eval());
  const Format format = resolve_format(cfg, Format::kCsv);
  if (format == Format::kCsv) return json::diagnostics_csv(rows);
  if (format == Format::kJson) {
    Json out = Json::array();
    for (const auto& row : rows) out.push_back(json::to_json(row));
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << pad("n_k", 12) << pad("residual", 48) << pad("alpha_next", 16) << "alpha_self\n";
  for (const auto& row : rows) {
    os << pad(std::to_string(row.n_k), 12) << pad(row.residual.str(), 48) << pad(row.alpha_next.str(), 16)
       << row.alpha_self << "\n";
  }
  return os.str();
}

std::string select_ai(const RunConfig& cfg) {
  const Json doc = read_json(cfg.input_path);
  const WeightFamily w = weights_of(doc);
  Index count = cfg.count;
  if (count == 0) {
    const Json& c = require(doc, "count");
    if (!c.is_number_unsigned() || c.get<Index>() == 0) {
      throw Error(ErrorCode::kParseError, "$.count: expected a positive integer");
    }
    count = c.get<Index>();
  }
  const AiSelection selection = select_ai_subsequence(w, count, cfg.slack);

  const Format format = resolve_format(cfg, Format::kJson);
  if (format == Format::kJson) return json::to_json(selection).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::kCsv) {
    os << "index,norm\n";
    for (std::size_t i = 0; i < selection.indices.size(); ++i) {
      os << selection.indices[i] << ',' << selection.norms[i] << '\n';
    }
    return os.str();
  }
  os << "kind   " << to_string(selection.kind) << "\n";
  if (selection.liminf) os << "liminf " << *selection.liminf << "\n";
  if (selection.slack) os << "slack  " << *selection.slack << "\n";
  for (std::size_t i = 0; i < selection.indices.size(); ++i) {
    os << pad(std::to_string(selection.indices[i]), 12) << selection.norms[i] << "\n";
  }
  return os.str();
}

std::string witness(const RunConfig& cfg) {
  const Json doc = read_json(cfg.input_path);
  const WeightFamily w = weights_of(doc);
  const Point point = json::point_from_json(require(doc, "point"), "$.point");
  const ClosedSet excluded = doc.contains("excluded") ? json::closed_set_from_json(doc["excluded"], "$.excluded")
                                                      : ClosedSet::finite({});
  const RelativeUnitWitness result = relative_unit_witness(w, point, excluded);

  const Format format = resolve_format(cfg, Format::kJson);
  reject_format(format, Format::kCsv, "witness");
  if (format == Format::kJson) return json::to_json(result).dump(2) + "\n";
  return pad("point", 18) + result.point.str() + "\n" + pad("excluded_set_max", 18) +
         std::to_string(result.excluded_set_max) + "\n" + pad("element", 18) + json::to_json(result.element).dump() +
         "\n" + pad("norm", 18) + result.norm.str() + "\n";
}

std::pair<std::string, int> repro_paper(const RunConfig& cfg) {
  WeightFamily w = dyadic_counterexample().weights;
  if (!cfg.weights_path.empty()) w = weights_of(read_json(cfg.weights_path));

  const auto checks = repro_checks(w, cfg.eval());
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  const bool ok = passed == checks.size();

  const Format format = cfg.repro_json ? Format::kJson : resolve_format(cfg, Format::kTable);
  reject_format(format, Format::kCsv, "repro-paper");
  std::ostringstream os;
  if (format == Format::kJson) {
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back({{"check", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    }
    Json out = {{"checks", list}, {"passed", passed}, {"failed", checks.size() - passed}, {"ok", ok}};
    os << out.dump(2) << "\n";
  } else {
    os << pad("check", 30) << pad("expected", 36) << pad("computed", 48) << "status\n";
    for (const auto& c : checks) {
      os << pad(c.name, 30) << pad(c.expected, 36) << pad(c.computed, 48) << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    os << passed << "/" << checks.size() << " checks passed\n";
  }
  return {os.str(), ok ? kSuccess : kVerificationFailure};
}

Index horizon_from_environment() {
  const char* value = std::getenv("DITKIN_HORIZON");
  if (value == nullptr || *value == '\0') return kDefaultHorizon;
  std::size_t used = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(value).size() || parsed == 0) {
    throw InputError(std::string("DITKIN_HORIZON: not a positive integer: ") + value);
  }
  return parsed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.horizon = horizon_from_environment();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Exact norms, approximate identities and regularity reports for the algebras A_alpha", "ditkin"};
  app.require_subcommand(1);
  app.add_option("--horizon", cfg.horizon, "Terms scanned before certified tail bounds take over")
      ->check(CLI::PositiveNumber);
  app.add_option("--slack", cfg.slack_text, "Selection slack above the liminf, as p/q");
  app.add_option("--format", cfg.format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", cfg.output_path, "Write output to PATH instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Regularity report for a weight family");
  auto* norm_sub = app.add_subcommand("norm", "Sup norm, weighted variation and norm of an element");
  auto* residuals_cmd = app.add_subcommand("residuals", "Truncation residual diagnostics at given indices");
  auto* select_cmd = app.add_subcommand("select-ai", "Approximate-identity subsequence of (e_k)");
  auto* witness_cmd = app.add_subcommand("witness", "Relative unit witness at a point");
  auto* repro_cmd = app.add_subcommand("repro-paper", "Reproduce the dyadic counterexample values");

  for (auto* sub : {classify_cmd, norm_sub, residuals_cmd, select_cmd, witness_cmd}) {
    sub->add_option("input", cfg.input_path, "Input JSON file, or - for stdin")->required();
    sub->fallthrough();
  }
  residuals_cmd->add_option("--indices", cfg.indices_text, "Comma-separated indices (overrides input)");
  select_cmd->add_option("--count", cfg.count, "Number of indices (overrides input)")->check(CLI::PositiveNumber);
  repro_cmd->add_option("--weights", cfg.weights_path, "Weight family JSON to use instead of the built-in one");
  repro_cmd->add_flag("--json", cfg.repro_json, "Machine-readable pass list");
  repro_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::string text;
  int code = kSuccess;
  try {
    if (cfg.format_text == "json") cfg.format = Format::kJson;
    if (cfg.format_text == "csv") cfg.format = Format::kCsv;
    if (cfg.format_text == "table") cfg.format = Format::kTable;
    if (!cfg.slack_text.empty()) {
      try {
        cfg.slack = Rational::parse(cfg.slack_text);
      } catch (const Error& e) {
        throw InputError(std::string("--slack: ") + e.what());
      }
    }

    if (classify_cmd->parsed()) text = classify(cfg);
    if (norm_sub->parsed()) text = norm_cmd(cfg);
    if (residuals_cmd->parsed()) text = residuals(cfg);
    if (select_cmd->parsed()) text = select_ai(cfg);
    if (witness_cmd->parsed()) text = witness(cfg);
    if (repro_cmd->parsed()) std::tie(text, code) = repro_paper(cfg);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return kInputError;
    }
    file << text;
  }
  return code;
}

}  // namespace ditkin::cli
