// Copyright 2026 The hcsteiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include <nlohmann/json.hpp>

#include "hcsteiner/autgroup.h"
#include "hcsteiner/bounds.h"
#include "hcsteiner/cube.h"
#include "hcsteiner/domination.h"
#include "hcsteiner/instance_io.h"
#include "hcsteiner/steiner.h"

namespace hcsteiner::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kCheckFailed = 1;

std::string_view CommandName(Command command) {
  switch (command) {
    case Command::kExact:
      return "exact";
    case Command::kBound:
      return "bound";
    case Command::kCds:
      return "cds";
    case Command::kGroupVerify:
      return "group-verify";
    case Command::kExperiment:
      return "experiment";
    case Command::kSdiam:
      return "sdiam";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Rendering

std::string Scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "none";
  return value.dump();
}

bool AllScalars(const Json& array) {
  return std::none_of(array.begin(), array.end(), [](const Json& v) {
    return v.is_object() || v.is_array();
  });
}

std::string JoinScalars(const Json& array) {
  std::string out;
  for (const Json& v : array) {
    if (!out.empty()) out += ' ';
    out += Scalar(v);
  }
  return out;
}

void RenderText(const Json& report, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : report.items()) {
    if (indent == 0 && key == "headline") {
      out << value.get<std::string>() << '\n';
      continue;
    }
    if (value.is_object()) {
      out << pad << key << ":\n";
      RenderText(value, out, indent + 2);
    } else if (value.is_array() && !AllScalars(value)) {
      out << pad << key << ":\n";
      for (const Json& row : value) {
        out << pad << "  -";
        for (const auto& [field, cell] : row.items()) {
          out << ' ' << field << '=' << Scalar(cell);
        }
        out << '\n';
      }
    } else if (value.is_array()) {
      out << pad << key << ": " << JoinScalars(value) << '\n';
    } else {
      out << pad << key << ": " << Scalar(value) << '\n';
    }
  }
}

std::string CsvCell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void FlattenCsv(const Json& report, const std::string& prefix,
                std::ostream& out, std::vector<std::pair<std::string, Json>>& tables) {
  for (const auto& [key, value] : report.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      FlattenCsv(value, path, out, tables);
    } else if (value.is_array() && !AllScalars(value)) {
      tables.emplace_back(path, value);
    } else if (value.is_array()) {
      out << CsvCell(path) << ',' << CsvCell(JoinScalars(value)) << '\n';
    } else {
      out << CsvCell(path) << ',' << CsvCell(Scalar(value)) << '\n';
    }
  }
}

// Scalars as key,value rows; arrays of records follow as separate tables.
void RenderCsv(const Json& report, std::ostream& out) {
  std::vector<std::pair<std::string, Json>> tables;
  out << "key,value\n";
  FlattenCsv(report, "", out, tables);
  for (const auto& [name, rows] : tables) {
    out << "\n# " << name << '\n';
    if (rows.empty()) continue;
    bool first = true;
    for (const auto& [field, cell] : rows.front().items()) {
      out << (first ? "" : ",") << CsvCell(field);
      first = false;
    }
    out << '\n';
    for (const Json& row : rows) {
      first = true;
      for (const auto& [field, cell] : row.items()) {
        out << (first ? "" : ",") << CsvCell(Scalar(cell));
        first = false;
      }
      out << '\n';
    }
  }
}

void Render(const Json& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kText:
      RenderText(report, out, 0);
      break;
    case OutputFormat::kJson:
      out << report.dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      RenderCsv(report, out);
      break;
  }
}

// ---------------------------------------------------------------------------
// Inputs

Dimension RequireDimension(const RunConfig& config) {
  if (!config.n) throw Error(ErrorCategory::kParse, "--n is required");
  return Dimension(*config.n);
}

VertexSet ResolveSet(const RunConfig& config) {
  const std::string& source = config.set;
  if (source.empty()) throw Error(ErrorCategory::kParse, "--set is required");
  if (source == "even" || source == "odd") {
    return ParityClass(RequireDimension(config), source == "even" ? 0 : 1,
                       config.budget);
  }
  if (source == "all") return AllVertices(RequireDimension(config), config.budget);

  std::optional<Dimension> dim;
  if (config.n) dim.emplace(*config.n);
  if (source.starts_with("inline:")) {
    std::vector<Vertex> vertices;
    std::stringstream list(source.substr(7));
    std::string word;
    while (std::getline(list, word, ',')) {
      const Vertex v = ParseVertex(word, dim);
      dim = v.dim();
      vertices.push_back(v);
    }
    if (vertices.empty()) {
      throw Error(ErrorCategory::kParse, "inline set has no vertices");
    }
    return VertexSet::FromVertices(*dim, std::move(vertices));
  }
  const SteinerInstance instance = ParseInstanceFile(source);
  if (dim && *dim != instance.dim()) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "instance file has n=" + std::to_string(instance.dim().value()) +
                    " but --n " + std::to_string(dim->value()));
  }
  return instance.terminals();
}

DominatingSetCertificate MakeCds(const std::string& method, Dimension dim,
                                 const Budget& budget) {
  if (method == "best") return BestConnectedDominatingSet(dim, budget);
  if (method == "greedy") return GreedyDominatingSet(dim, budget);
  if (method == "hamming") return HammingCodeDominatingSet(dim, budget);
  if (method == "exact") return ExactConnectedDominatingSet(dim, budget);
  if (method == "steinerized-greedy") {
    return Steinerize(GreedyDominatingSet(dim, budget).set());
  }
  if (method == "steinerized-hamming") {
    return Steinerize(HammingCodeDominatingSet(dim, budget).set());
  }
  throw Error(ErrorCategory::kParse, "unknown --method '" + method + "'");
}

// ---------------------------------------------------------------------------
// Report fragments

Json VertexList(const VertexSet& set) {
  Json out = Json::array();
  for (const Vertex& v : set) out.push_back(FormatVertex(v));
  return out;
}

Json EdgeList(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(FormatEdge(e));
  return out;
}

Json CertificateJson(const DominatingSetCertificate& cert) {
  Json out;
  out["method"] = MethodName(cert.method());
  out["size"] = cert.size();
  out["connected"] = cert.connected();
  out["dominating"] = IsDominating(cert.set());
  out["vertices"] = VertexList(cert.set());
  return out;
}

Json Header(const RunConfig& config) {
  Json out;
  out["headline"] = "";
  out["schema"] = kSchemaVersion;
  out["command"] = CommandName(config.command);
  out["seed"] = config.seed;
  return out;
}

// ---------------------------------------------------------------------------
// Commands

int RunExact(const RunConfig& config, Json& report) {
  const VertexSet set = ResolveSet(config);
  const SteinerInstance instance(set);
  const SteinerResult result = SteinerExact(instance, config.budget);
  const TreeCheck check = CheckSteinerTree(result.tree, set);
  const Rational lower = LowerBoundForSet(set);
  const int certified = CertifiedLowerBound(set);
  report["headline"] = "d(S) = " + std::to_string(result.distance);
  report["n"] = set.dim().value();
  report["k"] = set.size();
  report["terminals"] = VertexList(set);
  report["d"] = result.distance;
  report["lower"] = FormatRational(lower);
  report["certified_lower"] = certified;
  report["witness_valid"] = check.ok;
  report["witness_edges"] = EdgeList(result.tree.edges());
  return check.ok && certified <= result.distance ? 0 : kCheckFailed;
}

int RunBound(const RunConfig& config, Json& report) {
  const VertexSet set = ResolveSet(config);
  const DominatingSetCertificate cds =
      MakeCds(config.method, set.dim(), config.budget);
  const BoundsReport bounds = ComputeBounds(set, cds, config.budget);
  const bool sandwich =
      bounds.certified_lower <= bounds.upper &&
      (!bounds.exact || (bounds.certified_lower <= *bounds.exact &&
                         *bounds.exact <= bounds.upper));
  std::string headline = "bounds: " + std::to_string(bounds.certified_lower) +
                         " <= d(S) <= " + std::to_string(bounds.upper);
  if (bounds.exact) headline += ", d(S) = " + std::to_string(*bounds.exact);
  report["headline"] = headline;
  report["n"] = set.dim().value();
  report["set_size"] = bounds.set_size;
  report["terminals"] = VertexList(set);
  report["lower"] = FormatRational(bounds.lower);
  report["lower_floor"] = bounds.lower_floor;
  report["certified_lower"] = bounds.certified_lower;
  report["upper"] = bounds.upper;
  report["construction_limit"] = set.size() + cds.size() - 1;
  if (bounds.exact) {
    report["exact"] = *bounds.exact;
  } else {
    report["exact"] = nullptr;
    report["exact_omitted"] = bounds.exact_omitted_reason;
  }
  report["sandwich_holds"] = sandwich;
  report["cds"] = CertificateJson(cds);
  report["upper_tree_edges"] = EdgeList(bounds.upper_tree.edges());
  return sandwich ? 0 : kCheckFailed;
}

int RunCds(const RunConfig& config, Json& report) {
  const Dimension dim = RequireDimension(config);
  const DominatingSetCertificate cert = MakeCds(config.method, dim, config.budget);
  report["headline"] = "cds: method=" + std::string(MethodName(cert.method())) +
                       " size=" + std::to_string(cert.size()) +
                       " connected=" + (cert.connected() ? "true" : "false");
  report["n"] = dim.value();
  report["sphere_covering_floor"] = FormatRational(
      Rational(static_cast<std::int64_t>(dim.vertex_count()), dim.value() + 1));
  report["certificate"] = CertificateJson(cert);
  return 0;
}

int RunGroupVerify(const RunConfig& config, Json& report) {
  const Dimension dim = RequireDimension(config);
  const TransitivityReport result = VerifySharpEdgeTransitivity(dim, config.budget);
  std::ostringstream headline;
  headline << "sharp edge transitivity: " << (result.ok ? "OK" : "FAILED")
           << " (" << result.group_order << " elements, " << result.edge_count
           << " edges, " << result.ordered_pairs << " ordered pairs)";
  report["headline"] = headline.str();
  report["n"] = dim.value();
  report["ok"] = result.ok;
  report["group_order"] = result.group_order;
  report["edge_count"] = result.edge_count;
  report["ordered_pairs"] = result.ordered_pairs;
  if (result.counterexample) {
    Json c;
    c["source"] = FormatEdge(result.counterexample->first);
    c["target"] = FormatEdge(result.counterexample->second);
    c["mapping_elements"] = result.counterexample_count;
    report["counterexample"] = c;
  } else {
    report["counterexample"] = nullptr;
  }
  return result.ok ? 0 : kCheckFailed;
}

int RunExperiment(const RunConfig& config, Json& report) {
  const VertexSet set = ResolveSet(config);
  ExperimentMode mode;
  if (config.exhaustive) {
    mode = Exhaustive{};
  } else if (config.samples) {
    mode = Sampled{.count = *config.samples, .seed = config.seed};
  } else {
    throw Error(ErrorCategory::kParse, "experiment needs --exhaustive or --samples");
  }
  const IntersectionExperiment experiment =
      IntersectionExperiment::ForEvenSet(set, config.budget);
  const IntersectionSummary summary = RunIntersectionExperiment(
      experiment, mode, config.budget, config.transcript);
  const MirrorUnionCheck mirror = ConnectTreeWithMirror(experiment);

  const bool inequality = summary.min_lhs >= summary.rhs;
  const bool identity = !summary.exhaustive || summary.mean == summary.predicted_mean;
  report["headline"] = "mean X = " + FormatRational(summary.mean) +
                       " (predicted " + FormatRational(summary.predicted_mean) +
                       "), min 2d-X = " + std::to_string(summary.min_lhs) +
                       " >= " + std::to_string(summary.rhs) + ": " +
                       (inequality ? "yes" : "no");
  report["n"] = set.dim().value();
  report["set_size"] = set.size();
  report["terminals"] = VertexList(set);
  report["d"] = experiment.distance();
  report["mode"] = summary.exhaustive ? "exhaustive" : "sampled";
  report["pairs"] = summary.pairs;
  report["mean"] = FormatRational(summary.mean);
  report["predicted_mean"] = FormatRational(summary.predicted_mean);
  if (summary.exhaustive) {
    report["identity_holds"] = identity;
  } else {
    report["standard_error"] = summary.standard_error;
  }
  report["max"] = summary.max;
  report["max_at_least_mean"] = Rational(summary.max) >= summary.mean;
  report["min_lhs"] = summary.min_lhs;
  report["rhs"] = summary.rhs;
  report["inequality_holds"] = inequality;
  Json union_check;
  union_check["union_edges"] = mirror.union_edges;
  union_check["connector_edges"] = mirror.connector_edges;
  union_check["connected_edge_count"] = mirror.connected_edge_count;
  union_check["naive_floor"] = mirror.naive_floor;
  union_check["connected"] = mirror.connected;
  report["mirror_union"] = union_check;
  report["tree_edges"] = EdgeList(experiment.tree().edges());
  report["mirror_tree_edges"] = EdgeList(experiment.mirror_tree().edges());
  if (config.transcript) {
    Json rows = Json::array();
    for (const IntersectionSample& s : summary.transcript) {
      Json row;
      row["lambda1"] = FormatGammaElement(s.first);
      row["lambda2"] = FormatGammaElement(s.second);
      row["X"] = s.overlap;
      rows.push_back(std::move(row));
    }
    report["transcript"] = std::move(rows);
  }
  return inequality && identity && mirror.connected ? 0 : kCheckFailed;
}

int RunSdiam(const RunConfig& config, Json& report) {
  const Dimension dim = RequireDimension(config);
  if (!config.k) throw Error(ErrorCategory::kParse, "--k is required");
  const SdiamReport result =
      SdiamSandwich(dim, *config.k, config.budget, config.seed);
  const bool sandwich =
      result.certified_lower <= result.upper &&
      (!result.exact || (result.certified_lower <= *result.exact &&
                         *result.exact <= result.upper));
  std::string headline = "sdiam_" + std::to_string(result.k) + "(Q_" +
                         std::to_string(dim.value()) + "): " +
                         std::to_string(result.certified_lower) +
                         " <= sdiam <= " + std::to_string(result.upper);
  if (result.exact) headline += ", exact " + std::to_string(*result.exact);
  report["headline"] = headline;
  report["n"] = dim.value();
  report["k"] = result.k;
  report["lower"] = FormatRational(result.lower);
  report["certified_lower"] = result.certified_lower;
  report["upper"] = result.upper;
  report["witness_upper"] = result.witness_upper;
  report["witness"] = VertexList(result.witness);
  if (result.exact) {
    report["exact"] = *result.exact;
    report["exact_argmax"] = VertexList(*result.exact_argmax);
  } else {
    report["exact"] = nullptr;
    report["exact_omitted"] = result.exact_omitted_reason;
  }
  report["sandwich_holds"] = sandwich;
  report["cds"] = CertificateJson(result.cds);
  return sandwich ? 0 : kCheckFailed;
}

void ReportError(const RunConfig* config, const Error& error, std::ostream& out,
                 std::ostream& err) {
  err << "error[" << CategoryName(error.category()) << "]: " << error.what()
      << '\n';
  if (config != nullptr && config->format == OutputFormat::kJson) {
    Json report;
    report["schema"] = kSchemaVersion;
    report["command"] = CommandName(config->command);
    report["seed"] = config->seed;
    report["error"] = {{"category", CategoryName(error.category())},
                       {"message", error.what()}};
    out << report.dump(2) << '\n';
  }
}

}  // namespace

int ExitCode(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse:
      return 2;
    case ErrorCategory::kDimensionMismatch:
      return 3;
    case ErrorCategory::kBudgetExceeded:
      return 4;
    case ErrorCategory::kPrecondition:
      return 5;
  }
  return 70;
}

std::optional<RunConfig> ParseCommandLine(int argc, const char* const* argv,
                                          std::ostream& out) {
  RunConfig config;
  CLI::App app{"Steiner distances, bounds and automorphism checks in Q_n",
               "hcsteiner"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText},
      {"json", OutputFormat::kJson},
      {"csv", OutputFormat::kCsv}};
  std::uint64_t budget_states = config.budget.max_dp_states;

  struct Subcommand {
    const char* name;
    const char* help;
    Command command;
  };
  const Subcommand specs[] = {
      {"exact", "exact Steiner distance with a witness tree", Command::kExact},
      {"bound", "lower/upper bound sandwich for a terminal set", Command::kBound},
      {"cds", "construct and certify a dominating set", Command::kCds},
      {"group-verify", "verify sharp edge transitivity of the group",
       Command::kGroupVerify},
      {"experiment", "random automorphism intersection experiment",
       Command::kExperiment},
      {"sdiam", "Steiner k-diameter sandwich", Command::kSdiam},
  };
  std::vector<std::pair<CLI::App*, Command>> subcommands;
  for (const Subcommand& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--n", config.n, "cube dimension");
    sub->add_option("--set", config.set,
                    "terminal set: <file>, even, odd, all or inline:v1,v2,...");
    sub->add_option("--k", config.k, "subset size for sdiam");
    sub->add_option("--seed", config.seed, "random seed (always reported)");
    sub->add_option("--samples", config.samples, "sampled experiment pairs");
    sub->add_flag("--exhaustive", config.exhaustive,
                  "sweep all pairs of group elements");
    sub->add_flag("--transcript", config.transcript,
                  "list every (lambda1, lambda2, X) triple");
    sub->add_option("--method", config.method,
                    "cds: best, greedy, hamming, exact, steinerized-greedy, "
                    "steinerized-hamming");
    sub->add_option("--budget-states", budget_states,
                    "maximum Steiner DP states (3^k * 2^n)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", config.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    subcommands.emplace_back(sub, spec.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCategory::kParse, e.what());
  }
  for (const auto& [sub, command] : subcommands) {
    if (sub->parsed()) config.command = command;
  }
  config.budget.max_dp_states = budget_states;
  return config;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json report = Header(config);
  int status = 0;
  try {
    switch (config.command) {
      case Command::kExact:
        status = RunExact(config, report);
        break;
      case Command::kBound:
        status = RunBound(config, report);
        break;
      case Command::kCds:
        status = RunCds(config, report);
        break;
      case Command::kGroupVerify:
        status = RunGroupVerify(config, report);
        break;
      case Command::kExperiment:
        status = RunExperiment(config, report);
        break;
      case Command::kSdiam:
        status = RunSdiam(config, report);
        break;
    }
  } catch (const Error& e) {
    ReportError(&config, e, out, err);
    return ExitCode(e.category());
  }
  Render(report, config.format, out);
  return status;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = ParseCommandLine(argc, argv, out);
  } catch (const Error& e) {
    ReportError(nullptr, e, out, err);
    return ExitCode(e.category());
  }
  if (!config) return 0;
  return Run(*config, out, err);
}

}  // namespace hcsteiner::cli
