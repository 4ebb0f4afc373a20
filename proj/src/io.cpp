#include "blockset/io.hpp"

#include <sstream>

namespace blockset {

namespace {

json vertex_list(std::span<const VertexId> vs) {
  json a = json::array();
  for (auto v : vs) a.push_back(v);
  return a;
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& name, const std::pair<const char*, Enum> (&table)[N]) {
  for (const auto& [key, value] : table) {
    if (name == key) return value;
  }
  throw Error(ErrorCode::Parse, "unknown value \"" + name + "\"");
}

constexpr std::pair<const char*, StepKind> kSteps[] = {
    {"base", StepKind::Base}, {"even_split", StepKind::EvenSplit}, {"odd_peel", StepKind::OddPeel}};
constexpr std::pair<const char*, BaseRule> kRules[] = {{"empty", BaseRule::Empty},
                                                      {"singleton", BaseRule::Singleton},
                                                      {"star", BaseRule::Star},
                                                      {"construct3", BaseRule::Construct3},
                                                      {"single_tuple", BaseRule::SingleTuple}};
constexpr std::pair<const char*, EdgeColor> kColors[] = {{"red", EdgeColor::Red}, {"blue", EdgeColor::Blue}};

std::size_t read_count(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw Error(ErrorCode::Parse, std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const ConstructionTrace& trace) {
  json j;
  j["step"] = to_string(trace.kind);
  j["d"] = trace.d;
  j["n"] = trace.n;
  switch (trace.kind) {
    case StepKind::Base:
      j["rule"] = to_string(trace.base);
      break;
    case StepKind::EvenSplit:
      j["k"] = trace.pivot;
      j["offset"] = trace.pivot;
      break;
    case StepKind::OddPeel:
      j["x"] = trace.pivot;
      break;
  }
  if (!trace.children.empty()) {
    json kids = json::array();
    for (const auto& c : trace.children) kids.push_back(to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

ConstructionTrace trace_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "trace node must be an object");
  ConstructionTrace t;
  t.kind = enum_from(j.value("step", std::string{}), kSteps);
  t.d = read_count(j, "d");
  t.n = read_count(j, "n");
  switch (t.kind) {
    case StepKind::Base:
      t.base = enum_from(j.value("rule", std::string{}), kRules);
      break;
    case StepKind::EvenSplit:
      t.pivot = read_count(j, "k");
      break;
    case StepKind::OddPeel:
      t.pivot = read_count(j, "x");
      break;
  }
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) t.children.push_back(trace_from_json(c));
  }
  return t;
}

json to_json(const FamilyDocument& doc) {
  json j;
  j["n"] = doc.family.n();
  j["d"] = doc.family.d();
  json edges = json::array();
  for (const auto& e : doc.family) edges.push_back(vertex_list(e.vertices()));
  j["edges"] = std::move(edges);
  if (doc.colors) {
    json c = json::array();
    for (auto col : *doc.colors) c.push_back(to_string(col));
    j["colors"] = std::move(c);
  }
  if (doc.trace) j["trace"] = to_json(*doc.trace);
  return j;
}

FamilyDocument family_document_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "family document must be a JSON object");
  const std::size_t n = read_count(j, "n");
  const std::size_t d = read_count(j, "d");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw Error(ErrorCode::Parse, "field \"edges\" must be an array");
  }
  std::vector<EdgeTuple> edges;
  std::size_t index = 0;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array()) throw Error(ErrorCode::Parse, "edge " + std::to_string(index) + " is not an array");
    std::vector<VertexId> vs;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw Error(ErrorCode::Parse, "edge " + std::to_string(index) + " has a non-integer vertex");
      }
      vs.push_back(v.get<VertexId>());
    }
    if (vs.size() != d) {
      throw Error(ErrorCode::InvalidArity, "edge " + std::to_string(index) + " has " +
                                               std::to_string(vs.size()) + " vertices, expected " +
                                               std::to_string(d));
    }
    edges.push_back(canonicalize_tuple(vs, n));
    ++index;
  }
  FamilyDocument doc;
  const std::size_t listed = edges.size();
  doc.family = Family(n, d, std::move(edges));
  if (j.contains("colors")) {
    if (!j.at("colors").is_array() || j.at("colors").size() != listed || listed != doc.family.size()) {
      throw Error(ErrorCode::Parse, "\"colors\" must align with a duplicate-free edge list");
    }
    // Re-align colors with the canonical edge order.
    std::vector<std::pair<EdgeTuple, EdgeColor>> tagged;
    std::size_t i = 0;
    for (const auto& e : j.at("edges")) {
      std::vector<VertexId> vs = e.get<std::vector<VertexId>>();
      tagged.emplace_back(canonicalize_tuple(vs, n), enum_from(j.at("colors").at(i++).get<std::string>(), kColors));
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<EdgeColor> colors;
    for (auto& [e, c] : tagged) colors.push_back(c);
    doc.colors = std::move(colors);
  }
  if (j.contains("trace")) doc.trace = trace_from_json(j.at("trace"));
  return doc;
}

FamilyDocument parse_family_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return family_document_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json to_json(const VerificationReport& report) {
  json j;
  j["blocking"] = report.blocking;
  j["method"] = to_string(report.method);
  if (const auto* u = std::get_if<UnblockedPartition>(&report.witness)) {
    json w;
    w["kind"] = "unblocked_partition";
    json labels = json::array();
    for (auto l : u->partition.labels()) labels.push_back(static_cast<int>(l));
    w["labels"] = std::move(labels);
    json parts = json::array();
    for (const auto& p : u->partition.parts()) parts.push_back(vertex_list(p));
    w["parts"] = std::move(parts);
    j["witness"] = std::move(w);
  } else if (const auto* l = std::get_if<DisconnectedLink>(&report.witness)) {
    json w;
    w["kind"] = "disconnected_link";
    w["x"] = vertex_list(l->removed);
    w["components"] = json::array({vertex_list(l->first), vertex_list(l->second)});
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["examined"] = report.examined;
  return j;
}

json to_json(const SearchResult& result) {
  json j;
  j["optimum"] = result.optimum;
  j["proved_optimal"] = result.proved_optimal;
  j["budget_exceeded"] = result.budget_exceeded;
  j["nodes_expanded"] = result.nodes_expanded;
  j["start_size"] = result.start_size;
  j["witness_family"] = to_json(FamilyDocument{result.witness_family, std::nullopt, std::nullopt});
  return j;
}

json to_json(const BoundRow& row) {
  json j;
  j["d"] = row.d;
  j["n"] = row.n;
  j["lower_ceil"] = row.lower_ceil;
  j["dp_upper"] = row.dp_upper;
  j["trivial_upper"] = row.trivial_upper;
  j["gap"] = row.gap();
  if (row.phi3_exact) j["phi3_exact"] = *row.phi3_exact;
  return j;
}

json to_json(const GammaCheckRow& row) {
  json j;
  j["d"] = row.d;
  j["gamma"] = row.gamma.str();
  j["gamma_approx"] = row.gamma.to_double();
  j["threshold"] = row.threshold.str();
  j["star_coefficient"] = row.star_coefficient.str();
  j["below_threshold"] = row.below_threshold;
  j["at_most_star"] = row.at_most_star;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string to_csv_row(const BoundRow& row) {
  std::ostringstream os;
  os << row.d << ',' << row.n << ',' << row.lower_ceil << ',' << row.dp_upper << ',' << row.trivial_upper
     << ',' << row.gap();
  return os.str();
}

}  // namespace blockset
