#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "blockset/bounds.hpp"
#include "blockset/construct3.hpp"
#include "blockset/construct_d.hpp"
#include "blockset/search.hpp"
#include "blockset/verify.hpp"

namespace blockset {

using json = nlohmann::ordered_json;

/// {"n": .., "d": .., "edges": [[..], ..], "colors"?: [..], "trace"?: {..}}
struct FamilyDocument {
  Family family{0, 0};
  std::optional<std::vector<EdgeColor>> colors;
  std::optional<ConstructionTrace> trace;
};

json to_json(const FamilyDocument& doc);
json to_json(const ConstructionTrace& trace);
json to_json(const VerificationReport& report);
json to_json(const SearchResult& result);
json to_json(const BoundRow& row);
json to_json(const GammaCheckRow& row);

/// Throws Error(Parse) with a position-annotated message on malformed text,
/// and core errors for structurally invalid families.
FamilyDocument parse_family_document(std::string_view text);
FamilyDocument family_document_from_json(const json& j);
ConstructionTrace trace_from_json(const json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump(const json& j);

constexpr std::string_view kBoundCsvHeader = "d,n,lower_ceil,dp_upper,trivial_upper,gap";
std::string to_csv_row(const BoundRow& row);

}  // namespace blockset
