#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "toralpha/fan.hpp"
#include "toralpha/invariant.hpp"
#include "toralpha/symmetry.hpp"

namespace toralpha {

// Group specification as it appears in a document: either "full" (compute
// the Weyl group) or an explicit matrix list; absent means trivial.
struct GroupSpec {
    bool full = false;
    std::vector<IntMatrix> matrices;
};

// Parsed job document: fan plus optional divisor (default anticanonical),
// group, and command parameters.
struct JobDocument {
    Fan fan;
    std::vector<Int> divisor;  // empty = anticanonical
    std::optional<GroupSpec> group;
};

JobDocument parse_job_document(const nlohmann::json& doc);
JobDocument load_job_document(const std::string& path);

// Resolve the document's divisor/group against its fan.
ToricDivisor resolve_divisor(const JobDocument& job);
SymmetryGroup resolve_group(const Fan& fan, const std::optional<GroupSpec>& spec);

// "1/2,3" -> rational vector.
RatVector parse_point(const std::string& text, int dimension);

// Sections file: {"points": [[-1,0],[0,-1]]} (integer lattice points).
std::vector<IntVector> load_section_points(const std::string& path, int dimension);

nlohmann::json to_json(const RatVector& v);
nlohmann::json to_json(const LctValue& lct);
nlohmann::json to_json(const AlphaResult& result);
nlohmann::json to_json(const SymmetryGroup& group);
nlohmann::json to_json(const Fan& fan);

}  // namespace toralpha
