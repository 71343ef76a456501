#pragma once

#include "aperiodic/ammann.hpp"
#include "aperiodic/penrose.hpp"
#include "aperiodic/recompose.hpp"
#include "aperiodic/stars.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace aperiodic {

using Json = nlohmann::ordered_json;

// Rationals are written as decimal strings so that nothing is rounded.
Json to_json(const GoldenRational& x);           // [a_num, a_den, b_num, b_den]
Json to_json(const CycloPoint& p);               // four coefficients
GoldenRational golden_from_json(const Json& j);
CycloPoint cyclo_from_json(const Json& j);

Json to_json(const PenrosePatch& patch);
PenrosePatch penrose_from_json(const Json& j);

Json to_json(const QPoint& q);
QPoint qpoint_from_json(const Json& j);

Json to_json(const AmmannPatch& patch);
AmmannPatch ammann_from_json(const Json& j);

Json to_json(const GenericityReport& r);
Json to_json(const RelationReport& r);
Json to_json(const std::vector<VertexStar>& stars);
Json to_json(const std::vector<VertexStarRecord>& stars);
Json to_json(const std::vector<CoronaRecord>& coronas);
Json to_json(const StarEnumeration& e);

// "penrose" or "ammann", from the "type" field.
std::string patch_type(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, int indent = -1);

}  // namespace aperiodic
