// JSON (de)serialization for groups, families, constructions, and reports.
// Schemas carry "format": 1; object keys serialize sorted, so dumps are
// deterministic and reports can be compared byte-for-byte (minus timing).
#pragma once

#include <string>

#include "json.hpp"
#include "sedf/constructions.hpp"
#include "sedf/search.hpp"

namespace sedf {

using njson = nlohmann::json;

njson group_to_json(const GroupTable& g);
GroupPtr group_from_json(const njson& j, uint64_t order_cap = kDefaultOrderCap);

njson family_to_json(const Family& f);
// Accepts either a family object or any object embedding one under "family"
// (e.g. a verification report).
Family family_from_json(const njson& j, uint64_t order_cap = kDefaultOrderCap);

njson claim_to_json(const Claim& c);
njson construction_to_json(const Construction& c);
njson construction_report_to_json(const ConstructionReport& r);

njson load_json_file(const std::string& path);  // BadInput on parse/io errors

}  // namespace sedf
