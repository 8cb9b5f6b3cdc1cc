#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "msv/audit.hpp"
#include "msv/bott_samelson.hpp"
#include "msv/components.hpp"
#include "msv/root_system.hpp"

namespace msv {

using Json = nlohmann::ordered_json;

// JSON documents. Field names and order are fixed; every number is an integer
// except the wall-clock fields of an audit report.
Json to_json(const RootSystem& rs, const std::vector<WeightClassification>& table);
Json to_json(const BottSamelsonData& bs);
Json to_json(const BottSamelsonData& bs, const ComponentSet& set, bool with_dimension);
Json to_json(const AuditReport& report, bool with_timing = true);

std::string render_table(const RootSystem& rs, const std::vector<WeightClassification>& table);
std::string render_bs(const BottSamelsonData& bs);
std::string render_components(const BottSamelsonData& bs, const ComponentSet& set,
                              bool with_dimension, bool count_only);
std::string render_audit(const AuditReport& report);

}  // namespace msv
