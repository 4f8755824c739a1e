#pragma once

#include <json.hpp>

#include <string>

#include "diored/oracle.hpp"

namespace diored {

// Insertion-ordered JSON so identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json curve_to_json(const Curve& E);
Curve curve_from_json(const Json& j);

Json point_to_json(const ECPoint& p);
ECPoint point_from_json(const Json& j);

Json basis_to_json(const GroebnerBasis& basis);

Json smoothing_to_json(const SmoothingResult& result);

Json instance_to_json(const InstanceDescriptor& desc);
InstanceDescriptor instance_from_json(const Json& j);

Json report_to_json(const SearchReport& report);

Json stabilizer_to_json(int n, int bound, const std::vector<AffineLatticeMap>& maps);

// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace diored
