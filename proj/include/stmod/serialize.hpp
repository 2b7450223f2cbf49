#pragma once

// JSON input and report formats. Keys are sorted and every value is an
// integer, string, boolean or array of those, so reports are byte-stable.

#include "stmod/ghostcalc.hpp"

#include <json.hpp>

#include <string>

namespace stmod {

using Json = nlohmann::json;

// {"kind": "abelian", "p": 2, "factors": [2, 2]} or {"kind": "quaternion", "n": 3};
// a compact string such as "C2xC4" or "Q8" is accepted as input too.
Json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);
// Builds the group and enforces the order cap (CapError).
GroupPtr group_from_json(const Json& j, std::size_t cap_order);

Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j, std::uint32_t p, std::size_t rows, std::size_t cols, const std::string& what);

// {"p": 2, "group": ..., "dim": n, "action": [matrix per generator]}
Json module_to_json(const Module& m);
Module module_from_json(const Json& j, std::size_t cap_order);
Module module_from_json(const Json& j, const GroupPtr& g);

// {"source": module, "target": module, "matrix": [[...]]}
Json map_to_json(const ModuleMap& f);
ModuleMap map_from_json(const Json& j, std::size_t cap_order);

// Sparse {"element index": coefficient}.
Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j, const GroupPtr& g);

Json read_json_file(const std::string& path);
Module parse_module_file(const std::string& path, std::size_t cap_order = 128);
ModuleMap parse_map_file(const std::string& path, std::size_t cap_order = 128);

Json to_json(const SeriesReport& s);
Json to_json(const TrivialityCertificate& c);
Json to_json(const GhostVerdict& v);
Json to_json(const GeneratingBound& b);
Json to_json(const LengthReport& r);
Json to_json(const CyclicGhostReport& r);
Json to_json(const BensonCertificate& c);
Json to_json(const BoundReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const CompositeReport& r);
Json to_json(const Q8Report& r);
Json to_json(const DimensionChain& c);

}  // namespace stmod
