#pragma once

#include <json.hpp>

#include "wco/invariant.hpp"
#include "wco/report.hpp"
#include "wco/system.hpp"
#include "wco/tree.hpp"

namespace wco {

using json = nlohmann::json;

// Formats (complex numbers are always [re, im] pairs):
//   space : {"atoms": [{"id": "a", "mass": 1.0}, ...]}
//   system: {"space": {...}, "phi": {"a": "b", ...}, "w": {"a": [re, im], ...}}
//           phi must cover every atom; atoms missing from w get weight 0.
//   tree  : {"vertices": [...], "root": "r" (or null), "parent": {...},
//            "lambda": {...}, "truncated": [...] (optional)}

MeasureSpace space_from_json(const json& j);
json space_to_json(const MeasureSpace& s);

WcoSystem system_from_json(const json& j);
json system_to_json(const WcoSystem& sys);

TreeShift tree_from_json(const json& j);
json tree_to_json(const TreeShift& shift);

WcoSystem load_system(const std::string& path);
TreeShift load_tree(const std::string& path);
json load_json(const std::string& path);

cplx complex_from_json(const json& j);
json complex_to_json(const cplx& z);

json field_to_json(const MeasureSpace& s, const Field& f);
json density_to_json(const MeasureSpace& s, const Density& f);
json report_to_json(const PropertyReport& r);
json subspace_to_json(const MeasureSpace& s, const SubspaceDescriptor& sub);

}  // namespace wco
