#pragma once

// JSON (de)serialization for the structure-constant file formats, plus a
// minimal JSON-schema validator for report files.  All scalars travel as
// canonical "num/den" strings so files round-trip bit-exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "rootleib/dialg.hpp"
#include "rootleib/leibniz.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/recognition.hpp"
#include "rootleib/report.hpp"

namespace rootleib {

using nlohmann::json;

// {"rows": r, "cols": c, "entries": [[i, j, "num/den"], ...]} sorted by (i,j).
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// {"dim": n, "basis": [...], "left": [[i,j,k,"num/den"],...], "right": [...],
//  "bar_unit": [coords]|null}
json dialgebra_to_json(const Dialgebra& d);
Dialgebra dialgebra_from_json(const json& j);

// {"dim": n, "basis": [...], "bracket": [[i,j,k,"num/den"],...]}
json leibniz_to_json(const LeibnizAlgebra& l);
LeibnizAlgebra leibniz_from_json(const json& j);

json check_report_to_json(const CheckReport& r);
json axiom_report_to_json(const AxiomReport& r);

// {"e": {"<root name>": [coords]}, "H": [[coords], ...]} with roots keyed by
// their names in rs ("a1+a2", "-a2", ...) and H listed in diagram order.
// Deserialization requires every root of rs present and all coordinate
// vectors of length dim.
json embedding_to_json(const Embedding& emb, const RootSystem& rs);
Embedding embedding_from_json(const json& j, const RootSystem& rs, long dim);

// Parse a file, failing with MalformedInput on unreadable/invalid JSON.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

// FNV-1a digest of a canonical dump, as fixed-width hex.
std::string json_digest(const json& j);

// Tiny structural validator: supports the keywords type, properties,
// required, items, enum, additionalProperties (boolean).  Returns the first
// violation as "path: message", or an empty string when valid.
std::string schema_violation(const json& schema, const json& value);

}  // namespace rootleib
