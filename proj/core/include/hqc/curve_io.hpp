#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>

#include "hqc/curves.hpp"

namespace hqc {

/// CSV with header `s,re,im` (plane and half-plane curves) or `s,re,im,t`
/// (group curves). Throws MalformedInput on any parse failure.
Curve read_curve_csv(std::istream& in, CurveSpace space);
void write_curve_csv(std::ostream& out, const Curve& c);

/// JSON array of records {"s", "re", "im"[, "t"]}.
Curve curve_from_json(const nlohmann::json& j, CurveSpace space);
nlohmann::json curve_to_json(const Curve& c);

/// Chooses the reader from the file extension (.json or anything else as CSV).
Curve load_curve(const std::string& path, CurveSpace space);

}  // namespace hqc
