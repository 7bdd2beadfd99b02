#pragma once

#include <json.hpp>

#include "ordtri/bounds.hpp"
#include "ordtri/incidence.hpp"
#include "ordtri/triangles.hpp"

namespace ordtri {

// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1";

// Integers that may exceed 64 bits and all rationals are JSON strings.
Json to_json(const CanonicalLine& line);
Json to_json(const DegeneracyClass& d);
Json to_json(const BoundReport& r);
Json to_json(const RichCaseWitness& w);
Json spectrum_json(const IncidenceProfile& profile);
// Triangle section: count, count kind, truncated list and case details.
Json to_json(const TriangleReport& r);

}  // namespace ordtri
