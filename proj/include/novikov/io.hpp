#pragma once

#include "novikov/homology.hpp"

#include <json.hpp>

#include <string>

namespace novikov {

using Json = nlohmann::ordered_json;

/// Explicit mode: {"coefficients", "rank", "cells", "boundaries"}.
/// Presentation mode: {"coefficients"?, "generators", "relators", "deck_map"},
/// deck_map listing the image of each generator in Z^r.
/// Throws InputError on schema problems, ValidationError when d^2 != 0.
EquivariantComplex ingest(const Json& doc);
EquivariantComplex ingest_file(const std::string& path);

Json to_json(const EquivariantComplex& x);

/// {"rank"?, "vertices": [[p/q strings or integers], ...]}
Polytope polytope_from_json(const Json& doc);
Json to_json(const Polytope& p);

Json to_json(const CohomologyClass& a);
Json to_json(const RingSummary& ring);
Json to_json(const BettiReport& report);
Json to_json(const OracleResult& result);
Json to_json(const MainTheoremReport& report);
Json to_json(const ApproximationFamily& family);

Json error_json(const std::string& kind, const std::string& message);

/// Parses a rational from a JSON string or integer; floats are rejected.
Rational rational_from_json(const Json& value);

}  // namespace novikov
