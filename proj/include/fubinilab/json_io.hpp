#pragma once

#include <string>

#include <json.hpp>

#include "fubinilab/convspace.hpp"
#include "fubinilab/convvect.hpp"
#include "fubinilab/factorization.hpp"
#include "fubinilab/fubini.hpp"

namespace fubinilab {

using Json = nlohmann::ordered_json;

std::string to_string(Axioms axioms);
/// "limit" or "down-only"; throws InvalidConfig otherwise.
Axioms parse_axioms(const std::string& name);

/// {"points": n, "conv": [generators of point 0, ...]}
Json to_json(const ConvSpace& x);
/// Throws Parse on malformed input and when the structure violates `axioms`.
ConvSpace space_from_json(const Json& j, Axioms axioms);

/// {"field", "dim", "axioms", "zero": generators, "add", "smul"}; the
/// operation tables are written when the carrier has at most `table_limit` points.
Json to_json(const ConvVect& e, std::size_t table_limit = 64);
/// Tables, when present, must agree with coordinate arithmetic.
ConvVect vect_from_json(const Json& j);

Json to_json(const FubiniVerdict& v, const ConvSpace& x, const ConvSpace& y);
Json to_json(const OrthogonalityCertificate& c);

/// Reads a whole file as JSON; throws Parse.
Json read_json_file(const std::string& path);

}  // namespace fubinilab
