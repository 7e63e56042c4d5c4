#pragma once

// JSON encodings of cyclotomic numbers, matrices and group descriptions.
//
// A number is an array of terms [num, den, exp] meaning sum (num/den) zeta^exp,
// 0 <= exp < N.  Integers beyond 64 bits are written as decimal strings.
// On input a plain integer or a "p/q" string is also accepted.

#include "json.hpp"
#include <string>

#include "quot/catalog.hpp"
#include "quot/cyclotomic.hpp"

namespace quot {

using Json = nlohmann::json;

Json to_json(const Cyclotomic& a);
Cyclotomic cyclotomic_from_json(const Json& j, const CyclotomicField& field);

/// Array of rows.
Json to_json(const Matrix& m);
/// Accepts an array of rows or a flat row-major array of n*n entries.
Matrix matrix_from_json(const Json& j, int n, const CyclotomicField& field);

Json to_json(const GroupDescription& d);
/// Raises InputError for malformed input or "faithful": false.
GroupDescription group_from_json(const Json& j);
GroupDescription parse_group(const std::string& text);

}  // namespace quot
