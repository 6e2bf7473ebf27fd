#pragma once

#include <json.hpp>

#include "pclab/polynomial.hpp"

namespace pclab {

using Json = nlohmann::ordered_json;

// Field tag: {"p": modulus} for prime fields, {"q": true} for the rationals.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

// Terms are lists of [vertex, colour] pairs plus the coefficient as a decimal
// string ("num/den" for rationals).
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

}  // namespace pclab
