#pragma once

#include <json.hpp>

#include "qqs/vmod.hpp"

namespace qqs {

// Scalars are written as canonical strings and read back with parse_scalar.
// Every reader throws ParseError on malformed input.

nlohmann::json to_json(const RatScalar& c);
RatScalar scalar_from_json(const nlohmann::json& j);

/// {"even": [[..]..], "odd": [[..]..]}
nlohmann::json to_json(const SuperMatrix& a);
SuperMatrix matrix_from_json(const nlohmann::json& j);

/// [{"even": [..], "odd": [..], "coeff": ".."}, ..]
nlohmann::json to_json(const QPolyElement& x);
QPolyElement qpoly_from_json(const nlohmann::json& j);

/// [{"matrix": .., "coeff": ".."}, ..]
nlohmann::json to_json(const TensorElement& x);
TensorElement tensor_from_json(const nlohmann::json& j);

/// [{"matrix": .., "j": [..], "coeff": ".."}, ..]
nlohmann::json to_json(const VElement& x);
VElement velement_from_json(const nlohmann::json& j);

}  // namespace qqs
