#pragma once

#include <json.hpp>

#include "tricanon/canonicalizer.hpp"
#include "tricanon/reduction_log.hpp"
#include "tricanon/spatial.hpp"

namespace tricanon {

using json = nlohmann::json;

/// {"type":"Q"} or {"type":"GF","p":7}.
json field_to_json(const Field& field);
/// Throws ParseError, CharacteristicTwo or InvalidField.
Field field_from_json(const json& j);

/// Integers as numbers, other rationals as "num/den" strings.
json element_to_json(const FieldElement& x);
/// Accepts integers (coerced into the field) and "num/den" strings (rationals only).
FieldElement element_from_json(const json& j, const Field& field);

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j, const Field& field, std::size_t rows, std::size_t cols);

/// {"field": ..., "dims": [m, n, q], "entries": [i][j][k]}.
json tensor_to_json(const SpatialMatrix& a);
SpatialMatrix tensor_from_json(const json& j);

/// {"R": ..., "S": ..., "T": ...}.
json certificate_to_json(const EquivCertificate& c);
EquivCertificate certificate_from_json(const json& j, const Field& field, Dims dims);

json mode_ranks_to_json(const ModeRanks& r);
json log_to_json(const ReductionLog& log);

}  // namespace tricanon
