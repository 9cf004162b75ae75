// JSON persistence for fields, scalars and algebras.
//
//   field:   {"char": q, "degree": m, "modulus": [c0, ..., cm]}
//   scalar:  [c0, ..., c_{m-1}], or a bare integer when m = 1
//   algebra: {"field", "dim", "basis_labels", "mult", "unit", "comult",
//             "counit", "antipode"} with tensors nested as [i][j][k] and the
//             antipode as [row][col].
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Field& f, Scalar s);
Scalar scalar_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json algebra_to_json(const HopfAlgebra& h);
/// Schema check and decode; does not verify the Hopf axioms.
HopfAlgebra algebra_from_json(const nlohmann::json& j);

/// Parse text; syntax errors carry line and column, schema errors the field path.
HopfAlgebra parse_algebra(std::string_view text);
std::string dump_algebra(const HopfAlgebra& h);

}  // namespace hopf
