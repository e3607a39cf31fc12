#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "omegalie/gaussian_rational.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/superalgebra.hpp"

namespace omegalie {

/// Parses an algebra-definition document:
///
///   { "name": str, "even_basis": [str...], "odd_basis": [str...],
///     "brackets": [ {"left": str, "right": str,
///                    "value": [[re_num, re_den, im_num, im_den, basis], ...]} ...],
///     "omega": [ {"left": str, "right": str, "re": [num, den], "im": [num, den]} ...] }
///
/// Unlisted brackets follow from graded skew-symmetry; unlisted omega entries
/// are zero. Throws SchemaError, GradingError or SkewError.
OmegaSuperAlgebra load_algebra(std::string_view document);
OmegaSuperAlgebra load_algebra_json(const nlohmann::json& document);
OmegaSuperAlgebra load_algebra_file(const std::string& path);

/// Inverse of load_algebra. Basis order in the document is even elements then
/// odd elements, each in algebra order; brackets are emitted for pairs with
/// left index below right index and for odd diagonal pairs.
nlohmann::json algebra_to_json(const OmegaSuperAlgebra& a);

/// Integers serialize as JSON numbers when they fit in 64 bits and as decimal
/// strings otherwise.
nlohmann::json integer_to_json(const mpz_class& z);
/// {"re": [num, den], "im": [num, den]}
nlohmann::json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const nlohmann::json& j);
/// Row-major list of rows of scalars.
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vector_to_json(std::span<const GaussianRational> v);

}  // namespace omegalie
