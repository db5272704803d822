#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "jordan/catalog.hpp"
#include "jordan/decompose.hpp"
#include "jordan/realizations.hpp"
#include "jordan/representation.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

// [{"radicand": n, "coeffs": ["p/q", ...]}], coeffs indexed by z-degree from 0.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json params_json(const Params& params);
Json basis_json(const BasisSpec& basis);

// {algebra, params, basis, dim, generators}; truncated representations are
// written as their certified blocks.
Json representation_document(const Representation& rep);
// Finite representations only (quotient, monomial, tensor, trivial).
Representation representation_from_document(const Json& j);
// Same layout for a single named matrix (the R-matrix).
Json matrix_document(const std::string& algebra, const Params& params, const BasisSpec& basis, const std::string& name,
                     const Matrix& m);

Json to_json(const Realization& r);
Json to_json(const TensorWord& t);
Json to_json(const HopfData& h);
Json to_json(const DecompositionResult& d);

// "1/2", "1", "3/2"
std::string half_integer(int twice);
int parse_half_integer(const std::string& text);

// \left(\begin{array}{ll} ... \end{array}\right) with "." for zeros.
std::string latex(const Matrix& m);
std::string latex(const Representation& rep);
std::string latex(const DecompositionResult& d);

}  // namespace jordan
