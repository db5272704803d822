#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordan/linalg.hpp"
#include "jordan/representation.hpp"

namespace jordan {

struct Component {
  int twice_label = 0;
  Rational weight;              // Delta(J3) eigenvalue on the top vector
  std::vector<Vector> vectors;  // images of 1, x, x^2, ... of the label module
  Representation module;        // the label-j monomial representation used
};

struct DecompositionResult {
  std::string algebra;
  std::size_t dim1 = 0, dim2 = 0;
  std::optional<Rational> z;  // set when the input was specialized
  std::vector<Component> components;  // highest label first
  std::vector<int> labels() const;    // twice labels, same order
};

struct DecomposeOptions {
  // Value the input was specialized at; label modules are specialized alike.
  std::optional<Rational> z;
  // Classical top vector per twice label; default ((x - y)/2)^k.
  std::map<int, Vector> classical_tops;
};

// Coproduct representation of two finite monomial modules of uzsl2 or sl2.
// NotCompletelyReducible when the components do not fill the space.
DecompositionResult decompose(const Representation& delta_rep, const DecomposeOptions& opts = {});

// Monomial modules for 2j1 and 2j2, coproduct, optional specialization, decompose.
Representation tensor_product_rep(const std::string& algebra, int twice_j1, int twice_j2);
DecompositionResult decompose_product(const std::string& algebra, int twice_j1, int twice_j2,
                                      std::optional<Rational> z = std::nullopt,
                                      const std::map<int, Vector>& classical_tops = {});

// ((x - y)/2)^k on the dim1 x dim2 monomial grid, index a * dim2 + b for x^a y^b.
Vector default_classical_top(std::size_t dim1, std::size_t dim2, int k);

// Columns are the component vectors in order.
Matrix cg_matrix(const DecompositionResult& result);

// Delta(X) * C == C * blockdiag(label matrices) for every generator; empty
// string on success, else the first failing generator.
std::string check_block_diagonal(const DecompositionResult& result, const Representation& delta_rep);

// Each component span is stable under factor swap composed with z -> -z.
bool check_flip_symmetry(const DecompositionResult& result);
bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);
// Span of the vectors is invariant under every generator of the representation.
bool is_invariant(const std::vector<Vector>& span, const Representation& rep);

// Coordinates of v in the columns of the (invertible, rational) matrix basis.
Vector coordinates(const Matrix& basis, const Vector& v);

}  // namespace jordan
