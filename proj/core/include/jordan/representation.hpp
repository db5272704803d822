#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordan/matrix.hpp"
#include "jordan/realizations.hpp"
#include "jordan/word.hpp"

namespace jordan {

// One tensor factor of a basis (a boson mode, a polynomial degree, a
// coproduct leg). Truncated axes are finite windows on an infinite basis;
// only indices below `certified` are guaranteed.
struct Axis {
  std::size_t size = 1;
  std::size_t certified = 1;
  bool truncated = false;
};

inline constexpr long kUnbounded = 1L << 40;

// Per axis: entries in rows < rows (or columns < cols) agree with the
// untruncated operator; lower/raise bound how far one application moves an
// index down/up.
struct AxisCert {
  long rows = kUnbounded, cols = kUnbounded;
  long lower = 0, raise = 0;
};
using Certificate = std::vector<AxisCert>;

Certificate exact_certificate(std::size_t axes);
Certificate certificate_product(const Certificate& a, const Certificate& b);
Certificate certificate_sum(const Certificate& a, const Certificate& b);
// MarginInsufficient unless the exponent is one-sided on every truncated axis.
Certificate certificate_exp(const Certificate& a, const std::vector<Axis>& axes);
Certificate certificate_kron(const Certificate& a, const Certificate& b);
bool certificate_covers(const Certificate& c, const std::vector<Axis>& axes);

struct Operator {
  Matrix m;
  Certificate cert;
};

// Evaluates words letter by letter; exponentials are cached.
class WordEvaluator {
 public:
  WordEvaluator(std::vector<Axis> axes, std::map<std::string, Operator> letters);
  Operator eval(const Word& w);
  Operator eval(const Monomial& m);
  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t dim() const { return dim_; }

 private:
  const Operator& letter(const Letter& l);
  std::vector<Axis> axes_;
  std::size_t dim_ = 1;
  std::map<std::string, Operator> letters_;
  std::map<Letter, Operator> exps_;
};

enum class BasisKind { FockLower, FockQuotient, MonomialUpper, Tensor, Trivial };
const char* basis_kind_name(BasisKind k);

struct BasisSpec {
  BasisKind kind = BasisKind::FockLower;
  int modes = 1;
  std::size_t cutoff = 4;
  std::size_t margin = 4;
};

class Representation {
 public:
  std::string algebra;
  std::string realization;
  std::string normalization;  // empty when none was needed
  Params params;
  BasisSpec basis;
  std::vector<Axis> axes;
  std::vector<std::string> order;
  std::map<std::string, Operator> generators;
  std::optional<int> twice_label;  // 2 j_z for finite irreducible pieces

  std::size_t dim() const;
  bool truncated() const;
  const Matrix& matrix(const std::string& name) const;
  // Indices whose every axis coordinate is certified, in basis order.
  std::vector<std::size_t> certified_indices() const;
  Matrix certified_block(const Matrix& m) const;
  WordEvaluator evaluator() const;
};

// Column c of the result is expr|c> on the number basis with the given
// per-mode sizes (mode a leftmost). Entries inside the window are exact.
Matrix fock_matrix(const BosonExpression& expr, const std::vector<std::size_t>& sizes);
// Built at cutoff + margin per mode; CutoffTooSmall if margin is below the
// lowering degree of expr.
Matrix fock_matrix(const BosonExpression& expr, const BasisSpec& spec);
// Net lowering / raising of one application on a mode (0 = a, 1 = b).
AxisCert fock_axis_certificate(const BosonExpression& expr, int mode, std::size_t size);

Representation fock_rep(const Realization& r, std::size_t cutoff, std::size_t margin = 4);
// Finite quotient of the lower bounded module; InvalidBeta when the
// parameters do not produce one.
Representation quotient_rep(const Realization& r);
Representation quotient_rep(const std::string& algebra, const Params& params);
std::size_t quotient_dimension(const RealizationSpec& spec, const Params& params);

// Difference-operator realization on span{1, x, ...}. For uzsl2/sl2 the
// argument is beta_plus and the result is finite (dimension beta_plus - 1);
// for uzh4/h4 it is a truncated window of `cutoff` monomials with the given
// beta and delta.
Representation monomial_rep(const std::string& algebra, const Rational& beta_plus);
Representation monomial_rep(const std::string& algebra, const Params& params, std::size_t cutoff,
                            std::size_t margin = 4);

Representation specialize(const Representation& rep, const Rational& z_value);
Representation classical_limit(const Representation& rep);
// Every generator acts by its counit value on a one-dimensional space.
Representation counit_rep(const std::string& algebra, const std::map<std::string, Scalar>& counit);

}  // namespace jordan
