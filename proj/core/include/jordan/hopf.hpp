#pragma once

#include <string>
#include <vector>

#include "jordan/catalog.hpp"
#include "jordan/representation.hpp"

namespace jordan {

// (rho1 (x) rho2)(t); basis index i * dim2 + j.
Operator evaluate_tensor(const TensorWord& t, const Representation& left, const Representation& right);

// Tensor basis ordered (i, j) -> i * dim(b) + j; axes are concatenated.
Representation coproduct_rep(const Representation& a, const Representation& b, const HopfData& hopf);
// Same space, with sigma o Delta.
Representation flipped_coproduct_rep(const Representation& a, const Representation& b, const HopfData& hopf);

// Ordered product of exp(c * rho1(L) (x) rho2(R)); NonNilpotentExponent when a
// factor is not nilpotent.
Operator evaluate_R(const HopfData& hopf, const Representation& a, const Representation& b);

// R12 R13 R23 == R23 R13 R12 on V (x) V (x) V, R of size d^2.
bool check_qybe(const Matrix& r);
// Mixed dimensions: rab on Va(x)Vb, rac on Va(x)Vc, rbc on Vb(x)Vc.
bool check_qybe(const Matrix& rab, const Matrix& rac, const Matrix& rbc, std::size_t da, std::size_t db,
                std::size_t dc);
// Leg embeddings into V1 (x) V2 (x) V3. (R13)_{(ijk),(i'j'k')} = R_{(ik),(i'k')} delta_{jj'}.
Matrix embed_12(const Matrix& r, std::size_t d3);
Matrix embed_23(const Matrix& r, std::size_t d1);
Matrix embed_13(const Matrix& r, std::size_t d1, std::size_t d2, std::size_t d3);

// Inverse of a one-sided (unitriangular) certified operator.
Operator inverse_certified(const Operator& op, const std::vector<Axis>& axes);

struct CheckResult {
  std::string check;
  std::string generator;
  bool passed = false;
  std::string detail;
};

struct HopfReport {
  std::vector<CheckResult> results;
  bool passed() const;
  std::string str() const;
};

// R (rho1(x)rho2)Delta(X) R^-1 == (rho1(x)rho2)(sigma o Delta(X)) for every generator.
HopfReport check_intertwiner(const Operator& r, const HopfData& hopf, const Representation& a,
                             const Representation& b);
// Coassociativity on V(x)V(x)V, counit through the one-dimensional counit
// representation, antipode from both sides.
HopfReport check_hopf_axioms(const HopfData& hopf, const Representation& rep);

}  // namespace jordan
