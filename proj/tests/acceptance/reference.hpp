#pragma once

// Reference matrices and vectors, transcribed entry by
// entry. Radicals in denominators are rationalized (29/(4 sqrt3) = 29 sqrt3/12).

#include <map>
#include <string>
#include <vector>

namespace reference {

using Rows = std::vector<std::vector<std::string>>;

struct Module {
  int beta;
  Rows jp, jm, j3;
};

inline const std::vector<Module>& quotient_modules() {
  static const std::vector<Module> m{
      {-1,
       {{".", "."}, {"1", "."}},
       {{".", "1"}, {"-1/4*z^2", "z"}},
       {{"-1", "."}, {"-z", "1"}}},
      {-2,
       {{".", ".", "."}, {"1", ".", "."}, {".", "sqrt(2)", "."}},
       {{".", "2", "."}, {"-z^2", "2*z", "sqrt(2)"}, {"-sqrt(2)*z^3", "sqrt(2)*z^2", "2*z"}},
       {{"-2", ".", "."}, {"-2*z", ".", "."}, {"-2*sqrt(2)*z^2", ".", "2"}}},
      {-3,
       {{".", ".", ".", "."}, {"1", ".", ".", "."}, {".", "sqrt(2)", ".", "."}, {".", ".", "sqrt(3)", "."}},
       {{".", "3", ".", "."},
        {"-9/4*z^2", "3*z", "2*sqrt(2)", "."},
        {"-9*sqrt(2)/4*z^3", "3*sqrt(2)/4*z^2", "4*z", "sqrt(3)"},
        {"-3*sqrt(6)/2*z^4", "-sqrt(6)/4*z^3", "29*sqrt(3)/12*z^2", "3*z"}},
       {{"-3", ".", ".", "."},
        {"-3*z", "-1", ".", "."},
        {"-2*sqrt(2)*z^2", "-sqrt(2)*z", "1", "."},
        {"-2*sqrt(6)*z^3", "-5*sqrt(6)/3*z^2", "sqrt(3)*z", "3"}}},
  };
  return m;
}

// Undeformed two-dimensional module.
inline const Module& classical_doublet() {
  static const Module m{-1, {{".", "."}, {"1", "."}}, {{".", "1"}, {".", "."}}, {{"-1", "."}, {".", "1"}}};
  return m;
}

inline const Rows& r_matrix_doublet() {
  static const Rows r{{"1", ".", ".", "."}, {"-z", "1", ".", "."}, {"z", ".", "1", "."}, {"z^2", "-z", "z", "1"}};
  return r;
}

inline const Rows& r_matrix_triplet() {
  static const Rows r{
      {"1", ".", ".", ".", ".", ".", ".", ".", "."},
      {"-2*z", "1", ".", ".", ".", ".", ".", ".", "."},
      {"2*sqrt(2)*z^2", "-2*sqrt(2)*z", "1", ".", ".", ".", ".", ".", "."},
      {"2*z", ".", ".", "1", ".", ".", ".", ".", "."},
      {".", ".", ".", ".", "1", ".", ".", ".", "."},
      {".", "2*sqrt(2)*z^2", "-2*z", ".", ".", "1", ".", ".", "."},
      {"2*sqrt(2)*z^2", ".", ".", "2*sqrt(2)*z", ".", ".", "1", ".", "."},
      {".", ".", ".", "2*sqrt(2)*z^2", ".", ".", "2*z", "1", "."},
      {".", "-4*z^3", "2*sqrt(2)*z^2", "4*z^3", ".", "-2*sqrt(2)*z", "2*sqrt(2)*z^2", "2*sqrt(2)*z", "1"},
  };
  return r;
}

// Polynomials in x (first factor) and y (second factor): monomial x^a y^b -> coefficient.
using Poly = std::map<std::pair<int, int>, std::string>;

// Undeformed bases of the two coupled products.
inline const std::vector<Poly>& half_half_classical() {
  // E1, E2, E3, U1
  static const std::vector<Poly> v{{{{0, 0}, "1"}},
                                   {{{1, 0}, "1/2"}, {{0, 1}, "1/2"}},
                                   {{{1, 1}, "1"}},
                                   {{{1, 0}, "1/2"}, {{0, 1}, "-1/2"}}};
  return v;
}

inline const std::vector<Poly>& one_half_classical() {
  // E1, E2, E3, E4, U1, U2
  static const std::vector<Poly> v{{{{0, 0}, "1"}},
                                   {{{0, 1}, "1/3"}, {{1, 0}, "2/3"}},
                                   {{{1, 1}, "2/3"}, {{2, 0}, "1/3"}},
                                   {{{2, 1}, "1"}},
                                   {{{0, 1}, "1/2"}, {{1, 0}, "-1/2"}},
                                   {{{1, 1}, "1/2"}, {{2, 0}, "-1/2"}}};
  return v;
}

// Deformed vectors as combinations of the undeformed ones: index -> coefficient.
using Combination = std::vector<std::pair<int, std::string>>;

inline const std::vector<Combination>& half_half_deformed() {
  static const std::vector<Combination> v{
      {{0, "1"}},
      {{1, "1"}},
      {{2, "1"}, {0, "3/4*z^2"}, {3, "z"}},
      {{3, "1"}, {0, "z/2"}},
  };
  return v;
}

inline const std::vector<Combination>& one_half_deformed() {
  static const std::vector<Combination> v{
      {{0, "1"}},
      {{1, "1"}},
      {{2, "1"}, {0, "3/4*z^2"}, {4, "-2/3*z"}},
      {{3, "1"}, {1, "9/4*z^2"}, {0, "-9/4*z^3"}, {5, "-2*z"}, {0, "-1/3*z^2"}},
      {{4, "1"}, {1, "-z/2"}},
      {{5, "1"}, {2, "-3/8*z"}, {1, "3/8*z^2"}},
  };
  return v;
}

}  // namespace reference
