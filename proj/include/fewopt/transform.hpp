#ifndef FEWOPT_TRANSFORM_HPP
#define FEWOPT_TRANSFORM_HPP

#include <vector>

#include "fewopt/fewnomial.hpp"

namespace fewopt {

// Monomial change of variables x -> x^U. Convention: coordinate j of x^U is
// prod_i x_i^{U(j,i)} (row j of U), so the exponent row of each term maps to
// a * U and g(y) = f(y^U) holds pointwise.
struct MonomialMap {
  Matrix matrix;  // n x n
  bool invertible = false;
};

MonomialMap make_monomial_map(Matrix u, const PrecisionBudget& prec = {});

// The point x^U.
Vec apply_map_point(const MonomialMap& u, const Vec& x, const PrecisionBudget& prec);

// U * V (used by composition tests; (x^U)^V = x^{VU} under our convention).
Matrix matmul(const Matrix& a, const Matrix& b, const PrecisionBudget& prec = {});

// Inverse via column-wise solves. Throws SingularMatrix.
Matrix inverse(const Matrix& m, const PrecisionBudget& prec = {});

// g with Supp(g) = Supp(f) * U and the same coefficients.
Fewnomial apply_monomial_map(const Fewnomial& f, const MonomialMap& u,
                             const PrecisionBudget& prec = {});

// Canonical simplex form of an honest (n+1)-nomial with constant term:
// c + x_1 + ... + x_ell - x_{ell+1} - ... - x_n, reachable from f by a
// monomial map, a positive rescaling, and a permutation (all recorded).
struct CanonicalSimplexForm {
  Real c;
  int ell = 0;
  MonomialMap transform;            // rows: non-origin exponents, permuted order
  Vec scaling;                      // |coefficient| of each non-origin term
  std::vector<size_t> permutation;  // canonical slot -> original term index
};

CanonicalSimplexForm canonicalize_simplex(const Fewnomial& f, const PrecisionBudget& prec = {});

}  // namespace fewopt

#endif
