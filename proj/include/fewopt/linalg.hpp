#ifndef FEWOPT_LINALG_HPP
#define FEWOPT_LINALG_HPP

#include <vector>

#include "fewopt/precision.hpp"
#include "fewopt/real.hpp"

namespace fewopt {

using Vec = std::vector<Real>;

// Dense row-major matrix of arbitrary-precision reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, mpfr_prec_t prec = 256)
      : rows_(rows), cols_(cols), data_(rows * cols, Real(prec)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Real& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Real& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix without_column(size_t j) const;
  Matrix with_prec(mpfr_prec_t prec) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Real> data_;
};

// The (n+1) x m lift of a support: column j is (1, a_j).
Matrix lifted_matrix(const std::vector<Vec>& support, mpfr_prec_t prec);

// LU with full pivoting; relative error <= 2^{-mantissa/2} when nonzero.
Real determinant(const Matrix& m, const PrecisionBudget& prec);

// Numerical rank: pivots below 2^{-mantissa/2} * (max |entry| of their row
// at elimination time) count as zero.
int rank(const Matrix& m, const PrecisionBudget& prec);

// Solves M x = rhs (square, full rank). Throws SingularMatrix.
Vec solve(const Matrix& m, const Vec& rhs, const PrecisionBudget& prec);

// Signed minors of the lifted support matrix: b_i = (-1)^i det(lift with
// column i deleted). Spans the right null space of the lift; recomputed at
// doubled mantissa until the residual bound holds or the cap is reached.
Vec b_vector(const std::vector<Vec>& support, const PrecisionBudget& prec);

// Hadamard bound on |det| (product of column norms), rounded up, 64-bit.
Real hadamard_bound(const Matrix& m);

// max_i |(lift * b)_i| for the support's lift, at the given precision.
Real lift_residual(const std::vector<Vec>& support, const Vec& b, mpfr_prec_t prec);

}  // namespace fewopt

#endif
