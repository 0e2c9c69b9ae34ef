#include "fewopt/linalg.hpp"

#include <utility>

namespace fewopt {

Matrix Matrix::without_column(size_t j) const {
  Matrix out(rows_, cols_ - 1, data_.empty() ? 256 : data_[0].prec());
  for (size_t i = 0; i < rows_; ++i) {
    size_t cc = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (c == j) continue;
      out.at(i, cc++) = at(i, c);
    }
  }
  return out;
}

Matrix Matrix::with_prec(mpfr_prec_t prec) const {
  Matrix out(rows_, cols_, prec);
  for (size_t i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i].with_prec(prec);
  return out;
}

Matrix lifted_matrix(const std::vector<Vec>& support, mpfr_prec_t prec) {
  const size_t m = support.size();
  const size_t n = m == 0 ? 0 : support[0].size();
  Matrix out(n + 1, m, prec);
  for (size_t j = 0; j < m; ++j) {
    out.at(0, j) = Real(1, prec);
    for (size_t i = 0; i < n; ++i) out.at(i + 1, j) = support[j][i].with_prec(prec);
  }
  return out;
}

Real hadamard_bound(const Matrix& m) {
  Real bound(64);
  mpfr_set_ui(bound.raw(), 1, MPFR_RNDU);
  for (size_t j = 0; j < m.cols(); ++j) {
    Real s(64);
    for (size_t i = 0; i < m.rows(); ++i) {
      Real sq(64);
      mpfr_mul(sq.raw(), m.at(i, j).raw(), m.at(i, j).raw(), MPFR_RNDU);
      mpfr_add(s.raw(), s.raw(), sq.raw(), MPFR_RNDU);
    }
    mpfr_sqrt(s.raw(), s.raw(), MPFR_RNDU);
    mpfr_mul(bound.raw(), bound.raw(), s.raw(), MPFR_RNDU);
  }
  return bound;
}

namespace {

// In-place LU with full pivoting. Returns the determinant sign flip count
// and leaves U in `a`. Row/column swaps are applied eagerly.
struct LuResult {
  Matrix u;
  int swaps = 0;
  size_t pivots = 0;
};

LuResult lu_full_pivot(Matrix a, const PrecisionBudget& prec) {
  (void)prec;
  const size_t nr = a.rows(), nc = a.cols();
  LuResult res;
  res.swaps = 0;
  size_t r = 0;
  for (size_t step = 0; step < std::min(nr, nc); ++step, ++r) {
    // Locate the largest remaining entry.
    size_t pi = r, pj = r;
    Real best(64);
    for (size_t i = r; i < nr; ++i)
      for (size_t j = r; j < nc; ++j) {
        Real m = abs(a.at(i, j)).with_prec(64);
        if (m > best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best.is_zero()) break;
    if (pi != r) {
      for (size_t j = 0; j < nc; ++j) std::swap(a.at(pi, j), a.at(r, j));
      ++res.swaps;
    }
    if (pj != r) {
      for (size_t i = 0; i < nr; ++i) std::swap(a.at(i, pj), a.at(i, r));
      ++res.swaps;
    }
    for (size_t i = r + 1; i < nr; ++i) {
      Real factor = a.at(i, r) / a.at(r, r);
      for (size_t j = r; j < nc; ++j) {
        a.at(i, j) -= factor * a.at(r, j);
      }
    }
    ++res.pivots;
  }
  res.u = std::move(a);
  return res;
}

}  // namespace

Real determinant(const Matrix& m, const PrecisionBudget& prec) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix must be square");
  const size_t n = m.rows();
  if (n == 0) return Real(1, prec.mantissa);
  LuResult lu = lu_full_pivot(m.with_prec(prec.mantissa), prec);
  if (lu.pivots < n) return Real(0, prec.mantissa);
  Real det(1, prec.mantissa);
  for (size_t i = 0; i < n; ++i) det *= lu.u.at(i, i);
  if (lu.swaps % 2) det = -det;
  return det;
}

int rank(const Matrix& m, const PrecisionBudget& prec) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Scale-relative zero test: a pivot counts only if it clears the
  // threshold against the largest entry of the original matrix.
  Matrix a = m.with_prec(prec.mantissa);
  Real scale(64);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      Real e = abs(a.at(i, j)).with_prec(64);
      if (e > scale) scale = e;
    }
  if (scale.is_zero()) return 0;
  const Real thr = Real::pow2(-prec.mantissa / 2, 64) * scale;
  int rk = 0;
  size_t r = 0;
  const size_t nr = a.rows(), nc = a.cols();
  for (size_t step = 0; step < std::min(nr, nc); ++step, ++r) {
    size_t pi = r, pj = r;
    Real best(64);
    for (size_t i = r; i < nr; ++i)
      for (size_t j = r; j < nc; ++j) {
        Real mag = abs(a.at(i, j)).with_prec(64);
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (best <= thr) break;
    if (pi != r)
      for (size_t j = 0; j < nc; ++j) std::swap(a.at(pi, j), a.at(r, j));
    if (pj != r)
      for (size_t i = 0; i < nr; ++i) std::swap(a.at(i, pj), a.at(i, r));
    for (size_t i = r + 1; i < nr; ++i) {
      Real factor = a.at(i, r) / a.at(r, r);
      for (size_t j = r; j < nc; ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    ++rk;
  }
  return rk;
}

Vec solve(const Matrix& m, const Vec& rhs, const PrecisionBudget& prec) {
  if (m.rows() != m.cols()) throw DimensionMismatch("solve: matrix must be square");
  const size_t n = m.rows();
  if (rhs.size() != n) throw DimensionMismatch("solve: rhs size mismatch");
  // Gaussian elimination with partial pivoting on an augmented matrix.
  Matrix a(n, n + 1, prec.mantissa);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j).with_prec(prec.mantissa);
    a.at(i, n) = rhs[i].with_prec(prec.mantissa);
  }
  for (size_t r = 0; r < n; ++r) {
    size_t pi = r;
    Real best = abs(a.at(r, r)).with_prec(64);
    for (size_t i = r + 1; i < n; ++i) {
      Real mag = abs(a.at(i, r)).with_prec(64);
      if (mag > best) {
        best = mag;
        pi = i;
      }
    }
    if (best.is_zero()) throw SingularMatrix("solve: singular matrix");
    if (pi != r)
      for (size_t j = 0; j <= n; ++j) std::swap(a.at(pi, j), a.at(r, j));
    for (size_t i = r + 1; i < n; ++i) {
      Real factor = a.at(i, r) / a.at(r, r);
      for (size_t j = r; j <= n; ++j) a.at(i, j) -= factor * a.at(r, j);
    }
  }
  Vec x(n, Real(prec.mantissa));
  for (size_t i = n; i-- > 0;) {
    Real s = a.at(i, n);
    for (size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    if (a.at(i, i).is_zero()) throw SingularMatrix("solve: singular matrix");
    x[i] = s / a.at(i, i);
  }
  return x;
}

Real lift_residual(const std::vector<Vec>& support, const Vec& b, mpfr_prec_t prec) {
  Matrix lift = lifted_matrix(support, prec);
  Real worst(64);
  for (size_t i = 0; i < lift.rows(); ++i) {
    Real s(prec);
    for (size_t j = 0; j < lift.cols(); ++j) s += lift.at(i, j) * b[j].with_prec(prec);
    Real m = abs(s).with_prec(64);
    if (m > worst) worst = m;
  }
  return worst;
}

Vec b_vector(const std::vector<Vec>& support, const PrecisionBudget& prec) {
  const size_t m = support.size();
  if (m < 2) throw DimensionMismatch("b_vector: support too small");
  const size_t n = support[0].size();
  if (m != n + 2) throw DimensionMismatch("b_vector: support must have n+2 points");

  PrecisionBudget p = prec;
  while (true) {
    Matrix lift = lifted_matrix(support, p.mantissa);
    Vec b;
    b.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      Real d = determinant(lift.without_column(i), p);
      // Alternating sign with 1-based column indexing.
      if ((i + 1) % 2) d = -d;
      b.push_back(std::move(d));
    }
    Real scale = hadamard_bound(lift);
    Real tol = Real::pow2(-p.mantissa / 2, 64) * scale;
    if (lift_residual(support, b, p.mantissa) <= tol || p.at_cap()) {
      for (auto& bi : b) bi = bi.with_prec(prec.mantissa);
      return b;
    }
    p = p.escalated();
  }
}

}  // namespace fewopt
