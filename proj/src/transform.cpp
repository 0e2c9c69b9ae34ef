#include "fewopt/transform.hpp"

#include <algorithm>
#include <cmath>

namespace fewopt {

MonomialMap make_monomial_map(Matrix u, const PrecisionBudget& prec) {
  if (u.rows() != u.cols()) throw DimensionMismatch("monomial map must be square");
  Real d = determinant(u, prec);
  Real thr = Real::pow2(-prec.mantissa + 8, 64) * hadamard_bound(u);
  bool inv = abs(d) > thr;
  return MonomialMap{std::move(u), inv};
}

Vec apply_map_point(const MonomialMap& u, const Vec& x, const PrecisionBudget& prec) {
  const size_t n = u.matrix.rows();
  if (x.size() != n) throw DimensionMismatch("point dimension mismatch");
  const mpfr_prec_t w = prec.mantissa;
  Vec lx;
  lx.reserve(n);
  for (const auto& xi : x) {
    if (xi.sign() <= 0) throw NonpositiveCoordinate("monomial map needs positive point");
    lx.push_back(log(xi.with_prec(w)));
  }
  Vec out;
  out.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    Real dot(0, w);
    for (size_t i = 0; i < n; ++i) dot += u.matrix.at(j, i).with_prec(w) * lx[i];
    out.push_back(exp(dot));
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b, const PrecisionBudget& prec) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul shape mismatch");
  Matrix out(a.rows(), b.cols(), prec.mantissa);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      Real s(0, prec.mantissa);
      for (size_t k = 0; k < a.cols(); ++k)
        s += a.at(i, k).with_prec(prec.mantissa) * b.at(k, j).with_prec(prec.mantissa);
      out.at(i, j) = std::move(s);
    }
  return out;
}

Matrix inverse(const Matrix& m, const PrecisionBudget& prec) {
  const size_t n = m.rows();
  Matrix out(n, n, prec.mantissa);
  for (size_t j = 0; j < n; ++j) {
    Vec e(n, Real(0, prec.mantissa));
    e[j] = Real(1, prec.mantissa);
    Vec col = solve(m, e, prec);
    for (size_t i = 0; i < n; ++i) out.at(i, j) = col[i];
  }
  return out;
}

Fewnomial apply_monomial_map(const Fewnomial& f, const MonomialMap& u,
                             const PrecisionBudget& prec) {
  if (!u.invertible) throw SingularMap("monomial map is singular");
  if (u.matrix.rows() != f.n) throw DimensionMismatch("map dimension mismatch");
  // Working precision raised by ceil(log2 n) + guard bits: the transformed
  // exponents lose at worst a factor-n Hadamard scale.
  const mpfr_prec_t w =
      prec.mantissa + static_cast<mpfr_prec_t>(std::ceil(std::log2(std::max<size_t>(2, f.n)))) + 16;
  std::vector<Term> terms;
  terms.reserve(f.m());
  for (const auto& t : f.terms) {
    ExponentVector e(f.n, Real(0, w));
    for (size_t j = 0; j < f.n; ++j) {
      Real s(0, w);
      for (size_t k = 0; k < f.n; ++k)
        s += t.exponent[k].with_prec(w) * u.matrix.at(k, j).with_prec(w);
      e[j] = std::move(s);
    }
    terms.push_back(Term{t.coefficient, std::move(e)});
  }
  return make_fewnomial(f.n, std::move(terms));
}

CanonicalSimplexForm canonicalize_simplex(const Fewnomial& f, const PrecisionBudget& prec) {
  auto origin = f.origin_index();
  auto cls = classify(f, prec);
  if (!origin || !cls.honest || f.m() != f.n + 1)
    throw NotInClass("canonical simplex form needs an honest (n+1)-nomial with constant term");

  CanonicalSimplexForm out;
  out.c = f.terms[*origin].coefficient;

  // Non-origin terms, positive coefficients first.
  std::vector<size_t> pos, neg;
  for (size_t i = 0; i < f.m(); ++i) {
    if (i == *origin) continue;
    (f.terms[i].coefficient.sign() > 0 ? pos : neg).push_back(i);
  }
  out.ell = static_cast<int>(pos.size());
  out.permutation = pos;
  out.permutation.insert(out.permutation.end(), neg.begin(), neg.end());

  Matrix b(f.n, f.n, prec.mantissa);
  out.scaling.reserve(f.n);
  for (size_t r = 0; r < out.permutation.size(); ++r) {
    const Term& t = f.terms[out.permutation[r]];
    for (size_t j = 0; j < f.n; ++j) b.at(r, j) = t.exponent[j].with_prec(prec.mantissa);
    out.scaling.push_back(abs(t.coefficient));
  }
  out.transform = make_monomial_map(std::move(b), prec);
  return out;
}

}  // namespace fewopt
