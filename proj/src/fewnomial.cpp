#include "fewopt/fewnomial.hpp"

#include <algorithm>
#include <cmath>

namespace fewopt {

std::optional<size_t> Fewnomial::origin_index() const {
  for (size_t i = 0; i < terms.size(); ++i) {
    bool zero = true;
    for (const auto& e : terms[i].exponent)
      if (!e.is_zero()) {
        zero = false;
        break;
      }
    if (zero) return i;
  }
  return std::nullopt;
}

Fewnomial make_fewnomial(size_t n, std::vector<Term> terms) {
  if (n < 1) throw DimensionMismatch("dimension must be >= 1");
  if (terms.empty()) throw InvalidInput("term list must be nonempty");
  for (const auto& t : terms) {
    if (t.coefficient.is_zero()) throw ZeroCoefficient("zero coefficient");
    if (!t.coefficient.is_finite()) throw InvalidInput("non-finite coefficient");
    if (t.exponent.size() != n) throw DimensionMismatch("exponent vector length != n");
    for (const auto& e : t.exponent)
      if (!e.is_finite()) throw InvalidInput("non-finite exponent");
  }
  // Exact pairwise distinctness on the stored scalars.
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j) {
      bool same = true;
      for (size_t k = 0; k < n; ++k)
        if (terms[i].exponent[k] != terms[j].exponent[k]) {
          same = false;
          break;
        }
      if (same) throw DuplicateExponent("duplicate exponent vector");
    }
  return Fewnomial{n, std::move(terms)};
}

ClassMembership classify(const Fewnomial& f, const PrecisionBudget& prec) {
  ClassMembership out;
  out.has_origin = f.origin_index().has_value();
  const size_t m = f.m();
  if (m == 1) {
    out.support_dim = 0;
  } else {
    Matrix d(f.n, m - 1, prec.mantissa);
    for (size_t j = 1; j < m; ++j)
      for (size_t i = 0; i < f.n; ++i)
        d.at(i, j - 1) = f.terms[j].exponent[i].with_prec(prec.mantissa) -
                         f.terms[0].exponent[i].with_prec(prec.mantissa);
    out.support_dim = rank(d, prec);
  }
  out.honest = (out.support_dim == static_cast<int>(f.n));
  return out;
}

namespace {

// ln max{3, |v|, 1/|v|} for a nonzero value.
Real log_cond_factor(const Real& v, mpfr_prec_t p) {
  Real a = abs(v).with_prec(p);
  Real inv = Real(1, p) / a;
  Real three(3, p);
  Real best = three;
  if (a > best) best = a;
  if (inv > best) best = inv;
  return log(best);
}

std::optional<long> sparse_size_bits(const Fewnomial& f) {
  long bits = 0;
  for (const auto& t : f.terms) {
    if (!mpfr_integer_p(t.coefficient.raw())) return std::nullopt;
    Real a = abs(t.coefficient);
    mpfr_exp_t e = a.is_zero() ? 0 : mpfr_get_exp(a.raw());
    bits += static_cast<long>(e) + 1;
    for (const auto& ex : t.exponent) {
      if (!mpfr_integer_p(ex.raw())) return std::nullopt;
      Real ae = abs(ex);
      mpfr_exp_t ee = ae.is_zero() ? 0 : mpfr_get_exp(ae.raw());
      bits += static_cast<long>(ee) + 1;
    }
  }
  return bits;
}

}  // namespace

ConditionReport log_condition_number(const Fewnomial& f, const PrecisionBudget& prec,
                                     std::optional<size_t> subset_budget) {
  const size_t m = f.m();
  const size_t n = f.n;
  // Number of (n+1)-subsets; only m <= n+2 (at most n+2 subsets) by default.
  size_t subsets = 0;
  {
    // C(m, n+1), which is 0 when m < n+1.
    if (m >= n + 1) {
      size_t k = m - (n + 1);  // C(m, n+1) == C(m, m-n-1)
      double c = 1;
      for (size_t i = 1; i <= k; ++i) c = c * static_cast<double>(m - k + i) / i;
      subsets = static_cast<size_t>(std::llround(c));
    }
  }
  size_t budget = subset_budget.value_or(m <= n + 2 ? subsets : 0);
  if (subsets > budget)
    throw SubsetBudgetExceeded("condition number needs " + std::to_string(subsets) +
                               " lifted minors; pass an explicit subset budget");

  const mpfr_prec_t p = prec.mantissa;
  ConditionReport rep;
  rep.log_condition = Real(0, p);
  for (const auto& t : f.terms) rep.log_condition += log_cond_factor(t.coefficient, p);

  if (m >= n + 1) {
    Matrix lift = lifted_matrix(f.support(), p);
    // Enumerate (n+1)-subsets of columns.
    std::vector<size_t> idx(n + 1);
    for (size_t i = 0; i <= n; ++i) idx[i] = i;
    while (true) {
      Matrix sub(n + 1, n + 1, p);
      for (size_t c = 0; c <= n; ++c)
        for (size_t r = 0; r <= n; ++r) sub.at(r, c) = lift.at(r, idx[c]);
      Real d = abs(determinant(sub, prec));
      // Zero test: below threshold the minor contributes max* = 3.
      Real thr = Real::pow2(-p + 8, 64) * hadamard_bound(sub);
      if (d <= thr) {
        rep.minors.emplace(idx, Real(0, p));
        rep.log_condition += log(Real(3, p));
      } else {
        rep.minors.emplace(idx, d);
        rep.log_condition += log_cond_factor(d, p);
      }
      // Next combination.
      size_t i = n + 1;
      while (i-- > 0) {
        if (idx[i] != i + m - (n + 1)) {
          ++idx[i];
          for (size_t k = i + 1; k <= n; ++k) idx[k] = idx[k - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX || (idx[0] > m - (n + 1))) break;
    }
  }
  rep.sparse_size_bits = sparse_size_bits(f);
  return rep;
}

Real evaluate(const Fewnomial& f, const Vec& x, const PrecisionBudget& prec) {
  if (x.size() != f.n) throw DimensionMismatch("evaluate: point dimension mismatch");
  for (const auto& xi : x)
    if (xi.sign() <= 0) throw NonpositiveCoordinate("evaluate: point must be positive");

  PrecisionBudget p = prec;
  while (true) {
    const mpfr_prec_t w = p.mantissa + 32;  // guard bits
    Vec lx;
    lx.reserve(f.n);
    for (const auto& xi : x) lx.push_back(log(xi.with_prec(w)));
    Real sum(0, w);
    Real mag(0, 64);
    for (const auto& t : f.terms) {
      Real dot(0, w);
      for (size_t i = 0; i < f.n; ++i) dot += t.exponent[i].with_prec(w) * lx[i];
      Real term = t.coefficient.with_prec(w) * exp(dot);
      mag += abs(term).with_prec(64);
      sum += term;
    }
    // Cancellation check: if the sum lost more than half the mantissa
    // against the term magnitudes, escalate.
    if (p.at_cap() || mag.is_zero() || sum.is_zero() ||
        abs(sum).with_prec(64) > mag * Real::pow2(-p.mantissa / 2, 64)) {
      return sum.with_prec(prec.mantissa);
    }
    p = p.escalated();
  }
}

double evaluate_d(const Fewnomial& f, const std::vector<double>& log_x) {
  double sum = 0;
  for (const auto& t : f.terms) {
    double dot = 0;
    for (size_t i = 0; i < f.n; ++i) dot += t.exponent[i].to_double() * log_x[i];
    sum += t.coefficient.to_double() * std::exp(dot);
  }
  return sum;
}

}  // namespace fewopt
