// Shared helpers for the test binaries.
#ifndef FEWOPT_TESTS_UTIL_HPP
#define FEWOPT_TESTS_UTIL_HPP

#include <random>
#include <utility>
#include <vector>

#include "fewopt/fewnomial.hpp"

namespace testutil {

using fewopt::Fewnomial;
using fewopt::Real;
using fewopt::Term;
using fewopt::Vec;

inline Real rd(double x, mpfr_prec_t p = 256) { return Real::from_double(x, p); }

// Fewnomial from plain doubles: {coefficient, exponent vector} per term.
inline Fewnomial fn(size_t n, const std::vector<std::pair<double, std::vector<double>>>& spec) {
  std::vector<Term> ts;
  ts.reserve(spec.size());
  for (const auto& [c, e] : spec) {
    Term t;
    t.coefficient = rd(c);
    for (double x : e) t.exponent.push_back(rd(x));
    ts.push_back(std::move(t));
  }
  return fewopt::make_fewnomial(n, std::move(ts));
}

inline Vec pt(const std::vector<double>& xs) {
  Vec v;
  v.reserve(xs.size());
  for (double x : xs) v.push_back(rd(x));
  return v;
}

// |a - b| <= tol * max(1, |b|).
inline bool close(const Real& a, const Real& b, double tol) {
  Real scale = abs(b);
  if (scale < Real(1, 64)) scale = Real(1, 64);
  return abs(a - b) <= rd(tol) * scale;
}

inline bool close_d(double a, double b, double tol) {
  double scale = std::max(1.0, std::abs(b));
  return std::abs(a - b) <= tol * scale;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace testutil

#endif
