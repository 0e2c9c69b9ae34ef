#ifndef FEWOPT_PRECISION_HPP
#define FEWOPT_PRECISION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "fewopt/real.hpp"

namespace fewopt {

// Governs every approximate computation: the working mantissa width, the
// escalation cap, and the caller's relative-precision target.
struct PrecisionBudget {
  mpfr_prec_t mantissa = 256;
  mpfr_prec_t cap = 8192;
  double target_eps = 1e-9;

  PrecisionBudget escalated() const {
    PrecisionBudget b = *this;
    b.mantissa = std::min(cap, mantissa * 2);
    return b;
  }
  bool at_cap() const { return mantissa >= cap; }
  void validate() const {
    if (mantissa < 64 || mantissa > cap)
      throw InvalidInput("precision budget requires 64 <= mantissa <= cap");
  }
};

// A value together with a rigorous absolute error radius. Sign claims
// downstream require 0 to lie outside [value - radius, value + radius].
struct CertifiedValue {
  Real value;
  Real error_radius;  // >= 0, kept at a short mantissa, rounded up

  bool excludes_zero() const {
    return abs(value) > error_radius;
  }
  int certified_sign_or_zero() const {
    if (!excludes_zero()) return 0;
    return value.sign();
  }
};

enum class CertifiedSign { Negative, ZeroAtCap, Positive };

// value = sum of weight_i * ln(base_i), with a rigorous radius accounting
// for the correctly-rounded ln, multiply, and summation steps.
CertifiedValue log_linear_form(const std::vector<std::pair<Real, Real>>& terms,
                               const PrecisionBudget& prec);

// Doubles the mantissa (via the recomputation callback) until the interval
// excludes zero or the cap is reached.
CertifiedSign certified_sign(CertifiedValue v,
                             const std::function<CertifiedValue(mpfr_prec_t)>& escalate,
                             const PrecisionBudget& prec);

// base^exponent = exp(exponent * ln base), certified relative error
// <= 2^{-mantissa/2}.
CertifiedValue power(const Real& base, const Real& exponent, const PrecisionBudget& prec);

// Upper bound on |value| * k * 2^{-p}, held at a 64-bit mantissa.
Real ulp_radius(const Real& value, mpfr_prec_t p, unsigned long k);

}  // namespace fewopt

#endif
