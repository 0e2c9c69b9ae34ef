#include "fewopt/precision.hpp"

namespace fewopt {

Real ulp_radius(const Real& value, mpfr_prec_t p, unsigned long k) {
  Real r(64);
  mpfr_abs(r.raw(), value.raw(), MPFR_RNDU);
  mpfr_mul_ui(r.raw(), r.raw(), k, MPFR_RNDU);
  mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(p), MPFR_RNDU);
  return r;
}

CertifiedValue log_linear_form(const std::vector<std::pair<Real, Real>>& terms,
                               const PrecisionBudget& prec) {
  const mpfr_prec_t p = prec.mantissa;
  Real sum(p);
  Real mag(64);  // running sum of |term| magnitudes, rounded up
  for (const auto& [weight, base] : terms) {
    if (base.sign() <= 0) throw NonpositiveBase("log_linear_form: base must be positive");
    Real t(p);
    mpfr_log(t.raw(), base.raw(), MPFR_RNDN);
    mpfr_mul(t.raw(), t.raw(), weight.raw(), MPFR_RNDN);
    Real at(64);
    mpfr_abs(at.raw(), t.raw(), MPFR_RNDU);
    mpfr_add(mag.raw(), mag.raw(), at.raw(), MPFR_RNDU);
    mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
  }
  // Each term: one ln rounding + one mul rounding; plus one add per term.
  Real radius(64);
  mpfr_mul_ui(radius.raw(), mag.raw(), 4 * (terms.size() + 2), MPFR_RNDU);
  mpfr_mul_2si(radius.raw(), radius.raw(), -static_cast<long>(p), MPFR_RNDU);
  return CertifiedValue{std::move(sum), std::move(radius)};
}

CertifiedSign certified_sign(CertifiedValue v,
                             const std::function<CertifiedValue(mpfr_prec_t)>& escalate,
                             const PrecisionBudget& prec) {
  mpfr_prec_t p = prec.mantissa;
  while (true) {
    if (v.excludes_zero()) {
      return v.value.sign() > 0 ? CertifiedSign::Positive : CertifiedSign::Negative;
    }
    if (p >= prec.cap) return CertifiedSign::ZeroAtCap;
    p = std::min(prec.cap, p * 2);
    v = escalate(p);
  }
}

CertifiedValue power(const Real& base, const Real& exponent, const PrecisionBudget& prec) {
  if (base.sign() <= 0) throw NonpositiveBase("power: base must be positive");
  const mpfr_prec_t p = prec.mantissa;
  Real lnb(p);
  mpfr_log(lnb.raw(), base.raw(), MPFR_RNDN);
  Real t(p);
  mpfr_mul(t.raw(), lnb.raw(), exponent.raw(), MPFR_RNDN);
  Real r(p);
  mpfr_exp(r.raw(), t.raw(), MPFR_RNDN);
  // Relative error of exp(t) given |dt| absolute error in t is ~ |dt|;
  // dt itself carries the ln and mul roundings scaled by |t|.
  Real tmag(64);
  mpfr_abs(tmag.raw(), t.raw(), MPFR_RNDU);
  mpfr_add_ui(tmag.raw(), tmag.raw(), 2, MPFR_RNDU);
  Real radius(64);
  mpfr_abs(radius.raw(), r.raw(), MPFR_RNDU);
  mpfr_mul(radius.raw(), radius.raw(), tmag.raw(), MPFR_RNDU);
  mpfr_mul_ui(radius.raw(), radius.raw(), 8, MPFR_RNDU);
  mpfr_mul_2si(radius.raw(), radius.raw(), -static_cast<long>(p), MPFR_RNDU);
  return CertifiedValue{std::move(r), std::move(radius)};
}

}  // namespace fewopt
