#ifndef FEWOPT_REAL_HPP
#define FEWOPT_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "fewopt/errors.hpp"

namespace fewopt {

// Arbitrary-precision binary floating point value (MPFR-backed, RAII).
// Every value carries its own mantissa width; binary operations round to
// the wider of the two operand widths unless an explicit width is given.
// Comparisons are exact on the stored values.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Parses a plain decimal literal (no expression grammar; see parse.hpp).
  static Real from_decimal(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real with_prec(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string with enough digits to reconstruct the stored value.
  std::string to_decimal() const;
  std::string to_decimal(size_t digits) const;

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }

  static mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
  }

#define FEWOPT_BINOP(op, fn)                                 \
  friend Real operator op(const Real& a, const Real& b) {   \
    Real r(join(a, b));                                      \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
    return r;                                                \
  }
  FEWOPT_BINOP(+, mpfr_add)
  FEWOPT_BINOP(-, mpfr_sub)
  FEWOPT_BINOP(*, mpfr_mul)
  FEWOPT_BINOP(/, mpfr_div)
#undef FEWOPT_BINOP

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    bump(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    bump(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    bump(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    bump(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    if (a.sign() <= 0) throw NonpositiveBase("log of nonpositive value");
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  // 2^e at the given precision (exact when representable).
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real euler_e(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, 1, MPFR_RNDN);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  void bump(const Real& o) {
    if (o.prec() > prec()) {
      mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    }
  }
  mpfr_t v_;
};

}  // namespace fewopt

#endif
