#include "fewopt/real.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace fewopt {

Real Real::from_decimal(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (s.empty()) throw ParseError("empty numeric literal", 0);
  char* end = nullptr;
  int rc = mpfr_strtofr(r.raw(), s.c_str(), &end, 10, MPFR_RNDN);
  (void)rc;
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("malformed decimal literal '" + s + "'",
                     static_cast<size_t>(end - s.c_str()));
  }
  return r;
}

std::string Real::to_decimal(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", static_cast<int>(digits), v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

std::string Real::to_decimal() const {
  // ceil(p * log10(2)) + 2 digits round-trips the mantissa.
  size_t digits = static_cast<size_t>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
  return to_decimal(digits);
}

}  // namespace fewopt
