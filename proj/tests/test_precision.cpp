#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fewopt/precision.hpp"
#include "util.hpp"

using namespace fewopt;
using namespace testutil;

TEST_CASE("log_linear_form: hand values") {
  PrecisionBudget prec;
  auto z = log_linear_form({{rd(1), rd(1)}}, prec);
  CHECK(abs(z.value) <= z.error_radius);

  auto two = log_linear_form({{rd(2), Real::euler_e(256)}}, prec);
  CHECK(close(two.value, rd(2), 1e-60));
  CHECK(two.error_radius < rd(1e-60));

  // ln 2 + ln 3 - ln 6 = 0 exactly; the interval must cover 0.
  auto c = log_linear_form({{rd(1), rd(2)}, {rd(1), rd(3)}, {rd(-1), rd(6)}}, prec);
  CHECK(abs(c.value) <= c.error_radius);
  CHECK(c.error_radius < rd(1e-60));

  CHECK_THROWS_AS(log_linear_form({{rd(1), rd(-2)}}, prec), NonpositiveBase);
}

TEST_CASE("error_radius soundness on random forms") {
  // Recomputing at 4x mantissa lands inside the original interval.
  std::mt19937_64 rng(101);
  PrecisionBudget lo;
  lo.mantissa = 128;
  PrecisionBudget hi;
  hi.mantissa = 512;
  for (int it = 0; it < 10000; ++it) {
    size_t k = 1 + rng() % 4;
    std::vector<std::pair<Real, Real>> terms;
    for (size_t i = 0; i < k; ++i)
      terms.emplace_back(rd(uniform(rng, -20, 20), 128),
                         rd(std::exp(uniform(rng, -10, 10)), 128));
    auto a = log_linear_form(terms, lo);
    auto b = log_linear_form(terms, hi);
    CHECK(abs(b.value - a.value) <= a.error_radius);
  }
}

TEST_CASE("certified_sign: escalation and zero-at-cap") {
  PrecisionBudget prec;
  auto noop = [](mpfr_prec_t) -> CertifiedValue { return {Real(1, 64), rd(0.1, 64)}; };
  CHECK(certified_sign({Real(1, 64), rd(0.1, 64)}, noop, prec) == CertifiedSign::Positive);
  CHECK(certified_sign({Real(-1, 64), rd(0.1, 64)}, noop, prec) == CertifiedSign::Negative);

  // A true zero is never certified nonzero.
  auto zero_form = [](mpfr_prec_t p) {
    PrecisionBudget b;
    b.mantissa = p;
    return log_linear_form({{Real(1, p), Real(2, p)},
                            {Real(1, p), Real(3, p)},
                            {Real(-1, p), Real(6, p)}},
                           b);
  };
  CHECK(certified_sign(zero_form(64), zero_form, prec) == CertifiedSign::ZeroAtCap);

  // ln 2 + ln 3 - ln(6 - 2^-94) ~ 2^-97: cancellation hides the sign at 64
  // bits, so certification must escalate, and then lands on Positive.
  Real base = Real(6, 256) - Real::pow2(-94, 256);
  auto tiny_form = [&](mpfr_prec_t p) {
    PrecisionBudget b;
    b.mantissa = p;
    return log_linear_form(
        {{Real(1, p), Real(2, p)}, {Real(1, p), Real(3, p)}, {Real(-1, p), base}}, b);
  };
  PrecisionBudget start;
  start.mantissa = 64;
  auto v64 = tiny_form(64);
  CHECK_FALSE(v64.excludes_zero());
  CHECK(certified_sign(v64, tiny_form, start) == CertifiedSign::Positive);
}

TEST_CASE("power: hand values") {
  PrecisionBudget prec;
  CHECK(close(power(rd(7.25), rd(0), prec).value, rd(1), 1e-60));
  CHECK(close(power(rd(4), rd(0.5), prec).value, rd(2), 1e-60));
  CHECK(close(power(rd(2.25), rd(1), prec).value, rd(2.25), 1e-60));
  CHECK_THROWS_AS(power(rd(-1), rd(2), prec), NonpositiveBase);
}

TEST_CASE("power round-trips through the reciprocal exponent") {
  PrecisionBudget prec;
  std::mt19937_64 rng(103);
  for (int it = 0; it < 200; ++it) {
    Real x = rd(std::exp(uniform(rng, -5, 5)));
    Real a = rd(uniform(rng, 0.1, 10));
    auto y = power(x, a, prec);
    auto back = power(y.value, Real(1, 256) / a, prec);
    Real tol = back.error_radius + y.error_radius * rd(100) + abs(x) * Real::pow2(-120, 64);
    CHECK(abs(back.value - x) <= tol);
  }
}

TEST_CASE("power soundness: 4x mantissa stays in the interval") {
  std::mt19937_64 rng(107);
  PrecisionBudget lo;
  lo.mantissa = 128;
  PrecisionBudget hi;
  hi.mantissa = 512;
  for (int it = 0; it < 2000; ++it) {
    Real b = rd(std::exp(uniform(rng, -8, 8)), 128);
    Real e = rd(uniform(rng, -10, 10), 128);
    auto a = power(b, e, lo);
    auto r = power(b, e, hi);
    CHECK(abs(r.value - a.value) <= a.error_radius);
  }
}
