#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fewopt/fewnomial.hpp"
#include "util.hpp"

using namespace fewopt;
using namespace testutil;

TEST_CASE("make_fewnomial validates its input") {
  CHECK(fn(1, {{-1, {0}}, {1, {1}}}).m() == 2);  // minimal valid 2-nomial
  CHECK_THROWS_AS(fn(1, {{0, {1}}}), ZeroCoefficient);
  CHECK_THROWS_AS(fn(2, {{1, {0, 0}}, {1, {0, 0}}}), DuplicateExponent);
  CHECK_THROWS_AS(fn(2, {{1, {0}}}), DimensionMismatch);
  CHECK_THROWS_AS(make_fewnomial(2, {}), InvalidInput);
  // Exact distinctness: a last-bit difference is a distinct term.
  Term a{rd(1.0), {Real(1, 256)}};
  Term b{rd(-1.0), {Real(1, 256) + Real::pow2(-255, 256)}};
  CHECK(make_fewnomial(1, {a, b}).m() == 2);
}

TEST_CASE("classify: affine dimension, honesty, origin") {
  auto c1 = classify(fn(2, {{-1, {0, 0}}, {1, {1, 0}}, {-1, {0, 1}}}));
  CHECK(c1.support_dim == 2);
  CHECK(c1.honest);
  CHECK(c1.has_origin);

  auto c2 = classify(fn(2, {{1, {0, 0}}, {1, {1, 0}}, {1, {2, 0}}}));
  CHECK(c2.support_dim == 1);
  CHECK_FALSE(c2.honest);

  // A 4-variate trinomial whose two non-constant exponents are parallel:
  // b = 99 e^2 * a, so the support spans a line.
  Real e2 = Real::euler_e(256) * Real::euler_e(256);
  std::vector<Term> ts;
  ts.push_back(Term{rd(-1.0), {rd(0), rd(0), rd(0), rd(0)}});
  ts.push_back(Term{sqrt(rd(7.0)), {rd(2), rd(1), rd(7), rd(3)}});
  Real s = Real(99, 256) * e2;
  ts.push_back(Term{rd(2.0), {s * rd(2), s * rd(1), s * rd(7), s * rd(3)}});
  auto c3 = classify(make_fewnomial(4, std::move(ts)));
  CHECK(c3.support_dim == 1);
  CHECK_FALSE(c3.honest);
  CHECK(c3.has_origin);
}

TEST_CASE("classify: support_dim <= min(n, m-1) on random inputs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    size_t n = 1 + rng() % 4;
    size_t m = 1 + rng() % (n + 2);
    std::vector<Term> ts;
    for (size_t i = 0; i < m; ++i) {
      Term t;
      t.coefficient = rd(uniform(rng, 0.5, 5.0));
      for (size_t k = 0; k < n; ++k) t.exponent.push_back(rd(uniform(rng, -5, 5)));
      ts.push_back(std::move(t));
    }
    Fewnomial f;
    try {
      f = make_fewnomial(n, std::move(ts));
    } catch (const DuplicateExponent&) {
      continue;
    }
    auto c = classify(f);
    CHECK(c.support_dim <= static_cast<int>(std::min(n, m - 1)));
  }
}

TEST_CASE("log_condition_number: hand values") {
  Real ln3 = log(Real(3, 256));

  auto r1 = log_condition_number(fn(1, {{-1, {0}}, {1, {1}}}));
  CHECK(close(r1.log_condition, rd(3) * ln3, 1e-60));
  CHECK(r1.minors.size() == 1);

  // All coefficient magnitudes 3, single minor 3: (m + 1) ln 3.
  auto r2 = log_condition_number(fn(1, {{3, {0}}, {-3, {3}}}));
  CHECK(close(r2.log_condition, rd(3) * ln3, 1e-60));

  // -1 + 3x - x^2: minors |1|, |2|, |1|; every factor is 3.
  auto r3 = log_condition_number(fn(1, {{-1, {0}}, {3, {1}}, {-1, {2}}}));
  CHECK(r3.minors.size() == 3);
  CHECK(r3.minors.at({0, 1}) == Real(1, 256));
  CHECK(r3.minors.at({0, 2}) == Real(2, 256));
  CHECK(r3.minors.at({1, 2}) == Real(1, 256));
  CHECK(close(r3.log_condition, rd(6) * ln3, 1e-60));
  CHECK(r3.sparse_size_bits.has_value());
}

TEST_CASE("log_condition_number: permutation invariance and floor") {
  Real ln3 = log(Real(3, 256));
  auto a = log_condition_number(fn(2, {{-1, {0, 0}}, {7, {1, 2}}, {-2, {3, 1}}, {5, {0, 4}}}));
  auto b = log_condition_number(fn(2, {{5, {0, 4}}, {-2, {3, 1}}, {-1, {0, 0}}, {7, {1, 2}}}));
  CHECK(close(a.log_condition, b.log_condition, 1e-50));
  // Every factor of C(f) is >= 3.
  size_t m = 4, subsets = a.minors.size();
  CHECK(a.log_condition >= rd(static_cast<double>(m + subsets) - 1e-9) * ln3);
}

TEST_CASE("log_condition_number: subset budget") {
  // m = n + 3 needs an explicit budget.
  auto f = fn(1, {{1, {0}}, {1, {1}}, {1, {2}}, {1, {3}}});
  CHECK_THROWS_AS(log_condition_number(f), SubsetBudgetExceeded);
  auto r = log_condition_number(f, {}, 6);
  CHECK(r.minors.size() == 6);  // C(4,2)
}

TEST_CASE("log_condition_number: integer size bound on random integer inputs") {
  // log C(f) <= kappa * n * S(f) with a generous fixed kappa.
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    size_t n = 1 + rng() % 4;
    size_t m = n + 1 + rng() % 2;
    std::vector<Term> ts;
    for (size_t i = 0; i < m; ++i) {
      Term t;
      long c = 0;
      while (c == 0) c = static_cast<long>(rng() % 131072) - 65536;
      t.coefficient = Real(c, 256);
      for (size_t k = 0; k < n; ++k)
        t.exponent.push_back(Real(static_cast<long>(rng() % 21) - 10, 256));
      ts.push_back(std::move(t));
    }
    Fewnomial f;
    try {
      f = make_fewnomial(n, std::move(ts));
    } catch (const DuplicateExponent&) {
      continue;
    }
    auto r = log_condition_number(f);
    REQUIRE(r.sparse_size_bits.has_value());
    double bound = 64.0 * static_cast<double>(n) * static_cast<double>(*r.sparse_size_bits);
    CHECK(r.log_condition.to_double() <= bound);
  }
}

TEST_CASE("sparse size bits only for integer data") {
  auto r = log_condition_number(fn(1, {{-1, {0}}, {1, {1}}}));
  CHECK(r.sparse_size_bits.has_value());
  std::vector<Term> ts;
  ts.push_back(Term{rd(1.0), {rd(0)}});
  ts.push_back(Term{rd(1.0), {sqrt(rd(2.0))}});
  auto r2 = log_condition_number(make_fewnomial(1, std::move(ts)));
  CHECK_FALSE(r2.sparse_size_bits.has_value());
}

TEST_CASE("evaluate: exact and irrational points") {
  PrecisionBudget prec;
  CHECK(evaluate(fn(1, {{-1, {0}}, {1, {1}}}), pt({1}), prec).is_zero());
  CHECK(evaluate(fn(2, {{1, {0, 0}}, {1, {1, 0}}, {1, {0, 1}}}), pt({2, 3}), prec) ==
        Real(6, 256));

  std::vector<Term> ts;
  ts.push_back(Term{rd(1.0), {sqrt(rd(2.0))}});
  Real v = evaluate(make_fewnomial(1, std::move(ts)), pt({2}), prec);
  CHECK(close(v, rd(2.66514414269022518), 1e-15));

  CHECK_THROWS_AS(evaluate(fn(1, {{1, {1}}}), pt({0}), prec), NonpositiveCoordinate);
}

TEST_CASE("evaluate agrees with exact integer-arithmetic computation") {
  // Integer exponents, rational points: the reference value is computed by
  // repeated exact multiplication, no logs involved.
  PrecisionBudget prec;
  std::mt19937_64 rng(23);
  for (int it = 0; it < 30; ++it) {
    size_t n = 1 + rng() % 3;
    std::vector<Term> ts;
    std::vector<std::vector<long>> exps;
    size_t m = 2 + rng() % 3;
    for (size_t i = 0; i < m; ++i) {
      Term t;
      t.coefficient = Real(static_cast<long>(rng() % 19) - 9, 256);
      if (t.coefficient.is_zero()) t.coefficient = Real(1, 256);
      std::vector<long> e;
      for (size_t k = 0; k < n; ++k) e.push_back(static_cast<long>(rng() % 7));
      for (size_t k = 0; k < n; ++k) t.exponent.push_back(Real(e[k], 256));
      exps.push_back(e);
      ts.push_back(std::move(t));
    }
    Fewnomial f;
    try {
      f = make_fewnomial(n, std::move(ts));
    } catch (const DuplicateExponent&) {
      continue;
    }
    Vec x;
    std::vector<long> num;
    for (size_t k = 0; k < n; ++k) {
      num.push_back(1 + static_cast<long>(rng() % 5));
      x.push_back(Real(num.back(), 512) / Real(2, 512));
    }
    Real expect(0, 512);
    for (size_t i = 0; i < f.m(); ++i) {
      Real term = f.terms[i].coefficient.with_prec(512);
      for (size_t k = 0; k < n; ++k)
        for (long rep = 0; rep < exps[i][k]; ++rep) term *= x[k];
      expect += term;
    }
    Real got = evaluate(f, x, prec);
    if (expect.is_zero())
      CHECK(abs(got) <= Real::pow2(-100, 64));
    else
      CHECK(abs(got - expect) <= Real::pow2(-100, 64) * abs(expect));
  }
}

TEST_CASE("evaluate_d matches evaluate on tame points") {
  auto f = fn(2, {{-1, {0, 0}}, {2, {1.5, -0.5}}, {0.25, {-2, 3}}});
  PrecisionBudget prec;
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::vector<double> lx = {uniform(rng, -2, 2), uniform(rng, -2, 2)};
    Vec x = {exp(rd(lx[0])), exp(rd(lx[1]))};
    CHECK(close_d(evaluate_d(f, lx), evaluate(f, x, prec).to_double(), 1e-12));
  }
}
