#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fewopt/discriminant.hpp"
#include "fewopt/transform.hpp"
#include "util.hpp"

using namespace fewopt;
using namespace testutil;

namespace {

std::vector<Vec> support(const std::vector<std::vector<double>>& pts) {
  std::vector<Vec> s;
  for (const auto& p : pts) s.push_back(pt(p));
  return s;
}

// Brute-force convex hull membership: is point p in the convex hull of the
// n+1 affinely independent points S? Solve the lifted barycentric system
// and check all weights nonnegative.
bool in_hull(const std::vector<Vec>& s, const Vec& p, const PrecisionBudget& prec) {
  const size_t k = s.size();
  Matrix m(k, k, 256);
  Vec rhs(k, Real(0, 256));
  rhs[0] = Real(1, 256);
  for (size_t j = 0; j < k; ++j) {
    m.at(0, j) = Real(1, 256);
    for (size_t i = 0; i + 1 < k; ++i) m.at(i + 1, j) = s[j][i];
  }
  for (size_t i = 0; i + 1 < k; ++i) rhs[i + 1] = p[i];
  Vec w;
  try {
    w = solve(m, rhs, prec);
  } catch (const SingularMatrix&) {
    return false;  // affinely dependent complement; treated as vertex
  }
  for (const auto& wi : w)
    if (wi < -Real::pow2(-60, 64)) return false;
  return true;
}

std::vector<Vec> random_circuit(std::mt19937_64& rng, size_t n) {
  std::vector<Vec> s;
  for (size_t i = 0; i < n + 2; ++i) {
    Vec p;
    for (size_t k = 0; k < n; ++k) p.push_back(rd(uniform(rng, -5, 5)));
    s.push_back(std::move(p));
  }
  return s;
}

}  // namespace

TEST_CASE("classify_circuit: hand supports") {
  auto c1 = classify_circuit(support({{0}, {1}, {2}}));
  CHECK(c1.kind == CircuitKind::NondegenerateCircuit);
  CHECK(c1.b[0] == Real(1, 256));
  CHECK(c1.b[1] == Real(-2, 256));
  CHECK(c1.b[2] == Real(1, 256));
  REQUIRE(c1.interior_index.has_value());
  CHECK(*c1.interior_index == 1);  // the middle point
  CHECK(c1.sub_circuit_indices == std::vector<size_t>{0, 1, 2});

  auto c2 = classify_circuit(support({{0, 0}, {1, 0}, {1, 1}, {1, 2}}));
  CHECK(c2.kind == CircuitKind::DegenerateCircuit);
  CHECK(c2.b[0].is_zero());
  CHECK(c2.sub_circuit_indices == std::vector<size_t>{1, 2, 3});
  REQUIRE(c2.interior_index.has_value());
  CHECK(*c2.interior_index == 2);  // the point (1,1)
  CHECK(c2.b[2].sign() < 0);

  auto c3 = classify_circuit(support({{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
  CHECK(c3.kind == CircuitKind::NotCircuit);

  auto c4 = classify_circuit(support({{0, 0}, {1, 0}, {0, 1}, {0.3, 0.4}}));
  CHECK(c4.kind == CircuitKind::NondegenerateCircuit);
}

TEST_CASE("interior index matches a brute-force hull oracle") {
  PrecisionBudget prec;
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 25) {
    size_t n = 1 + rng() % 3;
    auto s = random_circuit(rng, n);
    auto cd = classify_circuit(s);
    if (cd.kind != CircuitKind::NondegenerateCircuit) continue;
    ++tested;
    for (size_t i = 0; i < s.size(); ++i) {
      std::vector<Vec> others;
      for (size_t k = 0; k < s.size(); ++k)
        if (k != i) others.push_back(s[k]);
      bool inside = in_hull(others, s[i], prec);
      // A point lies in the hull of the rest iff it is the unique
      // minority-sign coordinate; balanced splits have no such point.
      bool claimed = cd.interior_index.has_value() && i == *cd.interior_index;
      CHECK(inside == claimed);
    }
  }
}

TEST_CASE("classify_circuit invariant under monomial maps") {
  PrecisionBudget prec;
  std::mt19937_64 rng(67);
  auto s = support({{0, 0}, {2, 0}, {0, 2}, {1, 1.5}});
  auto base = classify_circuit(s);
  for (int it = 0; it < 5; ++it) {
    Matrix u(2, 2, 256);
    do {
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) u.at(i, j) = rd(uniform(rng, -3, 3));
    } while (!make_monomial_map(u, prec).invertible);
    std::vector<Vec> mapped;
    for (const auto& a : s) {
      Vec e(2, Real(0, 256));
      for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) e[j] += a[k] * u.at(k, j);
      mapped.push_back(std::move(e));
    }
    auto cd = classify_circuit(mapped);
    CHECK(cd.kind == base.kind);
    CHECK(cd.sub_circuit_indices == base.sub_circuit_indices);
    CHECK(cd.interior_index == base.interior_index);
  }
}

TEST_CASE("discriminant_log_form: hand values") {
  Vec b = {rd(-1), rd(2), rd(-1)};
  std::vector<size_t> all = {0, 1, 2};

  auto z = discriminant_log_form({rd(1), rd(-2), rd(1)}, b, all, -1);
  CHECK(abs(z.value) <= z.error_radius);

  // All c_i = b_i with sigma = +1: every factor is 1.
  Vec bp = {rd(1), rd(-2), rd(1)};
  auto z2 = discriminant_log_form(bp, bp, all, 1);
  CHECK(abs(z2.value) <= z2.error_radius);

  // Parabola with vertex above the axis: the form is 2 ln(3/2) > 0.
  auto v = discriminant_log_form({rd(-1), rd(3), rd(-1)}, bp, all, -1);
  Real expect = rd(2) * log(rd(1.5));
  CHECK(close(v.value, expect, 1e-60));

  CHECK_THROWS_AS(discriminant_log_form({rd(1), rd(3), rd(1)}, bp, all, -1),
                  SignPreconditionViolated);
}

TEST_CASE("discriminant_membership: double roots and rejections") {
  auto s = support({{0}, {1}, {2}});
  auto r1 = discriminant_membership({rd(1), rd(-2), rd(1)}, s);
  CHECK(r1.holds);
  REQUIRE(r1.point.has_value());
  CHECK(close(r1.point->x[0], rd(1), 1e-50));

  // (x^a - t)^2 with a = 1.5, t = 3.
  auto s2 = support({{0}, {1.5}, {3}});
  auto r2 = discriminant_membership({rd(9), rd(-6), rd(1)}, s2);
  CHECK(r2.holds);
  Real expect = exp(log(rd(3)) / rd(1.5));
  CHECK(close(r2.point->x[0], expect, 1e-40));

  // 1 + x + x^2 > 0 on the positive axis: sign condition fails.
  auto r3 = discriminant_membership({rd(1), rd(1), rd(1)}, s);
  CHECK_FALSE(r3.holds);
}

TEST_CASE("constructed degenerate family: value and gradient vanish") {
  // c_i = -b_i e^{-a_i . zeta} puts the degenerate point exactly at zeta.
  PrecisionBudget prec;
  std::mt19937_64 rng(71);
  int tested = 0;
  while (tested < 15) {
    size_t n = 1 + rng() % 3;
    auto s = random_circuit(rng, n);
    auto cd = classify_circuit(s);
    if (cd.kind != CircuitKind::NondegenerateCircuit) continue;
    ++tested;
    Vec zeta;
    for (size_t k = 0; k < n; ++k) zeta.push_back(rd(uniform(rng, -1, 1)));
    Vec c;
    for (size_t i = 0; i < s.size(); ++i) {
      Real dot(0, 256);
      for (size_t k = 0; k < n; ++k) dot += s[i][k] * zeta[k];
      c.push_back(-cd.b[i] * exp(-dot));
    }
    auto r = discriminant_membership(c, s, prec);
    CHECK(r.holds);
    REQUIRE(r.point.has_value());
    // g and all partials at the recovered point, against term magnitudes.
    Real g(0, 256), mag(0, 64);
    Vec grad(n, Real(0, 256));
    for (size_t i = 0; i < s.size(); ++i) {
      Real dot(0, 256);
      for (size_t k = 0; k < n; ++k) dot += s[i][k] * r.point->zeta[k];
      Real term = c[i] * exp(dot);
      mag += abs(term).with_prec(64);
      g += term;
      for (size_t k = 0; k < n; ++k) grad[k] += term * s[i][k];
    }
    Real thr = mag * Real::pow2(-64, 64);  // 2^{-mantissa/4} at 256 bits
    CHECK(abs(g) <= thr);
    for (size_t k = 0; k < n; ++k) CHECK(abs(grad[k]) <= thr * rd(10));
  }
}

TEST_CASE("perturbation breaks membership monotonically") {
  auto s = support({{0}, {1.5}, {3}});
  Vec c = {rd(9), rd(-6), rd(1)};
  auto base = classify_circuit(s);
  std::vector<size_t> all = {0, 1, 2};
  Real prev(0, 64);
  for (double rel : {1e-3, 1e-2, 1e-1}) {
    Vec cp = c;
    cp[1] = c[1] * rd(1.0 + rel);
    auto r = discriminant_membership(cp, s);
    CHECK_FALSE(r.holds);
    auto lf = discriminant_log_form(cp, base.b, all, 1);
    CHECK(abs(lf.value) > prev);
    prev = abs(lf.value).with_prec(64);
  }
}
