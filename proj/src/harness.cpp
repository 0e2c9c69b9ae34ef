#include "fewopt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace fewopt {

namespace {
constexpr double kLn10 = 2.302585092994045684;
}

GridReport grid_supremum_detail(const Fewnomial& f, double lo10, double hi10, int points,
                                int rounds) {
  if (points < 3) throw InvalidInput("grid_supremum: points_per_axis must be >= 3");
  if (hi10 <= lo10) throw InvalidInput("grid_supremum: empty log range");
  const size_t n = f.n;

  std::vector<double> lo(n, lo10 * kLn10), hi(n, hi10 * kLn10);
  GridReport rep;
  rep.value = -std::numeric_limits<double>::infinity();
  rep.arg_log.assign(n, 0.0);

  std::vector<double> logx(n, 0.0);
  std::vector<int> idx(n, 0);
  const int sweeps = 1 + std::max(0, rounds);
  double step_max = 0;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    std::vector<double> step(n);
    step_max = 0;
    for (size_t d = 0; d < n; ++d) {
      step[d] = (hi[d] - lo[d]) / (points - 1);
      step_max = std::max(step_max, step[d]);
    }
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (size_t d = 0; d < n; ++d) logx[d] = lo[d] + idx[d] * step[d];
      double v = evaluate_d(f, logx);
      if (v > rep.value) {
        rep.value = v;
        rep.arg_log = logx;
      }
      size_t d = 0;
      while (d < n && ++idx[d] == points) idx[d++] = 0;
      if (d == n) break;
    }
    // Zoom one cell around the argmax for the next sweep.
    for (size_t d = 0; d < n; ++d) {
      lo[d] = rep.arg_log[d] - step[d];
      hi[d] = rep.arg_log[d] + step[d];
    }
  }
  rep.resolution = step_max;
  return rep;
}

double grid_supremum(const Fewnomial& f, double lo10, double hi10, int points, int rounds) {
  return grid_supremum_detail(f, lo10, hi10, points, rounds).value;
}

namespace {

using Key = std::vector<long>;
using Poly = std::map<Key, Real>;

void poly_add(Poly& p, const Key& k, const Real& c) {
  auto it = p.find(k);
  if (it == p.end()) {
    p.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key k(ka.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      poly_add(out, k, ca * cb);
    }
  return out;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HardnessInstance make_hardness_instance(const Fewnomial& f, double delta,
                                        std::optional<long> cap_m, GadgetMode mode) {
  if (delta <= 0 || delta >= 1) throw InvalidInput("delta must lie in (0,1)");
  const size_t n = f.n;

  // Source must be an honest-to-goodness quartic polynomial: nonnegative
  // integer exponents with total degree at most 4.
  Poly src;
  for (const auto& t : f.terms) {
    Key k(n, 0);
    long total = 0;
    for (size_t i = 0; i < n; ++i) {
      const Real& e = t.exponent[i];
      if (!mpfr_integer_p(e.raw()) || e.sign() < 0)
        throw DegreeNotFour("gadget needs nonnegative integer exponents");
      k[i] = e.to_long();
      total += k[i];
    }
    if (total > 4) throw DegreeNotFour("gadget needs total degree at most 4");
    poly_add(src, k, t.coefficient);
  }

  // Embed: identity, or slack substitution x_i -> y_i - y_{n+i}.
  const size_t xv = mode == GadgetMode::RealSlack ? 2 * n : n;
  Poly embedded;
  if (mode == GadgetMode::RealSlack) {
    for (const auto& [k, c] : src) {
      Poly term;
      term.emplace(Key(xv, 0), c);
      for (size_t i = 0; i < n; ++i) {
        if (k[i] == 0) continue;
        Poly factor;  // (y_i - y_{n+i})^{k[i]}
        for (long j = 0; j <= k[i]; ++j) {
          Key kk(xv, 0);
          kk[i] = j;
          kk[n + i] = k[i] - j;
          Real coef(binom(k[i], j), 64);
          if ((k[i] - j) % 2) coef = -coef;
          factor.emplace(std::move(kk), std::move(coef));
        }
        term = poly_mul(term, factor);
      }
      for (const auto& [kk, cc] : term) poly_add(embedded, kk, cc);
    }
  } else {
    embedded = src;
  }

  Poly squared = poly_mul(embedded, embedded);

  // M = ceil(C(n+4,4)^{2/delta}), computed in logs to survive tiny delta.
  HardnessInstance out;
  out.mode = mode;
  out.source = f;
  const double logc = std::log(static_cast<double>(binom(static_cast<long>(n) + 4, 4)));
  const double logm = (2.0 / delta) * logc;
  const double desk_limit = 100000.0;
  if (logm >= std::log(desk_limit)) {
    if (!cap_m) throw InvalidInput("M exceeds desk scale; pass cap_M");
    out.M = *cap_m;
    out.clamped = true;
  } else {
    long m_formula = static_cast<long>(std::ceil(std::exp(logm) * (1.0 - 1e-12)));
    if (m_formula < 1) m_formula = 1;
    out.M = m_formula;
    if (cap_m && m_formula > *cap_m) {
      out.M = *cap_m;
      out.clamped = true;
    }
  }
  if (out.M < 1) throw InvalidInput("cap_M must be >= 1");

  // F = squared + t_M over xv + M variables.
  const size_t vtot = xv + static_cast<size_t>(out.M);
  const long zpow = mode == GadgetMode::RealSquared ? 2 * (out.M + 1) : out.M + 1;
  const long zlin = mode == GadgetMode::RealSquared ? 2 : 1;
  Poly total;
  for (const auto& [k, c] : squared) {
    Key kk(vtot, 0);
    std::copy(k.begin(), k.end(), kk.begin());
    poly_add(total, kk, c);
  }
  poly_add(total, Key(vtot, 0), Real(1, 64));
  for (long i = 0; i < out.M; ++i) {
    Key kk(vtot, 0);
    kk[xv + i] = zpow;
    poly_add(total, kk, Real(1, 64));
  }
  {
    Key kk(vtot, 0);
    for (long i = 0; i < out.M; ++i) kk[xv + i] = zlin;
    poly_add(total, kk, Real(-(out.M + 1), 64));
  }

  std::vector<Term> terms;
  terms.reserve(total.size());
  for (const auto& [k, c] : total) {
    ExponentVector ev;
    ev.reserve(vtot);
    for (long e : k) ev.push_back(Real(e, 64));
    terms.push_back(Term{c, std::move(ev)});
  }
  out.F = make_fewnomial(vtot, std::move(terms));
  return out;
}

namespace {

SupCase classify_case(const Fewnomial& f) {
  return sup_circuit(f, 1e-6, {}).algorithm_case;
}

bool case_matches(SupCase got, CaseTarget want) {
  switch (want) {
    case CaseTarget::Cond1: return got == SupCase::VertexUnbounded;
    case CaseTarget::Cond2: return got == SupCase::DiscriminantUnbounded;
    case CaseTarget::Cond3: return got == SupCase::ClosedForm;
    case CaseTarget::Fallthrough: return got == SupCase::Fallthrough;
  }
  return false;
}

}  // namespace

Fewnomial random_circuit_instance(size_t n, std::uint64_t seed,
                                  std::optional<CaseTarget> case_target) {
  if (n < 1) throw InvalidInput("random_circuit_instance: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto coord = [&] { return -5.0 + 10.0 * unit(rng); };
  auto coeff = [&] {
    double c = 0;
    do c = -10.0 + 20.0 * unit(rng);
    while (std::fabs(c) < 0.1);
    return c;
  };
  const mpfr_prec_t w = 256;

  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<Term> terms;
    try {
      if (case_target == CaseTarget::Cond2) {
        if (n < 2) throw NotInClass("no degenerate sub-circuit avoids the origin in one variable");
        // Collinear 3-point sub-circuit inside the flat x_1-exponent = 1,
        // which the origin misses; interior coefficient large enough that
        // the power product exceeds 1.
        std::vector<double> v(n - 1), d(n - 1);
        for (auto& e : v) e = -3.0 + 6.0 * unit(rng);
        for (auto& e : d) e = -2.0 + 4.0 * unit(rng);
        auto flat_point = [&](int steps) {
          ExponentVector ev;
          ev.push_back(Real(1, w));
          for (size_t i = 0; i + 1 < n; ++i)
            ev.push_back(Real::from_double(v[i] + steps * d[i], w));
          return ev;
        };
        double ca = -(1.0 + 9.0 * unit(rng));
        double cb = -(1.0 + 9.0 * unit(rng));
        double cm = 2.0 * std::sqrt(ca * cb) * (1.5 + 1.5 * unit(rng));
        terms.push_back(Term{Real::from_double(coeff(), w), ExponentVector(n, Real(0, w))});
        terms.push_back(Term{Real::from_double(ca, w), flat_point(0)});
        terms.push_back(Term{Real::from_double(cm, w), flat_point(1)});
        terms.push_back(Term{Real::from_double(cb, w), flat_point(2)});
        for (size_t extra = 0; extra + 4 < n + 2; ++extra) {
          ExponentVector ev;
          ev.push_back(Real::from_double(2.0 + 2.0 * unit(rng), w));
          for (size_t i = 0; i + 1 < n; ++i) ev.push_back(Real::from_double(coord(), w));
          terms.push_back(Term{Real::from_double(-std::fabs(coeff()), w), std::move(ev)});
        }
      } else {
        terms.push_back(Term{Real::from_double(coeff(), w), ExponentVector(n, Real(0, w))});
        for (size_t i = 0; i < n + 1; ++i) {
          ExponentVector ev;
          for (size_t k = 0; k < n; ++k) ev.push_back(Real::from_double(coord(), w));
          double c = coeff();
          if (case_target == CaseTarget::Cond3 || case_target == CaseTarget::Fallthrough)
            c = -std::fabs(c);
          terms.push_back(Term{Real::from_double(c, w), std::move(ev)});
        }
        if (case_target == CaseTarget::Cond1) {
          size_t pick = 1 + static_cast<size_t>(unit(rng) * static_cast<double>(n + 1));
          pick = std::min(pick, n + 1);
          terms[pick].coefficient = abs(terms[pick].coefficient);
        } else if (case_target == CaseTarget::Cond3) {
          // Flip the sub-circuit's interior coefficient positive.
          std::vector<Vec> support;
          for (const auto& t : terms) support.push_back(t.exponent);
          CircuitData cd = classify_circuit(support);
          if (!cd.interior_index || cd.b[0].is_zero()) continue;
          if (*cd.interior_index != 0)
            terms[*cd.interior_index].coefficient = abs(terms[*cd.interior_index].coefficient);
        }
      }

      Fewnomial f = make_fewnomial(n, std::move(terms));
      if (!classify(f).honest) continue;
      if (!case_target) return f;
      if (case_matches(classify_case(f), *case_target)) return f;
    } catch (const Error&) {
      continue;
    }
  }
  throw ExhaustedAttempts("random_circuit_instance: no instance hit the requested case");
}

}  // namespace fewopt
