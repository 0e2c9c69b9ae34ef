#include "fewopt/univariate.hpp"

#include <algorithm>
#include <cmath>

namespace fewopt {

namespace {

struct UniTerm {
  Real c;
  Real a;
};

std::vector<UniTerm> sorted_terms(const Fewnomial& f) {
  if (f.n != 1) throw NotInClass("univariate operation on multivariate input");
  std::vector<UniTerm> ts;
  ts.reserve(f.m());
  for (const auto& t : f.terms) ts.push_back({t.coefficient, t.exponent[0]});
  std::sort(ts.begin(), ts.end(), [](const UniTerm& x, const UniTerm& y) { return x.a < y.a; });
  return ts;
}

Real eval_terms(const std::vector<UniTerm>& ts, const Real& x, mpfr_prec_t w) {
  Real lx = log(x.with_prec(w));
  Real s(0, w);
  for (const auto& t : ts) s += t.c.with_prec(w) * exp(t.a.with_prec(w) * lx);
  return s;
}

Real eval_terms_mag(const std::vector<UniTerm>& ts, const Real& x, mpfr_prec_t w) {
  Real lx = log(x.with_prec(w));
  Real s(0, w);
  for (const auto& t : ts) s += abs(t.c.with_prec(w) * exp(t.a.with_prec(w) * lx));
  return s;
}

}  // namespace

std::pair<Real, Real> root_bound(const Fewnomial& f, const PrecisionBudget& prec) {
  auto ts = sorted_terms(f);
  const size_t m = ts.size();
  if (m < 2) throw NotInClass("root bound needs at least two terms");
  const mpfr_prec_t w = prec.mantissa;
  Real mreal(static_cast<long>(m), w);

  auto dominance_log = [&](bool top) {
    // log of the bound beyond which the extreme term dominates the rest.
    const UniTerm& ext = top ? ts.back() : ts.front();
    Real best(0, w);
    for (const auto& t : ts) {
      if (&t == &ext) continue;
      Real gap = top ? (ext.a.with_prec(w) - t.a.with_prec(w))
                     : (t.a.with_prec(w) - ext.a.with_prec(w));
      Real l = log(mreal * abs(t.c.with_prec(w)) / abs(ext.c.with_prec(w))) / gap;
      if (!top) l = -l;
      if ((top && l > best) || (!top && l < best)) best = l;
    }
    return best;
  };

  Real hi = exp(dominance_log(true)) * Real(2, w);
  Real lo = exp(dominance_log(false)) / Real(2, w);
  return {lo, hi};
}

RootReport trinomial_roots(const Fewnomial& f, double eps, const PrecisionBudget& prec) {
  auto ts = sorted_terms(f);
  if (ts.size() != 3) throw NotInClass("trinomial_roots needs exactly three terms");
  if (eps <= 0) throw InvalidInput("eps must be positive");
  const mpfr_prec_t w0 = prec.mantissa;

  // Normalize: divide by x^{a_min} (positive roots unchanged).
  Real a0 = ts[0].a;
  for (auto& t : ts) t.a = t.a.with_prec(w0) - a0.with_prec(w0);
  const Real& c1 = ts[0].c;
  const Real& c2 = ts[1].c;
  const Real& c3 = ts[2].c;
  const Real alpha = ts[1].a, beta = ts[2].a;

  RootReport rep;

  // Working precision for the requested relative error.
  const mpfr_prec_t bits =
      std::max<mpfr_prec_t>(w0, static_cast<mpfr_prec_t>(std::ceil(-std::log2(eps))) + 48);
  PrecisionBudget work = prec;
  work.mantissa = std::min(prec.cap, bits);

  auto fval = [&](const Real& x) { return eval_terms(ts, x, work.mantissa); };
  auto fderiv = [&](const Real& x) {
    const mpfr_prec_t w = work.mantissa;
    Real lx = log(x.with_prec(w));
    return c2.with_prec(w) * alpha.with_prec(w) * exp((alpha.with_prec(w) - Real(1, w)) * lx) +
           c3.with_prec(w) * beta.with_prec(w) * exp((beta.with_prec(w) - Real(1, w)) * lx);
  };

  auto [lo, hi] = root_bound(f, work);

  // Bisection-seeded Newton on a sign-change bracket [a, b]. The bracket is
  // the certificate: every accepted point updates it, and a bisection step
  // is forced whenever an iteration fails to halve the width, so the
  // reported relative error (final width / a) is always sound.
  auto refine = [&](Real a, Real b, int fa_sign) {
    const mpfr_prec_t w = work.mantissa;
    a = a.with_prec(w);
    b = b.with_prec(w);
    Real rel_target = Real::from_double(eps, 64) / Real(4, 64);
    Real x = (a + b) / Real(2, w);
    Real fx(w);
    auto classify = [&](const Real& pt) {
      fx = fval(pt);
      if (fx.is_zero()) return 0;
      if (fx.sign() == fa_sign)
        a = pt;
      else
        b = pt;
      return fx.sign();
    };
    for (int it = 0; it < 20000; ++it) {
      Real old_width = b - a;
      if (classify(x) == 0) return std::pair<Real, Real>(x, Real::pow2(-w + 8, 64));
      Real d = fderiv(x);
      Real nx(w);
      bool ok = !d.is_zero();
      if (ok) {
        nx = x - fx / d;
        ok = nx > a && nx < b;
      }
      if (!ok) nx = (a + b) / Real(2, w);
      // Guarantee geometric shrink: halve the bracket if Newton didn't.
      if ((b - a) * Real(2, w) > old_width) {
        Real mid = (a + b) / Real(2, w);
        if (classify(mid) == 0) return std::pair<Real, Real>(mid, Real::pow2(-w + 8, 64));
        if (!(nx > a && nx < b)) nx = (a + b) / Real(2, w);
      }
      x = nx;
      Real bw = ((b - a) / a).with_prec(64);
      if (bw < rel_target) {
        Real err = bw;
        if (err < Real::pow2(-w + 8, 64)) err = Real::pow2(-w + 8, 64);
        return std::pair<Real, Real>((a + b) / Real(2, w), err);
      }
    }
    return std::pair<Real, Real>(x, ((b - a) / a).with_prec(64));
  };

  auto push_simple = [&](Real a, Real b, int fa_sign) {
    auto [x, err] = refine(std::move(a), std::move(b), fa_sign);
    rep.roots.push_back(Root{std::move(x), 1, std::move(err)});
    ++rep.count;
  };

  const int s1 = c1.sign(), s2 = c2.sign(), s3 = c3.sign();

  if (s2 == s3) {
    // Monotone tail: at most one sign change between 0+ and +infinity.
    if (s1 != s3) push_simple(lo, hi, s1);
    return rep;
  }

  // Critical point of the binomial derivative.
  const mpfr_prec_t w = work.mantissa;
  Real ratio = -(c2.with_prec(w) * alpha.with_prec(w)) / (c3.with_prec(w) * beta.with_prec(w));
  Real xc = exp(log(ratio) / (beta.with_prec(w) - alpha.with_prec(w)));

  // Certified sign of f at the critical point, escalating on cancellation;
  // still ambiguous at the cap means a double root at xc.
  int vsign = 0;
  {
    PrecisionBudget q = work;
    while (true) {
      Real v = eval_terms(ts, xc, q.mantissa * 2 + 32);
      Real mag = eval_terms_mag(ts, xc, 64);
      Real thr = mag * Real::pow2(-q.mantissa / 2, 64);
      if (abs(v).with_prec(64) > thr) {
        vsign = v.sign();
        break;
      }
      if (q.at_cap()) break;  // vsign stays 0: double root
      q = q.escalated();
      xc = [&] {
        Real r = -(c2.with_prec(q.mantissa) * alpha.with_prec(q.mantissa)) /
                 (c3.with_prec(q.mantissa) * beta.with_prec(q.mantissa));
        return exp(log(r) / (beta.with_prec(q.mantissa) - alpha.with_prec(q.mantissa)));
      }();
    }
  }

  if (vsign == 0) {
    rep.count = 1;
    rep.roots.push_back(Root{xc.with_prec(w), 2, Real::pow2(-prec.cap / 2, 64)});
    return rep;
  }

  // s3 > 0: minimum at xc, f(0+)=c1, f(inf)=+inf.
  // s3 < 0: maximum at xc, f(inf)=-inf.
  if (s1 == s3) {
    if (vsign != s1) {
      // Extremum crosses: two simple roots straddling xc.
      push_simple(lo, xc, s1);
      push_simple(xc, hi, vsign);
    }
    // else no positive roots
  } else {
    // One crossing on the far side of the extremum.
    if (vsign == s1) {
      push_simple(xc, hi, vsign);
    } else {
      push_simple(lo, xc, s1);
    }
  }
  return rep;
}

}  // namespace fewopt
