#include "fewopt/supremum.hpp"

#include <algorithm>
#include <cmath>

#include "fewopt/univariate.hpp"

namespace fewopt {

namespace {

Real dot(const Vec& a, const Vec& b, mpfr_prec_t w) {
  Real s(0, w);
  for (size_t i = 0; i < a.size(); ++i) s += a[i].with_prec(w) * b[i].with_prec(w);
  return s;
}

// Greedy modified Gram-Schmidt row selection, up to `want` rows whose
// residual against the chosen span stays above the relative threshold.
std::vector<size_t> select_independent_rows(const std::vector<Vec>& rows, size_t want,
                                            mpfr_prec_t w) {
  std::vector<Vec> basis;
  std::vector<size_t> sel;
  const Real rel = Real::pow2(-w / 2, 64);
  for (size_t r = 0; r < rows.size() && sel.size() < want; ++r) {
    Vec v;
    v.reserve(rows[r].size());
    for (const auto& e : rows[r]) v.push_back(e.with_prec(w));
    Real orig = dot(v, v, w);
    if (orig.is_zero()) continue;
    for (const auto& u : basis) {
      Real coef = dot(v, u, w) / dot(u, u, w);
      for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] - coef * u[k];
    }
    if (dot(v, v, w) > rel * orig) {
      basis.push_back(std::move(v));
      sel.push_back(r);
    }
  }
  return sel;
}

// Minimum-norm solution of the consistent system rows * zeta = rhs through
// the Gram matrix of an independent row subset.
Vec min_norm_solve(const std::vector<Vec>& rows, const Vec& rhs,
                   const std::vector<size_t>& sel, size_t n, const PrecisionBudget& prec) {
  const mpfr_prec_t w = prec.mantissa;
  const size_t d = sel.size();
  Matrix g(d, d, w);
  Vec r(d, Real(0, w));
  for (size_t i = 0; i < d; ++i) {
    r[i] = rhs[sel[i]].with_prec(w);
    for (size_t j = 0; j < d; ++j) g.at(i, j) = dot(rows[sel[i]], rows[sel[j]], w);
  }
  Vec u = solve(g, r, prec);
  Vec zeta(n, Real(0, w));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < n; ++k) zeta[k] += u[i] * rows[sel[i]][k].with_prec(w);
  return zeta;
}

Real eval_on_curve(const Fewnomial& f, const Vec& base, const Vec& dir, long t,
                   const PrecisionBudget& prec) {
  const mpfr_prec_t w = prec.mantissa;
  Real lt = log(Real(t, w));
  Vec x;
  x.reserve(base.size());
  for (size_t k = 0; k < base.size(); ++k)
    x.push_back(exp(log(base[k].with_prec(w)) + dir[k].with_prec(w) * lt));
  return evaluate(f, x, prec);
}

// Packages (base, dir) as a witness, doubling the direction until the
// sampled values f(base * 10^dir) < f(base * 100^dir) < f(base * 1000^dir)
// actually increase (lower-order terms can mask the growth at small t).
UnboundedWitness checked_witness(const Fewnomial& f, Vec base, Vec dir,
                                 const PrecisionBudget& prec) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Real f10 = eval_on_curve(f, base, dir, 10, prec);
    Real f100 = eval_on_curve(f, base, dir, 100, prec);
    Real f1000 = eval_on_curve(f, base, dir, 1000, prec);
    if (f10 < f100 && f100 < f1000) return UnboundedWitness{std::move(dir), std::move(base)};
    for (auto& dk : dir) dk = dk * Real(2, dk.prec());
  }
  throw PrecisionExhausted("could not verify an unbounded growth direction");
}

// A direction d in the normal cone of the hull vertex a_v with
// (a_i - a_v).d <= -1 for every other support point. Targets are chosen
// consistent with the one affine dependence (the b-vector), then the
// overdetermined-but-consistent system is solved via normal equations.
Vec normal_cone_direction(const std::vector<Vec>& support, const Vec& b, size_t v,
                          const PrecisionBudget& prec) {
  const mpfr_prec_t w = prec.mantissa;
  const size_t m = support.size();
  const size_t n = support[0].size();
  const int sv = b[v].sign();

  Vec targets(m, Real(0, w));  // entry v unused
  if (sv != 0) {
    Real num(0, w), den(0, w);
    for (size_t i = 0; i < m; ++i) {
      if (i == v) continue;
      if (b[i].sign() == sv) num += b[i].with_prec(w);
      if (b[i].sign() == -sv) den += b[i].with_prec(w);
    }
    Real gamma = num / den;
    for (size_t i = 0; i < m; ++i)
      targets[i] = b[i].sign() == -sv ? gamma : Real(-1, w);
  } else {
    for (auto& t : targets) t = Real(-1, w);
  }

  std::vector<Vec> rows;
  Vec rhs;
  rows.reserve(m - 1);
  for (size_t i = 0; i < m; ++i) {
    if (i == v) continue;
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k)
      row[k] = support[i][k].with_prec(w) - support[v][k].with_prec(w);
    rows.push_back(std::move(row));
    rhs.push_back(targets[i]);
  }

  Matrix g(n, n, w);
  Vec gr(n, Real(0, w));
  for (size_t a = 0; a < n; ++a) {
    for (size_t c = 0; c < n; ++c) {
      Real s(0, w);
      for (const auto& row : rows) s += row[a] * row[c];
      g.at(a, c) = std::move(s);
    }
    for (size_t r = 0; r < rows.size(); ++r) gr[a] += rows[r][a] * rhs[r];
  }
  return solve(g, gr, prec);
}

// Log coordinates of the point balancing the sub-circuit terms against the
// dependence: e^{(a_i - a_ref).zeta} = b_i c_ref / (b_ref c_i), solved in
// minimum norm over the affine span of the sub-circuit.
Vec span_point(const std::vector<Vec>& support, const Vec& c, const Vec& b,
               const std::vector<size_t>& indices, const PrecisionBudget& prec) {
  const mpfr_prec_t w = prec.mantissa;
  const size_t n = support[0].size();
  const size_t ref = indices[0];
  std::vector<Vec> rows;
  Vec rhs;
  for (size_t t = 1; t < indices.size(); ++t) {
    const size_t i = indices[t];
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k)
      row[k] = support[i][k].with_prec(w) - support[ref][k].with_prec(w);
    rows.push_back(std::move(row));
    Real ratio = (b[i].with_prec(w) * c[ref].with_prec(w)) /
                 (b[ref].with_prec(w) * c[i].with_prec(w));
    if (ratio.sign() <= 0)
      throw SignPreconditionViolated("binomial system: ratio b_i c_ref / (b_ref c_i) <= 0");
    rhs.push_back(log(ratio));
  }
  auto sel = select_independent_rows(rows, indices.size() - 2, w);
  if (sel.size() != indices.size() - 2)
    throw SingularMatrix("binomial system: sub-circuit span is rank deficient");
  return min_norm_solve(rows, rhs, sel, n, prec);
}

bool is_origin_point(const Vec& a) {
  for (const auto& e : a)
    if (!e.is_zero()) return false;
  return true;
}

// Closed form lambda* = c_j - sigma b_j P^{-sigma/b_j} with the power
// product value Q = sigma b_j P^{-sigma/b_j} reported separately so callers
// can shift the origin coefficient without re-deriving its sign.
struct LambdaParts {
  CertifiedValue lam;
  Real q;  // lambda* = c_j - q, sign(q) = sign(sigma b_j)
};

LambdaParts lambda_star_parts(const Vec& c, const Vec& b, size_t j, int sigma,
                              const std::vector<size_t>& indices, double eps,
                              const PrecisionBudget& prec) {
  if (c.size() != b.size()) throw DimensionMismatch("lambda*: c and b size mismatch");
  if (eps <= 0) throw InvalidInput("lambda*: eps must be positive");
  std::vector<size_t> others;
  others.reserve(indices.size() - 1);
  bool found = false;
  for (size_t i : indices) {
    if (i == j) {
      found = true;
      continue;
    }
    others.push_back(i);
  }
  if (!found) throw InvalidInput("lambda*: j must belong to the sub-circuit");

  const Real eps_r = Real::from_double(eps, 64);
  PrecisionBudget p = prec;
  while (true) {
    const mpfr_prec_t w = p.mantissa;
    CertifiedValue lnp = discriminant_log_form(c, b, others, sigma, p);
    Real coef = Real(-sigma, w) / b[j].with_prec(w);
    Real t = coef * lnp.value.with_prec(w);
    Real q = Real(sigma, w) * b[j].with_prec(w) * exp(t);
    Real val = c[j].with_prec(w) - q;

    Real r_t = abs(coef).with_prec(64) * lnp.error_radius + ulp_radius(t, w, 4);
    Real radius = abs(q).with_prec(64) * (r_t + Real::pow2(-w + 4, 64)) + ulp_radius(val, w, 4);

    bool ok = radius <= eps_r * abs(val).with_prec(64) ||
              (abs(val).with_prec(64) <= radius && radius <= eps_r);
    if (ok || p.at_cap())
      return LambdaParts{CertifiedValue{std::move(val), std::move(radius)}, std::move(q)};
    p = p.escalated();
  }
}

Real relative_radius(const CertifiedValue& v) {
  Real scale = abs(v.value).with_prec(64);
  if (scale < Real(1, 64)) scale = Real(1, 64);
  return (v.error_radius / scale).with_prec(64);
}

// Witness for the sub-circuit log-form case (origin outside B): the
// balanced point of B shifted by the sub-circuit's own supremum gives a
// strictly positive partial sum, and the direction that holds every B term
// at weight 1 while freezing the rest makes f(t) = const + t * h > const.
UnboundedWitness cond2_witness(const Fewnomial& f, const std::vector<Vec>& support,
                               const Vec& c, const Vec& b,
                               const std::vector<size_t>& sub, size_t jp,
                               const PrecisionBudget& prec) {
  const mpfr_prec_t w = prec.mantissa;
  const size_t n = f.n;

  size_t ref = sub[0];
  for (size_t i : sub)
    if (i != jp) {
      ref = i;
      break;
    }

  LambdaParts sl = lambda_star_parts(c, b, ref, -1, sub, 1e-10, prec);
  if (sl.lam.value.sign() <= 0)
    throw PrecisionExhausted("log-form certificate inconsistent with sub-circuit supremum");

  Vec shifted = c;
  shifted[ref] = sl.q;  // c_ref - lambda~, computed in closed form

  std::vector<size_t> ordered;
  ordered.push_back(ref);
  for (size_t i : sub)
    if (i != ref) ordered.push_back(i);
  Vec zeta = span_point(support, shifted, b, ordered, prec);

  Vec base;
  base.reserve(n);
  for (const auto& z : zeta) base.push_back(exp(z.with_prec(w)));

  // Growth direction: a_i . dir = 1 on B, 0 on the remaining non-origin
  // points (the origin contributes nothing either way).
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<Vec> b_rows;
  for (size_t i : sub) {
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k) row[k] = support[i][k].with_prec(w);
    b_rows.push_back(std::move(row));
  }
  auto sel = select_independent_rows(b_rows, sub.size() - 1, w);
  for (size_t s : sel) {
    rows.push_back(b_rows[s]);
    rhs.push_back(Real(1, w));
  }
  for (size_t i = 0; i < support.size(); ++i) {
    if (std::find(sub.begin(), sub.end(), i) != sub.end()) continue;
    if (is_origin_point(support[i])) continue;
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k) row[k] = support[i][k].with_prec(w);
    rows.push_back(std::move(row));
    rhs.push_back(Real(0, w));
  }
  if (rows.size() != n) throw SingularMatrix("growth direction: unexpected constraint count");
  Matrix msys(n, n, w);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) msys.at(i, k) = rows[i][k];
  Vec dir = solve(msys, rhs, prec);

  return checked_witness(f, std::move(base), std::move(dir), prec);
}

}  // namespace

SupremumResult sup_simplex(const Fewnomial& f, const PrecisionBudget& prec) {
  auto cls = classify(f, prec);
  if (!cls.honest || !cls.has_origin || f.m() != f.n + 1)
    throw NotInClass("sup_simplex needs an honest (n+1)-nomial with constant term");
  const size_t j = *f.origin_index();
  const mpfr_prec_t w = prec.mantissa;
  const size_t n = f.n;

  std::optional<size_t> pos;
  for (size_t i = 0; i < f.m(); ++i)
    if (i != j && f.terms[i].coefficient.sign() > 0) {
      pos = i;
      break;
    }

  SupremumResult out;
  if (!pos) {
    out.outcome = SupOutcome::ConstantAtBoundary;
    out.algorithm_case = SupCase::SimplexConstant;
    out.boundary_value = f.terms[j].coefficient;
    out.certified_relative_error = Real(0, 64);
    return out;
  }

  // Direction with weight 1 on the positive term and -1 on the others; the
  // non-origin exponents form a basis, so the square system is solvable.
  Matrix msys(n, n, w);
  Vec rhs(n, Real(0, w));
  size_t r = 0;
  for (size_t i = 0; i < f.m(); ++i) {
    if (i == j) continue;
    for (size_t k = 0; k < n; ++k) msys.at(r, k) = f.terms[i].exponent[k].with_prec(w);
    rhs[r] = Real(i == *pos ? 1 : -1, w);
    ++r;
  }
  Vec dir = solve(msys, rhs, prec);
  Vec base(n, Real(1, w));

  out.outcome = SupOutcome::Unbounded;
  out.algorithm_case = SupCase::SimplexUnbounded;
  out.witness = checked_witness(f, std::move(base), std::move(dir), prec);
  out.certified_relative_error = Real(0, 64);
  return out;
}

CertifiedValue solve_lambda_star(const Vec& c, const Vec& b, size_t j, size_t j_prime,
                                 int sigma, const std::vector<size_t>& indices, double eps,
                                 const PrecisionBudget& prec) {
  if (j_prime >= b.size() || b[j_prime].sign() * sigma <= 0)
    throw SignPreconditionViolated("lambda*: sigma must be the sign of b_{j'}");
  return lambda_star_parts(c, b, j, sigma, indices, eps, prec).lam;
}

MaximizerDescription solve_binomial_system(const std::vector<Vec>& support, const Vec& c,
                                           const Vec& b, const std::vector<size_t>& indices,
                                           const PrecisionBudget& prec) {
  if (indices.size() < 3) throw InvalidInput("binomial system: sub-circuit too small");
  const size_t n = support[0].size();
  const size_t d = indices.size() - 2;
  const mpfr_prec_t w = prec.mantissa;

  Vec zeta = span_point(support, c, b, indices, prec);

  MaximizerDescription out;
  out.orbit_dim = static_cast<int>(d);
  out.coords.resize(n);

  if (d == n) {
    for (size_t k = 0; k < n; ++k)
      out.coords[k] = MaximizerCoord{CoordKind::Finite, exp(zeta[k].with_prec(w))};
    return out;
  }

  // Degenerate sub-circuit: the supremum is approached along the direction
  // transverse to the span that sends every term outside B to zero. This
  // needs the origin inside B so the constant term survives the limit.
  bool origin_in = false;
  for (size_t i : indices) origin_in = origin_in || is_origin_point(support[i]);
  if (!origin_in)
    throw InvalidInput("binomial system: boundary limit needs the origin in the sub-circuit");

  std::vector<Vec> diff_rows;
  const size_t ref = indices[0];
  for (size_t t = 1; t < indices.size(); ++t) {
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k)
      row[k] = support[indices[t]][k].with_prec(w) - support[ref][k].with_prec(w);
    diff_rows.push_back(std::move(row));
  }
  auto sel = select_independent_rows(diff_rows, d, w);
  if (sel.size() != d) throw SingularMatrix("binomial system: span rank mismatch");

  std::vector<Vec> rows;
  Vec rhs;
  for (size_t s : sel) {
    rows.push_back(diff_rows[s]);
    rhs.push_back(Real(0, w));
  }
  for (size_t i = 0; i < support.size(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) != indices.end()) continue;
    Vec row(n, Real(0, w));
    for (size_t k = 0; k < n; ++k) row[k] = support[i][k].with_prec(w);
    rows.push_back(std::move(row));
    rhs.push_back(Real(-1, w));
  }
  if (rows.size() != n)
    throw SingularMatrix("binomial system: unexpected transverse constraint count");
  Matrix msys(n, n, w);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) msys.at(i, k) = rows[i][k];
  Vec dir = solve(msys, rhs, prec);

  Real scale(0, 64);
  for (const auto& dk : dir)
    if (abs(dk).with_prec(64) > scale) scale = abs(dk).with_prec(64);
  Real thr = scale * Real::pow2(-w / 2, 64);

  for (size_t k = 0; k < n; ++k) {
    if (abs(dir[k]).with_prec(64) <= thr)
      out.coords[k] = MaximizerCoord{CoordKind::Finite, exp(zeta[k].with_prec(w))};
    else if (dir[k].sign() > 0)
      out.coords[k] = MaximizerCoord{CoordKind::Infinite, Real(0, 64)};
    else
      out.coords[k] = MaximizerCoord{CoordKind::Zero, Real(0, 64)};
  }
  return out;
}

SupremumResult sup_circuit(const Fewnomial& f, double eps, const PrecisionBudget& prec) {
  auto cls = classify(f, prec);
  if (!cls.honest || !cls.has_origin || f.m() != f.n + 2)
    throw NotInClass("sup_circuit needs an honest (n+2)-nomial with constant term");
  if (eps <= 0) throw InvalidInput("sup_circuit: eps must be positive");

  const size_t j = *f.origin_index();
  const auto support = f.support();
  Vec c;
  c.reserve(f.m());
  for (const auto& t : f.terms) c.push_back(t.coefficient);

  CircuitData cd = classify_circuit(support, prec);

  SupremumResult out;
  out.certified_relative_error = Real(0, 64);

  // Step 1: a positive coefficient on a non-origin hull vertex is an
  // unbounded direction. Every point except the sub-circuit interior is a
  // vertex of the hull.
  for (size_t i = 0; i < f.m(); ++i) {
    if (i == j || c[i].sign() <= 0) continue;
    if (cd.interior_index && i == *cd.interior_index) continue;
    Vec dir = normal_cone_direction(support, cd.b, i, prec);
    out.outcome = SupOutcome::Unbounded;
    out.algorithm_case = SupCase::VertexUnbounded;
    out.witness = checked_witness(f, Vec(f.n, Real(1, prec.mantissa)), std::move(dir), prec);
    return out;
  }

  // Step 2: the sub-circuit B with interior point j' (b_{j'} < 0 after
  // normalization, sigma = -1).
  if (cd.interior_index) {
    const size_t jp = *cd.interior_index;
    const bool origin_in_b = !cd.b[j].is_zero();

    // Closed form applies when the origin lies in B and either the origin
    // itself is the interior point or the interior coefficient is positive.
    if (origin_in_b && (j == jp || c[jp].sign() > 0)) {
      LambdaParts lp = lambda_star_parts(c, cd.b, j, -1, cd.sub_circuit_indices, eps, prec);
      Vec shifted = c;
      shifted[j] = lp.q;  // origin coefficient of f - lambda*
      std::vector<size_t> ordered;
      ordered.push_back(j);
      for (size_t i : cd.sub_circuit_indices)
        if (i != j) ordered.push_back(i);
      out.outcome = SupOutcome::Bounded;
      out.algorithm_case = SupCase::ClosedForm;
      out.maximizer = solve_binomial_system(support, shifted, cd.b, ordered, prec);
      out.lambda_star = lp.lam.value;
      out.certified_relative_error = relative_radius(lp.lam);
      return out;
    }

    if (!origin_in_b && c[jp].sign() > 0) {
      // Log-form test: the power product over B exceeds 1 (log form
      // positive) exactly when the B terms reach positive values, which
      // scales to +infinity since the origin is outside their span.
      PrecisionBudget p0 = prec;
      CertifiedValue lf = discriminant_log_form(c, cd.b, cd.sub_circuit_indices, -1, p0);
      auto escalate = [&](mpfr_prec_t q) {
        PrecisionBudget pq = prec;
        pq.mantissa = q;
        return discriminant_log_form(c, cd.b, cd.sub_circuit_indices, -1, pq);
      };
      CertifiedSign s = certified_sign(lf, escalate, prec);
      if (s == CertifiedSign::ZeroAtCap)
        throw PrecisionExhausted("sub-circuit log form not certifiable at precision cap");
      if (s == CertifiedSign::Positive) {
        out.outcome = SupOutcome::Unbounded;
        out.algorithm_case = SupCase::DiscriminantUnbounded;
        out.witness = cond2_witness(f, support, c, cd.b, cd.sub_circuit_indices, jp, prec);
        return out;
      }
      // Negative: the B terms stay below zero; fall through.
    }
  }

  // Step 3: every non-constant contribution can be driven to zero, so the
  // supremum is the constant coefficient, approached on the boundary.
  out.outcome = SupOutcome::ConstantAtBoundary;
  out.algorithm_case = SupCase::Fallthrough;
  out.boundary_value = c[j];
  return out;
}

SupremumResult sup_tetranomial(const Fewnomial& f, double eps, const PrecisionBudget& prec) {
  if (f.n != 1 || f.m() != 4)
    throw NotInClass("sup_tetranomial needs a univariate tetranomial");
  if (eps <= 0) throw InvalidInput("sup_tetranomial: eps must be positive");

  std::vector<Term> ts = f.terms;
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return a.exponent[0] < b.exponent[0]; });
  if (!ts[0].exponent[0].is_zero() || ts[1].exponent[0].sign() <= 0)
    throw NotInClass("sup_tetranomial needs a constant term and positive exponents");

  SupremumResult out;
  out.certified_relative_error = Real(0, 64);

  if (ts[3].coefficient.sign() > 0) {
    out.outcome = SupOutcome::Unbounded;
    out.algorithm_case = SupCase::TetranomialUnbounded;
    out.witness = checked_witness(f, Vec{Real(1, prec.mantissa)}, Vec{Real(1, prec.mantissa)},
                                  prec);
    return out;
  }

  // Candidates: the boundary value c_1 at x -> 0+ and f at the positive
  // critical points, i.e. roots of the derivative trinomial.
  const mpfr_prec_t w = std::max<mpfr_prec_t>(
      prec.mantissa, static_cast<mpfr_prec_t>(std::ceil(-std::log2(eps))) + 64);
  PrecisionBudget work = prec;
  work.mantissa = std::min(prec.cap, w);

  std::vector<Term> dterms;
  for (size_t i = 1; i < 4; ++i) {
    Real dc = ts[i].coefficient.with_prec(w) * ts[i].exponent[0].with_prec(w);
    Real de = ts[i].exponent[0].with_prec(w) - Real(1, w);
    dterms.push_back(Term{std::move(dc), {std::move(de)}});
  }
  Fewnomial df = make_fewnomial(1, std::move(dterms));
  RootReport roots = trinomial_roots(df, std::min(eps, 1e-12) / 8, work);

  const Real& c1 = ts[0].coefficient;
  std::optional<Real> best;
  std::optional<Real> best_x;
  Real best_err(0, 64);
  for (const auto& r : roots.roots) {
    Real v = evaluate(f, Vec{r.value}, work);
    if (!best || v > *best) {
      // Error: evaluation noise plus first-order root displacement.
      Real dfr = evaluate(df, Vec{r.value}, work);
      Real err = abs(v).with_prec(64) * Real::pow2(-work.mantissa / 2, 64) +
                 abs(dfr * r.value * r.certified_relative_error).with_prec(64);
      best = v;
      best_x = r.value;
      best_err = std::move(err);
    }
  }

  if (best && *best > c1) {
    out.outcome = SupOutcome::Bounded;
    out.algorithm_case = SupCase::TetranomialCritical;
    out.lambda_star = *best;
    Real scale = abs(*best).with_prec(64);
    if (scale < Real(1, 64)) scale = Real(1, 64);
    out.certified_relative_error = (best_err / scale).with_prec(64);
    MaximizerDescription md;
    md.orbit_dim = 0;
    md.coords.push_back(MaximizerCoord{CoordKind::Finite, *best_x});
    out.maximizer = std::move(md);
    return out;
  }

  out.outcome = SupOutcome::ConstantAtBoundary;
  out.algorithm_case = SupCase::TetranomialBoundary;
  out.boundary_value = c1;
  return out;
}

SupremumResult sup_fewnomial(const Fewnomial& f, double eps, const PrecisionBudget& prec) {
  if (f.m() == f.n + 1) return sup_simplex(f, prec);
  if (f.m() == f.n + 2) return sup_circuit(f, eps, prec);
  if (f.n == 1 && f.m() == 4) return sup_tetranomial(f, eps, prec);
  throw NotInClass("supremum supports m = n+1, m = n+2, or univariate tetranomials");
}

Decision sup_decide(const Fewnomial& f, const Real& lambda, const PrecisionBudget& prec) {
  auto compare_exact = [&](const Real& sup) { return sup >= lambda ? Decision::Yes : Decision::No; };

  if (f.m() == f.n + 1) {
    SupremumResult r = sup_simplex(f, prec);
    if (r.outcome == SupOutcome::Unbounded) return Decision::Yes;
    return compare_exact(*r.boundary_value);
  }

  bool circuit = f.m() == f.n + 2;
  bool tetra = f.n == 1 && f.m() == 4;
  if (!circuit && !tetra) throw NotInClass("sup_decide supports m = n+1, n+2, or 1-var m=4");

  PrecisionBudget p = prec;
  double eps = 1e-12;
  while (true) {
    SupremumResult r = circuit ? sup_circuit(f, eps, p) : sup_tetranomial(f, eps, p);
    if (r.outcome == SupOutcome::Unbounded) return Decision::Yes;
    if (r.outcome == SupOutcome::ConstantAtBoundary) return compare_exact(*r.boundary_value);
    Real scale = abs(*r.lambda_star).with_prec(64);
    if (scale < Real(1, 64)) scale = Real(1, 64);
    Real radius = r.certified_relative_error * scale;
    if (lambda < *r.lambda_star - radius) return Decision::Yes;
    if (lambda > *r.lambda_star + radius) return Decision::No;
    if (p.at_cap()) return Decision::EqualWithinPrecision;
    p = p.escalated();
    eps = std::max(eps * 1e-18, 1e-300);
  }
}

}  // namespace fewopt
