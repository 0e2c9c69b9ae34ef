#include "fewopt/discriminant.hpp"

#include <algorithm>

namespace fewopt {

CircuitData classify_circuit(const std::vector<Vec>& support, const PrecisionBudget& prec) {
  const size_t m = support.size();
  if (m < 2 || support[0].size() != m - 2)
    throw DimensionMismatch("classify_circuit: support must have n+2 points");

  CircuitData out;
  out.b = b_vector(support, prec);

  // Zero pattern: a minor counts as zero below the Hadamard-scaled threshold.
  Matrix lift = lifted_matrix(support, prec.mantissa);
  const Real tiny = Real::pow2(-prec.mantissa + 8, 64);
  std::vector<bool> zero(m, false);
  size_t nonzero = 0;
  for (size_t i = 0; i < m; ++i) {
    Real thr = tiny * hadamard_bound(lift.without_column(i));
    if (abs(out.b[i]) <= thr) {
      zero[i] = true;
      out.b[i] = Real(0, out.b[i].prec());
    } else {
      out.sub_circuit_indices.push_back(i);
      ++nonzero;
    }
  }

  if (nonzero == 0) {
    out.kind = CircuitKind::NotCircuit;
    return out;
  }
  out.kind = nonzero == m ? CircuitKind::NondegenerateCircuit : CircuitKind::DegenerateCircuit;

  // Interior point of the sub-circuit: the unique minority-sign coordinate.
  size_t pos = 0, neg = 0;
  for (size_t i : out.sub_circuit_indices) (out.b[i].sign() > 0 ? pos : neg)++;
  if (pos == 1 || neg == 1) {
    int minority = pos == 1 ? 1 : -1;
    for (size_t i : out.sub_circuit_indices)
      if (out.b[i].sign() == minority) {
        out.interior_index = i;
        break;
      }
    // Normalize so b_{j'} < 0.
    if (out.b[*out.interior_index].sign() > 0)
      for (auto& bi : out.b) bi = -bi;
  }
  return out;
}

CertifiedValue discriminant_log_form(const Vec& c, const Vec& b,
                                     const std::vector<size_t>& indices, int sigma,
                                     const PrecisionBudget& prec) {
  if (c.size() != b.size()) throw DimensionMismatch("log form: c and b size mismatch");
  const mpfr_prec_t p = prec.mantissa;
  Real sig(sigma, p);
  std::vector<std::pair<Real, Real>> terms;
  terms.reserve(indices.size());
  for (size_t i : indices) {
    Real base = sig * c[i].with_prec(p) / b[i].with_prec(p);
    if (base.sign() <= 0)
      throw SignPreconditionViolated("log form: sigma*c_i/b_i must be positive");
    terms.emplace_back(sig * b[i].with_prec(p), std::move(base));
  }
  return log_linear_form(terms, prec);
}

MembershipResult discriminant_membership(const Vec& c, const std::vector<Vec>& support,
                                         const PrecisionBudget& prec) {
  const size_t m = support.size();
  if (c.size() != m) throw DimensionMismatch("membership: coefficient count mismatch");
  CircuitData cd = classify_circuit(support, prec);
  if (cd.kind != CircuitKind::NondegenerateCircuit)
    throw NotInClass("membership test requires a non-degenerate circuit");

  MembershipResult out;
  // Condition (i): all sign(c_i b_i) equal.
  int s = (c[0].sign() * cd.b[0].sign());
  for (size_t i = 1; i < m; ++i)
    if (c[i].sign() * cd.b[i].sign() != s) {
      out.holds = false;
      return out;
    }

  // Condition (ii): the power product equals 1, i.e. the log form vanishes
  // within the certified threshold.
  std::vector<size_t> all(m);
  for (size_t i = 0; i < m; ++i) all[i] = i;
  PrecisionBudget p = prec;
  while (true) {
    out.log_form = discriminant_log_form(c, cd.b, all, s, p);
    Real threshold = Real::pow2(-prec.mantissa / 4, 64);
    Real lo = abs(out.log_form.value).with_prec(64) - out.log_form.error_radius;
    Real hi = abs(out.log_form.value).with_prec(64) + out.log_form.error_radius;
    if (hi <= threshold) {
      out.holds = true;
      break;
    }
    if (lo > threshold) {
      out.holds = false;
      return out;
    }
    if (p.at_cap())
      throw PrecisionExhausted("discriminant membership not certifiable at precision cap");
    p = p.escalated();
  }

  // Degenerate point: e^{a_i . zeta} = s * b_i / c_i, solved over the
  // n independent exponent differences a_2-a_1, ..., a_{n+1}-a_1.
  const size_t n = m - 2;
  const mpfr_prec_t w = prec.mantissa;
  Matrix diffs(n, n, w);
  Vec rhs(n, Real(0, w));
  Real sig(s, w);
  Real ref = log(sig * cd.b[0].with_prec(w) / c[0].with_prec(w));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      diffs.at(i, j) = support[i + 1][j].with_prec(w) - support[0][j].with_prec(w);
    rhs[i] = log(sig * cd.b[i + 1].with_prec(w) / c[i + 1].with_prec(w)) - ref;
  }
  DegeneratePoint pt;
  pt.zeta = solve(diffs, rhs, prec);
  pt.x.reserve(n);
  for (const auto& z : pt.zeta) pt.x.push_back(exp(z));
  out.point = std::move(pt);
  return out;
}

}  // namespace fewopt
