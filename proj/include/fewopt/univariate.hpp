#ifndef FEWOPT_UNIVARIATE_HPP
#define FEWOPT_UNIVARIATE_HPP

#include <vector>

#include "fewopt/fewnomial.hpp"

namespace fewopt {

struct Root {
  Real value;
  int multiplicity = 1;  // 1 or 2
  Real certified_relative_error;
};

struct RootReport {
  int count = 0;  // 0, 1, or 2 for trinomials (double root counts once)
  std::vector<Root> roots;
};

// Dominance interval [lo, hi] containing every positive root of a
// univariate fewnomial: ln hi = max over lower terms of
// ln(m |c_i / c_top|) / (a_top - a_i), lo symmetric via x -> 1/x.
std::pair<Real, Real> root_bound(const Fewnomial& f, const PrecisionBudget& prec = {});

// Exact positive-root count of a univariate trinomial by the critical-point
// sign method (the derivative is a binomial with at most one positive
// root), then bisection-seeded Newton refinement to relative eps.
RootReport trinomial_roots(const Fewnomial& f, double eps, const PrecisionBudget& prec = {});

}  // namespace fewopt

#endif
