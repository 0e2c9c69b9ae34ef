#ifndef FEWOPT_FEWNOMIAL_HPP
#define FEWOPT_FEWNOMIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "fewopt/linalg.hpp"
#include "fewopt/precision.hpp"
#include "fewopt/real.hpp"

namespace fewopt {

using ExponentVector = std::vector<Real>;

struct Term {
  Real coefficient;
  ExponentVector exponent;
};

// An n-variate m-nomial: sum of m monomial terms with nonzero real
// coefficients and pairwise-distinct real exponent vectors, viewed as a
// function on the positive orthant. Immutable after construction.
struct Fewnomial {
  size_t n = 0;
  std::vector<Term> terms;

  size_t m() const { return terms.size(); }
  std::vector<Vec> support() const {
    std::vector<Vec> s;
    s.reserve(terms.size());
    for (const auto& t : terms) s.push_back(t.exponent);
    return s;
  }
  // Index of the all-zero exponent vector, if present (exact test).
  std::optional<size_t> origin_index() const;
};

struct ClassMembership {
  int support_dim = 0;
  bool honest = false;   // support_dim == n
  bool has_origin = false;
};

struct ConditionReport {
  std::map<std::vector<size_t>, Real> minors;  // (n+1)-subset -> |det|
  Real log_condition;                          // ln C(f)
  std::optional<long> sparse_size_bits;        // integer inputs only
};

// Validates and builds a fewnomial. Terms are kept in input order.
Fewnomial make_fewnomial(size_t n, std::vector<Term> terms);

// Affine dimension of the support (rank of a_2-a_1,...,a_m-a_1) plus the
// honesty and origin flags.
ClassMembership classify(const Fewnomial& f, const PrecisionBudget& prec = {});

// ln C(f) over coefficient factors and all (n+1)-subset lifted minors.
// Restricted to m <= n+2 unless an explicit subset budget is passed.
ConditionReport log_condition_number(const Fewnomial& f, const PrecisionBudget& prec = {},
                                     std::optional<size_t> subset_budget = std::nullopt);

// f(x) for x in the positive orthant, relative error 2^{-mantissa/2};
// escalates precision on catastrophic cancellation.
Real evaluate(const Fewnomial& f, const Vec& x, const PrecisionBudget& prec);

// f(x) in plain double arithmetic; oracle/grid-scan grade only.
double evaluate_d(const Fewnomial& f, const std::vector<double>& log_x);

}  // namespace fewopt

#endif
