#ifndef FEWOPT_SUPREMUM_HPP
#define FEWOPT_SUPREMUM_HPP

#include <optional>
#include <vector>

#include "fewopt/discriminant.hpp"
#include "fewopt/fewnomial.hpp"
#include "fewopt/transform.hpp"

namespace fewopt {

enum class SupOutcome { Unbounded, Bounded, ConstantAtBoundary };

// Which branch of the decision procedure produced the outcome.
enum class SupCase {
  SimplexUnbounded,        // canonical form has ell >= 1
  SimplexConstant,         // ell == 0
  VertexUnbounded,         // positive coefficient on a non-origin hull vertex
  DiscriminantUnbounded,   // sub-circuit log-form test
  ClosedForm,              // lambda* from the circuit discriminant equation
  Fallthrough,             // supremum is the constant coefficient
  TetranomialUnbounded,
  TetranomialCritical,
  TetranomialBoundary,
};

struct UnboundedWitness {
  Vec direction;   // log-space direction: curve x(t) = base ∘ t^direction
  Vec base_point;  // strictly positive
};

enum class CoordKind { Finite, Zero, Infinite };
struct MaximizerCoord {
  CoordKind kind = CoordKind::Finite;
  Real value;  // meaningful only when Finite
};

struct MaximizerDescription {
  std::vector<MaximizerCoord> coords;
  int orbit_dim = 0;
};

struct SupremumResult {
  SupOutcome outcome = SupOutcome::Bounded;
  SupCase algorithm_case = SupCase::Fallthrough;
  std::optional<Real> lambda_star;              // Bounded
  Real certified_relative_error = Real(64);     // for lambda_star (absolute when near 0)
  std::optional<MaximizerDescription> maximizer;
  std::optional<UnboundedWitness> witness;      // Unbounded
  std::optional<Real> boundary_value;           // ConstantAtBoundary

  // The supremum value for bounded outcomes (lambda* or the boundary constant).
  const Real& sup_value() const {
    return outcome == SupOutcome::Bounded ? *lambda_star : *boundary_value;
  }
};

// Honest (n+1)-nomial with constant term: unbounded iff the canonical form
// has a positive non-constant coefficient, else the supremum is the
// constant, approached as the other monomials vanish.
SupremumResult sup_simplex(const Fewnomial& f, const PrecisionBudget& prec = {});

// Honest (n+2)-nomial with constant term: the circuit engine.
SupremumResult sup_circuit(const Fewnomial& f, double eps, const PrecisionBudget& prec = {});

// lambda* = c_j - sigma*b_j*P^{-sigma/b_j}, P the power product over
// indices\{j}, computed through the log form to relative eps.
CertifiedValue solve_lambda_star(const Vec& c, const Vec& b, size_t j, size_t j_prime,
                                 int sigma, const std::vector<size_t>& indices, double eps,
                                 const PrecisionBudget& prec = {});

// Solves x^{a_i - a_ref} = b_i c_ref / (b_ref c_i) over the affine span of
// the sub-circuit (ref = indices[0]); coordinates transverse to the span
// become 0 / +inf along the direction that kills the remaining terms, which
// requires the origin to belong to the sub-circuit. `c` must already carry
// the lambda*-shifted origin coefficient (f - lambda*).
MaximizerDescription solve_binomial_system(const std::vector<Vec>& support, const Vec& c,
                                           const Vec& b, const std::vector<size_t>& indices,
                                           const PrecisionBudget& prec = {});

enum class Decision { Yes, No, EqualWithinPrecision };

// Is sup f >= lambda? Exact for the simplex/constant cases, certified
// interval comparison (with escalation) for closed-form lambda*.
Decision sup_decide(const Fewnomial& f, const Real& lambda, const PrecisionBudget& prec = {});

// Univariate tetranomial with constant term and positive exponents.
SupremumResult sup_tetranomial(const Fewnomial& f, double eps, const PrecisionBudget& prec = {});

// Dispatch on class: simplex (m=n+1), circuit (m=n+2), tetranomial (n=1,m=4).
// Throws NotInClass for anything else.
SupremumResult sup_fewnomial(const Fewnomial& f, double eps, const PrecisionBudget& prec = {});

}  // namespace fewopt

#endif
