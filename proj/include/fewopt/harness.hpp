#ifndef FEWOPT_HARNESS_HPP
#define FEWOPT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fewopt/fewnomial.hpp"
#include "fewopt/supremum.hpp"

namespace fewopt {

struct GridReport {
  double value = 0;                // running max over all evaluated points
  std::vector<double> arg_log;     // natural-log coordinates of the argmax
  double resolution = 0;           // final cell width (natural log units)
};

// Max of f over a log-uniform grid on [10^lo10, 10^hi10]^n, refined around
// the argmax for `rounds` rounds. Double arithmetic; oracle grade only.
// The returned value is a running max, so it never decreases with more
// rounds, a wider range, or a nested grid (points' = 2*points - 1).
GridReport grid_supremum_detail(const Fewnomial& f, double lo10, double hi10, int points,
                                int rounds);
double grid_supremum(const Fewnomial& f, double lo10, double hi10, int points, int rounds);

// How the source quartic is embedded before adding the slack block:
//  - PositiveOrthant: F(x,z) = f(x)^2 + t_M(z); a positive root of f in
//    R^n_+ corresponds to a root of F in R^{n+M}_+.
//  - RealSlack: F(y,z) = f(y_1-y_{n+1},...)^2 + t_M(z) over 2n+M positive
//    variables; encodes real roots of f as a positive-orthant instance.
//  - RealSquared: F(x,z) = f(x)^2 + t_M(z_1^2,...,z_M^2); encodes real
//    roots of f as an all-orthants instance.
enum class GadgetMode { PositiveOrthant, RealSlack, RealSquared };

struct HardnessInstance {
  Fewnomial F;
  long M = 1;
  bool clamped = false;   // M was cut to cap_M, losing the sparsity ratio
  GadgetMode mode = GadgetMode::PositiveOrthant;
  Fewnomial source;
};

// F = (embedded f)^2 + t_M, with t_M(z) = 1 + sum z_i^{M+1} - (M+1) z_1...z_M
// (nonnegative on the positive orthant, vanishing only at all-ones) and
// M = ceil(C(n+4,4)^{2/delta}), clamped to cap_M when given. Requires f to
// have integer exponents of total degree at most 4.
HardnessInstance make_hardness_instance(const Fewnomial& f, double delta,
                                        std::optional<long> cap_m,
                                        GadgetMode mode = GadgetMode::PositiveOrthant);

enum class CaseTarget { Cond1, Cond2, Cond3, Fallthrough };

// Deterministic-per-seed honest instance in F**_{n,n+2}, exponents in
// [-5,5], coefficients in [-10,10]. With a target, rejection-samples until
// sup_circuit's classifier lands in that branch (Cond2 instances are built
// directly: a collinear sub-circuit in a flat missing the origin).
Fewnomial random_circuit_instance(size_t n, std::uint64_t seed,
                                  std::optional<CaseTarget> case_target = std::nullopt);

}  // namespace fewopt

#endif
