#ifndef FEWOPT_DISCRIMINANT_HPP
#define FEWOPT_DISCRIMINANT_HPP

#include <optional>
#include <vector>

#include "fewopt/fewnomial.hpp"

namespace fewopt {

enum class CircuitKind { NondegenerateCircuit, DegenerateCircuit, NotCircuit };

// Classification of an (n+2)-point support via the signed-minor vector b:
// all b_i nonzero -> non-degenerate circuit; nonzero pattern a proper
// subset -> degenerate circuit with sub-circuit B = { i : b_i != 0 };
// b == 0 -> not a circuit. When the sub-circuit has a unique minority-sign
// coordinate, b is rescaled so that coordinate is negative and its index
// recorded as the interior point.
struct CircuitData {
  CircuitKind kind = CircuitKind::NotCircuit;
  Vec b;                                   // normalized signed minors
  std::vector<size_t> sub_circuit_indices; // B (all indices when non-degenerate)
  std::optional<size_t> interior_index;    // j' with b_{j'} < 0 after normalization
};

struct DegeneratePoint {
  Vec zeta;  // log coordinates
  Vec x;     // exp(zeta), componentwise
};

CircuitData classify_circuit(const std::vector<Vec>& support, const PrecisionBudget& prec = {});

// sum_{i in indices} sigma * b_i * ln(sigma * c_i / b_i); comparing the
// power product prod (sigma c_i / b_i)^{sigma b_i} against 1 is exactly
// comparing this form against 0.
CertifiedValue discriminant_log_form(const Vec& c, const Vec& b,
                                     const std::vector<size_t>& indices, int sigma,
                                     const PrecisionBudget& prec = {});

struct MembershipResult {
  bool holds = false;
  std::optional<DegeneratePoint> point;
  CertifiedValue log_form;  // certified interval backing the decision
};

// Generalized A-discriminant test for a non-degenerate circuit: the
// exponential sum sum c_i e^{a_i . y} has a (unique) degenerate real point
// iff all sign(c_i b_i) agree and the log form vanishes within the
// certified threshold 2^{-mantissa/4}. Throws PrecisionExhausted when the
// comparison cannot be certified at the cap.
MembershipResult discriminant_membership(const Vec& c, const std::vector<Vec>& support,
                                         const PrecisionBudget& prec = {});

}  // namespace fewopt

#endif
