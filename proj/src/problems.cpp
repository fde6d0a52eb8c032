#include "pielm/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace pielm {

void ProblemSpec::validate() const {
  if (!(domain_lo < domain_hi))
    throw std::invalid_argument("ProblemSpec: domain_lo must be < domain_hi");
  if (!(nu > 0.0)) throw std::invalid_argument("ProblemSpec: nu must be > 0");
  if (!(bc_penalty > 0.0))
    throw std::invalid_argument("ProblemSpec: bc_penalty must be > 0");
  if (kind == ProblemKind::SingleBoundaryLayer &&
      (bc_lo != 0.0 || bc_hi != 1.0))
    throw std::invalid_argument(
        "ProblemSpec: single-layer problem requires bc (0, 1)");
  if (kind == ProblemKind::DoubleBoundaryLayer &&
      (bc_lo != 1.0 || bc_hi != 1.0))
    throw std::invalid_argument(
        "ProblemSpec: double-layer problem requires bc (1, 1)");
}

ProblemSpec make_single_boundary_layer(double nu, double bc_penalty) {
  ProblemSpec spec;
  spec.kind = ProblemKind::SingleBoundaryLayer;
  spec.nu = nu;
  spec.bc_lo = 0.0;
  spec.bc_hi = 1.0;
  spec.bc_penalty = bc_penalty;
  spec.validate();
  return spec;
}

ProblemSpec make_double_boundary_layer(double nu, double bc_penalty) {
  ProblemSpec spec;
  spec.kind = ProblemKind::DoubleBoundaryLayer;
  spec.nu = nu;
  spec.bc_lo = 1.0;
  spec.bc_hi = 1.0;
  spec.bc_penalty = bc_penalty;
  spec.validate();
  return spec;
}

OperatorCoefficients operator_coefficients(const ProblemSpec& spec) {
  if (spec.kind == ProblemKind::SingleBoundaryLayer)
    return {-spec.nu, 1.0, 0.0};  // -nu u'' + u'
  return {-spec.nu, 0.0, 1.0};    // -nu u'' + u
}

double exact_solution(const ProblemSpec& spec, double x) {
  if (x < spec.domain_lo || x > spec.domain_hi)
    throw std::domain_error("exact_solution: x outside the closed domain");

  const double xi = x - spec.domain_lo;
  const double len = spec.domain_length();

  if (spec.kind == ProblemKind::SingleBoundaryLayer) {
    // (e^{xi/nu} - 1) / (e^{len/nu} - 1), with every exponent kept <= 0 so
    // the stiff regime underflows instead of overflowing.
    return std::exp((xi - len) / spec.nu) * std::expm1(-xi / spec.nu) /
           std::expm1(-len / spec.nu);
  }

  const double root = std::sqrt(spec.nu);
  return (std::exp(-xi / root) + std::exp(-(len - xi) / root)) /
         (1.0 + std::exp(-len / root));
}

}  // namespace pielm
