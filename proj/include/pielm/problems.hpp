#pragma once

#include <functional>

namespace pielm {

enum class ProblemKind { SingleBoundaryLayer, DoubleBoundaryLayer };

/// A stationary 1D boundary-value problem L[u] = f on (domain_lo, domain_hi)
/// with Dirichlet data u(lo) = bc_lo, u(hi) = bc_hi. Boundary conditions are
/// enforced softly, through rows of the collocation system scaled by
/// bc_penalty.
struct ProblemSpec {
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  double nu = 1e-4;  // diffusion coefficient, > 0
  ProblemKind kind = ProblemKind::SingleBoundaryLayer;
  double bc_lo = 0.0;
  double bc_hi = 1.0;
  double bc_penalty = 1.0;  // lambda, > 0
  std::function<double(double)> source;  // empty means f == 0

  double source_at(double x) const { return source ? source(x) : 0.0; }
  double domain_length() const { return domain_hi - domain_lo; }

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

/// Convection-diffusion problem -nu u'' + u' = 0 with u(0) = 0, u(1) = 1.
/// Develops an outlet layer of width O(nu) at the right endpoint.
ProblemSpec make_single_boundary_layer(double nu, double bc_penalty = 1.0);

/// Reaction-diffusion problem -nu u'' + u = 0 with u(0) = u(1) = 1.
/// Develops layers of width O(sqrt(nu)) at both endpoints.
ProblemSpec make_double_boundary_layer(double nu, double bc_penalty = 1.0);

/// Coefficients of L[u] = a2 u'' + a1 u' + a0 u.
struct OperatorCoefficients {
  double a2;
  double a1;
  double a0;
};

OperatorCoefficients operator_coefficients(const ProblemSpec& spec);

/// Closed-form exact solution, evaluated in overflow-safe form. Finite for
/// every nu >= 1e-12 and x in the closed domain.
/// Throws std::domain_error if x lies outside [domain_lo, domain_hi].
double exact_solution(const ProblemSpec& spec, double x);

}  // namespace pielm
