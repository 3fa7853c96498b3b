#pragma once

// Lax pair of the three-component coupled Sasa-Satsuma equation and
// finite-difference residual checks for candidate solutions.
//
//   U = i l sigma3 + Q
//   V = 4 i l^3 sigma3 + 4 l^2 Q + 2 i l (Q^2 + Q_x) sigma3 + Q_x Q - Q Q_x - Q_xx + 2 Q^3
//
// Error budget for the default stencil (order 4, h = 1e-3): truncation is
// O(h^4) ~ 1e-12 times the seventh derivative, while cancellation in the
// third-derivative stencil is ~ 5.5 eps |u| / h^3 ~ 1e-7. Residuals at
// h = 1e-3 are therefore rounding-limited; convergence-order checks use
// coarser steps (h ~ 0.02 - 0.04) where truncation dominates.

#include "tccss/algebra.hpp"
#include "tccss/field.hpp"
#include "tccss/grid.hpp"
#include "tccss/report.hpp"

namespace tccss {

struct StencilSpec {
  double hx = 1e-3;
  double ht = 1e-3;
  int order = 4;

  /// Steps in (0, 0.1], order in {2, 4}; throws ValidationError.
  void validate() const;

  bool operator==(const StencilSpec&) const = default;
};

/// Seventh column (u1, conj u1, u2, conj u2, u3, conj u3, 0), seventh row
/// its negated conjugate transpose, zero elsewhere.
ComplexMatrix build_Q(const FieldSample& s);
ComplexMatrix build_U(Complex lambda, const ComplexMatrix& Q);
ComplexMatrix build_V(Complex lambda, const ComplexMatrix& Q, const ComplexMatrix& Qx,
                      const ComplexMatrix& Qxx);

/// max |U_t - V_x + [U, V]| at one point. Q_x, Q_xx, Q_xxx and Q_t come from
/// central differences of f; V_x is assembled from them by the product rule.
double zero_curvature_residual(const FieldEvaluator& f, Complex lambda, double x, double t,
                               const StencilSpec& st);

/// Residual of u_t + u_xxx + 6 S u_x + 3 u S_x (S = sum |u_m|^2) at one point.
FieldSample tccss_residual_at(const FieldEvaluator& f, double x, double t, const StencilSpec& st);

/// tccss_residual_at over a grid; every |r_m| of every point enters the report.
ResidualReport pde_residual_tccss(const FieldEvaluator& f, const GridSpec& grid,
                                  const StencilSpec& st);

/// q_m(X, T) = u_m(X - T/12, T) exp{(i/6)(X - T/18)}
FieldEvaluator gauge_transformed(FieldEvaluator f);

/// Residual of i q_T + q_XX/2 + q S + i [q_XXX + 6 q_X S + 3 q S_X] at one point.
FieldSample cnls_residual_at(const FieldEvaluator& q, double X, double T, const StencilSpec& st);

/// Samples the gauge-transformed field on `grid` read as (X, T) and reports
/// the higher-order CNLS residual.
ResidualReport gauge_transform_and_cnls_residual(const FieldEvaluator& f, const GridSpec& grid,
                                                 const StencilSpec& st);

}  // namespace tccss
