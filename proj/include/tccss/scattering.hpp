#pragma once

// Direct scattering for a given potential: Jost solutions of
//   Psi_x = i l [sigma3, Psi] + Q(x) Psi,   Psi_+ -> I (x -> +inf), Psi_- -> I (x -> -inf)
// by fixed-step classical RK4, the scattering matrix
//   Omega = e^{-i l sigma3 x} Psi_+^{-1} Psi_- e^{i l sigma3 x},
// and the zeros of Omega_77 in the upper half-plane.

#include <cstddef>
#include <vector>

#include "tccss/algebra.hpp"
#include "tccss/field.hpp"
#include "tccss/report.hpp"

namespace tccss {

enum class JostSide { plus, minus };

/// Truncated integration window standing in for the real line.
struct ScatteringDomain {
  double x_min = -40.0;
  double x_max = 40.0;
  std::size_t n_steps = 16000;

  void validate() const;
  double step() const { return (x_max - x_min) / static_cast<double>(n_steps); }

  bool operator==(const ScatteringDomain&) const = default;
};

/// Potentials larger than this at a window endpoint are rejected. A tail of
/// size e decaying like exp(-2 eta |x|) perturbs Omega by about e / (2 eta),
/// so for eta >= 0.3 truncation stays below 2e-8.
inline constexpr double kEndpointDecay = 1e-8;

struct JostSolution {
  Complex lambda;
  double x_min = 0.0;
  double x_max = 0.0;
  JostSide side = JostSide::minus;
  std::vector<double> xs;              // sample abscissae, increasing
  std::vector<ComplexMatrix> values;   // Psi at xs
  double max_det_deviation = 0.0;      // max |det Psi - 1| over every step
};

/// Integrates from the side's endpoint (where Psi = I) across the window.
/// Every `stride`-th step is stored, plus both endpoints.
JostSolution integrate_jost(const FieldEvaluator& f, double t, Complex lambda,
                            const ScatteringDomain& domain, JostSide side, std::size_t stride = 1);

struct ScatteringData {
  Complex lambda;
  ComplexMatrix omega{7, 7};
  /// True for complex lambda: only Omega_77 (and the rest of column 7,
  /// which is not analytic) was propagated; columns 1..6 are left zero.
  bool analytic_entries_only = false;
  double max_det_deviation = 0.0;
  double unitarity_deviation = 0.0;   // max |Psi^dagger Psi - I| at x_max, real lambda only
};

/// Omega(lambda) for real lambda, or Omega_77 for lambda in the upper
/// half-plane. UnsupportedHalfPlaneError for Im lambda < 0.
ScatteringData scattering_matrix(const FieldEvaluator& f, double t, Complex lambda,
                                 const ScatteringDomain& domain);

/// Secant iteration on Omega_77 from `seed`. Converges when |Omega_77| < 1e-8
/// or the step falls below 1e-10; at most 50 iterations. SearchFailedError
/// (with the iterate trace) otherwise.
Complex locate_spectral_zero(const FieldEvaluator& f, double t, Complex seed,
                             const ScatteringDomain& domain);

/// Compares Omega(lambda; t1) with the evolution law applied to
/// Omega(lambda; t0): Omega_k7 picks up exp(8 i lambda^3 (t1 - t0)), Omega_77
/// is invariant. lambda must be real.
ResidualReport scattering_evolution_check(const FieldEvaluator& f, double lambda, double t0,
                                          double t1, const ScatteringDomain& domain);

}  // namespace tccss
