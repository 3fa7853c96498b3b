#pragma once

// Reflectionless Riemann-Hilbert factors. With the jump equal to the
// identity the problem reduces to the finite sums
//
//   P1(l) = I - sum_kj v_k vhat_j (M^{-1})_kj / (l - conj(lambda_j)),
//   P2(l) = I + sum_kj v_k vhat_j (M^{-1})_kj / (l - lambda_k),
//
// (outer products of kernel columns and rows), and the potential is
// recovered from the 1/l coefficient as Q = i [P1^(1), sigma3].

#include <span>
#include <vector>

#include "tccss/algebra.hpp"
#include "tccss/report.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

/// Evaluation closer than this to a pole raises PoleError.
inline constexpr double kPoleGuard = 1e-8;

/// P1 and P2 bound to one spectrum and one (x, t); immutable once built.
class RHSolutionPair {
public:
  RHSolutionPair(const SpectrumConfig& cfg, double x, double t);

  /// Analytic in the upper half-plane; poles at conj(lambda_j).
  ComplexMatrix P1(Complex lambda) const;
  /// Analytic in the lower half-plane; poles at lambda_j.
  ComplexMatrix P2(Complex lambda) const;

  /// Coefficient of 1/lambda in the large-lambda expansion of P1.
  ComplexMatrix first_moment() const;

  const KernelVectorSet& vectors() const { return vecs_; }
  std::span<const Complex> zeros() const { return vecs_.zeros; }

private:
  KernelVectorSet vecs_;
  std::vector<Vec7> left_;   // sum_k v_k (M^{-1})_kj, indexed by j
  std::vector<Vec7> right_;  // sum_j (M^{-1})_kj vhat_j, indexed by k
};

RHSolutionPair build_rh_pair(const SpectrumConfig& cfg, double x, double t);

/// Full 7x7 potential matrix Q = i [P1^(1), sigma3].
ComplexMatrix reconstruct_potential(const SpectrumConfig& cfg, double x, double t);

/// Residuals of the RH identities at one (x, t):
///   hermitian_pairing  max |P1(conj l)^dagger - P2(l)| over samples
///   sigma_symmetry     max |sigma conj(P1(-conj l)) sigma - P1(l)| over samples
///   jump_identity      max |P2(l) P1(l) - I| over the real samples
///   kernel_P1          max_j |P1(lambda_j) v_j| / |v_j|
///   kernel_P2          max_j |vhat_j P2(conj lambda_j)| / |vhat_j|
///   det_P1_at_zeros    max_j |det P1(lambda_j)|
/// Thresholds are applied by the caller.
std::vector<ResidualReport> check_symmetries(const SpectrumConfig& cfg, double x, double t,
                                             std::span<const Complex> lambda_samples);

}  // namespace tccss
