#pragma once

// Reflectionless scattering data and the N-soliton fields it generates.
//
// A spectrum is a list of zeros lambda_j in the upper half-plane together
// with constant seed vectors v_{j,0}. The space-time dependent kernel vectors
// are v_j = exp(theta_j sigma3) v_{j,0} with theta_j = i lambda_j x +
// 4 i lambda_j^3 t, and the fields are read off the Gram-type matrix
//
//     M_kj = (v_j^dagger-row_k . v_j) / (lambda_j - conj(lambda_k))
//
// as u_m = 2i sum_kj (v_k)_{2m-1} (vhat_j)_7 (M^{-1})_kj.
//
// Type I spectra carry N base zeros and generate the mirrored set
// lambda_{N+j} = -conj(lambda_j), v_{N+j} = sigma conj(v_j). Type II spectra
// carry N pure-imaginary zeros whose seeds are conjugate-paired
// (alpha, conj(alpha), gamma, conj(gamma), rho, conj(rho), 1).

#include <cstddef>
#include <variant>
#include <vector>

#include "tccss/algebra.hpp"
#include "tccss/field.hpp"
#include "tccss/types.hpp"

namespace tccss {

enum class Family { TypeI, TypeII };

const char* family_name(Family f);

struct TypeISeed {
  Complex alpha, beta, gamma, mu, rho, delta;
  bool operator==(const TypeISeed&) const = default;
};

struct TypeIISeed {
  Complex alpha, gamma, rho;
  bool operator==(const TypeIISeed&) const = default;
};

using VectorSeed = std::variant<TypeISeed, TypeIISeed>;

/// Complete scattering data of a reflectionless solution. Only the base
/// zeros are stored; Type I mirrors are generated on expansion.
struct SpectrumConfig {
  Family family = Family::TypeII;
  std::vector<Complex> zeros;
  std::vector<VectorSeed> seeds;

  static SpectrumConfig type_one(std::vector<Complex> zeros, std::vector<TypeISeed> seeds);
  static SpectrumConfig type_two(std::vector<Complex> zeros, std::vector<TypeIISeed> seeds);

  /// Throws ValidationError naming the offending zero (1-based).
  void validate() const;

  std::size_t base_count() const { return zeros.size(); }
  /// 2N for Type I, N for Type II.
  std::size_t expanded_count() const;
  /// lambda_1..lambda_N, then -conj(lambda_j) for Type I.
  std::vector<Complex> expanded_zeros() const;
  /// Seven-component seed v_{j,0} (seventh entry always 1) of base zero j.
  Vec7 full_seed(std::size_t j) const;
  /// Seeds of the expanded set: v_{j,0}, then sigma conj(v_{j,0}) for Type I.
  std::vector<Vec7> expanded_seeds() const;

  bool operator==(const SpectrumConfig&) const = default;
};

/// sigma3 = diag(1,1,1,1,1,1,-1)
const ComplexMatrix& sigma3();
/// Involution swapping slots (1,2), (3,4), (5,6); fixes slot 7.
const ComplexMatrix& sigma_swap();
/// sigma applied to a vector.
Vec7 swap_pairs(const Vec7& v);

/// i lambda x + 4 i lambda^3 t
Complex theta(Complex lambda, double x, double t);

enum class Stabilization { on, off };

/// Kernel vectors v_j and rows vhat_j = v_j^dagger at a fixed (x, t).
///
/// With stabilization on, each pair is divided by exp(|Re theta_j|) and the
/// factor is kept in log_scale, so the stored entries are bounded by the
/// seed norm. The M^{-1}-weighted sums are invariant under this rescaling.
struct KernelVectorSet {
  std::vector<Complex> zeros;    // expanded lambda_j
  std::vector<Vec7> columns;     // v_j (stored scale)
  std::vector<Vec7> rows;        // vhat_j (stored scale)
  std::vector<double> log_scale; // true v_j = columns[j] * exp(log_scale[j])

  std::size_t size() const { return columns.size(); }
};

KernelVectorSet build_vectors(const SpectrumConfig& cfg, double x, double t,
                              Stabilization stab = Stabilization::on);

/// M_kj = (vhat_k . v_j) / (lambda_j - conj(lambda_k)) of the stored vectors.
ComplexMatrix build_M(const KernelVectorSet& vecs);

/// Fields from the kernel vectors; SingularMatrixError if M is singular.
FieldSample fields_from_vectors(const KernelVectorSet& vecs);

/// u_m = -2i (P1^(1))_{2m-1,7}, evaluated through the generic construction.
/// Computed in extended precision and rounded once, so the result is within
/// about one ulp; fields_from_vectors is the plain double path.
FieldSample eval_fields(const SpectrumConfig& cfg, double x, double t,
                        Stabilization stab = Stabilization::on);

/// Type I fields through the explicit four-block sum over base and mirrored
/// indices. Same contract as eval_fields; rejects Type II input.
FieldSample type1_N_soliton(const SpectrumConfig& cfg, double x, double t);

/// Closure over eval_fields for the residual and scattering machinery.
FieldEvaluator make_evaluator(SpectrumConfig cfg);

// Closed forms. Each one is checked against eval_fields; see
// docs/closed_forms.md for how each one follows from the construction.

/// Type II one-soliton with lambda_1 = i eta1. DegenerateSeedError if the
/// polarization vector vanishes.
FieldSample one_soliton_closed_form(Complex alpha1, Complex gamma1, Complex rho1, double eta1,
                                    double x, double t);

/// Type I N = 1 breather with lambda_1 = xi1 + i eta1 and seeds constrained
/// to beta = conj(alpha), mu = conj(gamma), delta = conj(rho).
FieldSample breather_closed_form(Complex alpha1, Complex gamma1, Complex rho1, double xi1,
                                 double eta1, double x, double t);

/// Type II two-soliton through the explicit 2x2 matrix T.
FieldSample two_soliton_closed_form(const TypeIISeed& seed1, const TypeIISeed& seed2,
                                    Complex lambda1, Complex lambda2, double x, double t);

}  // namespace tccss
