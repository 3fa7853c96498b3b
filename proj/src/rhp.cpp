#include "tccss/rhp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tccss/errors.hpp"

namespace tccss {

namespace {

void guard(Complex lambda, Complex pole, std::size_t index, const char* which) {
  if (std::abs(lambda - pole) < kPoleGuard) {
    std::ostringstream os;
    os << which << " evaluated within " << kPoleGuard << " of its pole at zero " << index + 1
       << " (" << pole << ")";
    throw PoleError(index, os.str());
  }
}

double vec_max(const Vec7& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::string describe(double x, double t, std::size_t samples) {
  std::ostringstream os;
  os << "(x,t)=(" << x << "," << t << "), " << samples << " lambda samples";
  return os.str();
}

}  // namespace

RHSolutionPair::RHSolutionPair(const SpectrumConfig& cfg, double x, double t)
    : vecs_(build_vectors(cfg, x, t)) {
  const std::size_t n = vecs_.size();
  const ComplexMatrix minv = lu_solve(build_M(vecs_), ComplexMatrix::identity(n));
  left_.assign(n, Vec7{});
  right_.assign(n, Vec7{});
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex w = minv(k, j);
      for (std::size_t i = 0; i < kDim; ++i) {
        left_[j][i] += vecs_.columns[k][i] * w;
        right_[k][i] += w * vecs_.rows[j][i];
      }
    }
  }
}

ComplexMatrix RHSolutionPair::P1(Complex lambda) const {
  ComplexMatrix p = ComplexMatrix::identity(kDim);
  for (std::size_t j = 0; j < vecs_.size(); ++j) {
    const Complex pole = std::conj(vecs_.zeros[j]);
    guard(lambda, pole, j, "P1");
    const Complex c = 1.0 / (lambda - pole);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t s = 0; s < kDim; ++s) p(r, s) -= left_[j][r] * vecs_.rows[j][s] * c;
  }
  return p;
}

ComplexMatrix RHSolutionPair::P2(Complex lambda) const {
  ComplexMatrix p = ComplexMatrix::identity(kDim);
  for (std::size_t k = 0; k < vecs_.size(); ++k) {
    const Complex pole = vecs_.zeros[k];
    guard(lambda, pole, k, "P2");
    const Complex c = 1.0 / (lambda - pole);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t s = 0; s < kDim; ++s) p(r, s) += vecs_.columns[k][r] * right_[k][s] * c;
  }
  return p;
}

ComplexMatrix RHSolutionPair::first_moment() const {
  ComplexMatrix p(kDim, kDim);
  for (std::size_t j = 0; j < vecs_.size(); ++j)
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t s = 0; s < kDim; ++s) p(r, s) -= left_[j][r] * vecs_.rows[j][s];
  return p;
}

RHSolutionPair build_rh_pair(const SpectrumConfig& cfg, double x, double t) {
  return RHSolutionPair(cfg, x, t);
}

ComplexMatrix reconstruct_potential(const SpectrumConfig& cfg, double x, double t) {
  return kI * commutator(RHSolutionPair(cfg, x, t).first_moment(), sigma3());
}

std::vector<ResidualReport> check_symmetries(const SpectrumConfig& cfg, double x, double t,
                                             std::span<const Complex> lambda_samples) {
  const RHSolutionPair rh(cfg, x, t);
  const ComplexMatrix& sg = sigma_swap();
  const ComplexMatrix id = ComplexMatrix::identity(kDim);

  std::vector<double> herm, sym, jump, ker1, ker2, dets;
  for (const Complex l : lambda_samples) {
    herm.push_back((rh.P1(std::conj(l)).adjoint() - rh.P2(l)).max_abs());
    sym.push_back((sg * rh.P1(-std::conj(l)).conjugate() * sg - rh.P1(l)).max_abs());
    if (l.imag() == 0.0) jump.push_back((rh.P2(l) * rh.P1(l) - id).max_abs());
  }
  const auto& v = rh.vectors();
  for (std::size_t j = 0; j < v.size(); ++j) {
    const ComplexMatrix p1 = rh.P1(v.zeros[j]);
    ker1.push_back(vec_max(apply(p1, v.columns[j])) / vec_max(v.columns[j]));
    ker2.push_back(vec_max(apply_left(v.rows[j], rh.P2(std::conj(v.zeros[j])))) / vec_max(v.rows[j]));
    dets.push_back(std::abs(det(p1)));
  }

  const std::string where = describe(x, t, lambda_samples.size());
  std::vector<ResidualReport> out;
  out.push_back(make_report("hermitian_pairing", herm, where));
  out.push_back(make_report("sigma_symmetry", sym, where));
  out.push_back(make_report("jump_identity", jump, where));
  if (jump.empty()) out.back().notes.push_back("no real lambda samples supplied");
  out.push_back(make_report("kernel_P1", ker1, where));
  out.push_back(make_report("kernel_P2", ker2, where));
  out.push_back(make_report("det_P1_at_zeros", dets, where));
  return out;
}

}  // namespace tccss
