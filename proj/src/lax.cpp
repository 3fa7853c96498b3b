#include "tccss/lax.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "tccss/errors.hpp"
#include "tccss/finite_difference.hpp"
#include "tccss/parallel.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

const std::array<double, 7>& central_weights(int derivative, int order) {
  static const std::array<double, 7> d1o2{0, 0, -0.5, 0, 0.5, 0, 0};
  static const std::array<double, 7> d1o4{0, 1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12, 0};
  static const std::array<double, 7> d2o2{0, 0, 1, -2, 1, 0, 0};
  static const std::array<double, 7> d2o4{0, -1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12, 0};
  static const std::array<double, 7> d3o2{0, -0.5, 1, 0, -1, 0.5, 0};
  static const std::array<double, 7> d3o4{1.0 / 8, -1, 13.0 / 8, 0, -13.0 / 8, 1, -1.0 / 8};
  if (order != 2 && order != 4) throw ValidationError("stencil order must be 2 or 4");
  switch (derivative) {
    case 1: return order == 2 ? d1o2 : d1o4;
    case 2: return order == 2 ? d2o2 : d2o4;
    case 3: return order == 2 ? d3o2 : d3o4;
    default: throw ValidationError("central_weights: derivative must be 1, 2 or 3");
  }
}

void StencilSpec::validate() const {
  if (!(hx > 0.0 && hx <= 0.1)) throw ValidationError("stencil: hx must be in (0, 0.1]");
  if (!(ht > 0.0 && ht <= 0.1)) throw ValidationError("stencil: ht must be in (0, 0.1]");
  if (order != 2 && order != 4) throw ValidationError("stencil: order must be 2 or 4");
}

ComplexMatrix build_Q(const FieldSample& s) {
  ComplexMatrix q(kDim, kDim);
  for (std::size_t m = 0; m < 3; ++m) {
    q(2 * m, 6) = s[m];
    q(2 * m + 1, 6) = std::conj(s[m]);
    q(6, 2 * m) = -std::conj(s[m]);
    q(6, 2 * m + 1) = -s[m];
  }
  return q;
}

ComplexMatrix build_U(Complex lambda, const ComplexMatrix& Q) {
  return kI * lambda * sigma3() + Q;
}

ComplexMatrix build_V(Complex lambda, const ComplexMatrix& Q, const ComplexMatrix& Qx,
                      const ComplexMatrix& Qxx) {
  const ComplexMatrix& s3 = sigma3();
  const ComplexMatrix q2 = Q * Q;
  return 4.0 * kI * lambda * lambda * lambda * s3 + 4.0 * lambda * lambda * Q +
         2.0 * kI * lambda * ((q2 + Qx) * s3) + Qx * Q - Q * Qx - Qxx + 2.0 * (q2 * Q);
}

namespace {

template <class F>
auto sample_x(F&& g, double x, double h) {
  using T = decltype(g(x));
  std::array<T, 7> s{};
  for (int k = -3; k <= 3; ++k) {
    // Order-2 first/second derivatives only touch +-1, but third derivatives
    // need +-2 (order 2) or +-3 (order 4); sampling all seven keeps one path.
    s[static_cast<std::size_t>(k + 3)] = g(x + k * h);
  }
  return s;
}

std::array<ComplexMatrix, 7> to_q(const std::array<FieldSample, 7>& u) {
  return {build_Q(u[0]), build_Q(u[1]), build_Q(u[2]), build_Q(u[3]),
          build_Q(u[4]), build_Q(u[5]), build_Q(u[6])};
}

std::string grid_text(const GridSpec& g, const StencilSpec& st, const char* axes) {
  std::ostringstream os;
  os << axes << " [" << g.x_min << "," << g.x_max << "]x[" << g.t_min << "," << g.t_max << "], "
     << g.nx << "x" << g.nt << " points, order " << st.order << ", hx=" << st.hx
     << ", ht=" << st.ht;
  return os.str();
}

ResidualReport grid_report(const char* name, const GridSpec& grid, const StencilSpec& st,
                           const char* axes,
                           const std::function<FieldSample(double, double)>& at) {
  grid.validate();
  st.validate();
  std::vector<FieldSample> per_point(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const std::size_t j = idx / grid.nx, i = idx % grid.nx;
    per_point[idx] = at(grid.x(i), grid.t(j));
  });
  std::vector<double> mags;
  mags.reserve(3 * per_point.size());
  for (const auto& r : per_point)
    for (std::size_t m = 0; m < 3; ++m) mags.push_back(std::abs(r[m]));
  return make_report(name, mags, grid_text(grid, st, axes));
}

}  // namespace

double zero_curvature_residual(const FieldEvaluator& f, Complex lambda, double x, double t,
                               const StencilSpec& st) {
  st.validate();
  const auto ux = sample_x([&](double xx) { return f(xx, t); }, x, st.hx);
  const auto ut = sample_x([&](double tt) { return f(x, tt); }, t, st.ht);
  const auto qs = to_q(ux);
  const auto qts = to_q(ut);

  const ComplexMatrix& Q = qs[3];
  const ComplexMatrix Qx = apply_stencil(qs, 1, st.order, st.hx);
  const ComplexMatrix Qxx = apply_stencil(qs, 2, st.order, st.hx);
  const ComplexMatrix Qxxx = apply_stencil(qs, 3, st.order, st.hx);
  const ComplexMatrix Qt = apply_stencil(qts, 1, st.order, st.ht);

  const ComplexMatrix& s3 = sigma3();
  const Complex l = lambda;
  const ComplexMatrix q2 = Q * Q;
  const ComplexMatrix q2x = Qx * Q + Q * Qx;
  const ComplexMatrix Vx = 4.0 * l * l * Qx + 2.0 * kI * l * ((q2x + Qxx) * s3) + Qxx * Q - Q * Qxx -
                           Qxxx + 2.0 * (Qx * q2 + Q * Qx * Q + q2 * Qx);

  const ComplexMatrix U = build_U(l, Q);
  const ComplexMatrix V = build_V(l, Q, Qx, Qxx);
  return (Qt - Vx + commutator(U, V)).max_abs();
}

FieldSample tccss_residual_at(const FieldEvaluator& f, double x, double t, const StencilSpec& st) {
  const auto ux = sample_x([&](double xx) { return f(xx, t); }, x, st.hx);
  const auto ut = sample_x([&](double tt) { return f(x, tt); }, t, st.ht);
  std::array<double, 7> s{};
  for (std::size_t k = 0; k < 7; ++k) s[k] = ux[k].intensity();

  const FieldSample& u = ux[3];
  const FieldSample u_x = apply_stencil(ux, 1, st.order, st.hx);
  const FieldSample u_xxx = apply_stencil(ux, 3, st.order, st.hx);
  const FieldSample u_t = apply_stencil(ut, 1, st.order, st.ht);
  const double S = s[3];
  const double S_x = apply_stencil(s, 1, st.order, st.hx);
  return u_t + u_xxx + Complex(6.0 * S) * u_x + Complex(3.0 * S_x) * u;
}

ResidualReport pde_residual_tccss(const FieldEvaluator& f, const GridSpec& grid,
                                  const StencilSpec& st) {
  return grid_report("pde", grid, st, "(x,t)",
                     [&](double x, double t) { return tccss_residual_at(f, x, t, st); });
}

FieldEvaluator gauge_transformed(FieldEvaluator f) {
  return [f = std::move(f)](double X, double T) {
    const FieldSample u = f(X - T / 12.0, T);
    return u * std::exp(kI * ((X - T / 18.0) / 6.0));
  };
}

FieldSample cnls_residual_at(const FieldEvaluator& q, double X, double T, const StencilSpec& st) {
  const auto qx = sample_x([&](double xx) { return q(xx, T); }, X, st.hx);
  const auto qt = sample_x([&](double tt) { return q(X, tt); }, T, st.ht);
  std::array<double, 7> s{};
  for (std::size_t k = 0; k < 7; ++k) s[k] = qx[k].intensity();

  const FieldSample& v = qx[3];
  const FieldSample v_X = apply_stencil(qx, 1, st.order, st.hx);
  const FieldSample v_XX = apply_stencil(qx, 2, st.order, st.hx);
  const FieldSample v_XXX = apply_stencil(qx, 3, st.order, st.hx);
  const FieldSample v_T = apply_stencil(qt, 1, st.order, st.ht);
  const double S = s[3];
  const double S_X = apply_stencil(s, 1, st.order, st.hx);
  const FieldSample dispersive = v_XXX + Complex(6.0 * S) * v_X + Complex(3.0 * S_X) * v;
  return kI * v_T + Complex(0.5) * v_XX + Complex(S) * v + kI * dispersive;
}

ResidualReport gauge_transform_and_cnls_residual(const FieldEvaluator& f, const GridSpec& grid,
                                                 const StencilSpec& st) {
  const FieldEvaluator q = gauge_transformed(f);
  return grid_report("cnls", grid, st, "(X,T)",
                     [&](double X, double T) { return cnls_residual_at(q, X, T, st); });
}

}  // namespace tccss
