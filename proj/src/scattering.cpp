#include "tccss/scattering.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "tccss/errors.hpp"
#include <algorithm>
#include <functional>

namespace tccss {

namespace {

using Mat7 = std::array<Complex, kDim * kDim>;

constexpr std::size_t at(std::size_t r, std::size_t c) { return r * kDim + c; }

Mat7 identity7() {
  Mat7 m{};
  for (std::size_t i = 0; i < kDim; ++i) m[at(i, i)] = 1.0;
  return m;
}

ComplexMatrix to_matrix(const Mat7& m) {
  return ComplexMatrix(kDim, kDim, std::vector<Complex>(m.begin(), m.end()));
}

// The column vector (u1, conj u1, ..., conj u3) occupying Q's seventh column.
using Col6 = std::array<Complex, 6>;

Col6 potential_column(const FieldSample& s) {
  return {s[0], std::conj(s[0]), s[1], std::conj(s[1]), s[2], std::conj(s[2])};
}

// i l [sigma3, Psi] + Q Psi with Q = [[0, a], [-a^dagger, 0]].
Mat7 rhs(Complex lambda, const Col6& a, const Mat7& psi) {
  Mat7 d{};
  const Complex two_il = 2.0 * kI * lambda;
  for (std::size_t c = 0; c < kDim; ++c) {
    const Complex last = psi[at(6, c)];
    Complex row7 = 0.0;
    for (std::size_t r = 0; r < 6; ++r) {
      d[at(r, c)] = a[r] * last;
      row7 -= std::conj(a[r]) * psi[at(r, c)];
    }
    d[at(6, c)] = row7;
  }
  for (std::size_t r = 0; r < 6; ++r) {
    d[at(r, 6)] += two_il * psi[at(r, 6)];
    d[at(6, r)] -= two_il * psi[at(6, r)];
  }
  return d;
}

Mat7 axpy(const Mat7& y, Complex s, const Mat7& x) {
  Mat7 out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = y[i] + s * x[i];
  return out;
}

struct Propagation {
  Mat7 end;
  double max_det_deviation = 0.0;
};

// Classical RK4 from the side's endpoint. `only_last_column` restricts the
// initial data to e_7 (columns evolve independently).
Propagation propagate(const FieldEvaluator& f, double t, Complex lambda, const ScatteringDomain& dom,
                      JostSide side, bool only_last_column, bool track_det,
                      const std::function<void(std::size_t, double, const Mat7&)>& observe) {
  const double h = (side == JostSide::minus ? 1.0 : -1.0) * dom.step();
  double x = side == JostSide::minus ? dom.x_min : dom.x_max;
  Mat7 psi = identity7();
  if (only_last_column) {
    psi = Mat7{};
    psi[at(6, 6)] = 1.0;
  }
  Propagation out;
  Col6 a0 = potential_column(f(x, t));
  if (observe) observe(0, x, psi);
  for (std::size_t n = 1; n <= dom.n_steps; ++n) {
    const double x_next = side == JostSide::minus ? dom.x_min + static_cast<double>(n) * dom.step()
                                                  : dom.x_max - static_cast<double>(n) * dom.step();
    const Col6 a_half = potential_column(f(x + 0.5 * h, t));
    const Col6 a1 = potential_column(f(x_next, t));
    const Mat7 k1 = rhs(lambda, a0, psi);
    const Mat7 k2 = rhs(lambda, a_half, axpy(psi, 0.5 * h, k1));
    const Mat7 k3 = rhs(lambda, a_half, axpy(psi, 0.5 * h, k2));
    const Mat7 k4 = rhs(lambda, a1, axpy(psi, h, k3));
    for (std::size_t i = 0; i < psi.size(); ++i)
      psi[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    x = x_next;
    a0 = a1;
    if (track_det) {
      out.max_det_deviation =
          std::max(out.max_det_deviation, std::abs(det(to_matrix(psi)) - 1.0));
    }
    if (observe) observe(n, x, psi);
  }
  out.end = psi;
  return out;
}

void check_endpoints(const FieldEvaluator& f, double t, const ScatteringDomain& dom) {
  for (double x : {dom.x_min, dom.x_max}) {
    const FieldSample s = f(x, t);
    const double m = std::max({std::abs(s[0]), std::abs(s[1]), std::abs(s[2])});
    if (!(m < kEndpointDecay)) {
      std::ostringstream os;
      os << "potential is " << m << " at x = " << x << " (t = " << t
         << "); widen the integration window";
      throw DomainTooSmallError(os.str());
    }
  }
}

std::string show(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

void ScatteringDomain::validate() const {
  if (!(x_min < x_max)) throw ValidationError("scattering domain: x_min must be < x_max");
  if (n_steps < 100) throw ValidationError("scattering domain: n_steps must be >= 100");
}

JostSolution integrate_jost(const FieldEvaluator& f, double t, Complex lambda,
                            const ScatteringDomain& domain, JostSide side, std::size_t stride) {
  domain.validate();
  check_endpoints(f, t, domain);
  if (stride == 0) stride = 1;
  JostSolution sol;
  sol.lambda = lambda;
  sol.x_min = domain.x_min;
  sol.x_max = domain.x_max;
  sol.side = side;
  const auto observe = [&](std::size_t n, double x, const Mat7& psi) {
    if (n % stride == 0 || n == domain.n_steps) {
      sol.xs.push_back(x);
      sol.values.push_back(to_matrix(psi));
    }
  };
  const Propagation p = propagate(f, t, lambda, domain, side, false, true, observe);
  sol.max_det_deviation = p.max_det_deviation;
  if (side == JostSide::plus) {
    std::reverse(sol.xs.begin(), sol.xs.end());
    std::reverse(sol.values.begin(), sol.values.end());
  }
  return sol;
}

ScatteringData scattering_matrix(const FieldEvaluator& f, double t, Complex lambda,
                                 const ScatteringDomain& domain) {
  if (lambda.imag() < 0.0) {
    throw UnsupportedHalfPlaneError("scattering data is only available for Im(lambda) >= 0");
  }
  domain.validate();
  check_endpoints(f, t, domain);
  const bool complex_lambda = lambda.imag() > 0.0;
  const Propagation p =
      propagate(f, t, lambda, domain, JostSide::minus, complex_lambda, !complex_lambda, {});

  // Psi_+(x_max) = I, so Omega is the conjugated Psi_-(x_max).
  static constexpr std::array<double, kDim> s{1, 1, 1, 1, 1, 1, -1};
  ScatteringData out;
  out.lambda = lambda;
  out.analytic_entries_only = complex_lambda;
  out.max_det_deviation = p.max_det_deviation;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c)
      out.omega(r, c) = std::exp(-kI * lambda * (s[r] - s[c]) * domain.x_max) * p.end[at(r, c)];
  if (!complex_lambda) {
    const ComplexMatrix psi = to_matrix(p.end);
    out.unitarity_deviation = (psi.adjoint() * psi - ComplexMatrix::identity(kDim)).max_abs();
  }
  return out;
}

Complex locate_spectral_zero(const FieldEvaluator& f, double t, Complex seed,
                             const ScatteringDomain& domain) {
  if (!(seed.imag() > 0.0)) throw ValidationError("spectral zero seed must lie in the upper half-plane");
  auto omega77 = [&](Complex l) { return scattering_matrix(f, t, l, domain).omega(6, 6); };

  std::vector<std::string> trace;
  Complex l0 = seed;
  Complex l1 = seed + kI * (1e-3 * std::max(1.0, std::abs(seed)));
  Complex g0 = omega77(l0);
  Complex g1 = omega77(l1);
  trace.push_back("lambda=" + show(l0) + " |Omega77|=" + std::to_string(std::abs(g0)));
  trace.push_back("lambda=" + show(l1) + " |Omega77|=" + std::to_string(std::abs(g1)));
  for (int it = 0; it < 50; ++it) {
    if (std::abs(g1) < 1e-8) return l1;
    const Complex dg = g1 - g0;
    if (std::abs(dg) == 0.0) throw SearchFailedError("Omega77 is flat near the seed; no zero found", trace);
    const Complex step = -g1 * (l1 - l0) / dg;
    Complex l2 = l1 + step;
    if (!(l2.imag() > 0.0)) {
      trace.push_back("iterate left the upper half-plane at " + show(l2));
      throw SearchFailedError("secant iteration left the upper half-plane", trace);
    }
    l0 = l1;
    g0 = g1;
    l1 = l2;
    g1 = omega77(l1);
    trace.push_back("lambda=" + show(l1) + " |Omega77|=" + std::to_string(std::abs(g1)));
    if (std::abs(step) < 1e-10) return l1;
  }
  throw SearchFailedError("secant iteration did not converge in 50 steps", trace);
}

ResidualReport scattering_evolution_check(const FieldEvaluator& f, double lambda, double t0,
                                          double t1, const ScatteringDomain& domain) {
  const ScatteringData a = scattering_matrix(f, t0, lambda, domain);
  const ScatteringData b = scattering_matrix(f, t1, lambda, domain);
  const Complex phase = std::exp(8.0 * kI * lambda * lambda * lambda * (t1 - t0));
  std::vector<double> values;
  double off_max = 0.0;
  for (std::size_t k = 0; k < 6; ++k) {
    values.push_back(std::abs(b.omega(k, 6) - phase * a.omega(k, 6)));
    off_max = std::max(off_max, std::abs(a.omega(k, 6)));
  }
  const double diag = std::abs(b.omega(6, 6) - a.omega(6, 6));
  values.push_back(diag);

  std::ostringstream where;
  where << "lambda=" << lambda << ", t0=" << t0 << ", t1=" << t1 << ", window [" << domain.x_min
        << "," << domain.x_max << "] with " << domain.n_steps << " steps";
  ResidualReport r = make_report("scattering_evolution", values, where.str());
  std::ostringstream d;
  d.precision(3);
  d << "Omega77 invariance residual " << std::scientific << diag;
  r.notes.push_back(d.str());
  if (off_max < 1e-8) r.notes.push_back("vacuous: |Omega_k7(t0)| < 1e-8 for all k (reflectionless)");
  return r;
}

}  // namespace tccss
