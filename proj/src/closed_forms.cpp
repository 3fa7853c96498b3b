#include <cmath>

#include "tccss/errors.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

namespace {

double polarization_norm2(Complex a, Complex g, Complex r) {
  return std::norm(a) + std::norm(g) + std::norm(r);
}

double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace

FieldSample one_soliton_closed_form(Complex alpha1, Complex gamma1, Complex rho1, double eta1,
                                    double x, double t) {
  if (eta1 == 0.0) throw ValidationError("one-soliton requires eta1 != 0");
  const double s = polarization_norm2(alpha1, gamma1, rho1);
  if (s == 0.0) throw DegenerateSeedError("one-soliton seed (alpha1, gamma1, rho1) is zero");
  const double arg = -2.0 * eta1 * x + 8.0 * eta1 * eta1 * eta1 * t + std::log(std::sqrt(2.0 * s));
  const double amp = -std::sqrt(2.0) * eta1 / std::sqrt(s) * sech(arg);
  return FieldSample{{alpha1 * amp, gamma1 * amp, rho1 * amp}};
}

FieldSample breather_closed_form(Complex alpha1, Complex gamma1, Complex rho1, double xi1,
                                 double eta1, double x, double t) {
  if (xi1 == 0.0) throw ValidationError("breather requires xi1 != 0");
  if (!(eta1 > 0.0)) throw ValidationError("breather requires eta1 > 0");
  const double s = polarization_norm2(alpha1, gamma1, rho1);
  if (s == 0.0) throw DegenerateSeedError("breather seed (alpha1, gamma1, rho1) is zero");

  const double X = -2.0 * eta1 * (x + 4.0 * (3.0 * xi1 * xi1 - eta1 * eta1) * t) +
                   std::log(std::sqrt(2.0 * s));
  const double Y = 2.0 * xi1 * (x + 4.0 * (xi1 * xi1 - 3.0 * eta1 * eta1) * t);

  // (xi cosh X cos Y + eta sinh X sin Y) / (xi^2 cosh^2 X + eta^2 sin^2 Y),
  // with numerator and denominator divided by cosh^2 X so |X| > 355 stays finite.
  const double sx = sech(X);
  const double num = sx * (xi1 * std::cos(Y) + eta1 * std::tanh(X) * std::sin(Y));
  const double sy = std::sin(Y) * sx;
  const double den = xi1 * xi1 + eta1 * eta1 * sy * sy;
  const double amp = -2.0 * std::sqrt(2.0) * xi1 * eta1 / std::sqrt(s) * num / den;
  return FieldSample{{alpha1 * amp, gamma1 * amp, rho1 * amp}};
}

FieldSample two_soliton_closed_form(const TypeIISeed& seed1, const TypeIISeed& seed2,
                                    Complex lambda1, Complex lambda2, double x, double t) {
  for (Complex l : {lambda1, lambda2}) {
    if (l.real() != 0.0 || !(l.imag() > 0.0)) {
      throw ValidationError("two-soliton zeros must be pure imaginary in the upper half-plane");
    }
  }
  if (lambda1 == lambda2) throw ValidationError("two-soliton zeros coincide");

  const Complex th1 = theta(lambda1, x, t);
  const Complex th2 = theta(lambda2, x, t);
  const Complex c1 = std::conj(th1);
  const Complex c2 = std::conj(th2);

  const double s1 = polarization_norm2(seed1.alpha, seed1.gamma, seed1.rho);
  const double s2 = polarization_norm2(seed2.alpha, seed2.gamma, seed2.rho);
  const Complex cross = std::conj(seed1.alpha) * seed2.alpha + seed1.alpha * std::conj(seed2.alpha) +
                        std::conj(seed1.gamma) * seed2.gamma + seed1.gamma * std::conj(seed2.gamma) +
                        std::conj(seed1.rho) * seed2.rho + seed1.rho * std::conj(seed2.rho);

  const Complex t11 = (2.0 * s1 * std::exp(th1 + c1) + std::exp(-th1 - c1)) / (lambda1 - std::conj(lambda1));
  const Complex t12 = (cross * std::exp(c1 + th2) + std::exp(-c1 - th2)) / (lambda2 - std::conj(lambda1));
  const Complex t21 = (cross * std::exp(th1 + c2) + std::exp(-th1 - c2)) / (lambda1 - std::conj(lambda2));
  // The second soliton's own norm, not the first's.
  const Complex t22 = (2.0 * s2 * std::exp(th2 + c2) + std::exp(-th2 - c2)) / (lambda2 - std::conj(lambda2));

  const Complex d = t11 * t22 - t12 * t21;
  const Complex i11 = t22 / d, i12 = -t12 / d, i21 = -t21 / d, i22 = t11 / d;

  const Complex w1 = std::exp(th1 - c1) * i11 + std::exp(th1 - c2) * i12;
  const Complex w2 = std::exp(th2 - c1) * i21 + std::exp(th2 - c2) * i22;
  const Complex f = 2.0 * kI;
  return FieldSample{{f * (seed1.alpha * w1 + seed2.alpha * w2),
                      f * (seed1.gamma * w1 + seed2.gamma * w2),
                      f * (seed1.rho * w1 + seed2.rho * w2)}};
}

}  // namespace tccss
