#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "tccss/types.hpp"

namespace tccss {

/// The complex triple (u1, u2, u3) at one space-time point.
struct FieldSample {
  std::array<Complex, 3> u{};

  Complex& operator[](std::size_t m) { return u[m]; }
  const Complex& operator[](std::size_t m) const { return u[m]; }

  /// |u1|^2 + |u2|^2 + |u3|^2
  double intensity() const { return std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]); }
  bool finite() const {
    for (const auto& z : u)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  FieldSample& operator+=(const FieldSample& o) {
    for (std::size_t m = 0; m < 3; ++m) u[m] += o.u[m];
    return *this;
  }
  FieldSample& operator-=(const FieldSample& o) {
    for (std::size_t m = 0; m < 3; ++m) u[m] -= o.u[m];
    return *this;
  }
  FieldSample& operator*=(Complex s) {
    for (auto& z : u) z *= s;
    return *this;
  }
  friend FieldSample operator+(FieldSample a, const FieldSample& b) { return a += b; }
  friend FieldSample operator-(FieldSample a, const FieldSample& b) { return a -= b; }
  friend FieldSample operator*(FieldSample a, Complex s) { return a *= s; }
  friend FieldSample operator*(Complex s, FieldSample a) { return a *= s; }
};

/// max_m |a_m - b_m|
inline double max_abs_diff(const FieldSample& a, const FieldSample& b) {
  double d = 0.0;
  for (std::size_t m = 0; m < 3; ++m) d = std::max(d, std::abs(a[m] - b[m]));
  return d;
}

/// Pure map (x, t) -> (u1, u2, u3). Must be safe to call concurrently.
using FieldEvaluator = std::function<FieldSample(double x, double t)>;

}  // namespace tccss
