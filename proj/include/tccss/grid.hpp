#pragma once

#include <cstddef>

namespace tccss {

inline constexpr std::size_t kMaxGridPoints = 50'000'000;

/// Uniform rectangular (x, t) sampling. Rows are t-major, then x.
struct GridSpec {
  double x_min = -10.0;
  double x_max = 10.0;
  std::size_t nx = 201;
  double t_min = -2.0;
  double t_max = 2.0;
  std::size_t nt = 41;

  /// Throws ValidationError when the invariants are violated.
  void validate() const;

  std::size_t size() const { return nx * nt; }
  double x(std::size_t i) const;
  double t(std::size_t j) const;

  bool operator==(const GridSpec&) const = default;
};

}  // namespace tccss
