#pragma once

#include <array>
#include <cstddef>

namespace tccss {

/// Central-difference weights on offsets -3..3 (unused slots are zero).
/// derivative in {1, 2, 3}, order in {2, 4}; divide the weighted sum by h^derivative.
const std::array<double, 7>& central_weights(int derivative, int order);

/// Applies central_weights to samples taken at x0 + k h, k = -3..3.
template <class T>
T apply_stencil(const std::array<T, 7>& samples, int derivative, int order, double h) {
  const auto& w = central_weights(derivative, order);
  T acc = samples[0] * w[0];
  for (std::size_t k = 1; k < 7; ++k) acc = acc + samples[k] * w[k];
  double hp = h;
  for (int p = 1; p < derivative; ++p) hp *= h;
  return acc * (1.0 / hp);
}

}  // namespace tccss
