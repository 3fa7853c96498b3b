#pragma once

#include <array>
#include <complex>

namespace tccss {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dimension of the Lax/RH matrices (six field slots plus one).
inline constexpr std::size_t kDim = 7;

/// Seven-component complex vector (kernel vectors, seeds).
using Vec7 = std::array<Complex, kDim>;

}  // namespace tccss
