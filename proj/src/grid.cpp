#include "tccss/grid.hpp"

#include <cmath>
#include <initializer_list>
#include <string>

#include "tccss/errors.hpp"

namespace tccss {

void GridSpec::validate() const {
  for (double v : {x_min, x_max, t_min, t_max})
    if (!std::isfinite(v)) throw ValidationError("grid: bounds must be finite");
  if (!(x_min < x_max)) throw ValidationError("grid: x_min must be < x_max");
  if (nx < 2) throw ValidationError("grid: nx must be >= 2");
  if (!(t_min <= t_max)) throw ValidationError("grid: t_min must be <= t_max");
  if (nt < 1) throw ValidationError("grid: nt must be >= 1");
  // Guards the allocation in grid evaluation; desk-scale grids are far below.
  if (nx > kMaxGridPoints || nt > kMaxGridPoints || nx * nt > kMaxGridPoints)
    throw ValidationError("grid: more than " + std::to_string(kMaxGridPoints) + " points");
  if (nt == 1 && t_min != t_max) throw ValidationError("grid: nt = 1 requires t_min == t_max");
}

double GridSpec::x(std::size_t i) const {
  return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double GridSpec::t(std::size_t j) const {
  if (nt == 1) return t_min;
  return t_min + (t_max - t_min) * static_cast<double>(j) / static_cast<double>(nt - 1);
}


}  // namespace tccss
