#include "tccss/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace tccss {

ResidualReport make_report(std::string name, std::span<const double> values, std::string grid) {
  ResidualReport r{std::move(name), 0.0, 0.0, std::move(grid), {}};
  double sum = 0.0, comp = 0.0;  // Kahan
  for (double v : values) {
    // std::max drops NaN; a non-finite sample must poison the report.
    if (!std::isfinite(v)) {
      r.max_abs = r.rms = std::numeric_limits<double>::infinity();
      return r;
    }
    r.max_abs = std::max(r.max_abs, std::abs(v));
    const double y = v * v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (!values.empty()) r.rms = std::sqrt(sum / static_cast<double>(values.size()));
  r.rms = std::min(r.rms, r.max_abs);
  return r;
}

}  // namespace tccss
