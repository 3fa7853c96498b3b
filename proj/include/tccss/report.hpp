#pragma once

#include <span>
#include <string>
#include <vector>

namespace tccss {

/// Named residual norm with a description of where it was sampled.
struct ResidualReport {
  std::string name;
  double max_abs = 0.0;
  double rms = 0.0;
  std::string grid;
  std::vector<std::string> notes;
};

/// Builds a report from per-sample magnitudes. Summation order is the order
/// of `values`, so identical inputs give identical bits.
ResidualReport make_report(std::string name, std::span<const double> values, std::string grid);

}  // namespace tccss
