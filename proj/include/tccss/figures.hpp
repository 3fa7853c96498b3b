#pragma once

#include <string>

#include "tccss/config.hpp"

namespace tccss {

/// Built-in parameter sets:
///   1  breather, TypeI N = 1, lambda = 0.5 + 0.5i
///   2  TypeI N = 2, lambda = 0.5 + 0.5i, 0.4 + 0.6i
///   3  bright one-soliton, TypeII lambda = i, seed (1, 2, 3)
///   4  TypeII two-soliton, lambda = 0.3i, 0.5i
/// ValidationError for any other id.
RunConfig figure_config(int id);

/// Max |closed form - eval_fields| over the figure grid; negative for
/// figure 2, which has no closed form.
double figure_closed_form_deviation(int id, const GridSpec& grid);

struct FigureFiles {
  std::string csv;
  std::string sidecar;
};

/// Writes figure<id>.csv (field grid) and figure<id>.json (parameters, pde
/// residual report, closed-form deviation, notes) into out_dir, creating it
/// if needed.
FigureFiles run_figure(int id, const std::string& out_dir);

}  // namespace tccss
