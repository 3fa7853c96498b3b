#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tccss/config.hpp"
#include "tccss/field.hpp"
#include "tccss/grid.hpp"

namespace tccss {

/// Fields on every grid node, t-major then x. Evaluated in parallel; each
/// node is written to its own slot, so the result does not depend on the
/// thread count.
std::vector<FieldSample> evaluate_grid(const FieldEvaluator& f, const GridSpec& grid);

inline constexpr const char* kCsvHeader =
    "x,t,re_u1,im_u1,re_u2,im_u2,re_u3,im_u3,abs_u1,abs_u2,abs_u3";

/// %.17g formatting, so values survive a text round trip exactly.
std::string format_real(double v);

void write_field_csv(std::ostream& os, const GridSpec& grid, const std::vector<FieldSample>& values);
void write_field_json(std::ostream& os, const GridSpec& grid, const std::vector<FieldSample>& values);

/// Evaluates the configured spectrum on the configured grid and writes
/// cfg.output in the chosen format. IoError (naming the path) on failure.
void export_grid(const RunConfig& cfg);

/// Writes `text` to `path`, replacing it. IoError on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tccss
