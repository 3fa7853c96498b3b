#include "tccss/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tccss/errors.hpp"
#include "tccss/parallel.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

std::vector<FieldSample> evaluate_grid(const FieldEvaluator& f, const GridSpec& grid) {
  grid.validate();
  std::vector<FieldSample> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const std::size_t j = idx / grid.nx, i = idx % grid.nx;
    out[idx] = f(grid.x(i), grid.t(j));
    if (!out[idx].finite()) {
      throw NonFiniteError("non-finite field at x=" + format_real(grid.x(i)) +
                           ", t=" + format_real(grid.t(j)));
    }
  });
  return out;
}

std::string format_real(double v) {
  // -0 prints as "-0"; normalize so that identical fields give identical text
  // regardless of the sign a particular evaluation path produced.
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& os, const GridSpec& grid, const std::vector<FieldSample>& values) {
  if (values.size() != grid.size()) throw SizingError("write_field_csv: value count does not match grid");
  os << kCsvHeader << '\n';
  std::string line;
  for (std::size_t j = 0; j < grid.nt; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const FieldSample& s = values[j * grid.nx + i];
      line = format_real(grid.x(i));
      line += ',';
      line += format_real(grid.t(j));
      for (std::size_t m = 0; m < 3; ++m) {
        line += ',';
        line += format_real(s[m].real());
        line += ',';
        line += format_real(s[m].imag());
      }
      for (std::size_t m = 0; m < 3; ++m) {
        line += ',';
        line += format_real(std::abs(s[m]));
      }
      os << line << '\n';
    }
  }
}

void write_field_json(std::ostream& os, const GridSpec& grid, const std::vector<FieldSample>& values) {
  if (values.size() != grid.size()) throw SizingError("write_field_json: value count does not match grid");
  // Hand-written rather than through a JSON DOM: the grid can hold 1e5
  // nodes and the number format must match the CSV exactly.
  auto axis = [&](const char* name, std::size_t n, auto coord) {
    os << "  \"" << name << "\": [";
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << format_real(coord(k));
    os << "]";
  };
  os << "{\n";
  os << "  \"grid\": {\"x_min\": " << format_real(grid.x_min) << ", \"x_max\": " << format_real(grid.x_max)
     << ", \"nx\": " << grid.nx << ", \"t_min\": " << format_real(grid.t_min)
     << ", \"t_max\": " << format_real(grid.t_max) << ", \"nt\": " << grid.nt << "},\n";
  axis("x", grid.nx, [&](std::size_t k) { return grid.x(k); });
  os << ",\n";
  axis("t", grid.nt, [&](std::size_t k) { return grid.t(k); });
  for (std::size_t m = 0; m < 3; ++m) {
    os << ",\n  \"u" << m + 1 << "\": [";
    for (std::size_t k = 0; k < values.size(); ++k) {
      os << (k ? "," : "") << '[' << format_real(values[k][m].real()) << ','
         << format_real(values[k][m].imag()) << ']';
    }
    os << "]";
  }
  os << "\n}\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path + ": write failed");
}

void export_grid(const RunConfig& cfg) {
  const auto values = evaluate_grid(make_evaluator(cfg.spectrum), cfg.grid);
  std::ostringstream os;
  if (cfg.output.format == OutputFormat::csv) {
    write_field_csv(os, cfg.grid, values);
  } else {
    write_field_json(os, cfg.grid, values);
  }
  write_text_file(cfg.output.path, os.str());
}

}  // namespace tccss
