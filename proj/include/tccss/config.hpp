#pragma once

// Run configuration: a JSON document describing the spectrum, the sampling
// grid, the finite-difference stencil, which checks to run and where output
// goes. Complex numbers are encoded as two-element arrays [re, im]. See
// docs/config_schema.md for the schema and worked examples.

#include <string>
#include <string_view>
#include <vector>

#include "tccss/grid.hpp"
#include "tccss/lax.hpp"
#include "tccss/scattering.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

enum class Check { pde, cnls, zero_curvature, rh_symmetry, scattering };

const char* check_name(Check c);

enum class OutputFormat { csv, json };

struct OutputSpec {
  std::string path = "fields.csv";
  OutputFormat format = OutputFormat::csv;

  bool operator==(const OutputSpec&) const = default;
};

/// Parameters of the direct-scattering check.
struct ScatteringSettings {
  ScatteringDomain domain;
  double t = 0.0;
  /// Secant seeds, one per expanded zero; empty means lambda_j with the
  /// imaginary part scaled by 0.9.
  std::vector<Complex> seeds;
  std::vector<double> real_lambdas{0.3, 1.0, 2.0};
  double evolution_lambda = 0.8;
  double evolution_dt = 0.2;

  bool operator==(const ScatteringSettings&) const = default;
};

/// Pass/fail bounds applied by `verify`; every one is written to the report.
struct Thresholds {
  double pde = 1e-4;
  double cnls = 1e-4;
  double zero_curvature = 1e-6;
  double rh_symmetry = 1e-10;
  double scattering_zero = 1e-5;
  double reflection = 1e-6;
  double det = 1e-8;
  double isospectral = 1e-6;

  bool operator==(const Thresholds&) const = default;
};

struct RunConfig {
  SpectrumConfig spectrum;
  GridSpec grid;
  StencilSpec stencil;
  std::vector<Check> checks;  // canonical order, no duplicates
  OutputSpec output;
  ScatteringSettings scattering;
  Thresholds thresholds;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a configuration document. Throws ParseError (with a
/// JSON path such as "$.spectrum.zeros[0]") for schema violations and
/// ValidationError for invariant violations.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; IoError if it cannot be read.
RunConfig load_config(const std::string& path);

/// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace tccss
