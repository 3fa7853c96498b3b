#pragma once

#include <string>
#include <vector>

#include "tccss/config.hpp"
#include "tccss/report.hpp"

namespace tccss {

/// One thresholded residual. A check may produce several (rh_symmetry has
/// one per identity, scattering one per quantity); names are
/// "check" or "check/part".
struct CheckOutcome {
  std::string check;
  ResidualReport report;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyResult {
  std::vector<CheckOutcome> outcomes;  // fixed check order

  bool success() const;
};

/// Runs cfg.checks in canonical order. A module error inside a check is
/// rethrown as CheckError carrying the check name.
VerifyResult run_verify(const RunConfig& cfg);

/// Report document: spectrum, thresholds and every outcome.
std::string verify_to_json(const VerifyResult& result, const RunConfig& cfg);

}  // namespace tccss
