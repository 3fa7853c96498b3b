#include "tccss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tccss/errors.hpp"
#include "tccss/lax.hpp"
#include "tccss/rhp.hpp"
#include "tccss/scattering.hpp"
#include "tccss/soliton.hpp"

namespace tccss {

namespace {

// Fixed so that every run samples the same points.
constexpr std::uint32_t kSampleSeed = 20240607u;

std::string show(Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

CheckOutcome judge(std::string name, ResidualReport r, double threshold) {
  const bool ok = std::isfinite(r.max_abs) && r.max_abs < threshold;
  return {std::move(name), std::move(r), threshold, ok};
}

struct Point {
  double x, t;
};

// Interior points: the grid centre plus `extra` uniform draws from the middle
// half of the grid.
std::vector<Point> probe_points(const GridSpec& g, std::size_t extra, std::mt19937& rng) {
  const double xc = 0.5 * (g.x_min + g.x_max), tc = 0.5 * (g.t_min + g.t_max);
  const double xw = 0.25 * (g.x_max - g.x_min), tw = 0.25 * (g.t_max - g.t_min);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts{{xc, tc}};
  for (std::size_t k = 0; k < extra; ++k) {
    const double x = xc + xw * u(rng);
    const double t = tc + tw * u(rng);
    pts.push_back({x, t});
  }
  return pts;
}

std::vector<CheckOutcome> zero_curvature_check(const RunConfig& cfg, const FieldEvaluator& f) {
  std::mt19937 rng(kSampleSeed);
  const GridSpec& g = cfg.grid;
  std::uniform_real_distribution<double> ux(g.x_min, g.x_max), ut(g.t_min, g.t_max);
  std::uniform_real_distribution<double> lr(-2.0, 2.0), li(-1.0, 1.0);
  std::vector<double> vals;
  std::vector<std::string> notes;
  for (int k = 0; k < 5; ++k) {
    const double x = ux(rng);
    const double t = ut(rng);
    const double a = lr(rng);
    const double b = li(rng);
    const Complex l{a, b};
    vals.push_back(zero_curvature_residual(f, l, x, t, cfg.stencil));
    std::ostringstream os;
    os << "x=" << x << " t=" << t << " lambda=" << show(l) << " residual=" << vals.back();
    notes.push_back(os.str());
  }
  ResidualReport r = make_report("zero_curvature", vals, "5 random (x,t,lambda) points in the grid box");
  r.notes = std::move(notes);
  return {judge("zero_curvature", std::move(r), cfg.thresholds.zero_curvature)};
}

std::vector<CheckOutcome> rh_symmetry_check(const RunConfig& cfg) {
  std::mt19937 rng(kSampleSeed + 1);
  const auto pts = probe_points(cfg.grid, 2, rng);

  std::vector<Complex> samples;
  for (int k = 0; k < 20; ++k) samples.emplace_back(-3.0 + 6.0 * k / 19.0, 0.0);
  const auto zeros = cfg.spectrum.expanded_zeros();
  for (Complex l : {Complex(0.7, 0.9), Complex(-1.1, 0.4), Complex(0.3, -0.8), Complex(-0.5, -1.6)}) {
    // Stay clear of the poles of P1 and P2 at conj(lambda_j), lambda_j and
    // of their images under l -> -conj(l) used by the sigma identity.
    bool near = false;
    for (Complex z : zeros) {
      for (Complex p : {z, std::conj(z), -z, -std::conj(z)}) near = near || std::abs(l - p) < 1e-2;
    }
    if (!near) samples.push_back(l);
  }

  std::vector<ResidualReport> merged;
  for (const Point& p : pts) {
    auto reps = check_symmetries(cfg.spectrum, p.x, p.t, samples);
    if (merged.empty()) {
      merged = std::move(reps);
      continue;
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      merged[i].max_abs = std::max(merged[i].max_abs, reps[i].max_abs);
      merged[i].rms = std::max(merged[i].rms, reps[i].rms);
      for (auto& n : reps[i].notes)
        if (std::find(merged[i].notes.begin(), merged[i].notes.end(), n) == merged[i].notes.end())
          merged[i].notes.push_back(n);
    }
  }
  std::ostringstream where;
  where << pts.size() << " (x,t) points, " << samples.size() << " lambda samples (20 real in [-3,3])";
  std::vector<CheckOutcome> out;
  for (auto& r : merged) {
    r.grid = where.str();
    const std::string name = "rh_symmetry/" + r.name;
    out.push_back(judge(name, std::move(r), cfg.thresholds.rh_symmetry));
  }
  return out;
}

bool carries_potential(const Vec7& seed) {
  for (std::size_t i = 0; i < 6; ++i)
    if (seed[i] != Complex(0.0)) return true;
  return false;
}

std::vector<CheckOutcome> scattering_check(const RunConfig& cfg, const FieldEvaluator& f) {
  const ScatteringSettings& sc = cfg.scattering;
  const auto zeros = cfg.spectrum.expanded_zeros();
  const auto seeds = cfg.spectrum.expanded_seeds();
  if (!sc.seeds.empty() && sc.seeds.size() != zeros.size()) {
    throw ValidationError("scattering.seeds has " + std::to_string(sc.seeds.size()) +
                          " entries, expected one per expanded zero (" + std::to_string(zeros.size()) +
                          ")");
  }
  std::ostringstream where;
  where << "x in [" << sc.domain.x_min << "," << sc.domain.x_max << "], " << sc.domain.n_steps
        << " RK4 steps, t=" << sc.t;

  std::vector<double> zero_err;
  std::vector<std::string> zero_notes;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    // A zero whose seed has no upper components contributes nothing to Q; it
    // is not an eigenvalue of the resulting potential.
    if (!carries_potential(seeds[j])) {
      zero_notes.push_back("zero " + std::to_string(j + 1) + " (" + show(zeros[j]) +
                           "): seed has no field components, not an eigenvalue; skipped");
      continue;
    }
    const Complex start = sc.seeds.empty() ? Complex(zeros[j].real(), 0.9 * zeros[j].imag()) : sc.seeds[j];
    const Complex found = locate_spectral_zero(f, sc.t, start, sc.domain);
    zero_err.push_back(std::abs(found - zeros[j]));
    zero_notes.push_back("zero " + std::to_string(j + 1) + ": expected " + show(zeros[j]) + ", recovered " +
                         show(found) + " from seed " + show(start));
  }
  ResidualReport rz = make_report("zeros", zero_err, where.str());
  rz.notes = std::move(zero_notes);

  std::vector<double> refl, dets;
  std::vector<std::string> refl_notes;
  for (double l : sc.real_lambdas) {
    const ScatteringData d = scattering_matrix(f, sc.t, l, sc.domain);
    double m = 0.0;
    for (std::size_t k = 0; k < 6; ++k) m = std::max(m, std::abs(d.omega(k, 6)));
    refl.push_back(m);
    dets.push_back(d.max_det_deviation);
    std::ostringstream os;
    os << "lambda=" << l << ": max|Omega_k7|=" << m << ", |Omega_77|=" << std::abs(d.omega(6, 6))
       << ", max|det Psi - 1|=" << d.max_det_deviation;
    refl_notes.push_back(os.str());
  }
  ResidualReport rr = make_report("reflection", refl, where.str());
  rr.notes = refl_notes;
  ResidualReport rd = make_report("det", dets, where.str());

  ResidualReport ri =
      scattering_evolution_check(f, sc.evolution_lambda, sc.t, sc.t + sc.evolution_dt, sc.domain);

  const Thresholds& th = cfg.thresholds;
  return {judge("scattering/zeros", std::move(rz), th.scattering_zero),
          judge("scattering/reflection", std::move(rr), th.reflection),
          judge("scattering/det", std::move(rd), th.det),
          judge("scattering/isospectral", std::move(ri), th.isospectral)};
}

}  // namespace

bool VerifyResult::success() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.passed; });
}

VerifyResult run_verify(const RunConfig& cfg) {
  cfg.spectrum.validate();
  cfg.grid.validate();
  cfg.stencil.validate();
  const FieldEvaluator f = make_evaluator(cfg.spectrum);
  VerifyResult res;
  for (Check c : cfg.checks) {
    const char* name = check_name(c);
    try {
      std::vector<CheckOutcome> got;
      switch (c) {
        case Check::pde:
          got.push_back(judge("pde", pde_residual_tccss(f, cfg.grid, cfg.stencil), cfg.thresholds.pde));
          break;
        case Check::cnls:
          got.push_back(judge("cnls", gauge_transform_and_cnls_residual(f, cfg.grid, cfg.stencil),
                              cfg.thresholds.cnls));
          break;
        case Check::zero_curvature: got = zero_curvature_check(cfg, f); break;
        case Check::rh_symmetry: got = rh_symmetry_check(cfg); break;
        case Check::scattering: got = scattering_check(cfg, f); break;
      }
      for (auto& o : got) res.outcomes.push_back(std::move(o));
    } catch (const CheckError&) {
      throw;
    } catch (const Error& e) {
      throw CheckError(name, e.what());
    }
  }
  return res;
}

std::string verify_to_json(const VerifyResult& result, const RunConfig& cfg) {
  using nlohmann::json;
  auto num = [](double v) -> json {
    // JSON has no infinity; keep the information as a string.
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  };
  json checks = json::array();
  for (const CheckOutcome& o : result.outcomes) {
    checks.push_back({{"check", o.check},
                      {"max_abs", num(o.report.max_abs)},
                      {"rms", num(o.report.rms)},
                      {"threshold", o.threshold},
                      {"passed", o.passed},
                      {"sampled", o.report.grid},
                      {"notes", o.report.notes}});
  }
  json doc;
  doc["success"] = result.success();
  doc["config"] = json::parse(serialize_config(cfg));
  doc["checks"] = checks;
  return doc.dump(2);
}

}  // namespace tccss
