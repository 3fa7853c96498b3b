#include "tccss/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tccss/config.hpp"
#include "tccss/errors.hpp"
#include "tccss/export.hpp"
#include "tccss/figures.hpp"
#include "tccss/parallel.hpp"
#include "tccss/scattering.hpp"
#include "tccss/soliton.hpp"
#include "tccss/verify.hpp"

namespace tccss {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw ValidationError("--lambda-re: " + what + " \"" + s + "\" is not a finite number");
  return v;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int do_generate(const std::string& config, const std::string& out_path, std::ostream& out) {
  RunConfig cfg = load_config(config);
  if (!out_path.empty()) {
    cfg.output.path = out_path;
    cfg.output.format = ends_with(out_path, ".json") ? OutputFormat::json : OutputFormat::csv;
  }
  export_grid(cfg);
  out << "wrote " << cfg.output.path << " (" << cfg.grid.size() << " points)\n";
  return kExitOk;
}

int do_verify(const std::string& config, const std::string& json_path, std::ostream& out,
              std::ostream& err) {
  const RunConfig cfg = load_config(config);
  VerifyResult res;
  try {
    res = run_verify(cfg);
  } catch (const CheckError& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  const std::string doc = verify_to_json(res, cfg) + "\n";
  if (json_path.empty()) {
    out << doc;
  } else {
    write_text_file(json_path, doc);
    for (const CheckOutcome& o : res.outcomes) {
      out << (o.passed ? "PASS " : "FAIL ") << o.check << " max_abs=" << o.report.max_abs
          << " threshold=" << o.threshold << '\n';
    }
  }
  return res.success() ? kExitOk : kExitCheckFailed;
}

int do_figure(int id, const std::string& out_dir, std::ostream& out) {
  const FigureFiles files = run_figure(id, out_dir);
  out << "wrote " << files.csv << " and " << files.sidecar << '\n';
  return kExitOk;
}

int do_scatter(const std::string& config, const std::string& sweep, const std::string& out_path,
               std::ostream& out) {
  const RunConfig cfg = load_config(config);
  const std::vector<double> lambdas = parse_sweep(sweep);
  const FieldEvaluator f = make_evaluator(cfg.spectrum);
  std::vector<ScatteringData> data(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t k) {
    data[k] = scattering_matrix(f, cfg.scattering.t, lambdas[k], cfg.scattering.domain);
  });

  std::ostringstream csv;
  csv << "lambda_re,abs_omega77";
  for (int k = 1; k <= 6; ++k) csv << ",abs_omega" << k << "7";
  for (int k = 1; k <= 6; ++k) csv << ",abs_omega7" << k;
  csv << ",det_deviation\n";
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    const ComplexMatrix& om = data[n].omega;
    csv << format_real(lambdas[n]) << ',' << format_real(std::abs(om(6, 6)));
    for (std::size_t k = 0; k < 6; ++k) csv << ',' << format_real(std::abs(om(k, 6)));
    for (std::size_t k = 0; k < 6; ++k) csv << ',' << format_real(std::abs(om(6, k)));
    csv << ',' << format_real(data[n].max_det_deviation) << '\n';
  }
  write_text_file(out_path, csv.str());
  out << "wrote " << out_path << " (" << lambdas.size() << " lambda values)\n";
  return kExitOk;
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw ValidationError("--lambda-re: expected a:b:n, got \"" + text + "\"");
  const double a = parse_number(text.substr(0, c1), "start");
  const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "end");
  const std::string ns = text.substr(c2 + 1);
  if (ns.empty() || !std::all_of(ns.begin(), ns.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
      ns.size() > 7)
    throw ValidationError("--lambda-re: count \"" + ns + "\" must be an integer in 1..1000000");
  const std::size_t n = std::stoul(ns);
  if (n < 1 || n > 1000000) throw ValidationError("--lambda-re: count must be in 1..1000000");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"Multi-soliton solutions of the three-component coupled Sasa-Satsuma equation", "tccss"};
    app.require_subcommand(1);

    std::string config, out_path, json_path, out_dir, sweep;
    int figure_id = 0;

    auto* gen = app.add_subcommand("generate", "Evaluate the configured spectrum on its grid");
    gen->add_option("--config", config, "JSON run configuration")->required();
    gen->add_option("--out", out_path, "output file (.csv or .json)")->required();

    auto* ver = app.add_subcommand("verify", "Run the configured checks against their thresholds");
    ver->add_option("--config", config, "JSON run configuration")->required();
    ver->add_option("--json", json_path, "write the report here instead of stdout");

    auto* fig = app.add_subcommand("figure", "Reproduce a built-in figure data set");
    fig->add_option("--id", figure_id, "figure number, 1..4")->required();
    fig->add_option("--out-dir", out_dir, "output directory")->required();

    auto* sca = app.add_subcommand("scatter", "Sweep real lambda and tabulate scattering data");
    sca->add_option("--config", config, "JSON run configuration")->required();
    sca->add_option("--lambda-re", sweep, "sweep a:b:n")->required();
    sca->add_option("--out", out_path, "output CSV")->required();

    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    if (*gen) return do_generate(config, out_path, out);
    if (*ver) return do_verify(config, json_path, out, err);
    if (*fig) return do_figure(figure_id, out_dir, out);
    return do_scatter(config, sweep, out_path, out);
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << '\n';
  } catch (...) {
    err << "unexpected error\n";
  }
  return kExitUsage;
}

}  // namespace tccss
