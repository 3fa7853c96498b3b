#include "tccss/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "tccss/errors.hpp"

namespace tccss {

using nlohmann::json;

namespace {

constexpr std::array<Check, 5> kAllChecks{Check::pde, Check::cnls, Check::zero_curvature,
                                          Check::rh_symmetry, Check::scattering};

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path, msg);
}

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const char* kind(const json& j) { return j.type_name(); }

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, std::string("expected object, got ") + kind(obj));
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) fail(at(path, it.key()), "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(at(path, key), "missing required key");
  return *it;
}

double get_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, std::string("expected number, got ") + kind(j));
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "number is not finite");
  return v;
}

std::size_t get_count(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, std::string("expected integer, got ") + kind(j));
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  const auto v = j.get<long long>();
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Complex get_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected complex number as [re, im]");
  return {get_real(j[0], at(path, 0)), get_real(j[1], at(path, 1))};
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, std::string("expected array, got ") + kind(j));
  return j;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, std::string("expected string, got ") + kind(j));
  return j.get<std::string>();
}

template <class T>
void optional_real(const json& obj, const std::string& path, const char* key, T& out) {
  if (auto it = obj.find(key); it != obj.end()) out = get_real(*it, at(path, key));
}

void optional_complex(const json& obj, const std::string& path, const char* key, Complex& out) {
  if (auto it = obj.find(key); it != obj.end()) out = get_complex(*it, at(path, key));
}

VectorSeed parse_seed(const json& j, const std::string& path, Family fam) {
  if (fam == Family::TypeI) {
    only_keys(j, path, {"alpha", "beta", "gamma", "mu", "rho", "delta"});
    TypeISeed s{};
    optional_complex(j, path, "alpha", s.alpha);
    optional_complex(j, path, "beta", s.beta);
    optional_complex(j, path, "gamma", s.gamma);
    optional_complex(j, path, "mu", s.mu);
    optional_complex(j, path, "rho", s.rho);
    optional_complex(j, path, "delta", s.delta);
    return s;
  }
  // TypeII seeds carry the conjugates implicitly; beta/mu/delta would be
  // silently ignored, so they are rejected instead.
  only_keys(j, path, {"alpha", "gamma", "rho"});
  TypeIISeed s{};
  optional_complex(j, path, "alpha", s.alpha);
  optional_complex(j, path, "gamma", s.gamma);
  optional_complex(j, path, "rho", s.rho);
  return s;
}

SpectrumConfig parse_spectrum(const json& j, const std::string& path) {
  only_keys(j, path, {"family", "zeros", "seeds"});
  SpectrumConfig s;
  const std::string fam = get_string(require(j, path, "family"), at(path, "family"));
  if (fam == "TypeI") {
    s.family = Family::TypeI;
  } else if (fam == "TypeII") {
    s.family = Family::TypeII;
  } else {
    fail(at(path, "family"), "expected \"TypeI\" or \"TypeII\", got \"" + fam + "\"");
  }
  const std::string zp = at(path, "zeros");
  const json& zeros = get_array(require(j, path, "zeros"), zp);
  for (std::size_t i = 0; i < zeros.size(); ++i) s.zeros.push_back(get_complex(zeros[i], at(zp, i)));
  const std::string sp = at(path, "seeds");
  const json& seeds = get_array(require(j, path, "seeds"), sp);
  for (std::size_t i = 0; i < seeds.size(); ++i) s.seeds.push_back(parse_seed(seeds[i], at(sp, i), s.family));
  s.validate();
  return s;
}

GridSpec parse_grid(const json& j, const std::string& path) {
  only_keys(j, path, {"x_min", "x_max", "nx", "t_min", "t_max", "nt"});
  GridSpec g;
  optional_real(j, path, "x_min", g.x_min);
  optional_real(j, path, "x_max", g.x_max);
  optional_real(j, path, "t_min", g.t_min);
  optional_real(j, path, "t_max", g.t_max);
  if (auto it = j.find("nx"); it != j.end()) g.nx = get_count(*it, at(path, "nx"));
  if (auto it = j.find("nt"); it != j.end()) g.nt = get_count(*it, at(path, "nt"));
  g.validate();
  return g;
}

StencilSpec parse_stencil(const json& j, const std::string& path) {
  only_keys(j, path, {"hx", "ht", "order"});
  StencilSpec s;
  optional_real(j, path, "hx", s.hx);
  optional_real(j, path, "ht", s.ht);
  if (auto it = j.find("order"); it != j.end()) s.order = static_cast<int>(get_count(*it, at(path, "order")));
  s.validate();
  return s;
}

Check parse_check(const json& j, const std::string& path) {
  const std::string name = get_string(j, path);
  for (Check c : kAllChecks)
    if (name == check_name(c)) return c;
  fail(path, "unknown check \"" + name + "\"");
}

OutputSpec parse_output(const json& j, const std::string& path) {
  only_keys(j, path, {"path", "format"});
  OutputSpec o;
  if (auto it = j.find("path"); it != j.end()) o.path = get_string(*it, at(path, "path"));
  if (o.path.empty()) fail(at(path, "path"), "output path is empty");
  if (auto it = j.find("format"); it != j.end()) {
    const std::string f = get_string(*it, at(path, "format"));
    if (f == "csv") {
      o.format = OutputFormat::csv;
    } else if (f == "json") {
      o.format = OutputFormat::json;
    } else {
      fail(at(path, "format"), "expected \"csv\" or \"json\", got \"" + f + "\"");
    }
  }
  return o;
}

ScatteringSettings parse_scattering(const json& j, const std::string& path) {
  only_keys(j, path, {"x_min", "x_max", "n_steps", "t", "seeds", "real_lambdas",
                      "evolution_lambda", "evolution_dt"});
  ScatteringSettings s;
  optional_real(j, path, "x_min", s.domain.x_min);
  optional_real(j, path, "x_max", s.domain.x_max);
  if (auto it = j.find("n_steps"); it != j.end()) s.domain.n_steps = get_count(*it, at(path, "n_steps"));
  optional_real(j, path, "t", s.t);
  if (auto it = j.find("seeds"); it != j.end()) {
    const std::string p = at(path, "seeds");
    for (std::size_t i = 0; i < get_array(*it, p).size(); ++i)
      s.seeds.push_back(get_complex((*it)[i], at(p, i)));
  }
  if (auto it = j.find("real_lambdas"); it != j.end()) {
    const std::string p = at(path, "real_lambdas");
    s.real_lambdas.clear();
    for (std::size_t i = 0; i < get_array(*it, p).size(); ++i)
      s.real_lambdas.push_back(get_real((*it)[i], at(p, i)));
  }
  optional_real(j, path, "evolution_lambda", s.evolution_lambda);
  optional_real(j, path, "evolution_dt", s.evolution_dt);
  s.domain.validate();
  return s;
}

Thresholds parse_thresholds(const json& j, const std::string& path) {
  only_keys(j, path, {"pde", "cnls", "zero_curvature", "rh_symmetry", "scattering_zero",
                      "reflection", "det", "isospectral"});
  Thresholds t;
  optional_real(j, path, "pde", t.pde);
  optional_real(j, path, "cnls", t.cnls);
  optional_real(j, path, "zero_curvature", t.zero_curvature);
  optional_real(j, path, "rh_symmetry", t.rh_symmetry);
  optional_real(j, path, "scattering_zero", t.scattering_zero);
  optional_real(j, path, "reflection", t.reflection);
  optional_real(j, path, "det", t.det);
  optional_real(j, path, "isospectral", t.isospectral);
  const std::pair<const char*, double> all[] = {
      {"pde", t.pde},         {"cnls", t.cnls},         {"zero_curvature", t.zero_curvature},
      {"rh_symmetry", t.rh_symmetry}, {"scattering_zero", t.scattering_zero},
      {"reflection", t.reflection},   {"det", t.det},   {"isospectral", t.isospectral}};
  for (const auto& [key, v] : all)
    if (!(v > 0.0)) fail(path + "." + key, "threshold must be positive");
  return t;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json seed_json(const VectorSeed& seed) {
  return std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        json o = json::object();
        o["alpha"] = complex_json(s.alpha);
        if constexpr (std::is_same_v<S, TypeISeed>) o["beta"] = complex_json(s.beta);
        o["gamma"] = complex_json(s.gamma);
        if constexpr (std::is_same_v<S, TypeISeed>) o["mu"] = complex_json(s.mu);
        o["rho"] = complex_json(s.rho);
        if constexpr (std::is_same_v<S, TypeISeed>) o["delta"] = complex_json(s.delta);
        return o;
      },
      seed);
}

}  // namespace

const char* check_name(Check c) {
  switch (c) {
    case Check::pde: return "pde";
    case Check::cnls: return "cnls";
    case Check::zero_curvature: return "zero_curvature";
    case Check::rh_symmetry: return "rh_symmetry";
    case Check::scattering: return "scattering";
  }
  return "?";
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("$", std::string("malformed JSON: ") + e.what());
  }
  const std::string root = "$";
  only_keys(doc, root, {"spectrum", "grid", "stencil", "checks", "output", "scattering", "thresholds"});

  RunConfig cfg;
  cfg.spectrum = parse_spectrum(require(doc, root, "spectrum"), "$.spectrum");
  if (auto it = doc.find("grid"); it != doc.end()) cfg.grid = parse_grid(*it, "$.grid");
  if (auto it = doc.find("stencil"); it != doc.end()) cfg.stencil = parse_stencil(*it, "$.stencil");
  if (auto it = doc.find("checks"); it != doc.end()) {
    const json& arr = get_array(*it, "$.checks");
    std::array<bool, kAllChecks.size()> seen{};
    for (std::size_t i = 0; i < arr.size(); ++i)
      seen[static_cast<std::size_t>(parse_check(arr[i], at("$.checks", i)))] = true;
    for (Check c : kAllChecks)
      if (seen[static_cast<std::size_t>(c)]) cfg.checks.push_back(c);
  }
  if (auto it = doc.find("output"); it != doc.end()) cfg.output = parse_output(*it, "$.output");
  if (auto it = doc.find("scattering"); it != doc.end())
    cfg.scattering = parse_scattering(*it, "$.scattering");
  if (auto it = doc.find("thresholds"); it != doc.end())
    cfg.thresholds = parse_thresholds(*it, "$.thresholds");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path + ": read failed");
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
  json doc = json::object();

  json zeros = json::array();
  for (const Complex& z : cfg.spectrum.zeros) zeros.push_back(complex_json(z));
  json seeds = json::array();
  for (const VectorSeed& s : cfg.spectrum.seeds) seeds.push_back(seed_json(s));
  doc["spectrum"] = {{"family", family_name(cfg.spectrum.family)}, {"zeros", zeros}, {"seeds", seeds}};

  const GridSpec& g = cfg.grid;
  doc["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"nx", g.nx},
                 {"t_min", g.t_min}, {"t_max", g.t_max}, {"nt", g.nt}};
  doc["stencil"] = {{"hx", cfg.stencil.hx}, {"ht", cfg.stencil.ht}, {"order", cfg.stencil.order}};

  json checks = json::array();
  for (Check c : cfg.checks) checks.push_back(check_name(c));
  doc["checks"] = checks;
  doc["output"] = {{"path", cfg.output.path},
                   {"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"}};

  const ScatteringSettings& sc = cfg.scattering;
  json sseeds = json::array();
  for (const Complex& z : sc.seeds) sseeds.push_back(complex_json(z));
  doc["scattering"] = {{"x_min", sc.domain.x_min},
                       {"x_max", sc.domain.x_max},
                       {"n_steps", sc.domain.n_steps},
                       {"t", sc.t},
                       {"seeds", sseeds},
                       {"real_lambdas", sc.real_lambdas},
                       {"evolution_lambda", sc.evolution_lambda},
                       {"evolution_dt", sc.evolution_dt}};

  const Thresholds& th = cfg.thresholds;
  doc["thresholds"] = {{"pde", th.pde},
                       {"cnls", th.cnls},
                       {"zero_curvature", th.zero_curvature},
                       {"rh_symmetry", th.rh_symmetry},
                       {"scattering_zero", th.scattering_zero},
                       {"reflection", th.reflection},
                       {"det", th.det},
                       {"isospectral", th.isospectral}};
  return doc.dump(2);
}

}  // namespace tccss
