#include "vvof/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vvof {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void allow_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail(path + "." + key, "unknown key '" + key + "'");
  }
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "expected a finite number");
  return d;
}

double positive(const json& v, const std::string& path) {
  const double d = number(v, path);
  if (!(d > 0.0)) fail(path, "must be positive");
  return d;
}

int integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == std::floor(d) && std::fabs(d) < 1e9) return static_cast<int>(d);
  }
  fail(path, "expected an integer");
}

bool boolean(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::string string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

Vec3 vec(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() < 2 || v.size() > 3) fail(path, "expected an array of 2 or 3 numbers");
  Vec3 out{0.0, 0.0, 0.0};
  for (std::size_t q = 0; q < v.size(); ++q) out[q] = number(v[q], path + "[" + std::to_string(q) + "]");
  return out;
}

std::vector<int> grid_counts(const json& v, const std::string& path) {
  std::vector<int> counts;
  if (v.is_array()) {
    if (v.empty() || v.size() > 3) fail(path, "expected 1 to 3 cell counts");
    for (std::size_t q = 0; q < v.size(); ++q) counts.push_back(integer(v[q], path + "[" + std::to_string(q) + "]"));
  } else {
    counts.push_back(integer(v, path));
  }
  for (int n : counts) {
    if (n < 3) fail(path, "cell counts must be >= 3");
  }
  return counts;
}

ShapeSpec parse_shape(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  if (!v.contains("kind")) fail(path + ".kind", "missing required key");
  ShapeSpec s;
  s.kind = string(v["kind"], path + ".kind");
  const auto& kinds = shape_kinds();
  auto it = kinds.find(s.kind);
  if (it == kinds.end()) {
    std::string names;
    for (const auto& [k, _] : kinds) names += (names.empty() ? "" : ", ") + k;
    fail(path + ".kind", "unknown shape kind '" + s.kind + "' (expected one of: " + names + ")");
  }
  std::set<std::string> allowed(it->second.begin(), it->second.end());
  allowed.insert("kind");
  allowed.insert("center");
  allow_keys(v, path, allowed);
  if (v.contains("center")) s.center = vec(v["center"], path + ".center");
  for (const auto& p : it->second) {
    if (!v.contains(p)) fail(path + "." + p, "missing required parameter");
    s.params[p] = number(v[p], path + "." + p);
  }
  try {
    make_shape(s);
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  return s;
}

MotionTerm parse_term(const json& v, const std::string& path) {
  allow_keys(v, path, {"kind", "center", "period", "u_max", "v_max", "w_max", "dp", "rho", "r0", "rdot0",
                       "source_mode"});
  if (!v.contains("kind")) fail(path + ".kind", "missing required key");
  MotionTerm t;
  try {
    t.kind = parse_motion_kind(string(v["kind"], path + ".kind"));
  } catch (const ConfigError& e) {
    fail(path + ".kind", e.what());
  }
  if (v.contains("center")) t.center = vec(v["center"], path + ".center");
  if (v.contains("period")) t.period = positive(v["period"], path + ".period");
  if (v.contains("u_max")) t.u_max = number(v["u_max"], path + ".u_max");
  if (v.contains("v_max")) t.v_max = number(v["v_max"], path + ".v_max");
  if (v.contains("w_max")) t.w_max = number(v["w_max"], path + ".w_max");
  if (v.contains("dp")) t.dp = number(v["dp"], path + ".dp");
  if (v.contains("rho")) t.rho = positive(v["rho"], path + ".rho");
  if (v.contains("r0")) t.r0 = positive(v["r0"], path + ".r0");
  if (v.contains("rdot0")) t.rdot0 = number(v["rdot0"], path + ".rdot0");
  if (v.contains("source_mode")) t.source_mode = boolean(v["source_mode"], path + ".source_mode");
  return t;
}

VelocitySupport parse_support(const json& v, const std::string& path) {
  const std::string s = string(v, path);
  if (s == "gradient-band") return VelocitySupport::GradientBand;
  if (s == "mixed") return VelocitySupport::MixedOnly;
  fail(path, "expected \"gradient-band\" or \"mixed\"");
}

MotionSpec parse_motion(const json& v, const std::string& path, VelocitySupport fallback) {
  if (!v.is_object()) fail(path, "expected an object");
  MotionSpec m;
  m.support = fallback;
  if (v.contains("terms")) {
    allow_keys(v, path, {"terms", "support"});
    const json& terms = v["terms"];
    if (!terms.is_array() || terms.empty()) fail(path + ".terms", "expected a non-empty array");
    for (std::size_t q = 0; q < terms.size(); ++q) {
      m.terms.push_back(parse_term(terms[q], path + ".terms[" + std::to_string(q) + "]"));
    }
  } else {
    json term = v;
    term.erase("support");
    m.terms.push_back(parse_term(term, path));
  }
  if (v.contains("support")) m.support = parse_support(v["support"], path + ".support");
  return m;
}

void parse_outputs(const json& v, const std::string& path, OutputSpec& o) {
  allow_keys(v, path, {"dir", "snapshot_times", "final_snapshot", "kappa", "velocity", "contour", "diag_stride"});
  if (v.contains("dir")) o.dir = string(v["dir"], path + ".dir");
  if (v.contains("snapshot_times")) {
    const json& ts = v["snapshot_times"];
    if (!ts.is_array()) fail(path + ".snapshot_times", "expected an array of numbers");
    o.snapshot_times.clear();
    for (std::size_t q = 0; q < ts.size(); ++q) {
      const std::string p = path + ".snapshot_times[" + std::to_string(q) + "]";
      const double t = number(ts[q], p);
      if (t < 0.0) fail(p, "must be >= 0");
      o.snapshot_times.push_back(t);
    }
  }
  if (v.contains("final_snapshot")) o.final_snapshot = boolean(v["final_snapshot"], path + ".final_snapshot");
  if (v.contains("kappa")) o.kappa = boolean(v["kappa"], path + ".kappa");
  if (v.contains("velocity")) o.velocity = boolean(v["velocity"], path + ".velocity");
  if (v.contains("contour")) o.contour = boolean(v["contour"], path + ".contour");
  if (v.contains("diag_stride")) {
    o.diag_stride = integer(v["diag_stride"], path + ".diag_stride");
    if (o.diag_stride < 1) fail(path + ".diag_stride", "must be >= 1");
  }
}

}  // namespace

CaseConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("$: invalid JSON: ") + e.what());
  }
  allow_keys(root, "$",
             {"case", "desk", "name", "grid", "domain", "dt", "t_final", "shapes", "invert", "voxel_depth", "motion",
              "clip_eps", "delta", "curvature", "cfl", "outputs"});

  CaseConfig cfg;
  const bool builtin = root.contains("case");
  if (builtin) {
    const std::string id = string(root["case"], "$.case");
    const bool desk = root.contains("desk") && boolean(root["desk"], "$.desk");
    try {
      cfg = builtin_case(id, desk);
    } catch (const ConfigError& e) {
      fail("$.case", e.what());
    }
  } else {
    for (const char* key : {"grid", "dt", "t_final", "shapes", "motion"}) {
      if (!root.contains(key)) fail(std::string("$.") + key, "missing required key (no \"case\" given)");
    }
    if (root.contains("desk")) fail("$.desk", "only valid together with \"case\"");
    cfg.name = "custom";
  }
  if (root.contains("name")) cfg.name = string(root["name"], "$.name");

  if (root.contains("domain")) {
    const json& d = root["domain"];
    allow_keys(d, "$.domain", {"lo", "hi", "periodic"});
    if (d.contains("lo")) cfg.lo = vec(d["lo"], "$.domain.lo");
    if (d.contains("hi")) cfg.hi = vec(d["hi"], "$.domain.hi");
    if (d.contains("periodic")) {
      const json& p = d["periodic"];
      if (!p.is_array() || p.size() < 2 || p.size() > 3) fail("$.domain.periodic", "expected 2 or 3 booleans");
      for (std::size_t q = 0; q < p.size(); ++q) {
        cfg.bc[q] = boolean(p[q], "$.domain.periodic[" + std::to_string(q) + "]") ? Boundary::Periodic
                                                                                    : Boundary::ZeroNeumann;
      }
    }
  }

  if (root.contains("grid")) {
    const auto counts = grid_counts(root["grid"], "$.grid");
    if (builtin) {
      try {
        cfg = with_grid(cfg, counts);
      } catch (const ConfigError& e) {
        fail("$.grid", e.what());
      }
    } else {
      if (counts.size() == 1) fail("$.grid", "a custom case needs one count per axis");
      cfg.counts = {counts[0], counts[1], counts.size() == 3 ? counts[2] : 1};
    }
  }
  if (root.contains("dt")) cfg.dt = positive(root["dt"], "$.dt");
  if (root.contains("t_final")) {
    cfg.t_final = number(root["t_final"], "$.t_final");
    if (cfg.t_final < 0.0) fail("$.t_final", "must be >= 0");
  }
  if (root.contains("shapes")) {
    const json& s = root["shapes"];
    if (!s.is_array() || s.empty()) fail("$.shapes", "expected a non-empty array");
    cfg.shapes.clear();
    for (std::size_t q = 0; q < s.size(); ++q) cfg.shapes.push_back(parse_shape(s[q], "$.shapes[" + std::to_string(q) + "]"));
  }
  if (root.contains("invert")) cfg.invert = boolean(root["invert"], "$.invert");
  if (root.contains("voxel_depth")) {
    cfg.voxel_depth = integer(root["voxel_depth"], "$.voxel_depth");
    if (cfg.voxel_depth < 0 || cfg.voxel_depth > 8) fail("$.voxel_depth", "must lie in [0, 8]");
  }
  if (root.contains("motion")) cfg.motion = parse_motion(root["motion"], "$.motion", cfg.motion.support);
  if (root.contains("clip_eps")) {
    cfg.clip_eps = number(root["clip_eps"], "$.clip_eps");
    if (!(cfg.clip_eps >= 1e-14 && cfg.clip_eps <= 1e-2)) fail("$.clip_eps", "must lie in [1e-14, 1e-2]");
  }
  if (root.contains("delta")) {
    const std::string d = string(root["delta"], "$.delta");
    if (d == "polynomial") {
      cfg.delta = DeltaKind::Polynomial;
    } else if (d == "gradient") {
      cfg.delta = DeltaKind::Gradient;
    } else if (d == "flux") {
      cfg.delta = DeltaKind::Flux;
    } else {
      fail("$.delta", "expected \"polynomial\", \"gradient\" or \"flux\"");
    }
  }
  if (root.contains("curvature")) {
    const json& c = root["curvature"];
    allow_keys(c, "$.curvature", {"column_tol", "max_half", "literal_denominator"});
    if (c.contains("column_tol")) {
      cfg.curvature.column_tol = number(c["column_tol"], "$.curvature.column_tol");
      if (!(cfg.curvature.column_tol >= 0.0 && cfg.curvature.column_tol <= 1.0)) {
        fail("$.curvature.column_tol", "must lie in [0, 1]");
      }
    }
    if (c.contains("max_half")) {
      const double h = number(c["max_half"], "$.curvature.max_half");
      if (!(h >= 1.0 && h <= 4.0 && h == std::floor(h))) fail("$.curvature.max_half", "must be an integer in [1, 4]");
      cfg.curvature.max_half = static_cast<int>(h);
    }
    if (c.contains("literal_denominator")) {
      cfg.curvature.literal_denominator = boolean(c["literal_denominator"], "$.curvature.literal_denominator");
    }
  }
  if (root.contains("cfl")) {
    const std::string s = string(root["cfl"], "$.cfl");
    if (s == "all") {
      cfg.cfl_scope = CflScope::All;
    } else if (s == "occupied") {
      cfg.cfl_scope = CflScope::Occupied;
    } else {
      fail("$.cfl", "expected \"all\" or \"occupied\"");
    }
  }
  if (root.contains("outputs")) parse_outputs(root["outputs"], "$.outputs", cfg.outputs);

  cfg.curvature.eps = cfg.clip_eps;
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    fail("$", e.what());
  }
  return cfg;
}

CaseConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace vvof
