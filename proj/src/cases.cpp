#include "vvof/cases.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace vvof {

Grid CaseConfig::make_grid() const { return Grid::box(counts, lo, hi, bc); }

long CaseConfig::steps() const { return std::lround(t_final / dt); }

void CaseConfig::validate() const {
  const bool two_d = counts[2] == 1;
  for (int a = 0; a < (two_d ? 2 : 3); ++a) {
    if (counts[a] < 3) throw ConfigError("grid: every active axis needs at least 3 cells");
    if (!(hi[a] > lo[a])) throw ConfigError("domain: hi must exceed lo on every axis");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw ConfigError("t_final must be >= 0");
  if (!(clip_eps >= 1e-14 && clip_eps <= 1e-2)) {
    throw ConfigError("clip_eps must lie in [1e-14, 1e-2]");
  }
  if (voxel_depth < 0 || voxel_depth > 8) throw ConfigError("voxel_depth must lie in [0, 8]");
  if (shapes.empty()) throw ConfigError("shapes: at least one shape is required");
  if (outputs.diag_stride < 1) throw ConfigError("outputs.diag_stride must be >= 1");
  for (double t : outputs.snapshot_times) {
    if (!(t >= 0.0 && t <= t_final)) throw ConfigError("outputs.snapshot_times must lie in [0, t_final]");
  }
  for (const auto& term : motion.terms) {
    if (is_prescribed(term.kind) && !(term.period > 0.0)) {
      throw ConfigError("motion: period must be positive");
    }
    if (term.kind == MotionKind::RadialRp && !(term.r0 > 0.0 && term.rho > 0.0)) {
      throw ConfigError("motion: radial-rp needs r0 > 0 and rho > 0");
    }
  }
}

namespace {

ShapeSpec shape(std::string kind, Vec3 center, std::map<std::string, double> params) {
  return ShapeSpec{std::move(kind), center, std::move(params)};
}

MotionTerm term(MotionKind kind) {
  MotionTerm t;
  t.kind = kind;
  return t;
}

CaseConfig base(const std::string& name, std::array<int, 3> counts, Vec3 lo, Vec3 hi) {
  CaseConfig c;
  c.name = name;
  c.counts = counts;
  c.lo = lo;
  c.hi = hi;
  return c;
}

CaseConfig zalesak() {
  auto c = base("zalesak", {256, 256, 1}, {0, 0, 0}, {1, 1, 1});
  c.shapes = {shape("slotted-disc", {0.5, 0.75, 0.0}, {{"r", 0.15}, {"slot_width", 0.06}, {"slot_length", 0.2}})};
  auto t = term(MotionKind::RigidRotation);
  t.center = {0.5, 0.5, 0.0};
  t.period = 1.0;
  c.motion.terms = {t};
  c.dt = 0.032 / 256;
  c.t_final = 1.0;
  c.dt_rule = DtRule::Linear;
  return c;
}

CaseConfig vortex_star() {
  auto c = base("vortex-star", {256, 256, 1}, {0, 0, 0}, {1, 1, 1});
  c.shapes = {shape("star", {0.5, 0.5, 0.0}, {{"A", 0.25}, {"B", 0.1}, {"K", 8}})};
  auto t = term(MotionKind::Vortex2d);
  t.period = 2.0;
  c.motion.terms = {t};
  c.dt = 0.032 / 256;
  c.t_final = 2.0;
  c.dt_rule = DtRule::Linear;
  return c;
}

CaseConfig deformation_sphere() {
  auto c = base("deformation-sphere", {256, 256, 256}, {0, 0, 0}, {1, 1, 1});
  c.shapes = {shape("sphere", {0.35, 0.35, 0.35}, {{"r", 0.15}})};
  auto t = term(MotionKind::Deformation3d);
  t.period = 3.0;
  c.motion.terms = {t};
  c.dt = 0.064 / 256;
  c.t_final = 3.0;
  c.dt_rule = DtRule::Linear;
  return c;
}

CaseConfig rp_collapse() {
  auto c = base("rp-collapse", {100, 100, 100}, {0, 0, 0}, {4, 4, 4});
  c.shapes = {shape("sphere", {2, 2, 2}, {{"r", 1.0}})};
  c.invert = true;
  auto t = term(MotionKind::RadialRp);
  t.r0 = 1.0;
  t.dp = -1.0;
  t.rho = 1.0;
  c.motion.terms = {t};
  c.dt = 2.5e-4;
  c.t_final = 0.91;
  c.dt_rule = DtRule::Linear;
  return c;
}

CaseConfig pointed_star() {
  auto c = base("pointed-star", {200, 200, 1}, {0, 0, 0}, {100, 100, 1});
  c.shapes = {shape("star", {50, 50, 0}, {{"A", 25}, {"B", 10}, {"K", 8}})};
  c.motion.terms = {term(MotionKind::Curvature)};
  c.dt = 0.05;
  c.t_final = 60.0;
  c.dt_rule = DtRule::Quadratic;
  return c;
}

CaseConfig spiral() {
  auto c = base("spiral", {100, 100, 1}, {0, 0, 0}, {100, 100, 1});
  c.shapes = {shape("spiral", {50, 50, 0},
                    {{"np", 400}, {"D", 2.5}, {"a", 3}, {"sf", 50}, {"w", 3}})};
  c.motion.terms = {term(MotionKind::Curvature)};
  c.dt = 0.05;
  c.t_final = 6000 * 0.05;
  c.dt_rule = DtRule::Quadratic;
  return c;
}

CaseConfig dumbbell() {
  auto c = base("dumbbell", {200, 200, 200}, {0, 0, 0}, {100, 100, 100});
  c.shapes = {shape("dumbbell", {50, 50, 50}, {{"r", 10}, {"w", 5}, {"o", 20}})};
  c.motion.terms = {term(MotionKind::Curvature)};
  c.dt = 0.01;
  c.t_final = 16.0;
  c.dt_rule = DtRule::Fixed;
  return c;
}

CaseConfig irregular() {
  auto c = base("irregular", {100, 100, 100}, {0, 0, 0}, {100, 100, 100});
  const Vec3 ctr{50, 50, 50};
  c.shapes = {shape("ellipsoid", ctr, {{"a", 25}, {"b", 7.5}, {"c", 7.5}}),
              shape("ellipsoid", ctr, {{"a", 7.5}, {"b", 25}, {"c", 7.5}}),
              shape("ellipsoid", ctr, {{"a", 10}, {"b", 10}, {"c", 35}})};
  c.motion.terms = {term(MotionKind::Curvature)};
  c.dt = 0.05;
  c.t_final = 1200 * 0.05;
  c.dt_rule = DtRule::Quadratic;
  return c;
}

CaseConfig constrained(const std::string& name, ShapeSpec s, double dt, double t_final, DtRule rule) {
  auto c = base(name, {50, 50, 50}, {0, 0, 0}, {1, 1, 1});
  c.shapes = {std::move(s)};
  c.motion.terms = {term(MotionKind::CurvatureConstrained)};
  c.dt = dt;
  c.t_final = t_final;
  c.dt_rule = rule;
  return c;
}

CaseConfig helical_sphere() {
  auto c = base("helical-sphere", {50, 50, 100}, {0, 0, 0}, {1, 1, 2});
  c.bc = {Boundary::Periodic, Boundary::Periodic, Boundary::Periodic};
  const Vec3 ctr{0.5, 0.75, 0.25};
  c.shapes = {shape("sphere", ctr, {{"r", 0.1}})};
  auto h = term(MotionKind::Helical);
  h.center = ctr;
  h.u_max = 160;
  h.v_max = 160;
  h.w_max = -40;
  c.motion.terms = {h, term(MotionKind::CurvatureConstrained)};
  c.dt = 2.5e-5;
  c.t_final = 1000 * 2.5e-5;
  c.dt_rule = DtRule::Linear;
  c.cfl_scope = CflScope::Occupied;
  return c;
}

const std::map<std::string, std::function<CaseConfig()>>& registry() {
  static const std::map<std::string, std::function<CaseConfig()>> r = {
      {"zalesak", zalesak},
      {"vortex-star", vortex_star},
      {"deformation-sphere", deformation_sphere},
      {"rp-collapse", rp_collapse},
      {"pointed-star", pointed_star},
      {"spiral", spiral},
      {"dumbbell", dumbbell},
      {"irregular", irregular},
      {"ellipsoid",
       [] {
         return constrained("ellipsoid",
                            shape("ellipsoid", {0.5, 0.5, 0.5}, {{"a", 0.35}, {"b", 0.15625}, {"c", 0.15625}}),
                            1e-5, 10000 * 1e-5, DtRule::Fixed);
       }},
      {"squircle",
       [] {
         return constrained("squircle", shape("superellipsoid", {0.5, 0.5, 0.5}, {{"n", 12}, {"r", 0.25}}),
                            1e-5, 10000 * 1e-5, DtRule::Fixed);
       }},
      {"octahedron",
       [] {
         return constrained("octahedron", shape("octahedron", {0.5, 0.5, 0.5}, {{"r", 0.3}}), 1e-4, 0.03,
                            DtRule::Quadratic);
       }},
      {"helical-sphere", helical_sphere},
  };
  return r;
}

const std::map<std::string, int>& desk_counts() {
  static const std::map<std::string, int> d = {{"deformation-sphere", 64}, {"dumbbell", 100}};
  return d;
}

}  // namespace

const std::vector<std::string>& list_cases() {
  static const std::vector<std::string> ids = {
      "zalesak",   "vortex-star", "deformation-sphere", "rp-collapse", "pointed-star", "spiral",
      "dumbbell",  "irregular",   "ellipsoid",          "squircle",    "octahedron",   "helical-sphere"};
  return ids;
}

bool has_desk_variant(const std::string& name) { return desk_counts().count(name) > 0; }

CaseConfig builtin_case(const std::string& name, bool desk) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) {
    std::string ids;
    for (const auto& id : list_cases()) ids += (ids.empty() ? "" : ", ") + id;
    throw ConfigError("unknown case '" + name + "' (available: " + ids + ")");
  }
  CaseConfig c = it->second();
  if (desk) {
    auto d = desk_counts().find(name);
    if (d == desk_counts().end()) throw ConfigError("case '" + name + "' has no desk variant");
    c = with_grid(c, {d->second});
  }
  return c;
}

CaseConfig with_grid(const CaseConfig& cfg, const std::vector<int>& counts) {
  const bool two_d = cfg.counts[2] == 1;
  const int dims = two_d ? 2 : 3;
  CaseConfig c = cfg;
  if (counts.size() == 1) {
    const double ext0 = cfg.hi[0] - cfg.lo[0];
    for (int a = 0; a < dims; ++a) {
      c.counts[a] = static_cast<int>(std::lround(counts[0] * (cfg.hi[a] - cfg.lo[a]) / ext0));
    }
  } else if (static_cast<int>(counts.size()) == dims) {
    for (int a = 0; a < dims; ++a) c.counts[a] = counts[a];
  } else {
    throw ConfigError("grid: expected 1 or " + std::to_string(dims) + " counts for case '" + cfg.name + "'");
  }
  for (int a = 0; a < dims; ++a) {
    if (c.counts[a] < 3) throw ConfigError("grid: every active axis needs at least 3 cells");
  }
  const double ratio = static_cast<double>(cfg.counts[0]) / c.counts[0];
  switch (cfg.dt_rule) {
    case DtRule::Fixed:
      break;
    case DtRule::Linear:
      c.dt = cfg.dt * ratio;
      break;
    case DtRule::Quadratic:
      c.dt = cfg.dt * ratio * ratio;
      break;
  }
  return c;
}

}  // namespace vvof
