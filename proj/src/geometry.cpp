#include "vvof/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "vvof/plic.hpp"

namespace vvof {

double ShapeSpec::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) {
    throw ConfigError("shape '" + kind + "': missing parameter '" + key + "'");
  }
  return it->second;
}

double ShapeSpec::get_or(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

const std::map<std::string, std::vector<std::string>>& shape_kinds() {
  static const std::map<std::string, std::vector<std::string>> kinds{
      {"disc", {"r"}},
      {"sphere", {"r"}},
      {"slotted-disc", {"r", "slot_width", "slot_length"}},
      {"star", {"A", "B", "K"}},
      {"spiral", {"D", "a", "sf", "np", "w"}},
      {"dumbbell", {"r", "w", "o"}},
      {"ellipsoid", {"a", "b", "c"}},
      {"superellipsoid", {"n", "r"}},
      {"octahedron", {"r"}},
      {"cylinder", {"r", "axis"}},
      {"half-space", {"nx", "ny", "nz"}},
  };
  return kinds;
}

namespace {

void require_positive(const ShapeSpec& s, const std::string& key) {
  const double v = s.get(key);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("shape '" + s.kind + "': parameter '" + key + "' must be positive");
  }
}

int require_integer(const ShapeSpec& s, const std::string& key, int min_value) {
  const double v = s.get(key);
  if (!std::isfinite(v) || std::floor(v) != v || v < min_value) {
    throw ConfigError("shape '" + s.kind + "': parameter '" + key + "' must be an integer >= " +
                      std::to_string(min_value));
  }
  return static_cast<int>(v);
}

ImplicitShape spiral_shape(const ShapeSpec& s) {
  const double D = s.get("D"), a = s.get("a"), sf = s.get("sf"), w = s.get("w");
  const int np = require_integer(s, "np", 1);
  require_positive(s, "D");
  require_positive(s, "sf");
  require_positive(s, "w");
  if (!(a >= 0.0)) throw ConfigError("shape 'spiral': parameter 'a' must be >= 0");
  auto pts = std::make_shared<std::vector<std::array<double, 2>>>();
  pts->reserve(static_cast<std::size_t>(np));
  const double xc = s.center[0], yc = s.center[1];
  for (int k = 0; k < np; ++k) {
    const double sp = (k + a) / (np + a);
    const double theta = 2.0 * std::numbers::pi * D * std::sqrt(sp);
    const double rad = sf * D * std::sqrt(sp) / (1.0 + D);
    pts->push_back({xc + rad * std::cos(theta), yc + rad * std::sin(theta)});
  }
  return {"spiral", [pts, w](const Vec3& p) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : *pts) {
              const double dx = p[0] - q[0], dy = p[1] - q[1];
              best = std::min(best, dx * dx + dy * dy);
            }
            return std::sqrt(best) - w;
          }};
}

}  // namespace

ImplicitShape make_shape(const ShapeSpec& s) {
  const auto& kinds = shape_kinds();
  auto it = kinds.find(s.kind);
  if (it == kinds.end()) {
    std::string names;
    for (const auto& [k, _] : kinds) names += (names.empty() ? "" : ", ") + k;
    throw ConfigError("unknown shape kind '" + s.kind + "' (expected one of: " + names + ")");
  }
  for (const auto& [key, _] : s.params) {
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
      throw ConfigError("shape '" + s.kind + "': unknown parameter '" + key + "'");
    }
  }
  for (const auto& key : it->second) s.get(key);

  const Vec3 c = s.center;
  if (s.kind == "disc") {
    require_positive(s, "r");
    const double r = s.get("r");
    return {s.kind, [c, r](const Vec3& p) { return std::hypot(p[0] - c[0], p[1] - c[1]) - r; }};
  }
  if (s.kind == "sphere") {
    require_positive(s, "r");
    const double r = s.get("r");
    return {s.kind, [c, r](const Vec3& p) {
              return std::sqrt((p[0] - c[0]) * (p[0] - c[0]) + (p[1] - c[1]) * (p[1] - c[1]) +
                               (p[2] - c[2]) * (p[2] - c[2])) -
                     r;
            }};
  }
  if (s.kind == "slotted-disc") {
    for (const char* k : {"r", "slot_width", "slot_length"}) require_positive(s, k);
    const double r = s.get("r"), hw = 0.5 * s.get("slot_width"), l = s.get("slot_length");
    if (hw >= r || l >= 2.0 * r) throw ConfigError("shape 'slotted-disc': slot larger than disc");
    const double top = c[1] - r + l;
    return {s.kind, [c, r, hw, top](const Vec3& p) {
              const double disc = std::hypot(p[0] - c[0], p[1] - c[1]) - r;
              const double slot = std::max(std::fabs(p[0] - c[0]) - hw, p[1] - top);
              return std::max(disc, -slot);
            }};
  }
  if (s.kind == "star") {
    require_positive(s, "A");
    const int K = require_integer(s, "K", 1);
    const double A = s.get("A"), B = s.get("B");
    if (!std::isfinite(B) || std::fabs(B) >= A) {
      throw ConfigError("shape 'star': |B| must be smaller than A");
    }
    return {s.kind, [c, A, B, K](const Vec3& p) {
              const double dx = p[0] - c[0], dy = p[1] - c[1];
              return std::hypot(dx, dy) - (A + B * std::cos(K * std::atan2(dy, dx)));
            }};
  }
  if (s.kind == "spiral") return spiral_shape(s);
  if (s.kind == "dumbbell") {
    for (const char* k : {"r", "w", "o"}) require_positive(s, k);
    const double r = s.get("r"), w = s.get("w"), o = s.get("o");
    return {s.kind, [c, r, w, o](const Vec3& p) {
              const double x = p[0] - c[0], y = p[1] - c[1], z = p[2] - c[2];
              const double yz2 = y * y + z * z;
              const double right = std::sqrt((x + o) * (x + o) + yz2) - r;
              const double left = std::sqrt((x - o) * (x - o) + yz2) - r;
              const double bar = std::max(std::fabs(x) - o, std::sqrt(yz2) - w);
              return std::min({right, left, bar});
            }};
  }
  if (s.kind == "ellipsoid") {
    for (const char* k : {"a", "b", "c"}) require_positive(s, k);
    const double a = s.get("a"), b = s.get("b"), cc = s.get("c");
    return {s.kind, [c, a, b, cc](const Vec3& p) {
              const double x = (p[0] - c[0]) / a, y = (p[1] - c[1]) / b, z = (p[2] - c[2]) / cc;
              return x * x + y * y + z * z - 1.0;
            }};
  }
  if (s.kind == "superellipsoid") {
    require_positive(s, "r");
    const int n = require_integer(s, "n", 2);
    if (n % 2 != 0) throw ConfigError("shape 'superellipsoid': exponent 'n' must be even");
    const double r = s.get("r");
    return {s.kind, [c, r, n](const Vec3& p) {
              return std::pow((p[0] - c[0]) / r, n) + std::pow((p[1] - c[1]) / r, n) +
                     std::pow((p[2] - c[2]) / r, n) - 1.0;
            }};
  }
  if (s.kind == "octahedron") {
    require_positive(s, "r");
    const double r = s.get("r");
    return {s.kind, [c, r](const Vec3& p) {
              return std::fabs(p[0] - c[0]) + std::fabs(p[1] - c[1]) + std::fabs(p[2] - c[2]) - r;
            }};
  }
  if (s.kind == "cylinder") {
    require_positive(s, "r");
    const int axis = require_integer(s, "axis", 0);
    if (axis > 2) throw ConfigError("shape 'cylinder': axis must be 0, 1 or 2");
    const double r = s.get("r");
    return {s.kind, [c, r, axis](const Vec3& p) {
              double s2 = 0.0;
              for (int d = 0; d < 3; ++d) {
                if (d != axis) s2 += (p[d] - c[d]) * (p[d] - c[d]);
              }
              return std::sqrt(s2) - r;
            }};
  }
  // half-space
  const Vec3 n{s.get("nx"), s.get("ny"), s.get("nz")};
  if (n[0] == 0.0 && n[1] == 0.0 && n[2] == 0.0) {
    throw ConfigError("shape 'half-space': normal must be non-zero");
  }
  return {s.kind, [c, n](const Vec3& p) {
            return n[0] * (p[0] - c[0]) + n[1] * (p[1] - c[1]) + n[2] * (p[2] - c[2]);
          }};
}

ImplicitShape shape_union(const std::vector<ImplicitShape>& shapes) {
  if (shapes.empty()) throw ConfigError("shape union needs at least one shape");
  if (shapes.size() == 1) return shapes.front();
  auto members = std::make_shared<std::vector<ImplicitShape>>(shapes);
  return {"union", [members](const Vec3& p) {
            double v = (*members)[0](p);
            for (std::size_t q = 1; q < members->size(); ++q) v = std::min(v, (*members)[q](p));
            return v;
          }};
}

ImplicitShape shape_complement(const ImplicitShape& shape) {
  return {"not " + shape.name(), [shape](const Vec3& p) { return -shape(p); }};
}

namespace {

struct Voxelizer {
  const ImplicitShape& shape;
  int dims;
  int depth;

  static bool uniform(const double* corners, int nc, double centre, bool& inside) {
    bool all_le = centre < 0.0, all_ge = centre > 0.0;
    for (int q = 0; q < nc; ++q) {
      all_le = all_le && corners[q] <= 0.0;
      all_ge = all_ge && corners[q] >= 0.0;
    }
    inside = all_le;
    return all_le || all_ge;
  }

  // Fraction of the box [lo, lo + h] inside the shape, as a fraction of the box.
  double leaf(const double* corners, double centre) const {
    Vec3 g{0.0, 0.0, 0.0};
    const int nc = 1 << dims;
    const double edges = static_cast<double>(nc / 2);
    for (int d = 0; d < dims; ++d) {
      double s = 0.0;
      for (int q = 0; q < nc; ++q) {
        if (q & (1 << d)) s += corners[q] - corners[q ^ (1 << d)];
      }
      g[d] = s / edges;
    }
    if (g[0] == 0.0 && g[1] == 0.0 && g[2] == 0.0) return centre < 0.0 ? 1.0 : 0.0;
    const double alpha = 0.5 * (g[0] + g[1] + g[2]) - centre;
    return plane_volume({g, alpha});
  }

  void sample(const Vec3& lo, const Vec3& h, double* corners, double& centre) const {
    const int nc = 1 << dims;
    for (int q = 0; q < nc; ++q) {
      Vec3 p = lo;
      for (int d = 0; d < dims; ++d) {
        if (q & (1 << d)) p[d] += h[d];
      }
      corners[q] = shape(p);
    }
    Vec3 mid = lo;
    for (int d = 0; d < dims; ++d) mid[d] += 0.5 * h[d];
    centre = shape(mid);
  }

  // Fraction of a mixed box, refining `level` more times.
  double refine(const Vec3& lo, const Vec3& h, const double* corners, double centre,
                int level) const {
    if (level == 0) return leaf(corners, centre);
    const int nc = 1 << dims;
    Vec3 hh = h;
    for (int d = 0; d < dims; ++d) hh[d] *= 0.5;
    double sum = 0.0;
    double cc[8];
    double cm;
    for (int q = 0; q < nc; ++q) {
      Vec3 clo = lo;
      for (int d = 0; d < dims; ++d) {
        if (q & (1 << d)) clo[d] += hh[d];
      }
      sample(clo, hh, cc, cm);
      bool inside = false;
      if (uniform(cc, nc, cm, inside)) {
        sum += inside ? 1.0 : 0.0;
      } else {
        sum += refine(clo, hh, cc, cm, level - 1);
      }
    }
    return sum / nc;
  }
};

}  // namespace

ColorField voxelize(const ImplicitShape& shape, const Grid& grid, VoxelizeOptions opts) {
  if (opts.depth < 0 || opts.depth > 10) throw ConfigError("voxelize: depth must be in [0, 10]");
  ColorField out(grid);
  const int dims = grid.dim();
  const int nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
  const int px = nx + 1, py = ny + 1, pz = dims == 3 ? nz + 1 : 1;
  const Vec3 o = grid.origin();
  const Vec3 h{grid.dx(), grid.dy(), grid.dz()};
  // Corner lattice evaluated once; shared by neighbouring cells.
  std::vector<double> lattice(static_cast<std::size_t>(px) * py * pz);
  auto lat = [&](int i, int j, int k) -> double& {
    return lattice[static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(px) * (j + static_cast<std::size_t>(py) * k)];
  };
  const double zmid = o[2] + 0.5 * h[2];
  for (int k = 0; k < pz; ++k) {
    for (int j = 0; j < py; ++j) {
      for (int i = 0; i < px; ++i) {
        const double z = dims == 3 ? o[2] + k * h[2] : zmid;
        lat(i, j, k) = shape({o[0] + i * h[0], o[1] + j * h[1], z});
      }
    }
  }
  Voxelizer vox{shape, dims, opts.depth};
  const int nc = 1 << dims;
  double corners[8];
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        for (int q = 0; q < nc; ++q) {
          corners[q] = lat(i + (q & 1), j + ((q >> 1) & 1), dims == 3 ? k + ((q >> 2) & 1) : 0);
        }
        const Vec3 c = grid.center(i, j, k);
        const double centre = shape(c);
        bool inside = false;
        double frac;
        if (Voxelizer::uniform(corners, nc, centre, inside)) {
          frac = inside ? 1.0 : 0.0;
        } else {
          Vec3 lo{o[0] + i * h[0], o[1] + j * h[1], dims == 3 ? o[2] + k * h[2] : zmid};
          Vec3 hh = h;
          if (dims == 2) hh[2] = 0.0;
          frac = vox.refine(lo, hh, corners, centre, opts.depth);
        }
        out.at(i, j, k) = std::clamp(frac, 0.0, 1.0);
      }
    }
  }
  return out;
}

}  // namespace vvof
