#include "vvof/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "vvof/plic.hpp"

namespace vvof {

HeightSample height_column(const ScalarField& c, int i, int j, int k, int axis, int fluid_dir,
                           double tol, int half) {
  const Grid& g = c.grid();
  HeightSample out;
  if (half < 1) throw std::invalid_argument("height_column: half must be at least 1");
  double sum = 0.0, lo = 0.0, hi = 0.0;
  for (int l = -half; l <= half; ++l) {
    Index3 p{i, j, k};
    p[axis] += l;
    for (int a = 0; a < 3; ++a) {
      const int n = g.count(a);
      if (p[a] >= 0 && p[a] < n) continue;
      if (g.bc(a) != Boundary::Periodic) return out;
      p[a] = ((p[a] % n) + n) % n;
    }
    const double v = c[g.index(p)];
    sum += v;
    if (l == -half) lo = v;
    if (l == half) hi = v;
  }
  out.height = sum * g.spacing(axis);
  const double full = fluid_dir < 0 ? lo : hi;
  const double empty = fluid_dir < 0 ? hi : lo;
  out.valid = full >= 1.0 - tol && empty <= tol;
  return out;
}


namespace {

// Axes by decreasing |m|; only the first unless fallback is on.
int candidate_axes(const Vec3& m, int dims, bool fallback, int out[3]) {
  int order[3] = {0, 1, 2};
  std::stable_sort(order, order + dims, [&](int a, int b) { return std::fabs(m[a]) > std::fabs(m[b]); });
  int n = 0;
  for (int q = 0; q < dims && (fallback || q == 0); ++q) {
    if (m[order[q]] != 0.0) out[n++] = order[q];
  }
  return n;
}

CurvatureSample curvature_2d_axis(const ScalarField& c, int i, int j, int k, const Vec3& m, int d,
                                  const CurvatureOptions& opts) {
  const Grid& g = c.grid();
  const int t = 1 - d;
  const int fluid_dir = m[d] > 0.0 ? -1 : 1;
  double H[3];
  bool ok = false;
  for (int half = 1; half <= opts.max_half && !ok; ++half) {
    ok = true;
    for (int o = -1; o <= 1 && ok; ++o) {
      Index3 p{i, j, k};
      p[t] += o;
      if ((p[t] < 0 || p[t] >= g.count(t)) && g.bc(t) != Boundary::Periodic) return {};
      const HeightSample hs = height_column(c, p.i, p.j, p.k, d, fluid_dir, opts.column_tol, half);
      ok = hs.valid;
      H[o + 1] = hs.height;
    }
  }
  if (!ok) return {};
  const double ht = g.spacing(t);
  const double hx = (H[2] - H[0]) / (2.0 * ht);
  const double hxx = (H[2] - 2.0 * H[1] + H[0]) / (ht * ht);
  const double den = std::pow(1.0 + hx * hx, 1.5);
  return {-hxx / den, true};
}

CurvatureSample curvature_3d_axis(const ScalarField& c, int i, int j, int k, const Vec3& m, int d,
                                  const CurvatureOptions& opts) {
  const Grid& g = c.grid();
  const int t1 = d == 0 ? 1 : 0;
  const int t2 = d == 2 ? 1 : 2;
  const int fluid_dir = m[d] > 0.0 ? -1 : 1;
  double H[3][3];
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      Index3 p{i, j, k};
      p[t1] += a;
      p[t2] += b;
      for (int ax : {t1, t2}) {
        if ((p[ax] < 0 || p[ax] >= g.count(ax)) && g.bc(ax) != Boundary::Periodic) return {};
      }
    }
  }
  bool ok = false;
  for (int half = 1; half <= opts.max_half && !ok; ++half) {
    ok = true;
    for (int a = -1; a <= 1 && ok; ++a) {
      for (int b = -1; b <= 1 && ok; ++b) {
        Index3 p{i, j, k};
        p[t1] += a;
        p[t2] += b;
        const HeightSample hs = height_column(c, p.i, p.j, p.k, d, fluid_dir, opts.column_tol, half);
        ok = hs.valid;
        H[a + 1][b + 1] = hs.height;
      }
    }
  }
  if (!ok) return {};
  const double h1 = g.spacing(t1), h2 = g.spacing(t2);
  const double hx = (H[2][1] - H[0][1]) / (2.0 * h1);
  const double hz = (H[1][2] - H[1][0]) / (2.0 * h2);
  const double hxx = (H[2][1] - 2.0 * H[1][1] + H[0][1]) / (h1 * h1);
  const double hzz = (H[1][2] - 2.0 * H[1][1] + H[1][0]) / (h2 * h2);
  const double hxz = (H[2][2] - H[2][0] - H[0][2] + H[0][0]) / (4.0 * h1 * h2);
  const double num = hxx + hzz + hxx * hz * hz + hzz * hx * hx - 2.0 * hxz * hx * hz;
  const double base = opts.literal_denominator ? 1.0 + hx * hx + hz : 1.0 + hx * hx + hz * hz;
  const double den = std::pow(base, 1.5);
  if (!std::isfinite(den) || den <= 0.0) return {};
  return {-num / den, true};
}

}  // namespace

CurvatureSample curvature_2d(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts) {
  if (!c.grid().is_2d()) throw std::logic_error("curvature_2d on a 3D grid");
  const Vec3 m = youngs_normal(c, i, j, k);
  int axes[3];
  const int n = candidate_axes(m, 2, opts.axis_fallback, axes);
  for (int q = 0; q < n; ++q) {
    const CurvatureSample s = curvature_2d_axis(c, i, j, k, m, axes[q], opts);
    if (s.valid) return s;
  }
  return {};
}

CurvatureSample curvature_3d(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts) {
  if (c.grid().is_2d()) throw std::logic_error("curvature_3d on a 2D grid");
  const Vec3 m = youngs_normal(c, i, j, k);
  int axes[3];
  const int n = candidate_axes(m, 3, opts.axis_fallback, axes);
  for (int q = 0; q < n; ++q) {
    const CurvatureSample s = curvature_3d_axis(c, i, j, k, m, axes[q], opts);
    if (s.valid) return s;
  }
  return {};
}

CurvatureSample curvature_at(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts) {
  return c.grid().is_2d() ? curvature_2d(c, i, j, k, opts) : curvature_3d(c, i, j, k, opts);
}

std::vector<std::size_t> gradient_band(const ScalarField& c) {
  const Grid& g = c.grid();
  const int dims = g.dim();
  std::vector<std::uint8_t> mark(g.size(), 0);
  for (int k = 0; k < g.nz(); ++k) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        const std::size_t idx = g.index(i, j, k);
        const double v = c[idx];
        for (int a = 0; a < dims; ++a) {
          Index3 nb{i, j, k};
          nb[a] += 1;
          if (nb[a] >= g.count(a)) {
            if (g.bc(a) != Boundary::Periodic) continue;
            nb[a] = 0;
          }
          const std::size_t nidx = g.index(nb);
          if (c[nidx] != v) {
            mark[idx] = 1;
            mark[nidx] = 1;
          }
        }
      }
    }
  }
  // A non-zero central difference implies a differing face pair at the cell.
  std::vector<std::size_t> band;
  for (int k = 0; k < g.nz(); ++k) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        const std::size_t idx = g.index(i, j, k);
        if (!mark[idx]) continue;
        if (gradient_norm_at(c, i, j, k) > 1e-12) band.push_back(idx);
      }
    }
  }
  return band;
}

long CurvatureField::find(std::size_t flat) const {
  auto it = std::lower_bound(band.begin(), band.end(), flat);
  if (it == band.end() || *it != flat) return -1;
  return static_cast<long>(it - band.begin());
}

ScalarField CurvatureField::to_field() const {
  ScalarField f(grid);
  for (std::size_t q = 0; q < band.size(); ++q) {
    if (state[q] != KappaState::None) f[band[q]] = kappa[q];
  }
  return f;
}

CurvatureField compute_curvature(const ColorField& c, const CurvatureOptions& opts) {
  const Grid& g = c.grid();
  CurvatureField kf;
  kf.grid = g;
  kf.band = gradient_band(c);
  const std::size_t nb = kf.band.size();
  kf.kappa.assign(nb, 0.0);
  kf.state.assign(nb, KappaState::None);
  double hmin = g.dx();
  for (int a = 1; a < g.dim(); ++a) hmin = std::min(hmin, g.spacing(a));

  std::vector<std::size_t> source(nb, 0);
  std::vector<std::size_t> frontier;
  for (std::size_t q = 0; q < nb; ++q) {
    const double v = c[kf.band[q]];
    if (!(v > opts.eps && v < 1.0 - opts.eps)) continue;
    ++kf.mixed;
    const Index3 p = g.unflatten(kf.band[q]);
    const CurvatureSample s = curvature_at(c, p.i, p.j, p.k, opts);
    if (!s.valid || !std::isfinite(s.kappa)) continue;
    kf.kappa[q] = s.kappa;
    kf.state[q] = KappaState::Valid;
    source[q] = q;
    frontier.push_back(q);
    ++kf.valid;
    if (std::fabs(s.kappa) * hmin > 1.0) ++kf.over_resolved;
  }

  // Level-synchronous multi-source BFS over band cells.
  const int dims = g.dim();
  std::vector<std::size_t> next;
  std::vector<std::uint8_t> in_next(nb, 0);
  while (!frontier.empty()) {
    next.clear();
    for (std::size_t q : frontier) {
      const Index3 p = g.unflatten(kf.band[q]);
      for (int a = 0; a < dims; ++a) {
        for (int dlt : {-1, 1}) {
          Index3 n = p;
          n[a] += dlt;
          if (n[a] < 0 || n[a] >= g.count(a)) {
            if (g.bc(a) != Boundary::Periodic) continue;
            n[a] = g.resolve(a, n[a]);
          }
          const long r = kf.find(g.index(n));
          if (r < 0) continue;
          const auto ur = static_cast<std::size_t>(r);
          if (kf.state[ur] == KappaState::None) {
            kf.state[ur] = KappaState::Inherited;
            source[ur] = source[q];
            in_next[ur] = 1;
            next.push_back(ur);
          } else if (in_next[ur] && source[q] < source[ur]) {
            source[ur] = source[q];
          }
        }
      }
    }
    for (std::size_t q : next) {
      in_next[q] = 0;
      kf.kappa[q] = kf.kappa[source[q]];
    }
    frontier.swap(next);
  }
  return kf;
}

double mean_curvature(const ColorField& c, const CurvatureField& kf, DeltaKind kind) {
  if (kind == DeltaKind::Flux) throw std::invalid_argument("mean_curvature: flux multiplier needs the velocity");
  double num = 0.0, den = 0.0;
  for (std::size_t q = 0; q < kf.band.size(); ++q) {
    if (kf.state[q] != KappaState::Valid) continue;
    const std::size_t idx = kf.band[q];
    double w;
    if (kind == DeltaKind::Polynomial) {
      w = delta_polynomial(c[idx]);
    } else {
      const Index3 p = c.grid().unflatten(idx);
      w = gradient_norm_at(c, p.i, p.j, p.k);
    }
    num += kf.kappa[q] * w;
    den += w;
  }
  if (!(den > 0.0)) throw InterfaceVanished("mean curvature: no valid interface cells");
  return num / den;
}

}  // namespace vvof
