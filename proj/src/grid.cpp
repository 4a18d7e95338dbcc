#include "vvof/grid.hpp"

#include <cmath>
#include <string>

#include "vvof/kernels.hpp"

namespace vvof {

Grid::Grid(int nx, int ny, int nz, Vec3 spacing, Vec3 origin, std::array<Boundary, 3> bc)
    : n_{nx, ny, nz}, h_(spacing), origin_(origin), bc_(bc) {
  if (nx < 3 || ny < 3 || (nz != 1 && nz < 3)) {
    throw ConfigError("grid: cell counts must be >= 3 (nz == 1 for 2D), got " +
                      std::to_string(nx) + "x" + std::to_string(ny) + "x" + std::to_string(nz));
  }
  if (nz == 1) h_[2] = 1.0;
  for (int d = 0; d < 3; ++d) {
    if (!(h_[d] > 0.0) || !std::isfinite(h_[d])) {
      throw ConfigError("grid: spacings must be positive and finite");
    }
  }
}

Grid Grid::uniform(int n, int dim, double lo, double hi, Boundary bc) {
  if (dim != 2 && dim != 3) throw ConfigError("grid: dimension must be 2 or 3");
  const int nz = dim == 2 ? 1 : n;
  return box({n, n, nz}, {lo, lo, lo}, {hi, hi, hi}, {bc, bc, bc});
}

Grid Grid::box(std::array<int, 3> counts, Vec3 lo, Vec3 hi, std::array<Boundary, 3> bc) {
  Vec3 h{};
  for (int d = 0; d < 3; ++d) {
    if (counts[d] <= 0) throw ConfigError("grid: non-positive cell count");
    h[d] = (hi[d] - lo[d]) / counts[d];
  }
  if (counts[2] == 1) {
    h[2] = 1.0;
    lo[2] = 0.0;
  }
  return Grid(counts[0], counts[1], counts[2], h, lo, bc);
}

Index3 Grid::unflatten(std::size_t idx) const {
  const auto nx = static_cast<std::size_t>(n_[0]);
  const auto ny = static_cast<std::size_t>(n_[1]);
  Index3 c;
  c.i = static_cast<int>(idx % nx);
  idx /= nx;
  c.j = static_cast<int>(idx % ny);
  c.k = static_cast<int>(idx / ny);
  return c;
}

int Grid::resolve(int axis, int idx) const {
  const int n = n_[axis];
  if (idx >= 0 && idx < n) return idx;
  if (idx < -2 || idx > n + 1) {
    throw std::out_of_range("ghost depth exceeds 2 on axis " + std::to_string(axis) +
                            " (index " + std::to_string(idx) + ")");
  }
  if (bc_[axis] == Boundary::Periodic) {
    return ((idx % n) + n) % n;
  }
  return idx < 0 ? 0 : n - 1;
}

double VectorField::face(int axis, int i, int j, int k) const {
  const ScalarField& c = comp[axis];
  int ii = i, jj = j, kk = k;
  (axis == 0 ? ii : (axis == 1 ? jj : kk)) += 1;
  return 0.5 * (c.ghost(i, j, k) + c.ghost(ii, jj, kk));
}

double total_volume(const ColorField& field) {
  const auto v = field.values();
  return kernels::active().sum(v.data(), v.size()) * field.grid().cell_volume();
}

double gradient_norm_at(const ScalarField& f, int i, int j, int k) {
  const Grid& g = f.grid();
  const double gx = (f.ghost(i + 1, j, k) - f.ghost(i - 1, j, k)) * (1.0 / (2.0 * g.dx()));
  const double gy = (f.ghost(i, j + 1, k) - f.ghost(i, j - 1, k)) * (1.0 / (2.0 * g.dy()));
  double gz = 0.0;
  if (!g.is_2d()) gz = (f.ghost(i, j, k + 1) - f.ghost(i, j, k - 1)) * (1.0 / (2.0 * g.dz()));
  return std::sqrt(gx * gx + gy * gy + gz * gz);
}

VectorField gradient_cc(const ScalarField& f) {
  const Grid& g = f.grid();
  VectorField out(g);
  const auto& kt = kernels::active();
  const int dims = g.dim();
  // Process whole lines along each axis: gather with one ghost on each side,
  // difference with the line kernel, scatter.
  for (int a = 0; a < dims; ++a) {
    const int n = g.count(a);
    const std::size_t s = g.stride(a);
    const double inv2h = 1.0 / (2.0 * g.spacing(a));
    std::vector<double> ext(static_cast<std::size_t>(n) + 2), res(static_cast<std::size_t>(n));
    const int b1 = a == 0 ? 1 : 0;
    const int b2 = a == 2 ? 1 : 2;
    for (int q = 0; q < g.count(b2); ++q) {
      for (int p = 0; p < g.count(b1); ++p) {
        Index3 base;
        base[a] = 0;
        base[b1] = p;
        base[b2] = q;
        const std::size_t start = g.index(base);
        for (int t = 0; t < n; ++t) ext[t + 1] = f[start + t * s];
        Index3 lo = base, hi = base;
        lo[a] = -1;
        hi[a] = n;
        ext[0] = f.ghost(lo.i, lo.j, lo.k);
        ext[n + 1] = f.ghost(hi.i, hi.j, hi.k);
        kt.central_diff(ext.data(), res.data(), static_cast<std::size_t>(n), inv2h);
        ScalarField& dst = out.comp[a];
        for (int t = 0; t < n; ++t) dst[start + t * s] = res[t];
      }
    }
  }
  return out;
}

}  // namespace vvof
