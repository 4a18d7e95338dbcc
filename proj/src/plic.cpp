#include "vvof/plic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace vvof {
namespace {

struct Sorted {
  double b1, b2, b3;
};

// |m| normalised to unit sum, floored, renormalised and sorted ascending.
Sorted normalise(const Vec3& m) {
  double a[3] = {std::fabs(m[0]), std::fabs(m[1]), std::fabs(m[2])};
  const double s = a[0] + a[1] + a[2];
  if (!(s > 0.0) || !std::isfinite(s)) throw DegenerateNormal("plic: zero or non-finite normal");
  for (double& v : a) v = std::max(v / s, kNormalFloor);
  const double s2 = a[0] + a[1] + a[2];
  for (double& v : a) v /= s2;
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  if (a[1] > a[2]) std::swap(a[1], a[2]);
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  return {a[0], a[1], a[2]};
}

// Volume for 0 <= a <= 1/2 with sorted positive components summing to 1.
double vol_lower(const Sorted& s, double a) {
  const double b1 = s.b1, b2 = s.b2, b3 = s.b3;
  const double b12 = b1 + b2;
  if (a <= 0.0) return 0.0;
  if (a < b1) return a * a * a / (6.0 * b1 * b2 * b3);
  const double base = (3.0 * a * a - 3.0 * a * b1 + b1 * b1) / (6.0 * b2 * b3);
  if (a < b2) return base;
  if (a < std::min(b12, b3)) {
    const double t = a - b2;
    return base - t * t * t / (6.0 * b1 * b2 * b3);
  }
  if (b12 <= b3) return (a - 0.5 * b12) / b3;
  const double t2 = a - b2, t3 = a - b3;
  return base - (t2 * t2 * t2 + t3 * t3 * t3) / (6.0 * b1 * b2 * b3);
}

double dvol_lower(const Sorted& s, double a) {
  const double b1 = s.b1, b2 = s.b2, b3 = s.b3;
  const double base = (6.0 * a - 3.0 * b1) / (6.0 * b2 * b3);
  if (a < std::min(s.b1 + s.b2, b3)) {
    const double t = a - b2;
    return base - 3.0 * t * t / (6.0 * b1 * b2 * b3);
  }
  const double t2 = a - b2, t3 = a - b3;
  return base - 3.0 * (t2 * t2 + t3 * t3) / (6.0 * b1 * b2 * b3);
}

// Safeguarded Newton on a monotone branch bracketed by [lo, hi].
double solve_bracketed(const Sorted& s, double c, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = vol_lower(s, x) - c;
    if (g == 0.0) return x;
    if (g > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    if (hi - lo <= 4e-16 * std::max(1.0, std::fabs(x))) break;
    const double d = dvol_lower(s, x);
    double nx = d > 0.0 ? x - g / d : 0.5 * (lo + hi);
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
    x = nx;
  }
  return x;
}

double alpha_lower(const Sorted& s, double c) {
  const double b1 = s.b1, b2 = s.b2, b3 = s.b3;
  const double b12 = b1 + b2;
  if (c <= 0.0) return 0.0;
  const double v1 = vol_lower(s, b1);
  if (c < v1) return std::cbrt(6.0 * b1 * b2 * b3 * c);
  const double v2 = vol_lower(s, b2);
  if (c < v2) return 0.5 * b1 + std::sqrt(std::max(0.0, 2.0 * b2 * b3 * c - b1 * b1 / 12.0));
  const double a3 = std::min(b12, b3);
  const double v3 = vol_lower(s, a3);
  if (c < v3) return solve_bracketed(s, c, b2, a3);
  if (b12 <= b3) return b3 * c + 0.5 * b12;
  return solve_bracketed(s, c, b3, 0.5);
}

double neg_part(const Vec3& m) {
  double n = 0.0;
  for (double v : m) n += v < 0.0 ? -v : 0.0;
  return n;
}

}  // namespace

Vec3 youngs_normal(const ScalarField& c, int i, int j, int k) {
  const Grid& g = c.grid();
  Vec3 m{0.0, 0.0, 0.0};
  const int dims = g.dim();
  static constexpr double w[3] = {1.0, 2.0, 1.0};
  for (int a = 0; a < dims; ++a) {
    const int t1 = a == 0 ? 1 : 0;
    const int t2 = a == 2 ? 1 : 2;
    const bool has_t2 = dims == 3;
    double sum = 0.0;
    for (int q = -1; q <= 1; ++q) {
      if (!has_t2 && q != 0) continue;
      const double wq = has_t2 ? w[q + 1] : 1.0;
      for (int p = -1; p <= 1; ++p) {
        Index3 hi{i, j, k}, lo{i, j, k};
        hi[a] += 1;
        lo[a] -= 1;
        hi[t1] += p;
        lo[t1] += p;
        if (has_t2) {
          hi[t2] += q;
          lo[t2] += q;
        }
        sum += wq * w[p + 1] * (c.ghost(hi.i, hi.j, hi.k) - c.ghost(lo.i, lo.j, lo.k));
      }
    }
    const double denom = (dims == 3 ? 32.0 : 8.0) * g.spacing(a);
    m[a] = -sum / denom;
  }
  return m;
}

Vec3 to_cell_frame(const Vec3& m, const Grid& grid) {
  Vec3 r{m[0] * grid.dx(), m[1] * grid.dy(), m[2] * grid.dz()};
  if (grid.is_2d()) r[2] = 0.0;
  return r;
}

double volume_from_alpha(const Vec3& m, double alpha) {
  const Sorted s = normalise(m);
  if (!(alpha > 0.0)) return 0.0;
  if (alpha >= 1.0) return 1.0;
  if (alpha > 0.5) return 1.0 - vol_lower(s, 1.0 - alpha);
  return vol_lower(s, alpha);
}

double alpha_from_volume(const Vec3& m, double c) {
  const Sorted s = normalise(m);
  if (!(c > 0.0)) return 0.0;
  if (c >= 1.0) return 1.0;
  if (c > 0.5) return 1.0 - alpha_lower(s, 1.0 - c);
  return alpha_lower(s, c);
}

PlicPlane plane_from_volume(const Vec3& m, double c) {
  normalise(m);
  // Signed, normalised and floored the same way as normalise().
  double a[3] = {std::fabs(m[0]), std::fabs(m[1]), std::fabs(m[2])};
  const double sum = a[0] + a[1] + a[2];
  for (double& v : a) v = std::max(v / sum, kNormalFloor);
  const double s2 = a[0] + a[1] + a[2];
  PlicPlane p;
  for (int d = 0; d < 3; ++d) p.m[d] = (m[d] < 0.0 ? -a[d] : a[d]) / s2;
  p.alpha = alpha_from_volume(p.m, c) - neg_part(p.m);
  return p;
}

double plane_volume(const PlicPlane& p) {
  const double s = std::fabs(p.m[0]) + std::fabs(p.m[1]) + std::fabs(p.m[2]);
  if (!(s > 0.0)) return p.alpha >= 0.0 ? 1.0 : 0.0;
  return volume_from_alpha(p.m, (p.alpha + neg_part(p.m)) / s);
}

double cut_volume(const Vec3& m, double alpha, double x0, double x1, int axis) {
  if (!(x1 > x0)) return 0.0;
  const double w = x1 - x0;
  Vec3 ms = m;
  ms[axis] = m[axis] * w;
  const double a = alpha - m[axis] * x0;
  return w * plane_volume({ms, a});
}

}  // namespace vvof
