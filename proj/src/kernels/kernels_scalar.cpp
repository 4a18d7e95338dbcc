#include <algorithm>
#include <cmath>

#include "vvof/kernels.hpp"

namespace vvof::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l[0] += x[i];
    l[1] += x[i + 1];
    l[2] += x[i + 2];
    l[3] += x[i + 3];
  }
  double s = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int q = 0; q < 4; ++q) l[q] += std::fabs(a[i + q] - b[i + q]);
  }
  double s = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double max_abs_rate_scalar(const double* u, const double* v, const double* w, double su,
                           double sv, double sw, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::fabs(u[i]) * su + std::fabs(v[i]) * sv;
    if (w) r = r + std::fabs(w[i]) * sw;
    m = std::max(m, r);
  }
  return m;
}

void face_average_scalar(const double* u_ext, double* uf, std::size_t nfaces, double scale) {
  for (std::size_t f = 0; f < nfaces; ++f) uf[f] = 0.5 * (u_ext[f] + u_ext[f + 1]) * scale;
}

void upwind_flux_scalar(const double* c_ext, const double* cf, double* flux, std::size_t nfaces) {
  for (std::size_t f = 0; f < nfaces; ++f) {
    flux[f] = cf[f] * (cf[f] > 0.0 ? c_ext[f] : c_ext[f + 1]);
  }
}

void sweep_update_scalar(const double* c, const double* flux, const double* cf, const double* cd,
                         double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (c[i] - (flux[i + 1] - flux[i])) + cd[i] * (cf[i + 1] - cf[i]);
  }
}

ClipStats clip_scalar(double* c, std::size_t n, double eps) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t count = 0;
  const double hi = 1.0 - eps;
  auto one = [&](std::size_t i, int lane) {
    const double old = c[i];
    double v = old;
    if (v < eps) v = 0.0;
    if (v > hi) v = 1.0;
    l[lane] += v - old;
    count += (v != old);
    c[i] = v;
  };
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int q = 0; q < 4; ++q) one(i + q, q);
  }
  double s = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) {
    const double old = c[i];
    double v = old;
    if (v < eps) v = 0.0;
    if (v > hi) v = 1.0;
    s += v - old;
    count += (v != old);
    c[i] = v;
  }
  return {s, count};
}

void central_diff_scalar(const double* ext, double* out, std::size_t n, double inv2h) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (ext[i + 2] - ext[i]) * inv2h;
}

void delta_poly_scalar(const double* c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 4.0 * c[i] * (1.0 - c[i]);
}

void magnitude_scalar(const double* gx, const double* gy, const double* gz, double* out,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = gx[i] * gx[i] + gy[i] * gy[i];
    if (gz) s = s + gz[i] * gz[i];
    out[i] = std::sqrt(s);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",           sum_scalar,          sum_abs_diff_scalar, max_abs_rate_scalar,
      face_average_scalar, upwind_flux_scalar, sweep_update_scalar, clip_scalar,
      central_diff_scalar, delta_poly_scalar,  magnitude_scalar,
  };
  return table;
}

}  // namespace vvof::kernels
