// AVX2 variants of the line kernels. Compiled with -mavx2 only (no FMA) so
// that every operation rounds exactly like the scalar reference.

#include <immintrin.h>

#include <cmath>

#include "vvof/kernels.hpp"

namespace vvof::kernels {
namespace {

inline double combine_lanes(__m256d acc) {
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

inline __m256d vabs(__m256d x) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, x);
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = combine_lanes(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
  }
  double s = combine_lanes(acc);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double max_abs_rate_avx2(const double* u, const double* v, const double* w, double su, double sv,
                         double sw, std::size_t n) {
  const __m256d vsu = _mm256_set1_pd(su), vsv = _mm256_set1_pd(sv), vsw = _mm256_set1_pd(sw);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_mul_pd(vabs(_mm256_loadu_pd(u + i)), vsu),
                              _mm256_mul_pd(vabs(_mm256_loadu_pd(v + i)), vsv));
    if (w) r = _mm256_add_pd(r, _mm256_mul_pd(vabs(_mm256_loadu_pd(w + i)), vsw));
    m = _mm256_max_pd(m, r);
  }
  alignas(32) double l[4];
  _mm256_store_pd(l, m);
  double out = l[0];
  for (int q = 1; q < 4; ++q) out = l[q] > out ? l[q] : out;
  for (; i < n; ++i) {
    double r = std::fabs(u[i]) * su + std::fabs(v[i]) * sv;
    if (w) r = r + std::fabs(w[i]) * sw;
    out = r > out ? r : out;
  }
  return out;
}

void face_average_avx2(const double* u_ext, double* uf, std::size_t nfaces, double scale) {
  const __m256d half = _mm256_set1_pd(0.5), vs = _mm256_set1_pd(scale);
  std::size_t f = 0;
  for (; f + 4 <= nfaces; f += 4) {
    const __m256d a = _mm256_loadu_pd(u_ext + f);
    const __m256d b = _mm256_loadu_pd(u_ext + f + 1);
    _mm256_storeu_pd(uf + f, _mm256_mul_pd(_mm256_mul_pd(half, _mm256_add_pd(a, b)), vs));
  }
  for (; f < nfaces; ++f) uf[f] = 0.5 * (u_ext[f] + u_ext[f + 1]) * scale;
}

void upwind_flux_avx2(const double* c_ext, const double* cf, double* flux, std::size_t nfaces) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t f = 0;
  for (; f + 4 <= nfaces; f += 4) {
    const __m256d c = _mm256_loadu_pd(cf + f);
    const __m256d left = _mm256_loadu_pd(c_ext + f);
    const __m256d right = _mm256_loadu_pd(c_ext + f + 1);
    const __m256d pos = _mm256_cmp_pd(c, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(flux + f, _mm256_mul_pd(c, _mm256_blendv_pd(right, left, pos)));
  }
  for (; f < nfaces; ++f) flux[f] = cf[f] * (cf[f] > 0.0 ? c_ext[f] : c_ext[f + 1]);
}

void sweep_update_avx2(const double* c, const double* flux, const double* cf, const double* cd,
                       double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dflux = _mm256_sub_pd(_mm256_loadu_pd(flux + i + 1), _mm256_loadu_pd(flux + i));
    const __m256d dcf = _mm256_sub_pd(_mm256_loadu_pd(cf + i + 1), _mm256_loadu_pd(cf + i));
    const __m256d r = _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(c + i), dflux),
                                    _mm256_mul_pd(_mm256_loadu_pd(cd + i), dcf));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = (c[i] - (flux[i + 1] - flux[i])) + cd[i] * (cf[i + 1] - cf[i]);
}

ClipStats clip_avx2(double* c, std::size_t n, double eps) {
  const __m256d veps = _mm256_set1_pd(eps), vhi = _mm256_set1_pd(1.0 - eps);
  const __m256d zero = _mm256_setzero_pd(), one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d old = _mm256_loadu_pd(c + i);
    __m256d v = _mm256_blendv_pd(old, zero, _mm256_cmp_pd(old, veps, _CMP_LT_OQ));
    v = _mm256_blendv_pd(v, one, _mm256_cmp_pd(v, vhi, _CMP_GT_OQ));
    acc = _mm256_add_pd(acc, _mm256_sub_pd(v, old));
    const int changed = _mm256_movemask_pd(_mm256_cmp_pd(v, old, _CMP_NEQ_UQ));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(changed)));
    _mm256_storeu_pd(c + i, v);
  }
  double s = combine_lanes(acc);
  const double hi = 1.0 - eps;
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

void central_diff_avx2(const double* ext, double* out, std::size_t n, double inv2h) {
  const __m256d s = _mm256_set1_pd(inv2h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ext + i + 2), _mm256_loadu_pd(ext + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(d, s));
  }
  for (; i < n; ++i) out[i] = (ext[i + 2] - ext[i]) * inv2h;
}

void delta_poly_avx2(const double* c, double* out, std::size_t n) {
  const __m256d four = _mm256_set1_pd(4.0), one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(c + i);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(four, x), _mm256_sub_pd(one, x)));
  }
  for (; i < n; ++i) out[i] = 4.0 * c[i] * (1.0 - c[i]);
}

void magnitude_avx2(const double* gx, const double* gy, const double* gz, double* out,
                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(gx + i);
    const __m256d y = _mm256_loadu_pd(gy + i);
    __m256d s = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    if (gz) {
      const __m256d z = _mm256_loadu_pd(gz + i);
      s = _mm256_add_pd(s, _mm256_mul_pd(z, z));
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  for (; i < n; ++i) {
    double s = gx[i] * gx[i] + gy[i] * gy[i];
    if (gz) s = s + gz[i] * gz[i];
    out[i] = std::sqrt(s);
  }
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table{
      "avx2",           sum_avx2,          sum_abs_diff_avx2, max_abs_rate_avx2,
      face_average_avx2, upwind_flux_avx2, sweep_update_avx2, clip_avx2,
      central_diff_avx2, delta_poly_avx2,  magnitude_avx2,
  };
  return &table;
}

}  // namespace vvof::kernels
