#pragma once

// Data-parallel inner loops of the solver. Every kernel has a scalar
// reference implementation and, where the build and CPU allow it, an AVX2
// variant. Variants are bit-for-bit equivalent: reductions accumulate in four
// interleaved lanes combined as (l0 + l1) + (l2 + l3), then add the tail in
// order, in both the scalar and the vector code.

#include <cstddef>
#include <string_view>

namespace vvof::kernels {

struct ClipStats {
  double net_change = 0.0;  // sum of (new - old)
  std::size_t clipped = 0;  // cells modified
};

struct KernelTable {
  const char* name;

  /// Ordered four-lane sum.
  double (*sum)(const double* x, std::size_t n);
  /// Ordered four-lane sum of |a - b|.
  double (*sum_abs_diff)(const double* a, const double* b, std::size_t n);
  /// Max over cells of |u|*su + |v|*sv + |w|*sw (w may be null).
  double (*max_abs_rate)(const double* u, const double* v, const double* w, double su,
                         double sv, double sw, std::size_t n);
  /// uf[f] = 0.5 * (u_ext[f] + u_ext[f + 1]) * scale, f in [0, nfaces).
  void (*face_average)(const double* u_ext, double* uf, std::size_t nfaces, double scale);
  /// Bulk (non-geometric) upwind flux: flux[f] = cf[f] * (cf[f] > 0 ? c_ext[f] : c_ext[f + 1]).
  /// c_ext holds the donor candidates, c_ext[f] left of face f.
  void (*upwind_flux)(const double* c_ext, const double* cf, double* flux, std::size_t nfaces);
  /// Split-sweep update:
  /// out[i] = c[i] - (flux[i + 1] - flux[i]) + cd[i] * (cf[i + 1] - cf[i]).
  void (*sweep_update)(const double* c, const double* flux, const double* cf, const double* cd,
                       double* out, std::size_t n);
  /// Snap C < eps to 0 and C > 1 - eps to 1 in place.
  ClipStats (*clip)(double* c, std::size_t n, double eps);
  /// out[i] = (ext[i + 2] - ext[i]) * inv2h.
  void (*central_diff)(const double* ext, double* out, std::size_t n, double inv2h);
  /// out[i] = 4 c (1 - c).
  void (*delta_poly)(const double* c, double* out, std::size_t n);
  /// out[i] = sqrt(gx^2 + gy^2 + gz^2) (gz may be null).
  void (*magnitude)(const double* gx, const double* gy, const double* gz, double* out,
                    std::size_t n);
};

const KernelTable& scalar_table();
/// Null when the AVX2 variant was not built or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Table chosen at first use: AVX2 when available, unless the environment
/// variable VVOF_SIMD is set to "scalar".
const KernelTable& active();

/// Override the active table (tests, benchmarks). Returns the previous one.
const KernelTable& set_active(const KernelTable& table);

}  // namespace vvof::kernels
