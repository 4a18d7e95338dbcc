#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vvof/grid.hpp"

namespace vvof {

enum class DeltaKind {
  Polynomial,  // 4 C (1 - C)
  Gradient,    // |grad C|
  Flux,        // multiplier that zeroes the split scheme's discrete volume change
};

/// Raised when no interface cell is left to average curvature over.
class InterfaceVanished : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurvatureOptions {
  double eps = 1e-10;         // mixed-cell threshold
  double column_tol = 1e-6;   // column ends must be within this of full / empty
  int max_half = 4;           // columns grow from 3 cells up to 2 * max_half + 1 when they fail to bracket
  bool literal_denominator = false;  // (1 + Hx^2 + Hz)^(3/2) instead of (1 + Hx^2 + Hz^2)^(3/2)
  bool axis_fallback = true;  // retry along the next-largest normal component when columns fail
};

struct HeightSample {
  double height = 0.0;  // fluid amount in the column, length units
  bool valid = false;   // column brackets the interface and stays in the domain
};

/// Fluid amount in the 2 * half + 1 cell column centred on (i,j,k) along
/// `axis`. fluid_dir = -1 when the fluid lies towards lower indices, +1
/// otherwise; the column is valid when its fluid end is full and its other
/// end empty.
HeightSample height_column(const ScalarField& c, int i, int j, int k, int axis, int fluid_dir,
                           double tol = 1e-6, int half = 1);

struct CurvatureSample {
  double kappa = 0.0;
  bool valid = false;
};

/// Height-function curvature; positive for a convex blob of C = 1.
CurvatureSample curvature_2d(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts = {});
CurvatureSample curvature_3d(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts = {});
CurvatureSample curvature_at(const ScalarField& c, int i, int j, int k,
                             const CurvatureOptions& opts = {});

/// Cells with |grad C| > 1e-12 (central differences), ascending flat index.
std::vector<std::size_t> gradient_band(const ScalarField& c);

enum class KappaState : std::uint8_t { None = 0, Valid = 1, Inherited = 2 };

/// Curvature over the gradient band. Mixed cells with valid height columns
/// carry their own value; the rest inherit from the nearest valid cell by
/// breadth-first distance over band cells (ties to the lower source index).
/// Cells of band components without any valid cell stay None.
struct CurvatureField {
  Grid grid;
  std::vector<std::size_t> band;
  std::vector<double> kappa;       // aligned with band
  std::vector<KappaState> state;   // aligned with band
  std::size_t mixed = 0;
  std::size_t valid = 0;
  std::size_t over_resolved = 0;  // valid cells with |kappa| * dx > 1

  /// Position in band or -1.
  long find(std::size_t flat) const;
  /// Full-grid field (0 outside the band and for None cells).
  ScalarField to_field() const;
};

CurvatureField compute_curvature(const ColorField& c, const CurvatureOptions& opts = {});

/// delta_1(C) = 4 C (1 - C).
inline double delta_polynomial(double c) { return 4.0 * c * (1.0 - c); }

/// Weighted mean curvature over valid mixed cells. Throws InterfaceVanished
/// when the weights sum to zero. DeltaKind::Flux is handled by
/// flux_mean_curvature and rejected here.
double mean_curvature(const ColorField& c, const CurvatureField& kf, DeltaKind kind);

}  // namespace vvof
