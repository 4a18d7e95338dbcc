#pragma once

#include "vvof/grid.hpp"

namespace vvof {

/// Plane m.x = alpha in the unit cell, x measured from the low corner. The
/// reference fluid occupies m.x <= alpha, so m points out of the fluid.
struct PlicPlane {
  Vec3 m{0.0, 0.0, 0.0};
  double alpha = 0.0;
};

class DegenerateNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Components below this magnitude are lifted to it after normalisation.
inline constexpr double kNormalFloor = 1e-12;

/// Youngs estimate of m = -grad C at a cell (physical units, not
/// normalised): average of the corner gradients of the surrounding 2x2
/// (2D) or 2x2x2 (3D) blocks.
Vec3 youngs_normal(const ScalarField& c, int i, int j, int k);

/// Rescales a physical-space normal to the unit-cell frame (m_d * h_d).
Vec3 to_cell_frame(const Vec3& m, const Grid& grid);

/// Volume of {x in [0,1]^3 : m'.x' <= alpha} where m' = |m| / sum|m| and x'
/// is x reflected on the axes with m_d < 0. alpha is therefore the
/// normalised plane constant in [0, 1].
double volume_from_alpha(const Vec3& m, double alpha);

/// Inverse of volume_from_alpha in the same normalised frame.
double alpha_from_volume(const Vec3& m, double c);

/// Plane in the cell frame (general sign m, unnormalised) enclosing volume c.
PlicPlane plane_from_volume(const Vec3& m, double c);

/// Volume under a cell-frame plane within the unit cell.
double plane_volume(const PlicPlane& p);

/// Volume of the region m.x <= alpha (cell frame) inside the slab
/// x0 <= x_axis <= x1 of the unit cell.
double cut_volume(const Vec3& m, double alpha, double x0, double x1, int axis);
inline double cut_volume(const PlicPlane& p, double x0, double x1, int axis) {
  return cut_volume(p.m, p.alpha, x0, x1, axis);
}

}  // namespace vvof
