#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vvof/grid.hpp"

namespace vvof {

/// Raised when a step would violate the CFL bound; aborts a run.
class CflViolation : public std::runtime_error {
 public:
  CflViolation(const std::string& what, double cfl) : std::runtime_error(what), cfl_(cfl) {}
  double cfl() const { return cfl_; }

 private:
  double cfl_;
};

inline constexpr double kCflLimit = 0.5;

/// max over cells of dt * sum_d |u_d| / dx_d.
double cfl_check(const VelocityField& vel, double dt);

/// Same bound restricted to occupied cells: C > 0 or a face neighbour with
/// C > 0. Fluxes elsewhere are identically zero.
double cfl_check_occupied(const VelocityField& vel, const ColorField& c, double dt);

/// Axes of one step in sweep order: (x,y,z), (y,z,x), (z,x,y), ... in 3D and
/// (x,y), (y,x), ... in 2D.
std::vector<int> sweep_order(long step_index, int dim);

/// Dilatation coefficient c_d = [C >= 1/2] per cell.
ScalarField dilatation_coefficient(const ColorField& c);

struct SweepOptions {
  double eps = 1e-10;  // C <= eps or C >= 1 - eps fluxes as bulk
};

/// One directional split sweep along `axis`. cd is the step-start
/// dilatation coefficient. Faces on zero-neumann boundaries are closed.
void sweep(ColorField& c, const VelocityField& vel, int axis, double dt, const ScalarField& cd,
           SweepOptions opts = {});

struct ClipReport {
  double clipped_mass = 0.0;   // volume removed by clipping (negative if added)
  std::size_t clipped = 0;     // cells modified
  std::size_t wisps = 0;       // mixed cells without a mixed face neighbour
};

/// Snaps C < eps to 0 and C > 1 - eps to 1, reports removed volume and wisps.
ClipReport clip_and_report(ColorField& c, double eps);

/// Mixed cells (0 < C < 1) none of whose face neighbours is mixed.
std::size_t count_wisps(const ColorField& c);

struct StepReport {
  ClipReport clip;
};

/// Full split step in the cyclic order for `step_index`, then clipping.
StepReport advect_step(ColorField& c, const VelocityField& vel, double dt, long step_index,
                       SweepOptions opts = {});

}  // namespace vvof
