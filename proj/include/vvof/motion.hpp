#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvof/curvature.hpp"
#include "vvof/grid.hpp"

namespace vvof {

enum class MotionKind {
  Curvature,             // u = kappa n
  CurvatureConstrained,  // u = (kappa - kappa_bar) n
  RigidRotation,
  Vortex2d,
  Deformation3d,
  Helical,
  RadialRp,
};

MotionKind parse_motion_kind(const std::string& name);
std::string to_string(MotionKind kind);
bool is_prescribed(MotionKind kind);

/// Where interface-driven velocities live.
enum class VelocitySupport {
  MixedOnly,     // eps < C < 1 - eps
  GradientBand,  // |grad C| > 1e-12
};

struct MotionTerm {
  MotionKind kind = MotionKind::Curvature;
  Vec3 center{0.5, 0.5, 0.5};
  double period = 1.0;  // T for reversing fields, revolution time for rigid rotation
  double u_max = 0.0, v_max = 0.0, w_max = 0.0;
  // Rayleigh-Plesset parameters.
  double dp = -1.0;
  double rho = 1.0;
  double r0 = 1.0;
  double rdot0 = 0.0;
  bool source_mode = false;  // drive C by dC/dt = -Rdot |grad C| instead of split advection
};

/// Terms are superposed: cell-centred velocities are summed before face
/// averaging.
struct MotionSpec {
  std::vector<MotionTerm> terms;
  VelocitySupport support = VelocitySupport::MixedOnly;

  bool needs_curvature() const;
  bool constrained() const;
  const MotionTerm* find(MotionKind kind) const;
};

/// Analytic velocity of a prescribed term at cell centres and time t.
VelocityField prescribed_velocity(const MotionTerm& term, const Grid& grid, double t);

/// Prescribed fields factor as spatial(x) * factor(t); this is the factor.
double prescribed_time_factor(const MotionTerm& term, double t);

/// Interface-normal projection of (kappa - kappa_bar): u = (kappa - kappa_bar)
/// grad C / |grad C|, which moves a convex blob of C = 1 inwards when
/// kappa_bar = 0. Cells whose curvature could not be assigned get zero.
VelocityField curvature_velocity(const ColorField& c, const CurvatureField& kf, double kappa_bar,
                                 VelocitySupport support = VelocitySupport::MixedOnly,
                                 double eps = 1e-10);

/// kappa_bar for which the split scheme's volume change vanishes: the net
/// face flux of base + (kappa - kappa_bar) n through the C = 1/2 boundary is
/// zero. `base` holds any prescribed velocity already present. Throws
/// InterfaceVanished when no supported cell touches that boundary.
double flux_mean_curvature(const ColorField& c, const CurvatureField& kf, const VelocityField& base,
                           VelocitySupport support, double eps);

/// Adds the curvature velocity into an existing field.
void add_curvature_velocity(VelocityField& vel, const ColorField& c, const CurvatureField& kf,
                            double kappa_bar, VelocitySupport support, double eps);

struct RpState {
  double R = 1.0;
  double Rdot = 0.0;
  double t = 0.0;
};

/// R'' = (dp / rho - 1.5 R'^2) / R.
double rp_acceleration(double R, double Rdot, double dp, double rho);

/// One classical RK4 step. Empty when R reaches zero (collapse).
std::optional<RpState> rp_integrate(const RpState& s, double dt, double dp, double rho);

/// Time at which R falls to `fraction` * R(0), by Hermite interpolation
/// inside the crossing step. Throws if the radius never gets there.
double rp_collapse_time(double dt, double dp, double rho, double r0, double fraction);

/// u = Rdot grad C / |grad C| on the support, with C = 1 in the liquid.
VelocityField rp_velocity(const ColorField& c, const RpState& s,
                          VelocitySupport support = VelocitySupport::MixedOnly,
                          double eps = 1e-10);

/// Non-split source update C <- C - dt Rdot |grad C| (central differences),
/// then clamped to [0, 1]. Diagnostic only.
void rp_source_step(ColorField& c, const RpState& s, double dt);

}  // namespace vvof
