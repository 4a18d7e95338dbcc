#include "vvof/motion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace vvof {

namespace {
constexpr double kPi = std::numbers::pi;

struct KindName {
  MotionKind kind;
  const char* name;
};
constexpr KindName kKindNames[] = {
    {MotionKind::Curvature, "curvature"},
    {MotionKind::CurvatureConstrained, "curvature-constrained"},
    {MotionKind::RigidRotation, "rigid-rotation"},
    {MotionKind::Vortex2d, "vortex-2d"},
    {MotionKind::Deformation3d, "deformation-3d"},
    {MotionKind::Helical, "helical"},
    {MotionKind::RadialRp, "radial-rp"},
};
}  // namespace

MotionKind parse_motion_kind(const std::string& name) {
  for (const auto& kn : kKindNames) {
    if (name == kn.name) return kn.kind;
  }
  std::string all;
  for (const auto& kn : kKindNames) all += (all.empty() ? "" : ", ") + std::string(kn.name);
  throw ConfigError("unknown motion kind '" + name + "' (expected one of: " + all + ")");
}

std::string to_string(MotionKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

bool is_prescribed(MotionKind kind) {
  return kind == MotionKind::RigidRotation || kind == MotionKind::Vortex2d ||
         kind == MotionKind::Deformation3d || kind == MotionKind::Helical;
}

bool MotionSpec::needs_curvature() const {
  for (const auto& t : terms) {
    if (t.kind == MotionKind::Curvature || t.kind == MotionKind::CurvatureConstrained) return true;
  }
  return false;
}

bool MotionSpec::constrained() const { return find(MotionKind::CurvatureConstrained) != nullptr; }

const MotionTerm* MotionSpec::find(MotionKind kind) const {
  for (const auto& t : terms) {
    if (t.kind == kind) return &t;
  }
  return nullptr;
}

double prescribed_time_factor(const MotionTerm& term, double t) {
  switch (term.kind) {
    case MotionKind::Vortex2d:
    case MotionKind::Deformation3d:
      return std::cos(kPi * t / term.period);
    default:
      return 1.0;
  }
}

VelocityField prescribed_velocity(const MotionTerm& term, const Grid& grid, double t) {
  if (!is_prescribed(term.kind)) {
    throw ConfigError("motion kind '" + to_string(term.kind) + "' is not a prescribed field");
  }
  VelocityField vel(grid);
  const double f = prescribed_time_factor(term, t);
  const Vec3 c = term.center;
  for (int k = 0; k < grid.nz(); ++k) {
    for (int j = 0; j < grid.ny(); ++j) {
      for (int i = 0; i < grid.nx(); ++i) {
        const Vec3 p = grid.center(i, j, k);
        const std::size_t idx = grid.index(i, j, k);
        const double x = p[0], y = p[1], z = p[2];
        double u = 0.0, v = 0.0, w = 0.0;
        switch (term.kind) {
          case MotionKind::RigidRotation: {
            const double om = 2.0 * kPi / term.period;
            u = om * (y - c[1]);
            v = -om * (x - c[0]);
            break;
          }
          case MotionKind::Vortex2d: {
            const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
            u = -2.0 * sx * sx * sy * std::cos(kPi * y) * f;
            v = 2.0 * sy * sy * sx * std::cos(kPi * x) * f;
            break;
          }
          case MotionKind::Deformation3d: {
            const double sx = std::sin(kPi * x), sy = std::sin(kPi * y), sz = std::sin(kPi * z);
            const double s2x = std::sin(2.0 * kPi * x), s2y = std::sin(2.0 * kPi * y),
                         s2z = std::sin(2.0 * kPi * z);
            u = 2.0 * sx * sx * s2y * s2z * f;
            v = -sy * sy * s2x * s2z * f;
            w = -sz * sz * s2x * s2y * f;
            break;
          }
          case MotionKind::Helical: {
            const double dx = x - c[0], dy = y - c[1];
            const double rho = std::sqrt(dx * dx + dy * dy);
            const double phi = rho > 0.0 ? dx / rho : 0.0;
            u = 2.0 * kPi * term.u_max * dy;
            v = 2.0 * kPi * term.v_max * (-dx);
            w = term.w_max * std::acos(std::clamp(phi, -1.0, 1.0));
            break;
          }
          default:
            break;
        }
        vel.u()[idx] = u;
        vel.v()[idx] = v;
        if (!grid.is_2d()) vel.w()[idx] = w;
      }
    }
  }
  return vel;
}

namespace {

// Unit normal grad C / |grad C| at a cell, or false when the gradient vanishes.
bool unit_gradient(const ScalarField& c, int i, int j, int k, Vec3& n) {
  const Grid& g = c.grid();
  n = {0.0, 0.0, 0.0};
  n[0] = (c.ghost(i + 1, j, k) - c.ghost(i - 1, j, k)) * (1.0 / (2.0 * g.dx()));
  n[1] = (c.ghost(i, j + 1, k) - c.ghost(i, j - 1, k)) * (1.0 / (2.0 * g.dy()));
  if (!g.is_2d()) n[2] = (c.ghost(i, j, k + 1) - c.ghost(i, j, k - 1)) * (1.0 / (2.0 * g.dz()));
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(norm > 1e-12)) return false;
  for (double& v : n) v /= norm;
  return true;
}

bool supported(double v, VelocitySupport support, double eps) {
  return support == VelocitySupport::GradientBand || (v > eps && v < 1.0 - eps);
}

}  // namespace

void add_curvature_velocity(VelocityField& vel, const ColorField& c, const CurvatureField& kf,
                            double kappa_bar, VelocitySupport support, double eps) {
  const Grid& g = c.grid();
  for (std::size_t q = 0; q < kf.band.size(); ++q) {
    if (kf.state[q] == KappaState::None) continue;
    const std::size_t idx = kf.band[q];
    if (!supported(c[idx], support, eps)) continue;
    const Index3 p = g.unflatten(idx);
    Vec3 n;
    if (!unit_gradient(c, p.i, p.j, p.k, n)) continue;
    const double speed = kf.kappa[q] - kappa_bar;
    for (int d = 0; d < g.dim(); ++d) vel.comp[d][idx] += speed * n[d];
  }
}

double flux_mean_curvature(const ColorField& c, const CurvatureField& kf, const VelocityField& base,
                           VelocitySupport support, double eps) {
  const Grid& g = c.grid();
  const int dims = g.dim();
  // Per cell: kappa and unit normal where a curvature velocity will exist.
  std::vector<std::uint8_t> moves(g.size(), 0);
  std::vector<double> kap(g.size(), 0.0);
  std::vector<Vec3> nrm(g.size(), Vec3{0.0, 0.0, 0.0});
  for (std::size_t q = 0; q < kf.band.size(); ++q) {
    if (kf.state[q] == KappaState::None) continue;
    const std::size_t idx = kf.band[q];
    if (!supported(c[idx], support, eps)) continue;
    const Index3 p = g.unflatten(idx);
    Vec3 n;
    if (!unit_gradient(c, p.i, p.j, p.k, n)) continue;
    moves[idx] = 1;
    kap[idx] = kf.kappa[q];
    nrm[idx] = n;
  }
  // Volume change ~ sum over faces of u_face (cd_L - cd_R) / h, u_face the mean of both cells.
  double a = 0.0, b = 0.0, p0 = 0.0;
  for (int d = 0; d < dims; ++d) {
    const bool periodic = g.bc(d) == Boundary::Periodic;
    const double inv_h = 1.0 / g.spacing(d);
    const int n = g.count(d);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      Index3 l = g.unflatten(idx);
      Index3 r = l;
      r[d] += 1;
      if (r[d] == n) {
        if (!periodic) continue;
        r[d] = 0;
      }
      const std::size_t ridx = g.index(r);
      const double jump = ((c[idx] >= 0.5 ? 1.0 : 0.0) - (c[ridx] >= 0.5 ? 1.0 : 0.0)) * inv_h;
      if (jump == 0.0) continue;
      p0 += 0.5 * jump * (base.comp[d][idx] + base.comp[d][ridx]);
      for (std::size_t x : {idx, ridx}) {
        if (!moves[x]) continue;
        a += 0.5 * jump * kap[x] * nrm[x][d];
        b += 0.5 * jump * nrm[x][d];
      }
    }
  }
  if (b == 0.0) throw InterfaceVanished("flux multiplier: no moving cell on the interface");
  return (a + p0) / b;
}

VelocityField curvature_velocity(const ColorField& c, const CurvatureField& kf, double kappa_bar,
                                 VelocitySupport support, double eps) {
  VelocityField vel(c.grid());
  add_curvature_velocity(vel, c, kf, kappa_bar, support, eps);
  return vel;
}

double rp_acceleration(double R, double Rdot, double dp, double rho) {
  return (dp / rho - 1.5 * Rdot * Rdot) / R;
}

std::optional<RpState> rp_integrate(const RpState& s, double dt, double dp, double rho) {
  if (!(s.R > 0.0)) return std::nullopt;
  auto ok = [](double r) { return r > 0.0 && std::isfinite(r); };
  const double k1r = s.Rdot;
  const double k1v = rp_acceleration(s.R, s.Rdot, dp, rho);
  const double r2 = s.R + 0.5 * dt * k1r, v2 = s.Rdot + 0.5 * dt * k1v;
  if (!ok(r2)) return std::nullopt;
  const double k2r = v2, k2v = rp_acceleration(r2, v2, dp, rho);
  const double r3 = s.R + 0.5 * dt * k2r, v3 = s.Rdot + 0.5 * dt * k2v;
  if (!ok(r3)) return std::nullopt;
  const double k3r = v3, k3v = rp_acceleration(r3, v3, dp, rho);
  const double r4 = s.R + dt * k3r, v4 = s.Rdot + dt * k3v;
  if (!ok(r4)) return std::nullopt;
  const double k4r = v4, k4v = rp_acceleration(r4, v4, dp, rho);
  RpState n;
  n.R = s.R + dt / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
  n.Rdot = s.Rdot + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  n.t = s.t + dt;
  if (!ok(n.R) || !std::isfinite(n.Rdot)) return std::nullopt;
  return n;
}

double rp_collapse_time(double dt, double dp, double rho, double r0, double fraction) {
  const double target = fraction * r0;
  RpState s{r0, 0.0, 0.0};
  const long max_steps = static_cast<long>(1e9);
  for (long n = 0; n < max_steps; ++n) {
    const auto next = rp_integrate(s, dt, dp, rho);
    if (!next) throw std::runtime_error("rp_collapse_time: collapsed before reaching target");
    if (next->R <= target) {
      // Cubic Hermite on [0, 1] in units of dt; bisection for the crossing.
      const double y0 = s.R, y1 = next->R, m0 = s.Rdot * dt, m1 = next->Rdot * dt;
      auto h = [&](double u) {
        const double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * y1 +
               (u3 - u2) * m1;
      };
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) > target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return s.t + 0.5 * (lo + hi) * dt;
    }
    s = *next;
  }
  throw std::runtime_error("rp_collapse_time: radius never reached the target");
}

VelocityField rp_velocity(const ColorField& c, const RpState& s, VelocitySupport support,
                          double eps) {
  const Grid& g = c.grid();
  VelocityField vel(g);
  if (s.Rdot == 0.0) return vel;
  for (std::size_t idx : gradient_band(c)) {
    if (!supported(c[idx], support, eps)) continue;
    const Index3 p = g.unflatten(idx);
    Vec3 n;
    if (!unit_gradient(c, p.i, p.j, p.k, n)) continue;
    for (int d = 0; d < g.dim(); ++d) vel.comp[d][idx] = s.Rdot * n[d];
  }
  return vel;
}

void rp_source_step(ColorField& c, const RpState& s, double dt) {
  const auto band = gradient_band(c);
  std::vector<double> rate(band.size());
  for (std::size_t q = 0; q < band.size(); ++q) {
    const Index3 p = c.grid().unflatten(band[q]);
    rate[q] = -s.Rdot * gradient_norm_at(c, p.i, p.j, p.k);
  }
  for (std::size_t q = 0; q < band.size(); ++q) {
    c[band[q]] = std::clamp(c[band[q]] + dt * rate[q], 0.0, 1.0);
  }
}

}  // namespace vvof
