#include "vvof/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>

#include "vvof/advect.hpp"
#include "vvof/contour.hpp"
#include "vvof/curvature.hpp"
#include "vvof/metrics.hpp"
#include "vvof/motion.hpp"
#include "vvof/snapshot.hpp"

namespace vvof {

std::string to_string(EndReason r) {
  switch (r) {
    case EndReason::Completed: return "completed";
    case EndReason::InterfaceVanished: return "interface-vanished";
    case EndReason::RpCollapse: return "rp-collapse";
    case EndReason::CflViolation: return "cfl-violation";
    case EndReason::Stopped: return "stopped";
  }
  return "?";
}

ColorField initial_field(const CaseConfig& cfg) {
  const Grid g = cfg.make_grid();
  std::vector<ImplicitShape> parts;
  for (const auto& s : cfg.shapes) parts.push_back(make_shape(s));
  ImplicitShape shape = parts.size() == 1 ? parts.front() : shape_union(parts);
  if (cfg.invert) shape = shape_complement(shape);
  return voxelize(shape, g, VoxelizeOptions{cfg.voxel_depth});
}

namespace {

struct PrescribedCache {
  MotionTerm term;
  VelocityField spatial;  // time factor 1
};

class Writer {
 public:
  explicit Writer(const CaseConfig& cfg) : cfg_(cfg) {
    if (cfg.outputs.dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.outputs.dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + cfg.outputs.dir + "': " + ec.message());
    times_ = cfg.outputs.snapshot_times;
    std::sort(times_.begin(), times_.end());
  }

  bool enabled() const { return !cfg_.outputs.dir.empty(); }

  void maybe_snapshot(long step, double t, const ColorField& c, const VelocityField* vel,
                      std::vector<std::string>& files) {
    if (!enabled()) return;
    bool due = false;
    while (next_ < times_.size() && t >= times_[next_] - 1e-9 * cfg_.dt) {
      due = true;
      ++next_;
    }
    if (!due) return;
    char name[64];
    std::snprintf(name, sizeof name, "_%06ld.vtk", step);
    files.push_back(write(path(name), c, vel));
  }

  std::string write(const std::string& p, const ColorField& c, const VelocityField* vel) const {
    std::optional<ScalarField> kappa;
    if (cfg_.outputs.kappa) kappa = compute_curvature(c, cfg_.curvature).to_field();
    write_snapshot(p, c, kappa ? &*kappa : nullptr, cfg_.outputs.velocity ? vel : nullptr);
    return p;
  }

  std::string path(const std::string& suffix) const {
    return (std::filesystem::path(cfg_.outputs.dir) / (cfg_.name + suffix)).string();
  }

 private:
  const CaseConfig& cfg_;
  std::vector<double> times_;
  std::size_t next_ = 0;
};

}  // namespace

RunResult run_case(const CaseConfig& cfg, const RunHooks& hooks) {
  cfg.validate();
  const Grid g = cfg.make_grid();
  RunResult res;
  ColorField c = initial_field(cfg);
  res.initial = c;

  std::vector<PrescribedCache> prescribed;
  const MotionTerm* rp_term = nullptr;
  for (const auto& term : cfg.motion.terms) {
    if (is_prescribed(term.kind)) {
      prescribed.push_back({term, prescribed_velocity(term, g, 0.0)});
    } else if (term.kind == MotionKind::RadialRp) {
      rp_term = &term;
    }
  }
  const bool curvature = cfg.motion.needs_curvature();
  const bool constrained = cfg.motion.constrained();
  const bool source_mode = rp_term && rp_term->source_mode;
  RpState rp{rp_term ? rp_term->r0 : 1.0, rp_term ? rp_term->rdot0 : 0.0, 0.0};

  const double v0 = total_volume(c);
  auto make_record = [&](long step, double t) {
    DiagRecord r;
    r.step = step;
    r.t = t;
    r.volume = total_volume(c);
    r.volume_norm = v0 > 0.0 ? r.volume / v0 : std::numeric_limits<double>::quiet_NaN();
    r.energy = interface_energy(c);
    if (rp_term) r.rp_radius = rp.R;
    return r;
  };

  Writer writer(cfg);
  VelocityField vel(g);
  {
    DiagRecord r0 = make_record(0, 0.0);
    if (curvature && constrained) {
      try {
        const CurvatureField kf = compute_curvature(c, cfg.curvature);
        r0.kappa_bar = cfg.delta == DeltaKind::Flux
                           ? flux_mean_curvature(c, kf, vel, cfg.motion.support, cfg.clip_eps)
                           : mean_curvature(c, kf, cfg.delta);
      } catch (const InterfaceVanished&) {
      }
    }
    res.diag.rows.push_back(r0);
    writer.maybe_snapshot(0, 0.0, c, &vel, res.files);
  }

  const long nsteps = cfg.steps();
  const double dt = cfg.dt;
  for (long n = 0; n < nsteps; ++n) {
    const double t_mid = (static_cast<double>(n) + 0.5) * dt;
    const double t_end = static_cast<double>(n + 1) * dt;
    for (auto& comp : vel.comp) comp.fill(0.0);
    for (const auto& pc : prescribed) {
      const double f = prescribed_time_factor(pc.term, t_mid);
      for (int d = 0; d < g.dim(); ++d) {
        const ScalarField& s = pc.spatial.comp[d];
        ScalarField& o = vel.comp[d];
        for (std::size_t q = 0; q < o.size(); ++q) o[q] += s[q] * f;
      }
    }
    DiagRecord rec;
    if (curvature) {
      const CurvatureField kf = compute_curvature(c, cfg.curvature);
      if (kf.band.empty() || kf.valid == 0) {
        res.reason = EndReason::InterfaceVanished;
        res.message = "no valid interface cell at step " + std::to_string(n);
        break;
      }
      double kbar = 0.0;
      if (constrained) {
        try {
          kbar = cfg.delta == DeltaKind::Flux
                     ? flux_mean_curvature(c, kf, vel, cfg.motion.support, cfg.clip_eps)
                     : mean_curvature(c, kf, cfg.delta);
        } catch (const InterfaceVanished& e) {
          res.reason = EndReason::InterfaceVanished;
          res.message = e.what();
          break;
        }
      }
      add_curvature_velocity(vel, c, kf, kbar, cfg.motion.support, cfg.clip_eps);
      rec.kappa_bar = kbar;
      rec.kappa_valid = kf.valid;
      rec.kappa_over_resolved = kf.over_resolved;
    }
    std::optional<RpState> rp_next;
    RpState rp_mid = rp;
    if (rp_term) {
      if (auto half = rp_integrate(rp, 0.5 * dt, rp_term->dp, rp_term->rho)) rp_mid = *half;
      rp_next = rp_integrate(rp, dt, rp_term->dp, rp_term->rho);
      if (!source_mode) {
        const VelocityField rv = rp_velocity(c, rp_mid, cfg.motion.support, cfg.clip_eps);
        for (int d = 0; d < g.dim(); ++d) {
          for (std::size_t q = 0; q < g.size(); ++q) vel.comp[d][q] += rv.comp[d][q];
        }
      }
    }

    const double cfl = cfg.cfl_scope == CflScope::All ? cfl_check(vel, dt) : cfl_check_occupied(vel, c, dt);
    if (cfl >= kCflLimit) {
      res.reason = EndReason::CflViolation;
      res.abort_step = n;
      char buf[128];
      std::snprintf(buf, sizeof buf, "CFL %.6g >= %.2g at step %ld (t = %.6g)", cfl, kCflLimit, n,
                    static_cast<double>(n) * dt);
      res.message = buf;
      break;
    }

    ClipReport clip;
    try {
      if (source_mode) {
        rp_source_step(c, rp_mid, dt);
        clip = clip_and_report(c, cfg.clip_eps);
      } else {
        clip = advect_step(c, vel, dt, n, SweepOptions{cfg.clip_eps}).clip;
      }
    } catch (const CflViolation& e) {
      res.reason = EndReason::CflViolation;
      res.abort_step = n;
      res.message = e.what();
      break;
    }
    if (rp_term && rp_next) rp = *rp_next;

    DiagRecord r = make_record(n + 1, t_end);
    r.kappa_bar = rec.kappa_bar;
    r.kappa_valid = rec.kappa_valid;
    r.kappa_over_resolved = rec.kappa_over_resolved;
    r.clipped_mass = clip.clipped_mass;
    r.wisps = clip.wisps;
    r.cfl = cfl;
    res.steps = n + 1;
    const bool last = n + 1 == nsteps;
    if ((n + 1) % cfg.outputs.diag_stride == 0 || last) res.diag.rows.push_back(r);
    writer.maybe_snapshot(n + 1, t_end, c, &vel, res.files);

    if (rp_term && !rp_next) {
      if (res.diag.rows.back().step != r.step) res.diag.rows.push_back(r);
      res.reason = EndReason::RpCollapse;
      res.message = "Rayleigh-Plesset radius reached zero";
      break;
    }
    if (hooks.on_step && !hooks.on_step(StepView{n + 1, t_end, c, r, vel})) {
      if (res.diag.rows.back().step != r.step) res.diag.rows.push_back(r);
      res.reason = EndReason::Stopped;
      break;
    }
  }
  res.final_field = c;

  if (writer.enabled()) {
    if (cfg.outputs.final_snapshot) res.files.push_back(writer.write(writer.path("_final.vtk"), c, &vel));
    const std::string csv = writer.path("_diagnostics.csv");
    write_diagnostics_csv(csv, res.diag);
    res.files.push_back(csv);
    if (cfg.outputs.contour && g.is_2d()) {
      const std::string cpath = writer.path("_contour.csv");
      write_contour_csv(cpath, extract_contour_2d(c));
      res.files.push_back(cpath);
    }
  }
  return res;
}

}  // namespace vvof
