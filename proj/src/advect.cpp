#include "vvof/advect.hpp"

#include <algorithm>
#include <cmath>

#include "vvof/kernels.hpp"
#include "vvof/plic.hpp"

namespace vvof {

double cfl_check(const VelocityField& vel, double dt) {
  const Grid& g = vel.grid();
  const double* w = g.is_2d() ? nullptr : vel.w().data();
  return kernels::active().max_abs_rate(vel.u().data(), vel.v().data(), w, dt / g.dx(),
                                        dt / g.dy(), dt / g.dz(), g.size());
}

double cfl_check_occupied(const VelocityField& vel, const ColorField& c, double dt) {
  const Grid& g = c.grid();
  const int dims = g.dim();
  const double su = dt / g.dx(), sv = dt / g.dy(), sw = dt / g.dz();
  double best = 0.0;
  for (int k = 0; k < g.nz(); ++k) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        bool occupied = c.at(i, j, k) > 0.0;
        for (int a = 0; a < dims && !occupied; ++a) {
          for (int dlt : {-1, 1}) {
            Index3 n{i, j, k};
            n[a] += dlt;
            if (c.ghost(n.i, n.j, n.k) > 0.0) occupied = true;
          }
        }
        if (!occupied) continue;
        const std::size_t idx = g.index(i, j, k);
        double r = std::fabs(vel.u()[idx]) * su + std::fabs(vel.v()[idx]) * sv;
        if (dims == 3) r = r + std::fabs(vel.w()[idx]) * sw;
        best = std::max(best, r);
      }
    }
  }
  return best;
}

std::vector<int> sweep_order(long step_index, int dim) {
  std::vector<int> order(static_cast<std::size_t>(dim));
  const long start = ((step_index % dim) + dim) % dim;
  for (int q = 0; q < dim; ++q) order[q] = static_cast<int>((start + q) % dim);
  return order;
}

ScalarField dilatation_coefficient(const ColorField& c) {
  ScalarField cd(c.grid());
  for (std::size_t q = 0; q < c.size(); ++q) cd[q] = c[q] >= 0.5 ? 1.0 : 0.0;
  return cd;
}

void sweep(ColorField& c, const VelocityField& vel, int axis, double dt, const ScalarField& cd,
           SweepOptions opts) {
  const Grid& g = c.grid();
  const int n = g.count(axis);
  if (n == 1) return;
  const std::size_t s = g.stride(axis);
  const bool periodic = g.bc(axis) == Boundary::Periodic;
  const double scale = dt / g.spacing(axis);
  const auto& kt = kernels::active();
  const ScalarField& u = vel.comp[axis];
  const double lo_mixed = opts.eps, hi_mixed = 1.0 - opts.eps;

  const int b1 = axis == 0 ? 1 : 0;
  const int b2 = axis == 2 ? 1 : 2;
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> ext(un + 2), uext(un + 2), cf(un + 1), cdl(un), flux(un + 1);

  struct Segment {
    std::size_t first;   // flat index of the first updated cell
    std::size_t offset;  // into values
    std::size_t count;
  };
  std::vector<Segment> segments;
  std::vector<double> values;

  for (int q = 0; q < g.count(b2); ++q) {
    for (int p = 0; p < g.count(b1); ++p) {
      Index3 base;
      base[axis] = 0;
      base[b1] = p;
      base[b2] = q;
      const std::size_t start = g.index(base);
      for (std::size_t t = 0; t < un; ++t) {
        ext[t + 1] = c[start + t * s];
        uext[t + 1] = u[start + t * s];
      }
      Index3 gl = base, gh = base;
      gl[axis] = -1;
      gh[axis] = n;
      ext[0] = c.ghost(gl.i, gl.j, gl.k);
      ext[un + 1] = c.ghost(gh.i, gh.j, gh.k);
      uext[0] = u.ghost(gl.i, gl.j, gl.k);
      uext[un + 1] = u.ghost(gh.i, gh.j, gh.k);
      kt.face_average(uext.data(), cf.data(), un + 1, scale);
      if (!periodic) {
        cf[0] = 0.0;
        cf[un] = 0.0;
      }
      // Cells whose update can differ from the identity.
      long t0 = -1, t1 = -1;
      for (std::size_t t = 0; t < un; ++t) {
        if (cf[t] == 0.0 && cf[t + 1] == 0.0) continue;
        const double cdv = cd[start + t * s];
        if (ext[t] > 0.0 || ext[t + 1] > 0.0 || ext[t + 2] > 0.0 || cdv != 0.0) {
          if (t0 < 0) t0 = static_cast<long>(t);
          t1 = static_cast<long>(t);
        }
      }
      if (t0 < 0) continue;
      const auto a0 = static_cast<std::size_t>(t0);
      const std::size_t cnt = static_cast<std::size_t>(t1 - t0 + 1);
      for (std::size_t t = 0; t < cnt; ++t) cdl[t] = cd[start + (a0 + t) * s];
      kt.upwind_flux(ext.data() + a0, cf.data() + a0, flux.data(), cnt + 1);
      // Geometric flux for mixed donors.
      for (std::size_t f = 0; f <= cnt; ++f) {
        const double cfv = cf[a0 + f];
        if (cfv == 0.0) continue;
        const long face = static_cast<long>(a0 + f);
        const long donor = cfv > 0.0 ? face - 1 : face;
        const double cdon = ext[static_cast<std::size_t>(donor + 1)];
        if (!(cdon > lo_mixed && cdon < hi_mixed)) continue;
        if (std::fabs(cfv) > 1.0) throw CflViolation("advect: face Courant number above 1", cfv);
        Index3 dc = base;
        dc[axis] = g.resolve(axis, static_cast<int>(donor));
        const Vec3 m = to_cell_frame(youngs_normal(c, dc.i, dc.j, dc.k), g);
        if (m[0] == 0.0 && m[1] == 0.0 && m[2] == 0.0) continue;
        const PlicPlane plane = plane_from_volume(m, cdon);
        flux[f] = cfv > 0.0 ? cut_volume(plane, 1.0 - cfv, 1.0, axis)
                            : -cut_volume(plane, 0.0, -cfv, axis);
      }
      const std::size_t off = values.size();
      values.resize(off + cnt);
      kt.sweep_update(ext.data() + a0 + 1, flux.data(), cf.data() + a0, cdl.data(),
                      values.data() + off, cnt);
      segments.push_back({start + a0 * s, off, cnt});
    }
  }
  for (const Segment& seg : segments) {
    for (std::size_t t = 0; t < seg.count; ++t) c[seg.first + t * s] = values[seg.offset + t];
  }
}

std::size_t count_wisps(const ColorField& c) {
  const Grid& g = c.grid();
  const int dims = g.dim();
  std::size_t wisps = 0;
  for (int k = 0; k < g.nz(); ++k) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        const double v = c.at(i, j, k);
        if (!(v > 0.0 && v < 1.0)) continue;
        bool neighbour_mixed = false;
        for (int a = 0; a < dims && !neighbour_mixed; ++a) {
          for (int dlt : {-1, 1}) {
            Index3 nb{i, j, k};
            nb[a] += dlt;
            if (nb[a] < 0 || nb[a] >= g.count(a)) {
              if (g.bc(a) != Boundary::Periodic) continue;
              nb[a] = g.resolve(a, nb[a]);
            }
            const double w = c.at(nb.i, nb.j, nb.k);
            if (w > 0.0 && w < 1.0) {
              neighbour_mixed = true;
              break;
            }
          }
        }
        if (!neighbour_mixed) ++wisps;
      }
    }
  }
  return wisps;
}

ClipReport clip_and_report(ColorField& c, double eps) {
  const auto stats = kernels::active().clip(c.data(), c.size(), eps);
  ClipReport r;
  r.clipped_mass = -stats.net_change * c.grid().cell_volume();
  r.clipped = stats.clipped;
  r.wisps = count_wisps(c);
  return r;
}

StepReport advect_step(ColorField& c, const VelocityField& vel, double dt, long step_index,
                       SweepOptions opts) {
  const ScalarField cd = dilatation_coefficient(c);
  for (int axis : sweep_order(step_index, c.grid().dim())) sweep(c, vel, axis, dt, cd, opts);
  StepReport r;
  r.clip = clip_and_report(c, opts.eps);
  return r;
}

}  // namespace vvof
