#include "vvof/contour.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vvof {

double Polyline::perimeter() const {
  const std::size_t n = points.size();
  if (n < 2) return 0.0;
  double p = 0.0;
  const std::size_t segs = closed ? n : n - 1;
  for (std::size_t q = 0; q < segs; ++q) {
    const Point2& a = points[q];
    const Point2& b = points[(q + 1) % n];
    p += std::hypot(b[0] - a[0], b[1] - a[1]);
  }
  return p;
}

double Polyline::signed_area() const {
  const std::size_t n = points.size();
  double s = 0.0;
  for (std::size_t q = 0; q < n; ++q) {
    const Point2& a = points[q];
    const Point2& b = points[(q + 1) % n];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * s;
}

std::vector<Polyline> extract_contour_2d(const ScalarField& c, double level) {
  const Grid& g = c.grid();
  if (!g.is_2d()) throw std::invalid_argument("extract_contour_2d: field is 3D");
  const int nx = g.nx(), ny = g.ny();
  auto hkey = [nx](int i, int j) { return 2 * (static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * j); };
  auto vkey = [&](int i, int j) { return hkey(i, j) + 1; };

  std::map<std::size_t, std::size_t> next;  // start edge -> end edge
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const double v[4] = {c.at(i, j, 0), c.at(i + 1, j, 0), c.at(i + 1, j + 1, 0),
                           c.at(i, j + 1, 0)};
      bool in[4];
      int n_in = 0;
      for (int q = 0; q < 4; ++q) n_in += (in[q] = v[q] > level) ? 1 : 0;
      if (n_in == 0 || n_in == 4) continue;
      const std::size_t key[4] = {hkey(i, j), vkey(i + 1, j), hkey(i, j + 1), vkey(i, j)};
      const bool centre_in = 0.25 * (v[0] + v[1] + v[2] + v[3]) > level;
      // Edge e runs from corner e to corner e+1 counter-clockwise.
      for (int e = 0; e < 4; ++e) {
        if (!(in[e] && !in[(e + 1) % 4])) continue;
        // Matching out->in edge: the next one when the centre is inside,
        // the previous one otherwise.
        int f = e;
        for (int s = 1; s < 4; ++s) {
          const int cand = centre_in ? (e + s) % 4 : (e + 4 - s) % 4;
          if (!in[cand] && in[(cand + 1) % 4]) {
            f = cand;
            break;
          }
        }
        next[key[e]] = key[f];
      }
    }
  }

  auto point = [&](std::size_t k) -> Point2 {
    const std::size_t node = k / 2;
    const int i = static_cast<int>(node % static_cast<std::size_t>(nx));
    const int j = static_cast<int>(node / static_cast<std::size_t>(nx));
    const int i1 = (k & 1) ? i : i + 1;
    const int j1 = (k & 1) ? j + 1 : j;
    const double va = c.at(i, j, 0), vb = c.at(i1, j1, 0);
    const double t = (level - va) / (vb - va);
    const Vec3 pa = g.center(i, j, 0), pb = g.center(i1, j1, 0);
    return {pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])};
  };

  std::vector<Polyline> out;
  std::map<std::size_t, bool> used;
  std::map<std::size_t, int> is_end;
  for (const auto& [s, e] : next) is_end[e] = 1;
  auto walk = [&](std::size_t start) {
    Polyline pl;
    std::size_t k = start;
    while (true) {
      pl.points.push_back(point(k));
      auto it = next.find(k);
      if (it == next.end()) break;
      used[k] = true;
      k = it->second;
      if (k == start) {
        pl.closed = true;
        break;
      }
    }
    out.push_back(std::move(pl));
  };
  for (const auto& [s, e] : next) {
    if (!is_end.count(s)) walk(s);
  }
  for (const auto& [s, e] : next) {
    if (!used.count(s)) walk(s);
  }
  return out;
}

double circularity(const std::vector<Polyline>& contour) {
  const Polyline* best = nullptr;
  double best_area = -1.0;
  for (const auto& pl : contour) {
    if (!pl.closed) throw std::invalid_argument("circularity: open contour");
    const double a = std::fabs(pl.signed_area());
    if (a > best_area) {
      best_area = a;
      best = &pl;
    }
  }
  if (best == nullptr || !(best_area > 0.0)) throw std::invalid_argument("circularity: no contour");
  const double p = best->perimeter();
  return p * p / (4.0 * std::numbers::pi * best_area);
}

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

double TriangleMesh::area() const {
  double s = 0.0;
  for (const auto& t : triangles) {
    const Vec3 n = cross(sub(vertices[t[1]], vertices[t[0]]), sub(vertices[t[2]], vertices[t[0]]));
    s += 0.5 * std::sqrt(dot(n, n));
  }
  return s;
}

double TriangleMesh::volume() const {
  double s = 0.0;
  for (const auto& t : triangles) s += dot(vertices[t[0]], cross(vertices[t[1]], vertices[t[2]]));
  return std::fabs(s / 6.0);
}

std::size_t TriangleMesh::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint8_t> used(vertices.size(), 0);
  for (const auto& t : triangles) {
    for (int q = 0; q < 3; ++q) used[t[q]] = 1;
    const std::size_t a = find(t[0]);
    parent[find(t[1])] = a;
    parent[find(t[2])] = a;
  }
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (used[v] && find(v) == v) ++n;
  }
  return n;
}

TriangleMesh extract_contour_3d(const ScalarField& c, double level) {
  const Grid& g = c.grid();
  if (g.is_2d()) throw std::invalid_argument("extract_contour_3d: field is 2D");
  TriangleMesh mesh;
  std::unordered_map<std::size_t, std::size_t> vert_of_edge;
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto offset = [](int bits) { return Index3{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1}; };

  for (int k = 0; k + 1 < g.nz(); ++k) {
    for (int j = 0; j + 1 < g.ny(); ++j) {
      for (int i = 0; i + 1 < g.nx(); ++i) {
        double cube[8];
        bool any_in = false, any_out = false;
        for (int b = 0; b < 8; ++b) {
          const Index3 o = offset(b);
          cube[b] = c.at(i + o.i, j + o.j, k + o.k);
          (cube[b] > level ? any_in : any_out) = true;
        }
        if (!any_in || !any_out) continue;

        auto edge_vertex = [&](int ba, int bb) {
          if (ba > bb) std::swap(ba, bb);  // bb is a superset of ba along the path
          const Index3 o = offset(ba);
          const std::size_t key = g.index(i + o.i, j + o.j, k + o.k) * 8 +
                                  static_cast<std::size_t>(bb - ba);
          auto it = vert_of_edge.find(key);
          if (it != vert_of_edge.end()) return it->second;
          const Index3 ob = offset(bb);
          const Vec3 pa = g.center(i + o.i, j + o.j, k + o.k);
          const Vec3 pb = g.center(i + ob.i, j + ob.j, k + ob.k);
          const double t = (level - cube[ba]) / (cube[bb] - cube[ba]);
          mesh.vertices.push_back(
              {pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]), pa[2] + t * (pb[2] - pa[2])});
          vert_of_edge.emplace(key, mesh.vertices.size() - 1);
          return mesh.vertices.size() - 1;
        };

        for (const auto& perm : kPerm) {
          const int tv[4] = {0, 1 << perm[0], (1 << perm[0]) | (1 << perm[1]), 7};
          int ins[4], outs[4], ni = 0, no = 0;
          for (int q = 0; q < 4; ++q) {
            if (cube[tv[q]] > level) {
              ins[ni++] = tv[q];
            } else {
              outs[no++] = tv[q];
            }
          }
          if (ni == 0 || no == 0) continue;
          Vec3 ci{0, 0, 0}, co{0, 0, 0};
          for (int q = 0; q < ni; ++q) {
            const Index3 o = offset(ins[q]);
            ci[0] += o.i; ci[1] += o.j; ci[2] += o.k;
          }
          for (int q = 0; q < no; ++q) {
            const Index3 o = offset(outs[q]);
            co[0] += o.i; co[1] += o.j; co[2] += o.k;
          }
          Vec3 dir;
          for (int a = 0; a < 3; ++a) dir[a] = (co[a] / no - ci[a] / ni) * g.spacing(a);

          auto emit = [&](std::size_t a, std::size_t b, std::size_t cc) {
            if (a == b || b == cc || a == cc) return;
            const Vec3 n = cross(sub(mesh.vertices[b], mesh.vertices[a]),
                                 sub(mesh.vertices[cc], mesh.vertices[a]));
            if (dot(n, dir) < 0.0) std::swap(b, cc);
            mesh.triangles.push_back({a, b, cc});
          };
          if (ni == 1 || no == 1) {
            const int lone = ni == 1 ? ins[0] : outs[0];
            const int* others = ni == 1 ? outs : ins;
            emit(edge_vertex(lone, others[0]), edge_vertex(lone, others[1]),
                 edge_vertex(lone, others[2]));
          } else {
            const std::size_t e00 = edge_vertex(ins[0], outs[0]);
            const std::size_t e01 = edge_vertex(ins[0], outs[1]);
            const std::size_t e11 = edge_vertex(ins[1], outs[1]);
            const std::size_t e10 = edge_vertex(ins[1], outs[0]);
            emit(e00, e01, e11);
            emit(e00, e11, e10);
          }
        }
      }
    }
  }
  return mesh;
}

double sphericity(const TriangleMesh& mesh) {
  const double a = mesh.area();
  if (!(a > 0.0)) throw std::invalid_argument("sphericity: empty mesh");
  return std::cbrt(std::numbers::pi) * std::pow(6.0 * mesh.volume(), 2.0 / 3.0) / a;
}

}  // namespace vvof
