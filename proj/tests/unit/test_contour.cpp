#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvof/contour.hpp"
#include "vvof/geometry.hpp"

using namespace vvof;

namespace {
constexpr double kPi = std::numbers::pi;

Polyline square(double s) {
  Polyline p;
  p.closed = true;
  p.points = {{0, 0}, {s, 0}, {s, s}, {0, s}};
  return p;
}
}  // namespace

TEST_CASE("polyline measures") {
  const Polyline p = square(2.0);
  CHECK(p.perimeter() == doctest::Approx(8.0));
  CHECK(p.signed_area() == doctest::Approx(4.0));
  CHECK(circularity({p}) == doctest::Approx(64.0 / (16.0 * kPi)));
  Polyline open = p;
  open.closed = false;
  CHECK_THROWS_AS(circularity({open}), std::invalid_argument);
  CHECK_THROWS_AS(circularity({}), std::invalid_argument);
}

TEST_CASE("circularity is scale invariant") {
  Polyline p;
  p.closed = true;
  for (int q = 0; q < 7; ++q) p.points.push_back({std::cos(q * 0.9) * (1 + 0.1 * q), std::sin(q * 0.9)});
  const double a = circularity({p});
  for (double s : {0.01, 3.0, 1000.0}) {
    Polyline t = p;
    for (auto& x : t.points) {
      x[0] *= s;
      x[1] *= s;
    }
    CHECK(std::fabs(circularity({t}) - a) < 1e-12);
  }
}

TEST_CASE("disc contour is one closed near-circle with the fluid on the left") {
  const Grid g = Grid::uniform(64, 2);
  const ColorField c = voxelize(make_shape({"disc", {0.5, 0.5, 0}, {{"r", 0.3}}}), g);
  const auto lines = extract_contour_2d(c);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].closed);
  CHECK(lines[0].signed_area() > 0.0);
  CHECK(lines[0].signed_area() == doctest::Approx(kPi * 0.09).epsilon(0.01));
  CHECK(circularity(lines) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(extract_contour_2d(ColorField(g, 0.0)).empty());
}

TEST_CASE("star contour is far from circular") {
  const Grid g = Grid::uniform(128, 2);
  const ColorField c = voxelize(make_shape({"star", {0.5, 0.5, 0}, {{"A", 0.25}, {"B", 0.1}, {"K", 8}}}), g);
  CHECK(circularity(extract_contour_2d(c)) > 1.5);
}

TEST_CASE("sphere surface mesh") {
  const Grid g = Grid::uniform(48, 3);
  const double r = 0.3;
  const ColorField c = voxelize(make_shape({"sphere", {0.5, 0.5, 0.5}, {{"r", r}}}), g);
  const TriangleMesh m = extract_contour_3d(c);
  CHECK(m.components() == 1);
  CHECK(m.area() == doctest::Approx(4 * kPi * r * r).epsilon(0.03));
  CHECK(m.volume() == doctest::Approx(4.0 / 3.0 * kPi * r * r * r).epsilon(0.02));
  // tetrahedral triangles over-estimate the area by a few percent
  CHECK(sphericity(m) > 0.93);
  CHECK(sphericity(m) <= 1.0 + 1e-9);

  // outward orientation: signed divergence volume is positive
  double signed_vol = 0.0;
  for (const auto& t : m.triangles) {
    const Vec3& a = m.vertices[t[0]];
    const Vec3& b = m.vertices[t[1]];
    const Vec3& d = m.vertices[t[2]];
    signed_vol += (a[0] * (b[1] * d[2] - b[2] * d[1]) - a[1] * (b[0] * d[2] - b[2] * d[0]) +
                   a[2] * (b[0] * d[1] - b[1] * d[0])) / 6.0;
  }
  CHECK(signed_vol > 0.0);
}

TEST_CASE("two spheres give two surface components") {
  const Grid g = Grid::uniform(32, 3);
  const auto a = make_shape({"sphere", {0.25, 0.5, 0.5}, {{"r", 0.12}}});
  const auto b = make_shape({"sphere", {0.75, 0.5, 0.5}, {{"r", 0.12}}});
  CHECK(extract_contour_3d(voxelize(shape_union({a, b}), g)).components() == 2);
}

TEST_CASE("prolate spheroid sphericity matches the analytic value") {
  const Grid g = Grid::uniform(50, 3);
  const auto e = make_shape({"ellipsoid", {0.5, 0.5, 0.5}, {{"a", 0.35}, {"b", 0.15625}, {"c", 0.15625}}});
  // area 2 pi b^2 (1 + a asin(ecc) / (b ecc)), volume 4/3 pi a b^2
  const double a = 0.35, b = 0.15625, ecc = std::sqrt(1.0 - b * b / (a * a));
  const double area = 2 * kPi * b * b * (1 + a * std::asin(ecc) / (b * ecc));
  const double vol = 4.0 / 3.0 * kPi * a * b * b;
  const double exact = std::cbrt(kPi) * std::pow(6 * vol, 2.0 / 3.0) / area;
  // relative to a sphere on the same grid, which cancels the triangulation bias
  const double ball = sphericity(extract_contour_3d(voxelize(make_shape({"sphere", {0.5, 0.5, 0.5}, {{"r", 0.2}}}), g)));
  CHECK(sphericity(extract_contour_3d(voxelize(e, g))) / ball == doctest::Approx(exact).epsilon(0.02));
}
