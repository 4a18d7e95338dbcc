#include <doctest.h>

#include <cmath>

#include "vvof/curvature.hpp"
#include "vvof/geometry.hpp"

using namespace vvof;

namespace {

ColorField disc(int n, double r, bool swap = false, double cx = 0.5) {
  const Grid g = Grid::uniform(n, 2);
  auto s = make_shape({"disc", {cx, 0.5, 0}, {{"r", r}}});
  if (swap) s = shape_complement(s);
  return voxelize(s, g);
}

// mean |kappa * r - target| over cells with their own column estimate
double mean_error(const ColorField& c, double r, double target) {
  const CurvatureField kf = compute_curvature(c);
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t q = 0; q < kf.band.size(); ++q) {
    if (kf.state[q] != KappaState::Valid) continue;
    s += std::fabs(kf.kappa[q] * r - target);
    ++n;
  }
  REQUIRE(n > 0);
  return s / static_cast<double>(n);
}

}  // namespace

TEST_CASE("height column sums") {
  const Grid g = Grid::uniform(8, 2);
  ColorField c(g);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) c.at(i, j, 0) = j < 4 ? 1.0 : 0.0;
  // flat interface on a face
  HeightSample h = height_column(c, 3, 4, 0, 1, -1);
  CHECK(h.valid);
  CHECK(h.height == doctest::Approx(1.0 * g.dy()));
  h = height_column(c, 3, 2, 0, 1, -1);
  CHECK(h.height == doctest::Approx(3.0 * g.dy()));
  // column leaving a neumann domain is invalid
  CHECK_FALSE(height_column(c, 3, 0, 0, 1, -1).valid);
  CHECK_FALSE(height_column(c, 3, 7, 0, 1, -1).valid);
}

TEST_CASE("heights near the top of a circle are second-order accurate") {
  const int n = 128;
  const double r = 0.25;
  const ColorField c = disc(n, r);
  const Grid& g = c.grid();
  // fluid below the top arc; column centred on the cell crossing y = 0.5 + sqrt(r^2 - x^2)
  for (int i = 60; i < 68; ++i) {
    const double x = g.center(i, 0, 0)[0] - 0.5;
    const double y = 0.5 + std::sqrt(r * r - x * x);
    const int j = static_cast<int>(y / g.dy());
    const HeightSample hs = height_column(c, i, j, 0, 1, -1);
    REQUIRE(hs.valid);
    // exact fluid amount in rows j-1..j+1 over the column width
    const double x0 = i * g.dx() - 0.5, x1 = x0 + g.dx();
    const double y0 = (j - 1) * g.dy();
    // integral of (sqrt(r^2 - x^2) + 0.5 - y0) over [x0, x1], divided by dx
    auto F = [&](double t) {
      return 0.5 * (t * std::sqrt(r * r - t * t) + r * r * std::asin(t / r)) + (0.5 - y0) * t;
    };
    const double exact = (F(x1) - F(x0)) / g.dx();
    CHECK(std::fabs(hs.height - exact) < g.dx() * g.dx());
  }
}

TEST_CASE("flat interfaces have zero curvature") {
  const Grid g = Grid::uniform(16, 2);
  const ColorField c =
      voxelize(make_shape({"half-space", {0.5, 0.53, 0}, {{"nx", 0.2}, {"ny", 1}, {"nz", 0}}}), g);
  const CurvatureField kf = compute_curvature(c);
  REQUIRE(kf.valid > 0);
  for (std::size_t q = 0; q < kf.band.size(); ++q)
    if (kf.state[q] == KappaState::Valid) CHECK(std::fabs(kf.kappa[q]) < 1e-9);

  const Grid g3 = Grid::uniform(16, 3);
  const ColorField c3 = voxelize(
      make_shape({"half-space", {0.5, 0.5, 0.52}, {{"nx", 0.1}, {"ny", -0.2}, {"nz", 1}}}), g3);
  const CurvatureField k3 = compute_curvature(c3);
  REQUIRE(k3.valid > 0);
  for (std::size_t q = 0; q < k3.band.size(); ++q)
    if (k3.state[q] == KappaState::Valid) CHECK(std::fabs(k3.kappa[q]) < 1e-9);
}

TEST_CASE("disc curvature: sign, accuracy and refinement") {
  const double e64 = mean_error(disc(64, 0.25), 0.25, 1.0);
  const double e128 = mean_error(disc(128, 0.25), 0.25, 1.0);
  CHECK(e128 < 0.05);
  CHECK(e64 / e128 > 3.5);
  CHECK(e64 / e128 < 4.5);
  // swapped fluids flip the sign
  CHECK(mean_error(disc(64, 0.25, true), 0.25, -1.0) < 0.05);
}

TEST_CASE("curvature scales inversely with length") {
  const CurvatureField a = compute_curvature(disc(64, 0.3));
  const CurvatureField b = compute_curvature(disc(64, 0.15));
  auto mean = [](const CurvatureField& kf) {
    double s = 0.0;
    int n = 0;
    for (std::size_t q = 0; q < kf.band.size(); ++q)
      if (kf.state[q] == KappaState::Valid) {
        s += kf.kappa[q];
        ++n;
      }
    return s / n;
  };
  CHECK(mean(b) / mean(a) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("sphere and cylinder curvature") {
  const Grid g = Grid::uniform(64, 3);
  const double r = 0.25;
  const ColorField s = voxelize(make_shape({"sphere", {0.5, 0.5, 0.5}, {{"r", r}}}), g);
  const CurvatureField kf = compute_curvature(s);
  double err = 0.0;
  for (std::size_t q = 0; q < kf.band.size(); ++q)
    if (kf.state[q] == KappaState::Valid) err += std::fabs(kf.kappa[q] * r - 2.0);
  CHECK(err / kf.valid < 0.1);

  const ColorField cyl = voxelize(make_shape({"cylinder", {0.5, 0.5, 0.5}, {{"r", r}, {"axis", 2}}}), g);
  const CurvatureField kc = compute_curvature(cyl);
  double ec = 0.0;
  for (std::size_t q = 0; q < kc.band.size(); ++q)
    if (kc.state[q] == KappaState::Valid) ec += std::fabs(kc.kappa[q] * r - 1.0);
  CHECK(ec / kc.valid < 0.05);
}

TEST_CASE("band cells all receive a value; inheritance copies valid values") {
  const ColorField c = voxelize(make_shape({"star", {0.5, 0.5, 0}, {{"A", 0.25}, {"B", 0.1}, {"K", 8}}}),
                                Grid::uniform(64, 2));
  const CurvatureField kf = compute_curvature(c);
  REQUIRE(kf.valid > 0);
  std::vector<double> valid_values;
  for (std::size_t q = 0; q < kf.band.size(); ++q)
    if (kf.state[q] == KappaState::Valid) valid_values.push_back(kf.kappa[q]);
  for (std::size_t q = 0; q < kf.band.size(); ++q) {
    CHECK(kf.state[q] != KappaState::None);
    if (kf.state[q] == KappaState::Inherited)
      CHECK(std::find(valid_values.begin(), valid_values.end(), kf.kappa[q]) != valid_values.end());
  }
}

TEST_CASE("mean curvature is a weighted mean and uniform on a sphere") {
  const ColorField s = voxelize(make_shape({"sphere", {0.5, 0.5, 0.5}, {{"r", 0.3}}}), Grid::uniform(48, 3));
  const CurvatureField kf = compute_curvature(s);
  double lo = 1e300, hi = -1e300;
  for (std::size_t q = 0; q < kf.band.size(); ++q)
    if (kf.state[q] == KappaState::Valid) {
      lo = std::min(lo, kf.kappa[q]);
      hi = std::max(hi, kf.kappa[q]);
    }
  for (DeltaKind k : {DeltaKind::Polynomial, DeltaKind::Gradient}) {
    const double kb = mean_curvature(s, kf, k);
    CHECK(kb >= lo);
    CHECK(kb <= hi);
    CHECK(kb * 0.3 == doctest::Approx(2.0).epsilon(0.03));
  }

  const ColorField e = voxelize(
      make_shape({"ellipsoid", {0.5, 0.5, 0.5}, {{"a", 0.35}, {"b", 0.15625}, {"c", 0.15625}}}),
      Grid::uniform(50, 3));
  const CurvatureField ke = compute_curvature(e);
  lo = 1e300;
  hi = -1e300;
  for (std::size_t q = 0; q < ke.band.size(); ++q)
    if (ke.state[q] == KappaState::Valid) {
      lo = std::min(lo, ke.kappa[q]);
      hi = std::max(hi, ke.kappa[q]);
    }
  const double kb = mean_curvature(e, ke, DeltaKind::Polynomial);
  CHECK(kb > lo);
  CHECK(kb < hi);
}

TEST_CASE("empty interface signals vanishing") {
  const ColorField c(Grid::uniform(16, 2), 0.0);
  const CurvatureField kf = compute_curvature(c);
  CHECK(kf.band.empty());
  CHECK_THROWS_AS(mean_curvature(c, kf, DeltaKind::Polynomial), InterfaceVanished);
}

TEST_CASE("polynomial delta") {
  CHECK(delta_polynomial(0.0) == 0.0);
  CHECK(delta_polynomial(1.0) == 0.0);
  CHECK(delta_polynomial(0.5) == 1.0);
  for (double c = 0.0; c <= 1.0; c += 0.01) CHECK(delta_polynomial(c) <= 1.0);
}
