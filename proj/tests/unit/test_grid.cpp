#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "vvof/grid.hpp"
#include "vvof/kernels.hpp"

using namespace vvof;

TEST_CASE("flat index runs x fastest") {
  const Grid g(4, 5, 6, {1.0, 1.0, 1.0});
  CHECK(g.index(0, 0, 0) == 0);
  CHECK(g.index(1, 0, 0) == 1);
  CHECK(g.index(0, 1, 0) == 4);
  CHECK(g.index(0, 0, 1) == 20);
  CHECK(g.index(3, 4, 5) == g.size() - 1);
  for (std::size_t q = 0; q < g.size(); q += 7) CHECK(g.index(g.unflatten(q)) == q);
  CHECK(g.stride(0) == 1);
  CHECK(g.stride(1) == 4);
  CHECK(g.stride(2) == 20);
}

TEST_CASE("2D mode forces dz = 1") {
  const Grid g = Grid::box({8, 4, 1}, {0, 0, 0}, {2, 1, 5});
  CHECK(g.is_2d());
  CHECK(g.dim() == 2);
  CHECK(g.dz() == 1.0);
  CHECK(g.cell_volume() == doctest::Approx(0.25 * 0.25));
  CHECK(g.domain_volume() == doctest::Approx(2.0));
}

TEST_CASE("invalid counts are config errors") {
  CHECK_THROWS_AS(Grid(2, 8, 8, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(Grid(8, 8, 2, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(Grid(8, 8, 8, {0, 1, 1}), ConfigError);
  CHECK_THROWS_AS(Grid::uniform(8, 4), ConfigError);
}

TEST_CASE("ghost resolution") {
  const Grid gn(5, 5, 1, {1, 1, 1});
  CHECK(gn.resolve(0, -1) == 0);
  CHECK(gn.resolve(0, -2) == 0);
  CHECK(gn.resolve(0, 5) == 4);
  CHECK(gn.resolve(0, 6) == 4);
  CHECK_THROWS_AS(gn.resolve(0, -3), std::out_of_range);
  CHECK_THROWS_AS(gn.resolve(0, 7), std::out_of_range);

  const Grid gp(5, 5, 1, {1, 1, 1}, {0, 0, 0},
                {Boundary::Periodic, Boundary::Periodic, Boundary::ZeroNeumann});
  CHECK(gp.resolve(0, -1) == 4);
  CHECK(gp.resolve(0, -2) == 3);
  CHECK(gp.resolve(1, 5) == 0);
  CHECK(gp.resolve(1, 6) == 1);

  ScalarField f(gp);
  for (std::size_t q = 0; q < f.size(); ++q) f[q] = static_cast<double>(q);
  CHECK(f.ghost(-1, 2, 0) == f.at(4, 2, 0));
  CHECK(f.ghost(2, 6, 0) == f.at(2, 1, 0));
}

TEST_CASE("cell centres and face average") {
  const Grid g = Grid::uniform(4, 3);
  const Vec3 c = g.center(0, 1, 3);
  CHECK(c[0] == doctest::Approx(0.125));
  CHECK(c[1] == doctest::Approx(0.375));
  CHECK(c[2] == doctest::Approx(0.875));
  VectorField v(g);
  v.u().at(1, 1, 1) = 2.0;
  v.u().at(2, 1, 1) = 4.0;
  CHECK(v.face(0, 1, 1, 1) == 3.0);
  // neumann ghost repeats the last cell
  v.u().at(3, 0, 0) = 5.0;
  CHECK(v.face(0, 3, 0, 0) == 5.0);
}

TEST_CASE("central-difference gradient of a linear field is exact") {
  const Grid g = Grid::box({6, 5, 4}, {0, 0, 0}, {3, 1, 2},
                           {Boundary::Periodic, Boundary::ZeroNeumann, Boundary::ZeroNeumann});
  ScalarField f(g);
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 6; ++i) {
        const Vec3 p = g.center(i, j, k);
        f.at(i, j, k) = 2.0 * p[1] - 3.0 * p[2];
      }
  const VectorField gr = gradient_cc(f);
  for (int k = 1; k < 3; ++k)
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < 6; ++i) {
        CHECK(gr.u().at(i, j, k) == doctest::Approx(0.0));
        CHECK(gr.v().at(i, j, k) == doctest::Approx(2.0));
        CHECK(gr.w().at(i, j, k) == doctest::Approx(-3.0));
        CHECK(gradient_norm_at(f, i, j, k) == doctest::Approx(std::sqrt(13.0)));
      }
}

TEST_CASE("total volume sums C dV") {
  const Grid g = Grid::box({10, 10, 10}, {0, 0, 0}, {2, 2, 2});
  ColorField c(g, 0.5);
  CHECK(total_volume(c) == doctest::Approx(4.0));
}
