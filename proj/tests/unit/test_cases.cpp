#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvof/cases.hpp"
#include "vvof/contour.hpp"
#include "vvof/metrics.hpp"
#include "vvof/run.hpp"

using namespace vvof;

TEST_CASE("registry lists the twelve cases in order") {
  const auto& ids = list_cases();
  REQUIRE(ids.size() == 12);
  CHECK(ids.front() == "zalesak");
  CHECK(ids.back() == "helical-sphere");
  for (const auto& id : ids) {
    CAPTURE(id);
    const CaseConfig c = builtin_case(id);
    CHECK(c.name == id);
    CHECK_NOTHROW(c.validate());
    CHECK(c.steps() > 0);
  }
  CHECK_THROWS_AS(builtin_case("bubble"), ConfigError);
  try {
    builtin_case("bubble");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("octahedron") != std::string::npos);
  }
}

TEST_CASE("case parameters") {
  const CaseConfig z = builtin_case("zalesak");
  CHECK(z.counts == std::array<int, 3>{256, 256, 1});
  CHECK(z.dt == doctest::Approx(1.25e-4));
  CHECK(z.steps() == 8000);
  const CaseConfig s = builtin_case("pointed-star");
  CHECK(s.steps() == 1200);
  CHECK(builtin_case("spiral").steps() == 6000);
  CHECK(builtin_case("dumbbell").steps() == 1600);
  CHECK(builtin_case("irregular").steps() == 1200);
  CHECK(builtin_case("ellipsoid").steps() == 10000);
  const CaseConfig h = builtin_case("helical-sphere");
  CHECK(h.counts == std::array<int, 3>{50, 50, 100});
  CHECK(h.bc[2] == Boundary::Periodic);
  CHECK(h.motion.terms.size() == 2);
  CHECK(h.shapes[0].center == Vec3{0.5, 0.75, 0.25});
  CHECK(h.motion.terms[0].center == Vec3{0.5, 0.75, 0.25});
  CHECK(builtin_case("rp-collapse").invert);
}

TEST_CASE("desk variants") {
  CHECK(has_desk_variant("deformation-sphere"));
  CHECK(has_desk_variant("dumbbell"));
  CHECK_FALSE(has_desk_variant("zalesak"));
  CHECK(builtin_case("deformation-sphere", true).counts == std::array<int, 3>{64, 64, 64});
  CHECK(builtin_case("dumbbell", true).counts == std::array<int, 3>{100, 100, 100});
  CHECK_THROWS_AS(builtin_case("zalesak", true), ConfigError);
}

TEST_CASE("re-gridding follows the dt rule and the aspect ratio") {
  const CaseConfig z = with_grid(builtin_case("zalesak"), {64});
  CHECK(z.counts == std::array<int, 3>{64, 64, 1});
  CHECK(z.dt == doctest::Approx(5e-4));
  const CaseConfig s = with_grid(builtin_case("pointed-star"), {100});
  CHECK(s.dt == doctest::Approx(0.2));
  const CaseConfig h = with_grid(builtin_case("helical-sphere"), {25});
  CHECK(h.counts == std::array<int, 3>{25, 25, 50});
  const CaseConfig d = with_grid(builtin_case("dumbbell"), {100});
  CHECK(d.dt == 0.01);
  CHECK_THROWS_AS(with_grid(builtin_case("zalesak"), {64, 64, 64}), ConfigError);
}

TEST_CASE("initial fields") {
  const CaseConfig z = with_grid(builtin_case("zalesak"), {128});
  const ColorField c = initial_field(z);
  const double disc = std::numbers::pi * 0.15 * 0.15;
  const double slot = 0.06 * 0.2;  // the slot lies entirely inside the disc
  CHECK(total_volume(c) == doctest::Approx(disc - slot).epsilon(0.01));

  const CaseConfig rp = with_grid(builtin_case("rp-collapse"), {40});
  const ColorField b = initial_field(rp);
  CHECK(64.0 - total_volume(b) == doctest::Approx(4.0 / 3.0 * std::numbers::pi).epsilon(0.01));

  const CaseConfig db = with_grid(builtin_case("dumbbell"), {50});
  CHECK(connected_components(initial_field(db)) == 1);

  const CaseConfig st = builtin_case("pointed-star");
  CHECK(circularity(extract_contour_2d(initial_field(st))) > 1.5);
}
