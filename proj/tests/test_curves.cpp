#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corank1/curves.hpp"
#include "test_support.hpp"

using namespace corank1;

TEST_CASE("straight-segment length against the closed form and a trapezoid oracle") {
  const auto D = testsup::quartic_domain();
  const Point p{-1.0, 0.0};
  const Point q{-2.0, 0.0};
  // along the normal the metric is 1/|Re z0|, so the length is log 2
  const double len = segment_length(D, p, q);
  CHECK(len == doctest::Approx(std::log(2.0)).epsilon(1e-6));
  CHECK(len == doctest::Approx(testsup::trapezoid_segment_length(D, p, q)).epsilon(1e-5));
}

TEST_CASE("curve length") {
  const auto D = testsup::quartic_domain();
  SUBCASE("normal geodesic has unit speed") {
    const CurvePath c = normal_geodesic(D, Point{0.0, 0.0}, 1.0, 0.0, 2.0, 33);
    CHECK(curve_length(D, c) == doctest::Approx(2.0).epsilon(1e-6));
  }
  SUBCASE("degenerate curve has zero length") {
    CurvePath c;
    c.params = {0.0, 1.0};
    c.points = {Point{-1.0, 0.0}, Point{-1.0, 0.0}};
    CHECK(curve_length(D, c) == 0.0);
  }
  SUBCASE("curve through the exterior is rejected") {
    CurvePath c;
    c.params = {0.0, 1.0};
    c.points = {Point{-1.0, 0.0}, Point{1.0, 0.0}};
    CHECK_THROWS_WITH_AS(curve_length(D, c), doctest::Contains("CurveExitsDomain"), Error);
  }
}

TEST_CASE("normal geodesic sampling") {
  const auto D = testsup::quartic_domain();
  SUBCASE("depth profile is exact") {
    const CurvePath c = normal_geodesic(D, Point{0.0, 0.0}, 1.0, 0.0, 2.0, 9);
    for (size_t i = 0; i < c.size(); ++i) {
      const double t = c.params[i];
      CHECK(c.points[i][0].real() == doctest::Approx(-std::exp(-t)).epsilon(1e-14));
      CHECK(D.defining_value(c.points[i]) == doctest::Approx(-std::exp(-t)).epsilon(1e-14));
      CHECK(D.contains(c.points[i]));
    }
  }
  SUBCASE("base with a nontrivial slice") {
    const CurvePath c = normal_geodesic(D, Point{-1.0, 1.0}, 1.0, 0.0, 1.0, 5);
    CHECK(c.points.front()[0] == cplx{-2.0, 0.0});
    CHECK(D.defining_value(c.points.front()) == doctest::Approx(-1.0).epsilon(1e-14));
  }
  SUBCASE("base must be on the boundary") {
    CHECK_THROWS_WITH_AS(normal_geodesic(D, Point{-0.5, 0.0}, 1.0, 0.0, 1.0, 5),
                         doctest::Contains("NotBoundaryPoint"), Error);
  }
}

TEST_CASE("curve utilities") {
  CurvePath c;
  c.params = {0.0, 0.5, 1.0};
  c.points = {Point{-1.0, 0.0}, Point{-1.5, 0.0}, Point{-2.0, 0.0}};

  const CurvePath r = reversed(c);
  CHECK(r.points.front() == c.points.back());
  CHECK(r.points.back() == c.points.front());
  CHECK(r.params.front() == doctest::Approx(0.0));

  const CurvePath fine = resample(c, 9);
  CHECK(fine.size() == 9);
  CHECK(fine.points.front() == c.points.front());
  CHECK(fine.points.back() == c.points.back());

  CurvePath bad;
  bad.params = {0.0, 0.0};
  bad.points = {Point{-1.0, 0.0}, Point{-2.0, 0.0}};
  CHECK_THROWS_AS(bad.validate(), Error);
}
