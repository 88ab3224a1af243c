#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corank1/catlin_metric.hpp"
#include "test_support.hpp"

using namespace corank1;

TEST_CASE("metric values at the quartic reference point") {
  const auto D = testsup::quartic_domain();
  const Point z{-1.0, 0.0};
  // normal direction: only the first term survives
  CHECK(catlin_metric(D, z, Tangent{1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-13));
  // tangential direction: caps A2 = A3 = 0, A4 = 4 at the origin slice
  CHECK(catlin_metric(D, z, Tangent{0.0, 1.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(catlin_metric(D, z, Tangent{0.0, 2.0}) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK_THROWS_WITH_AS(catlin_metric(D, Point{1.0, 0.0}, Tangent{1.0, 0.0}),
                       doctest::Contains("PointNotInterior"), Error);
}

TEST_CASE("metric properties on random samples") {
  std::mt19937_64 rng(101);
  const auto D = testsup::mixed_domain(3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Point z = testsup::random_interior(D, rng);
    Tangent X;
    X.x.resize(3);
    for (cplx& c : X.x) c = testsup::random_cplx(rng, 2.0);
    if (X.is_zero()) continue;
    const double m = catlin_metric(D, z, X);
    CHECK(m > 0.0);

    const cplx lam = testsup::random_cplx(rng, 3.0);
    if (std::abs(lam) > 1e-6) {
      const double scaled = catlin_metric(D, z, lam * X);
      CHECK(scaled == doctest::Approx(std::abs(lam) * m).epsilon(1e-12));
    }

    Tangent Y;
    Y.x.resize(3);
    for (cplx& c : Y.x) c = testsup::random_cplx(rng, 2.0);
    Tangent XY = X;
    for (size_t k = 0; k < 3; ++k) XY.x[k] += Y.x[k];
    CHECK(catlin_metric(D, z, XY) <=
          catlin_metric(D, z, X) + catlin_metric(D, z, Y) + 1e-10);
  }
}

TEST_CASE("blow-up along the normal is exactly 1/t") {
  const auto D = testsup::quartic_domain();
  for (double t : {0.01, 0.3, 1.0, 7.0, 150.0}) {
    const double m = catlin_metric(D, Point{-t, 0.0}, Tangent{1.0, 0.0});
    CHECK(m == doctest::Approx(1.0 / t).epsilon(1e-13));
  }
}

TEST_CASE("log-ratio lower bound") {
  const auto D = testsup::quartic_domain();
  CHECK(log_ratio_lower_bound(D, Point{-1.0, 0.0}, Point{-std::exp(-2.0), 0.0}) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(log_ratio_lower_bound(D, Point{-1.0, 0.0}, Point{-1.0, 0.0}) == 0.0);
  CHECK(log_ratio_lower_bound(D, Point{-2.0, 0.0}, Point{-1.0, 0.0}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_ratio_lower_bound(D, Point{0.5, 0.0}, Point{-1.0, 0.0}), Error);
}

TEST_CASE("disc upper bound") {
  const auto D = testsup::quartic_domain();
  const Point z{-1.0, 0.0};
  // Re(-1 + t cos(theta)) = 0 at t = 1 along theta = 0
  CHECK(disc_upper_bound(D, z, Tangent{1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
  // -1 + t^4 = 0 at t = 1 along every angle
  CHECK(disc_upper_bound(D, z, Tangent{0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-9));

  SUBCASE("positive rescaling of the direction is exact") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      const Point p = testsup::random_interior(D, rng);
      Tangent X{testsup::random_cplx(rng, 1.0), testsup::random_cplx(rng, 1.0)};
      if (X.is_zero()) continue;
      const double base = disc_upper_bound(D, p, X, 16);
      const double lam = 0.25 + 3.0 * std::uniform_real_distribution<double>(0, 1)(rng);
      const double scaled = disc_upper_bound(D, p, cplx(lam, 0.0) * X, 16);
      CHECK(scaled == doctest::Approx(lam * base).epsilon(1e-6));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(disc_upper_bound(D, z, Tangent{0.0, 0.0}),
                         doctest::Contains("ZeroVector"), Error);
    CHECK_THROWS_AS(disc_upper_bound(D, Point{1.0, 0.0}, Tangent{1.0, 0.0}), Error);
  }
}

TEST_CASE("empirical comparability constant between disc bound and Catlin metric") {
  // Lemma-4-style constant is non-constructive; record the observed ratio and
  // require it stays finite and moderate on a sample set.
  std::mt19937_64 rng(17);
  const auto D = testsup::quartic_domain();
  double a_hat = 0.0;
  for (int i = 0; i < 60; ++i) {
    const Point z = testsup::random_interior(D, rng);
    Tangent X{testsup::random_cplx(rng, 1.0), testsup::random_cplx(rng, 1.0)};
    if (X.norm() < 1e-3) continue;
    const double upper = disc_upper_bound(D, z, X, 32);
    const double m = catlin_metric(D, z, X);
    a_hat = std::max(a_hat, upper / m);
  }
  CHECK(a_hat > 0.0);
  CHECK(a_hat < 50.0);
  MESSAGE("empirical comparability constant A^ = ", a_hat);
}

TEST_CASE("metric sup error") {
  const auto D = testsup::quartic_domain();
  Box box;
  box.center = Point{-1.5, 0.0};
  box.radii = {0.25, 0.5};

  SUBCASE("identical domains compare to zero") {
    const auto rep = metric_sup_error(D, D, box, 2, 6);
    CHECK(rep.sup_abs_error == 0.0);
    CHECK(rep.grid_points > 0);
  }
  SUBCASE("perturbation size is monotone in the perturbation") {
    const ModelDomain Dbig(
        2, HermitianPoly::from_terms({{2, 2, {1.0, 0.0}}, {1, 1, {0.1, 0.0}}}), "p1");
    const ModelDomain Dsmall(
        2, HermitianPoly::from_terms({{2, 2, {1.0, 0.0}}, {1, 1, {0.01, 0.0}}}), "p2");
    const double big = metric_sup_error(D, Dbig, box, 2, 6).sup_abs_error;
    const double small = metric_sup_error(D, Dsmall, box, 2, 6).sup_abs_error;
    CHECK(big > 0.0);
    CHECK(small > 0.0);
    CHECK(small < big);
  }
  SUBCASE("empty intersection") {
    Box outside;
    outside.center = Point{5.0, 0.0};
    outside.radii = {0.1, 0.1};
    CHECK_THROWS_WITH_AS(metric_sup_error(D, D, outside, 2, 4),
                         doctest::Contains("EmptyIntersection"), Error);
  }
  SUBCASE("worker count does not change the result") {
    const double serial = metric_sup_error(D, D, box, 3, 8, 1).sup_abs_error;
    const double parallel = metric_sup_error(D, D, box, 3, 8, 4).sup_abs_error;
    CHECK(serial == parallel);
  }
}

TEST_CASE("certified distance lower bound") {
  const auto D = testsup::quartic_domain();
  SUBCASE("same slice reduces to the log-ratio exactly") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
      Point p = testsup::random_interior(D, rng);
      Point q = p;
      q.z[0] -= std::uniform_real_distribution<double>(0.0, 3.0)(rng);
      CHECK(distance_lower_bound(D, p, q) ==
            doctest::Approx(log_ratio_lower_bound(D, p, q)).epsilon(1e-13));
    }
  }
  SUBCASE("crossing strengthens the bound for separated slices") {
    const Point p{-std::exp(-4.0), 0.0};
    const Point q{-1.0 - std::exp(-4.0), 1.0};
    const double lb = distance_lower_bound(D, p, q);
    CHECK(lb > log_ratio_lower_bound(D, p, q));
    CHECK(lb > 4.0);  // two crossings of the depth range pay ~ 2n - const
  }
  SUBCASE("coincident points") {
    const Point p{-0.5, 0.25};
    CHECK(distance_lower_bound(D, p, p) == 0.0);
  }
}
