// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "corank1/catlin_metric.hpp"
#include "corank1/distance.hpp"
#include "corank1/hyperbolicity.hpp"
#include "corank1/scaling.hpp"
#include "test_support.hpp"

using namespace corank1;

namespace {

int g_failures = 0;
std::vector<std::pair<double, double>> g_brackets;  // every (lower, upper) seen

void record(const DistanceEstimate& est) { g_brackets.emplace_back(est.lower, est.upper); }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const char* name, bool ok, double seconds, double limit_s) {
  const bool timed_ok = seconds < limit_s;
  if (!ok || !timed_ok) ++g_failures;
  std::printf("%s criterion %2d: %-38s (%.2fs / limit %.0fs)%s\n",
              ok && timed_ok ? "PASS" : "FAIL", criterion, name, seconds, limit_s,
              ok ? (timed_ok ? "" : "  [over time limit]") : "  [value check failed]");
  std::fflush(stdout);
}

bool criterion1_metric_exactness() {
  const auto D = testsup::quartic_domain();
  const Point z{-1.0, 0.0};
  bool ok = std::abs(catlin_metric(D, z, Tangent{0.0, 1.0}) - std::sqrt(2.0)) <= 1e-12;
  ok = ok && std::abs(catlin_metric(D, z, Tangent{1.0, 0.0}) - 1.0) <= 1e-12;

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000 && ok; ++i) {
    const Point p = testsup::random_interior(D, rng);
    Tangent X{testsup::random_cplx(rng, 2.0), testsup::random_cplx(rng, 2.0)};
    if (X.norm() < 1e-6) continue;
    const cplx lam = testsup::random_cplx(rng, 3.0);
    if (std::abs(lam) < 1e-6) continue;
    const double lhs = catlin_metric(D, p, lam * X);
    const double rhs = std::abs(lam) * catlin_metric(D, p, X);
    ok = std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
  }
  return ok;
}

bool criterion2_geodesic_oracle() {
  const auto D = testsup::quartic_domain();
  std::mt19937_64 rng(7771);
  std::uniform_real_distribution<double> uni(0.0, 3.0);
  bool ok = true;
  for (int i = 0; i < 20 && ok; ++i) {
    const Point x = testsup::random_boundary(D, rng, 1.2);
    const double t = uni(rng), s = uni(rng);
    Point p = x, q = x;
    p.z[0] -= std::exp(-t);
    q.z[0] -= std::exp(-s);
    const auto est = distance(D, p, q);
    record(est);
    const double dt = std::abs(t - s);
    ok = std::abs(est.lower - dt) <= 1e-9 && est.upper <= 1.02 * dt + 1e-3;
  }
  return ok;
}

bool criterion3_straight_segment() {
  const auto D = testsup::quartic_domain();
  const auto est = distance(D, Point{-1.0, 0.0}, Point{-2.0, 0.0});
  record(est);
  return est.lower >= std::log(2.0) - 1e-9 && est.upper >= std::log(2.0) - 1e-9 &&
         est.upper <= 1.02 * std::log(2.0);
}

bool criterion4_scaling_self_similarity() {
  const auto D = testsup::quartic_domain();
  const auto seq = scale_at_point(D, Point{0.0, 0.0}, {10, 100, 1000, 10000});
  bool ok = true;
  for (const auto& st : seq.steps) {
    ok = ok && st.scaled.poly().raw().terms().size() == 1;
    ok = ok && std::abs(st.scaled.poly().raw().terms().at({2, 2}) - cplx{1.0, 0.0}) <= 1e-10;
    ok = ok && st.image_base == Point{-1.0, 0.0};
  }
  Box box;
  box.center = Point{-2.0, 0.0};
  box.radii = {1.0, 1.0};
  for (const auto& row : convergence_report(seq, seq.limit, box, 2, 6)) {
    ok = ok && row.sup_r_error <= 1e-10;
    ok = ok && row.sup_metric_error <= 1e-10;
  }
  return ok;
}

bool criterion5_siegel_limit() {
  const auto D = testsup::quartic_domain();
  const auto seq = scale_at_point(D, Point{-1.0, 1.0}, {1000000});
  const auto& st = seq.steps.front();
  bool ok = std::abs(st.scaled.poly().raw().terms().at({1, 1}) - cplx{1.0, 0.0}) <= 1e-3;
  for (int l = 3; l <= st.scaled.poly().degree() && ok; ++l)
    ok = st.scaled.poly().coefficient_cap(l) <= 0.005;
  return ok;
}

bool criterion6_blowdown_law() {
  const ModelDomain D(2, testsup::quartic_plus_quadratic(), "q42");
  const auto target = limit_at_infinity(D);
  bool ok = true;
  Box box;
  box.center = Point{-2.0, 0.0};
  box.radii = {1.0, 1.0};
  std::vector<ModelDomain> doms;
  std::vector<std::pair<long long, const ModelDomain*>> seq;
  const std::vector<long long> ns{1, 4, 100};
  doms.reserve(ns.size());
  for (long long n : ns) doms.push_back(blowdown_at_infinity(D, n));
  for (size_t i = 0; i < ns.size(); ++i) {
    const double expect = std::pow(static_cast<double>(ns[i]), -0.5);
    ok = ok &&
         std::abs(doms[i].poly().raw().terms().at({1, 1}) - cplx{expect, 0.0}) <= 1e-12;
    seq.emplace_back(ns[i], &doms[i]);
  }
  for (const auto& row : convergence_report(seq, target, box, 2, 6)) {
    const double expect = std::pow(static_cast<double>(row.n), -0.5);
    ok = ok && std::abs(row.sup_r_error - expect) <= 1e-9;
  }
  return ok;
}

bool criterion7_cap_transformation() {
  std::mt19937_64 rng(31337);
  const auto D = testsup::mixed_domain();
  const auto seq = scale_at_point(D, Point{-1.0, 0.5}, {10, 100, 10000});
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const auto& st = seq.steps[trial % seq.steps.size()];
    const cplx zeta = testsup::random_cplx(rng, 1.5);
    const int l = 2 + static_cast<int>(rng() % static_cast<unsigned>(D.poly().degree() - 1));
    const double lhs = st.scaled.poly().derivative_cap(l, zeta);
    const double rhs =
        std::pow(st.tau, l) / st.eps * st.coords.centered.derivative_cap(l, st.tau * zeta);
    ok = std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs));
  }
  return ok;
}

bool criterion8_delta_degeneracy() {
  const auto D = testsup::quartic_domain();
  DistanceOptions opts;
  opts.curve_samples = 21;
  DistanceOracle oracle(D, opts);
  std::vector<Point> pts;
  for (double t : {0.25, 1.0, 2.0, 3.0}) {
    Point p{0.0, 0.0};
    p.z[0] -= std::exp(-t);
    pts.push_back(std::move(p));
  }
  const auto est = four_point_delta(pts, oracle);
  for (const Point& a : pts)
    for (const Point& b : pts) {
      const Interval iv = oracle.bracket(a, b);
      g_brackets.emplace_back(iv.lo, iv.hi);
    }
  bool ok = est.delta <= 2.0 * 0.05;
  const std::vector<Point> shuffled{pts[2], pts[0], pts[3], pts[1]};
  const auto again = four_point_delta(shuffled, oracle);
  ok = ok && est.delta == again.delta;
  return ok;
}

bool criterion9_divergence_probe() {
  const auto D = testsup::quartic_domain();
  const Point o{-1.0, 0.0};
  bool ok = true;

  const auto same = boundary_divergence_probe(D, Point{0.0, 0.0}, Point{0.0, 0.0}, o, 6);
  for (size_t i = 2; i < same.size(); ++i)  // rows n = 2..6 strictly increasing
    ok = ok && same[i].product_lower > same[i - 1].product_lower;
  for (const auto& row : same) ok = ok && row.product_lower <= row.product_upper + 1e-9;

  const auto far =
      boundary_divergence_probe(D, Point{0.0, 0.0}, Point{-1.0, 1.0}, o, 6);
  const double cap = far[1].product_upper;  // the n = 2 row
  for (size_t i = 1; i < far.size(); ++i) {
    ok = ok && far[i].product_upper <= 1.1 * cap;
    ok = ok && far[i].product_lower <= far[i].product_upper + 1e-9;
  }
  std::printf("       probe detail: same-point lower ends");
  for (const auto& row : same) std::printf(" %.3f", row.product_lower);
  std::printf("; distinct upper ends");
  for (const auto& row : far) std::printf(" %.3f", row.product_upper);
  std::printf("\n");
  return ok;
}

bool criterion10_bracket_soundness() {
  bool ok = true;
  for (const auto& [lo, hi] : g_brackets) ok = ok && lo <= hi + 1e-9;

  const auto D = testsup::quartic_domain();
  std::mt19937_64 rng(606);
  for (int i = 0; i < 6 && ok; ++i) {
    const Point p = testsup::random_interior(D, rng);
    const Point q = testsup::random_interior(D, rng);
    const Point r = testsup::random_interior(D, rng);
    const auto epq = distance(D, p, q);
    const auto eqr = distance(D, q, r);
    const auto epr = distance(D, p, r);
    record(epq);
    record(eqr);
    record(epr);
    ok = epr.upper <= epq.upper + eqr.upper + 2.0 * (0.01 * (epq.upper + eqr.upper) + 1e-6);
    ok = ok && epq.lower <= epq.upper + 1e-9 && eqr.lower <= eqr.upper + 1e-9 &&
         epr.lower <= epr.upper + 1e-9;
  }
  return ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    bool (*fn)();
    double limit_s;
  };
  const Entry entries[] = {
      {1, "Catlin metric exactness", criterion1_metric_exactness, 1.0},
      {2, "closed-form geodesic oracle", criterion2_geodesic_oracle, 120.0},
      {3, "straight-segment oracle", criterion3_straight_segment, 30.0},
      {4, "scaling self-similarity", criterion4_scaling_self_similarity, 10.0},
      {5, "Siegel limit bookkeeping", criterion5_siegel_limit, 5.0},
      {6, "blowdown coefficient law", criterion6_blowdown_law, 5.0},
      {7, "cap transformation identity", criterion7_cap_transformation, 10.0},
      {8, "four-point delta degeneracy", criterion8_delta_degeneracy, 60.0},
      {9, "Gromov product dichotomy probe", criterion9_divergence_probe, 600.0},
      {10, "bracket soundness", criterion10_bracket_soundness, 120.0},
  };
  for (const Entry& e : entries) {
    Timer timer;
    bool ok = false;
    try {
      ok = e.fn();
    } catch (const std::exception& ex) {
      std::printf("       exception: %s\n", ex.what());
      ok = false;
    }
    report(e.id, e.name, ok, timer.seconds(), e.limit_s);
  }
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
