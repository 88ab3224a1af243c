#include "corank1/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corank1 {

DistanceOracle::DistanceOracle(const ModelDomain& D, DistanceOptions opts)
    : D_(D), opts_(opts) {}

size_t DistanceOracle::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

Interval DistanceOracle::bracket(const Point& a, const Point& b) const {
  const Point& first = lex_less(b, a) ? b : a;
  const Point& second = lex_less(b, a) ? a : b;
  std::vector<double> key;
  key.reserve(4 * first.z.size());
  for (const cplx& c : first.z) {
    key.push_back(c.real());
    key.push_back(c.imag());
  }
  for (const cplx& c : second.z) {
    key.push_back(c.real());
    key.push_back(c.imag());
  }
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const DistanceEstimate est = distance(D_, first, second, opts_);
  const Interval iv{est.lower, est.upper};
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), iv);
  return iv;
}

Interval gromov_product(const DistanceOracle& oracle, const Point& x, const Point& y,
                        const Point& o) {
  const Interval dxo = oracle.bracket(x, o);
  const Interval dyo = oracle.bracket(y, o);
  const Interval dxy = oracle.bracket(x, y);
  return {0.5 * (dxo.lo + dyo.lo - dxy.hi), 0.5 * (dxo.hi + dyo.hi - dxy.lo)};
}

DeltaEstimate four_point_delta(std::span<const Point> pts, const DistanceOracle& oracle) {
  const size_t n = pts.size();
  if (n < 4) fail(errc::bad_input, "four-point condition needs at least 4 points");

  std::vector<std::vector<Interval>> d(n, std::vector<Interval>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = oracle.bracket(pts[i], pts[j]);

  auto product = [&](size_t x, size_t y, size_t w) {
    return Interval{0.5 * (d[x][w].lo + d[y][w].lo - d[x][y].hi),
                    0.5 * (d[x][w].hi + d[y][w].hi - d[x][y].lo)};
  };

  DeltaEstimate est;
  est.method = DeltaEstimate::Method::four_point;
  est.caveat =
      "witness curves are near-geodesics; the reported delta bounds the geodesic "
      "delta only up to the solver optimality gap";
  double best = 0.0;
  std::array<size_t, 4> best_idx{0, 1, 2, 3};
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t e = c + 1; e < n; ++e) {
          ++est.quadruples;
          const std::array<size_t, 4> ids{a, b, c, e};
          // all ordered roles (x, y, z, w); defect is symmetric in x <-> y
          for (int px = 0; px < 4; ++px)
            for (int py = 0; py < 4; ++py) {
              if (py == px) continue;
              for (int pz = 0; pz < 4; ++pz) {
                if (pz == px || pz == py) continue;
                const int pw = 6 - px - py - pz;
                const size_t x = ids[static_cast<size_t>(px)], y = ids[static_cast<size_t>(py)],
                             z = ids[static_cast<size_t>(pz)], w = ids[static_cast<size_t>(pw)];
                const Interval xz = product(x, z, w);
                const Interval yz = product(y, z, w);
                const Interval xy = product(x, y, w);
                const double defect = std::min(xz.hi, yz.hi) - xy.lo;
                if (defect > best) {
                  best = defect;
                  best_idx = ids;
                }
              }
            }
        }
  est.delta = std::max(0.0, best);
  for (size_t i = 0; i < 4; ++i) est.witness[i] = pts[best_idx[i]];
  return est;
}

DeltaEstimate thin_triangle_delta(const ModelDomain& D, const Point& x, const Point& y,
                                  const Point& z, const DistanceOptions& opts,
                                  int side_samples) {
  if (side_samples < 2) fail(errc::bad_input, "side_samples must be >= 2");
  const DistanceEstimate exy = distance(D, x, y, opts);
  const DistanceEstimate eyz = distance(D, y, z, opts);
  const DistanceEstimate exz = distance(D, x, z, opts);

  DistanceOptions light = opts;
  light.max_sweeps = std::min(opts.max_sweeps, 12);
  light.curve_samples = std::min(opts.curve_samples, 17);
  DistanceOracle oracle(D, light);

  auto side_points = [&](const CurvePath& c) {
    return resample(c, side_samples).points;
  };
  const std::vector<Point> sxy = side_points(exy.witness);
  const std::vector<Point> syz = side_points(eyz.witness);
  const std::vector<Point> sxz = side_points(exz.witness);

  auto one_side = [&](const std::vector<Point>& side, const std::vector<Point>& o1,
                      const std::vector<Point>& o2, DeltaEstimate& est) {
    for (const Point& s : side) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const Point& t : o1) nearest = std::min(nearest, oracle.bracket(s, t).hi);
      for (const Point& t : o2) nearest = std::min(nearest, oracle.bracket(s, t).hi);
      if (nearest > est.delta) {
        est.delta = nearest;
        est.witness = {s, x, y, z};
      }
    }
  };

  DeltaEstimate est;
  est.method = DeltaEstimate::Method::thin_triangle;
  est.caveat =
      "witness curves are near-geodesics; the reported delta bounds the geodesic "
      "delta only up to the solver optimality gap";
  est.witness = {x, y, z, z};
  one_side(sxy, syz, sxz, est);
  one_side(syz, sxy, sxz, est);
  one_side(sxz, sxy, syz, est);
  est.quadruples = static_cast<long>(3 * side_samples);
  return est;
}

std::vector<DivergenceProbeRow> boundary_divergence_probe(const ModelDomain& D,
                                                          const Point& xi_plus,
                                                          const Point& xi_minus,
                                                          const Point& o, int n_max,
                                                          const DistanceOptions& opts) {
  for (const Point* xi : {&xi_plus, &xi_minus}) {
    const double r = D.defining_value(*xi);
    if (std::abs(r) > 1e-9 * (1.0 + std::abs((*xi)[0].real())))
      fail(errc::not_boundary_point, "probe anchors must lie on the boundary");
  }
  if (!D.contains(o)) fail(errc::point_not_interior, "base point must be interior");

  DistanceOracle oracle(D, opts);
  std::vector<DivergenceProbeRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    DivergenceProbeRow row;
    row.n = n;
    row.p = xi_plus;
    row.p.z[0] -= std::exp(-static_cast<double>(n));
    row.q = xi_minus;
    row.q.z[0] -= std::exp(-static_cast<double>(n));
    const Interval g = gromov_product(oracle, row.p, row.q, o);
    row.product_lower = g.lo;
    row.product_upper = g.hi;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace corank1
