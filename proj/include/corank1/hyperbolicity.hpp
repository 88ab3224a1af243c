#pragma once

// Gromov products from certified distance brackets, delta-hyperbolicity
// estimates (four-point defect and thin-triangle cross-check), and the
// boundary divergence probe.

#include <array>
#include <map>
#include <mutex>
#include <span>
#include <string>

#include "corank1/distance.hpp"

namespace corank1 {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Memoizing distance-bracket provider.  Keys are symmetric in the two
/// points; concurrent lookups are safe (duplicated computation possible).
class DistanceOracle {
 public:
  explicit DistanceOracle(const ModelDomain& D, DistanceOptions opts = {});
  Interval bracket(const Point& a, const Point& b) const;
  const ModelDomain& domain() const { return D_; }
  size_t cache_size() const;

 private:
  const ModelDomain& D_;
  DistanceOptions opts_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<double>, Interval> cache_;
};

/// (x|y)_o = (d(x,o) + d(y,o) - d(x,y)) / 2, propagated through the three
/// brackets by interval arithmetic.
Interval gromov_product(const DistanceOracle& oracle, const Point& x, const Point& y,
                        const Point& o);

struct DeltaEstimate {
  double delta = 0.0;
  long quadruples = 0;
  std::array<Point, 4> witness;
  enum class Method { four_point, thin_triangle } method = Method::four_point;
  std::string caveat;
};

/// Max over quadruples (all orderings, hence permutation invariant) of
/// min((x|z)_w, (y|z)_w) - (x|y)_w, with conservative interval ends: the
/// min uses upper ends and the subtracted product its lower end, so the
/// reported delta over-estimates the observed defect.
DeltaEstimate four_point_delta(std::span<const Point> pts, const DistanceOracle& oracle);

/// Distance from samples of each witness side to the union of the other two
/// witnesses, maximized over the three sides.
DeltaEstimate thin_triangle_delta(const ModelDomain& D, const Point& x, const Point& y,
                                  const Point& z, const DistanceOptions& opts = {},
                                  int side_samples = 9);

struct DivergenceProbeRow {
  int n = 0;
  Point p, q;
  double product_lower = 0.0;
  double product_upper = 0.0;
};

/// Rows for p_n = xi_plus - (e^{-n}, '0), q_n = xi_minus - (e^{-n}, '0),
/// n = 1..n_max, with Gromov product intervals based at o.
std::vector<DivergenceProbeRow> boundary_divergence_probe(const ModelDomain& D,
                                                          const Point& xi_plus,
                                                          const Point& xi_minus,
                                                          const Point& o, int n_max,
                                                          const DistanceOptions& opts = {});

}  // namespace corank1
