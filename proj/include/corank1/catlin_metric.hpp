#pragma once

// The Catlin metric
//   M(z;X) = |x0 + 2 x1 P'(z1) + 2 sum_a x_a conj(z_a)| / |r|
//          + |x1| sum_{l=2}^{deg P} (A_l(z1)/|r|)^(1/l)
//          + sum_a |x_a| / sqrt(|r|),
// Kobayashi upper bounds through affine analytic discs, certified distance
// lower bounds, and metric-comparison diagnostics.

#include <string>

#include "corank1/model_domain.hpp"

namespace corank1 {

double catlin_metric(const ModelDomain& D, const Point& z, const Tangent& X);

/// |log(r(p)/r(q))|: the pure vertical lower bound for the Catlin distance.
double log_ratio_lower_bound(const ModelDomain& D, const Point& p, const Point& q);

/// Certified lower bound for the Catlin distance d^C(p,q).  Equals the
/// log-ratio bound when the z1 slices agree; otherwise it is strengthened by
/// a descend-cross-ascend estimate: any curve reaching its deepest level
/// |r| = e^{-s} pays |s_p - s| + |s_q - s| vertically and at least
/// sum_l e^{s/l} W_l horizontally, where W_l is a certified minorant of the
/// conformal crossing cost inf over paths of the integral of A_l^(1/l) |dz1|.
double distance_lower_bound(const ModelDomain& D, const Point& p, const Point& q);

/// The level s* minimizing the descend-cross-ascend estimate; used to seed
/// composite witness curves.  Returns min(s_p, s_q) when crossing is free.
double optimal_crossing_level(const ModelDomain& D, const Point& p, const Point& q);

/// 1/R where R is a certified radius such that the affine disc
/// t -> z + t X stays inside the domain for |t| < R along the sampled
/// angles.  An upper bound for the Kobayashi metric up to angular sampling.
double disc_upper_bound(const ModelDomain& D, const Point& z, const Tangent& X,
                        int angle_samples = 64);

struct MetricComparisonReport {
  double sup_abs_error = 0.0;
  long grid_points = 0;  // points interior to both domains
  int directions = 0;
  std::string box_note;
};

/// sup over (box grid) x (direction set) of |M_a - M_b| at points interior
/// to both domains.  Directions: the 2(d+1) coordinate axes (real and
/// imaginary) followed by seeded random unit vectors.
MetricComparisonReport metric_sup_error(const ModelDomain& Da, const ModelDomain& Db,
                                        const Box& box, int grid, int directions,
                                        int workers = 1, unsigned long long seed = 12345);

}  // namespace corank1
