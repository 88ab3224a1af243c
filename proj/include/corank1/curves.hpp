#pragma once

// Sampled piecewise-C1 curves, Catlin length by composite quadrature, and the
// closed-form normal geodesics sigma(t) = x - (a e^{-t}, 0, ..., 0).

#include <vector>

#include "corank1/model_domain.hpp"

namespace corank1 {

struct CurvePath {
  std::vector<double> params;  // strictly ascending, one per sample
  std::vector<Point> points;

  size_t size() const { return points.size(); }
  void validate() const;  // sizes match, params ascending, >= 2 samples
};

CurvePath reversed(CurvePath c);
/// Joins b onto a (first point of b must repeat the last point of a);
/// parameters are re-normalized to [0, 1].
CurvePath concatenate(const CurvePath& a, const CurvePath& b);
/// Piecewise-linear resample to `samples` points, uniform in the parameter.
CurvePath resample(const CurvePath& c, int samples);

/// Catlin length of one straight segment, integral over u in [0,1] of
/// M(a + u(b-a); b-a).  Composite Simpson with `order` subintervals and a
/// doubling check to 1e-6 relative; refines up to 128x when the check fails.
/// Throws curve_exits_domain when a quadrature node leaves the domain.
double segment_length(const ModelDomain& D, const Point& a, const Point& b, int order = 8);

/// Sum of segment lengths with piecewise-linear interpolation between samples.
double curve_length(const ModelDomain& D, const CurvePath& c, int quadrature_order = 8);

/// Samples sigma(t) = x - (a e^{-t}, '0) on [t0, t1]; r(sigma(t)) = -a e^{-t}.
CurvePath normal_geodesic(const ModelDomain& D, const Point& x, double a, double t0,
                          double t1, int samples);

}  // namespace corank1
