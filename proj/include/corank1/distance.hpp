#pragma once

// Certified distance brackets for the Catlin distance: a lower bound from
// the vertical/crossing estimates, an upper bound realized by an explicit
// witness curve (graph shortest path, variational descent, or the composite
// strategy combining both with normal-geodesic seeds).

#include <optional>
#include <string>

#include "corank1/curves.hpp"

namespace corank1 {

enum class DistanceMethod { graph, variational, composite };
const char* distance_method_name(DistanceMethod m);

struct DistanceEstimate {
  double lower = 0.0;
  double upper = 0.0;
  CurvePath witness;
  DistanceMethod method = DistanceMethod::composite;
};

struct GraphSpacing {
  double h0 = 0.35;          // step in the log-depth coordinate (and scaled tails)
  double depth_margin = 4.0; // how far below both endpoints the lattice descends
  int node_cap = 200000;
};

struct DistanceOptions {
  int curve_samples = 33;     // control points per witness
  int max_sweeps = 60;        // variational descent sweeps
  double improve_tol = 1e-7;  // stop when a sweep improves less than this (relative)
  int depth_trials = 5;       // composite seeds around the optimal crossing level
  int quadrature_order = 8;
};

/// Dijkstra over an interior lattice, uniform in the transformed coordinates
/// (log-depth, Im z0, tail coordinates); in ambient coordinates the node
/// spacing along the normal is proportional to |r_P|.  Edges are straight
/// segments to all neighbors differing by at most one step per coordinate,
/// with deterministic lexicographic tie-breaking.
DistanceEstimate distance_graph(const ModelDomain& D, const Point& p, const Point& q,
                                const Box& box, const GraphSpacing& spacing = {});

/// Coordinate descent on the interior control points of `init`:
/// finite-difference gradient of the local length, step halving on
/// non-decrease, exterior proposals rejected.  Monotone non-increasing.
DistanceEstimate distance_variational(const ModelDomain& D, const Point& p, const Point& q,
                                      CurvePath init, int iterations,
                                      const DistanceOptions& opts = {});

/// Composite strategy: seeds with the straight segment and down-across-up
/// curves built from normal geodesic legs through the boundary projections
/// of p and q, polishes the best seed variationally, and cross-checks with
/// the graph estimator when a box is supplied.  Returns the tightest bracket.
DistanceEstimate distance(const ModelDomain& D, const Point& p, const Point& q,
                          const DistanceOptions& opts = {},
                          const std::optional<Box>& graph_box = std::nullopt,
                          const GraphSpacing& spacing = {});

struct QuasiGeodesicReport {
  double A_required = 1.0;  // smallest A passing with the given B
  double B_required = 0.0;  // smallest B passing with the given A
  std::pair<double, double> worst_pair{0.0, 0.0};
  bool pass = false;
};

/// Checks A^{-1}|dt| - B <= d(sigma(t_i), sigma(t_j)) <= A|dt| + B on sampled
/// parameter pairs, conservatively through the distance brackets (the lower
/// end must not exceed A|dt| + B; the upper end must reach A^{-1}|dt| - B).
QuasiGeodesicReport verify_quasi_geodesic(const ModelDomain& D, const CurvePath& c, double A,
                                          double B, int pair_samples,
                                          const DistanceOptions& opts = {},
                                          unsigned long long seed = 12345);

/// Resamples to `samples` points equally spaced in Catlin arc length along
/// the polyline; new vertices lie on the old polyline.
CurvePath respace_by_length(const ModelDomain& D, const CurvePath& c, int samples);

}  // namespace corank1
