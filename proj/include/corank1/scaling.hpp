#pragma once

// The two rescaling processes of a model domain: the boundary scaling
// psi_n = Lambda_n o Phi_n along a normal approach, and the dilation at
// infinity chi_n isolating the top homogeneous part.  Both are exact on
// model domains.

#include <cstdint>
#include <vector>

#include "corank1/model_domain.hpp"

namespace corank1 {

/// Normal-form coordinates at a point xi: the triangular map
///   zeta_0 = w_0 + 2 sum_j h_j w_1^j + sum_a (2 conj(xi_a)) w_a,
///   zeta_l = w_l  (l >= 1),  w = z - xi,
/// after which r(Phi^{-1}(zeta)) = r(xi) + Re zeta_0 + centered(zeta_1)
/// + sum_a |zeta_a|^2, exactly.
struct SpecialCoordinates {
  Point base;                     // xi
  double base_defining_value = 0; // r_P(xi); 0 on the boundary
  std::vector<cplx> holo_coeffs;  // h_j, index 0 <-> j = 1
  std::vector<cplx> linear_alpha; // 2 conj(xi_a), a = 2..d
  HermitianPoly centered;         // coefficients a_{j,k}(xi)

  Point to_special(const Point& z) const;
  Point from_special(const Point& zeta) const;
};

/// Boundary-point version (throws not_boundary_point away from the boundary).
SpecialCoordinates special_coordinates(const ModelDomain& D, const Point& xi);
/// Works at any point; the engulfing probe recenters off the boundary.
SpecialCoordinates special_coordinates_at(const ModelDomain& D, const Point& x);

/// tau(xi, delta) = min over l in [2, deg P] with A_l(xi) > 0 of
/// (delta / A_l)^(1/l), using the coefficient caps of the centered
/// polynomial at xi.
double anisotropic_radius(const ModelDomain& D, const Point& xi, double delta);

/// (tau_0, tau_1, ..., tau_d) = (delta, tau(xi, delta), sqrt(delta), ...).
std::vector<double> polydisc_radii(const ModelDomain& D, const Point& xi, double delta);

struct EngulfingReport {
  double C_e = 0.0;  // smallest observed C with Q_delta(y) inside Q_{C delta}(xi)
  bool pass = false;
  int samples = 0;
};

/// Samples y in Q_delta(xi) and w in Q_delta(y) (including the polydisc
/// corner extremes) and reports the largest dilation factor C needed to
/// engulf the sampled points back into Q_{C delta}(xi).
EngulfingReport engulfing_probe(const ModelDomain& D, const Point& xi, double delta,
                                int sample_count, std::uint64_t seed = 12345);

struct ScalingStep {
  long long n = 0;
  Point u;                       // interior point of this step
  double eps = 0.0;              // depth: xi = u + (eps, '0) on the boundary
  Point xi;
  double tau = 0.0;              // tau(xi, eps)
  std::vector<double> dilation;  // diagonal of Lambda: (1/tau_0, 1/tau_1, ...)
  SpecialCoordinates coords;
  ModelDomain scaled;            // defining data of psi_n(Omega)
  Point image_base;              // psi_n(u) = (-1, '0)

  Point pull_back(const Point& zeta) const;                          // psi^{-1}
  Tangent pull_back_vector(const Point& zeta, const Tangent& X) const;  // d psi^{-1}
};

/// One scaling step at the interior point u (eps solved exactly from the
/// graph structure: eps = -r(u)).
ScalingStep scale_step(const ModelDomain& D, const Point& u, long long n = 0);

struct ScalingSequence {
  std::vector<ScalingStep> steps;
  ModelDomain limit;     // analytic n -> infinity limit
  bool limit_analytic = true;
};

/// Steps for u_n = xi - (a/n, '0) along the inward normal, where xi is the
/// boundary projection of the given point (a = -r(u) for interior input,
/// a = 1 for boundary input).  The limit polynomial is computed in closed
/// form from the exponent bookkeeping.
ScalingSequence scale_at_point(const ModelDomain& D, const Point& u_or_xi,
                               const std::vector<long long>& ns);

/// chi_n dilation: degree-k part of P is scaled by n^(k/(2m') - 1), exactly.
ModelDomain blowdown_at_infinity(const ModelDomain& D, long long n);

/// Top homogeneous part only (the defining polynomial of the limit at
/// infinity).  Throws degenerate_limit when the top part fails validation.
ModelDomain limit_at_infinity(const ModelDomain& D);

struct ConvergenceRow {
  long long n = 0;
  double eps = 0.0;  // 0 when not applicable (blowdown sequences)
  double tau = 0.0;
  double sup_r_error = 0.0;
  double sup_metric_error = 0.0;
};

std::vector<ConvergenceRow> convergence_report(
    const std::vector<std::pair<long long, const ModelDomain*>>& sequence,
    const ModelDomain& target, const Box& box, int grid, int directions, int workers = 1);

std::vector<ConvergenceRow> convergence_report(const ScalingSequence& seq,
                                               const ModelDomain& target, const Box& box,
                                               int grid, int directions, int workers = 1);

}  // namespace corank1
