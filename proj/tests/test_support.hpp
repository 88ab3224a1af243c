#pragma once

// Shared fixtures and independent oracles for the test suites.  Everything
// here stays independent of the implementation paths it checks: derivatives
// by finite differences, integrals by dense trapezoid sums.

#include <cmath>
#include <random>

#include "corank1/catlin_metric.hpp"
#include "corank1/model_domain.hpp"

namespace testsup {

using corank1::cplx;
using corank1::HermitianPoly;
using corank1::ModelDomain;
using corank1::Point;
using corank1::Tangent;

inline HermitianPoly quartic_poly() {  // |z|^4
  return HermitianPoly::from_terms({{2, 2, {1.0, 0.0}}});
}

inline HermitianPoly quartic_plus_quadratic() {  // |z|^4 + |z|^2
  return HermitianPoly::from_terms({{2, 2, {1.0, 0.0}}, {1, 1, {1.0, 0.0}}});
}

inline ModelDomain quartic_domain(int dim = 2) {
  return ModelDomain(dim, quartic_poly(), "quartic");
}

inline ModelDomain mixed_domain(int dim = 2) {
  // |z|^4 + |z|^2 + (1/4) 2 Re(z^2 conj(z)): subharmonic with a genuinely
  // complex coefficient structure
  return ModelDomain(dim,
                     HermitianPoly::from_terms({{2, 2, {1.0, 0.0}},
                                                {1, 1, {1.0, 0.0}},
                                                {2, 1, {0.25, 0.0}}}),
                     "mixed");
}

inline cplx random_cplx(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  return std::polar(radius * std::sqrt(uni(rng)), 6.283185307179586 * uni(rng));
}

inline Point random_interior(const ModelDomain& D, std::mt19937_64& rng, double tail_radius = 1.0,
                             double depth_lo = 0.05, double depth_hi = 2.5) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    std::vector<cplx> tail(static_cast<size_t>(D.d()));
    for (cplx& c : tail) c = random_cplx(rng, tail_radius);
    Point p = D.boundary_from_slice(tail, 2.0 * uni(rng) - 1.0);
    p.z[0] -= depth_lo + (depth_hi - depth_lo) * uni(rng);
    if (D.contains(p)) return p;
  }
}

inline Point random_boundary(const ModelDomain& D, std::mt19937_64& rng,
                             double tail_radius = 1.0) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<cplx> tail(static_cast<size_t>(D.d()));
  for (cplx& c : tail) c = random_cplx(rng, tail_radius);
  return D.boundary_from_slice(tail, 2.0 * uni(rng) - 1.0);
}

// Wirtinger derivative d/dz by central differences on the real coordinates:
// d/dz = (d/dx - i d/dy) / 2.
template <typename F>
cplx fd_dz(F&& f, cplx z, double h = 1e-5) {
  const cplx fx = (f(z + cplx(h, 0)) - f(z - cplx(h, 0))) / (2.0 * h);
  const cplx fy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * (fx - cplx(0, 1) * fy);
}

template <typename F>
cplx fd_dzbar(F&& f, cplx z, double h = 1e-5) {
  const cplx fx = (f(z + cplx(h, 0)) - f(z - cplx(h, 0))) / (2.0 * h);
  const cplx fy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * (fx + cplx(0, 1) * fy);
}

// Dense trapezoid length of the straight segment from a to b, independent of
// the Simpson/Richardson path under test.
inline double trapezoid_segment_length(const ModelDomain& D, const Point& a, const Point& b,
                                       int nodes = 20001) {
  const Tangent dir = b - a;
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    Point p = a;
    const double u = static_cast<double>(i) / (nodes - 1);
    for (size_t k = 0; k < p.z.size(); ++k) p.z[k] += u * dir.x[k];
    const double v = corank1::catlin_metric(D, p, dir);
    acc += (i == 0 || i == nodes - 1) ? 0.5 * v : v;
  }
  return acc / (nodes - 1);
}

}  // namespace testsup
