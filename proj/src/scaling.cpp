#include "corank1/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "corank1/catlin_metric.hpp"

namespace corank1 {

Point SpecialCoordinates::to_special(const Point& z) const {
  if (z.dim() != base.dim()) fail(errc::dimension_mismatch, "point dimension mismatch");
  const size_t dim = z.z.size();
  std::vector<cplx> w(dim);
  for (size_t i = 0; i < dim; ++i) w[i] = z[i] - base[i];
  cplx zeta0 = w[0];
  cplx pw = 1.0;
  for (const cplx& h : holo_coeffs) {
    pw *= w[1];
    zeta0 += 2.0 * h * pw;
  }
  for (size_t a = 0; a < linear_alpha.size(); ++a) zeta0 += linear_alpha[a] * w[a + 2];
  Point out;
  out.z = std::move(w);
  out.z[0] = zeta0;
  return out;
}

Point SpecialCoordinates::from_special(const Point& zeta) const {
  if (zeta.dim() != base.dim()) fail(errc::dimension_mismatch, "point dimension mismatch");
  const size_t dim = zeta.z.size();
  std::vector<cplx> w(zeta.z.begin(), zeta.z.end());
  cplx w0 = zeta[0];
  cplx pw = 1.0;
  for (const cplx& h : holo_coeffs) {
    pw *= zeta[1];
    w0 -= 2.0 * h * pw;
  }
  for (size_t a = 0; a < linear_alpha.size(); ++a) w0 -= linear_alpha[a] * zeta[a + 2];
  w[0] = w0;
  Point out;
  out.z.resize(dim);
  for (size_t i = 0; i < dim; ++i) out.z[i] = base[i] + w[i];
  return out;
}

SpecialCoordinates special_coordinates_at(const ModelDomain& D, const Point& x) {
  if (x.dim() != D.ambient_dim()) fail(errc::dimension_mismatch, "point dimension mismatch");
  SpecialCoordinates sc;
  sc.base = x;
  sc.base_defining_value = D.defining_value(x);
  auto rec = D.poly().recenter(x[1]);
  sc.holo_coeffs = std::move(rec.holo_coeffs);
  sc.centered = std::move(rec.centered);
  for (int a = 2; a < D.ambient_dim(); ++a)
    sc.linear_alpha.push_back(2.0 * std::conj(x[static_cast<size_t>(a)]));
  return sc;
}

SpecialCoordinates special_coordinates(const ModelDomain& D, const Point& xi) {
  const double r = D.defining_value(xi);
  if (std::abs(r) > 1e-9 * (1.0 + std::abs(xi[0].real())))
    fail(errc::not_boundary_point, "special coordinates require a boundary point");
  return special_coordinates_at(D, xi);
}

namespace {

double radius_from_caps(const HermitianPoly& centered, double delta) {
  if (delta <= 0.0) fail(errc::bad_input, "delta must be positive");
  double tau = std::numeric_limits<double>::infinity();
  const int deg = centered.degree();
  for (int l = 2; l <= deg; ++l) {
    const double cap = centered.coefficient_cap(l);
    if (cap > 0.0) tau = std::min(tau, std::pow(delta / cap, 1.0 / l));
  }
  if (!std::isfinite(tau))
    fail(errc::infinite_type_point, "all coefficient caps vanish at this point");
  return tau;
}

}  // namespace

double anisotropic_radius(const ModelDomain& D, const Point& xi, double delta) {
  return radius_from_caps(D.poly().recenter(xi[1]).centered, delta);
}

std::vector<double> polydisc_radii(const ModelDomain& D, const Point& xi, double delta) {
  std::vector<double> radii;
  radii.reserve(static_cast<size_t>(D.ambient_dim()));
  radii.push_back(delta);
  radii.push_back(anisotropic_radius(D, xi, delta));
  for (int a = 2; a < D.ambient_dim(); ++a) radii.push_back(std::sqrt(delta));
  return radii;
}

namespace {

// Smallest C with zeta inside R_{C delta}(xi), from the polydisc shape
// (|zeta_0| < C delta, |zeta_1| < tau(xi, C delta), |zeta_a| < sqrt(C delta)).
double engulfing_factor(const HermitianPoly& centered_xi, const Point& zeta, double delta) {
  double C = std::abs(zeta[0]) / delta;
  const double a1 = std::abs(zeta[1]);
  const int deg = centered_xi.degree();
  for (int l = 2; l <= deg; ++l) {
    const double cap = centered_xi.coefficient_cap(l);
    if (cap > 0.0) C = std::max(C, cap * std::pow(a1, l) / delta);
  }
  for (size_t a = 2; a < zeta.z.size(); ++a)
    C = std::max(C, std::norm(zeta[a]) / delta);
  return C;
}

std::vector<Point> polydisc_samples(const std::vector<double>& radii, int count,
                                    std::mt19937_64& rng) {
  const size_t dim = radii.size();
  std::vector<Point> out;
  // corner extremes first (all coordinates on the polydisc edge, angle 0),
  // then the axis extremes, then random fill
  Point corner;
  corner.z.resize(dim);
  for (size_t i = 0; i < dim; ++i) corner.z[i] = radii[i];
  out.push_back(corner);
  for (size_t i = 0; i < dim && static_cast<int>(out.size()) < count; ++i) {
    Point axis;
    axis.z.assign(dim, {0.0, 0.0});
    axis.z[i] = radii[i];
    out.push_back(axis);
  }
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  while (static_cast<int>(out.size()) < count) {
    Point p;
    p.z.resize(dim);
    for (size_t i = 0; i < dim; ++i)
      p.z[i] = std::polar(radii[i] * std::sqrt(uni(rng)),
                          2.0 * std::numbers::pi * uni(rng));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

EngulfingReport engulfing_probe(const ModelDomain& D, const Point& xi, double delta,
                                int sample_count, std::uint64_t seed) {
  if (sample_count < 1) fail(errc::bad_input, "sample_count must be >= 1");
  const SpecialCoordinates at_xi = special_coordinates(D, xi);
  const auto radii_xi = polydisc_radii(D, xi, delta);
  const int n_outer = std::max(1, static_cast<int>(std::lround(std::sqrt(sample_count))));
  const int n_inner = std::max(4, (sample_count + n_outer - 1) / n_outer);

  std::mt19937_64 rng(seed);
  EngulfingReport rep;
  // y = xi itself first: with the corner extremes this pins C_e >= 1 exactly
  std::vector<Point> centers{xi};
  for (Point& zeta : polydisc_samples(radii_xi, n_outer, rng))
    centers.push_back(at_xi.from_special(zeta));

  for (const Point& y : centers) {
    const SpecialCoordinates at_y = special_coordinates_at(D, y);
    std::vector<double> radii_y;
    radii_y.push_back(delta);
    radii_y.push_back(radius_from_caps(at_y.centered, delta));
    for (int a = 2; a < D.ambient_dim(); ++a) radii_y.push_back(std::sqrt(delta));
    for (Point& eta : polydisc_samples(radii_y, n_inner, rng)) {
      const Point w = at_y.from_special(eta);
      const Point zeta_w = at_xi.to_special(w);
      rep.C_e = std::max(rep.C_e, engulfing_factor(at_xi.centered, zeta_w, delta));
      ++rep.samples;
    }
  }
  rep.pass = std::isfinite(rep.C_e) && rep.C_e >= 1.0 - 1e-9;
  return rep;
}

Point ScalingStep::pull_back(const Point& zeta) const {
  if (zeta.dim() != scaled.ambient_dim()) fail(errc::dimension_mismatch, "dimension mismatch");
  Point v = zeta;
  for (size_t k = 0; k < v.z.size(); ++k) v.z[k] /= dilation[k];  // Lambda^{-1}
  return coords.from_special(v);
}

Tangent ScalingStep::pull_back_vector(const Point& zeta, const Tangent& X) const {
  if (X.dim() != scaled.ambient_dim()) fail(errc::dimension_mismatch, "dimension mismatch");
  std::vector<cplx> v(X.x.begin(), X.x.end());
  for (size_t k = 0; k < v.size(); ++k) v[k] /= dilation[k];  // d Lambda^{-1}
  // d Phi^{-1} at w = Lambda^{-1} zeta (triangular in the first coordinate)
  const cplx w1 = zeta[1] / dilation[1];
  cplx y0 = v[0];
  cplx pw = 1.0;
  for (size_t j = 0; j < coords.holo_coeffs.size(); ++j) {
    // d/dw1 of 2 h_j w1^j  ->  2 j h_j w1^(j-1)
    y0 -= 2.0 * static_cast<double>(j + 1) * coords.holo_coeffs[j] * pw * v[1];
    pw *= w1;
  }
  for (size_t a = 0; a < coords.linear_alpha.size(); ++a)
    y0 -= coords.linear_alpha[a] * v[a + 2];
  Tangent out;
  out.x = std::move(v);
  out.x[0] = y0;
  return out;
}

ScalingStep scale_step(const ModelDomain& D, const Point& u, long long n) {
  const double r = D.defining_value(u);
  if (r >= 0.0) fail(errc::point_not_interior, "scaling step needs an interior point");
  const double eps = -r;

  Point xi = u;
  xi.z[0] += eps;  // boundary point straight up the Re z0 axis
  SpecialCoordinates coords = special_coordinates(D, xi);
  const double tau = radius_from_caps(coords.centered, eps);

  std::vector<double> dilation;
  dilation.reserve(static_cast<size_t>(D.ambient_dim()));
  dilation.push_back(1.0 / eps);
  dilation.push_back(1.0 / tau);
  for (int a = 2; a < D.ambient_dim(); ++a) dilation.push_back(1.0 / std::sqrt(eps));

  // a_{j,k}(xi) * eps^{-1} * tau^{j+k}, exactly the coefficients of r_n
  HermitianPoly scaled_poly = coords.centered.dilate(tau).scaled(1.0 / eps);

  Point image_base;
  image_base.z.assign(static_cast<size_t>(D.ambient_dim()), {0.0, 0.0});
  image_base.z[0] = {-1.0, 0.0};

  return ScalingStep{.n = n,
                     .u = u,
                     .eps = eps,
                     .xi = std::move(xi),
                     .tau = tau,
                     .dilation = std::move(dilation),
                     .coords = std::move(coords),
                     .scaled = ModelDomain(D.ambient_dim(), std::move(scaled_poly),
                                           D.label() + "|n=" + std::to_string(n)),
                     .image_base = std::move(image_base)};
}

ScalingSequence scale_at_point(const ModelDomain& D, const Point& u_or_xi,
                               const std::vector<long long>& ns) {
  if (ns.empty()) fail(errc::bad_input, "need at least one n");
  const double r = D.defining_value(u_or_xi);
  if (r > 1e-9 * (1.0 + std::abs(u_or_xi[0].real())))
    fail(errc::not_normal_approach, "base point lies outside the closed domain");
  Point xi = u_or_xi;
  double a = 1.0;
  if (r < -1e-9 * (1.0 + std::abs(u_or_xi[0].real()))) {
    a = -r;
    xi.z[0] += a;
  }

  std::vector<ScalingStep> steps;
  for (long long n : ns) {
    if (n < 1) fail(errc::bad_input, "step indices must be >= 1");
    Point u = xi;
    u.z[0] -= a / static_cast<double>(n);
    steps.push_back(scale_step(D, u, n));
  }

  // closed-form limit: the lowest-order caps dominate as eps -> 0, so the
  // scaled coefficients of total degree l_min tend to a_{j,k}/A_{l_min} and
  // all higher ones to zero
  const HermitianPoly& centered = steps.front().coords.centered;
  int l_min = 0;
  for (int l = 2; l <= centered.degree(); ++l) {
    if (centered.coefficient_cap(l) > 0.0) {
      l_min = l;
      break;
    }
  }
  if (l_min == 0) fail(errc::infinite_type_point, "all caps vanish at the base point");
  HermitianPoly limit_poly =
      centered.homogeneous_part(l_min).scaled(1.0 / centered.coefficient_cap(l_min));

  ScalingSequence seq{.steps = std::move(steps),
                      .limit = ModelDomain(D.ambient_dim(), std::move(limit_poly),
                                           D.label() + "|limit"),
                      .limit_analytic = true};
  return seq;
}

ModelDomain blowdown_at_infinity(const ModelDomain& D, long long n) {
  if (n < 1) fail(errc::bad_input, "dilation index must be >= 1");
  const int two_m = D.poly().degree();
  BiPoly q;
  for (const auto& [key, c] : D.poly().raw().terms()) {
    const double factor =
        std::pow(static_cast<double>(n),
                 static_cast<double>(key.j + key.k) / two_m - 1.0);
    q.add_term(key.j, key.k, c * factor);
  }
  q.prune();
  return ModelDomain(D.ambient_dim(), HermitianPoly::from_bipoly(std::move(q)),
                     D.label() + "|chi_" + std::to_string(n));
}

ModelDomain limit_at_infinity(const ModelDomain& D) {
  HermitianPoly top = D.poly().homogeneous_part(D.poly().degree());
  try {
    return ModelDomain(D.ambient_dim(), std::move(top), D.label() + "|inf");
  } catch (const Error& e) {
    fail(errc::degenerate_limit,
         std::string("top homogeneous part is not an admissible model polynomial (") +
             e.what() + ")");
  }
}

std::vector<ConvergenceRow> convergence_report(
    const std::vector<std::pair<long long, const ModelDomain*>>& sequence,
    const ModelDomain& target, const Box& box, int grid, int directions, int workers) {
  std::vector<ConvergenceRow> rows;
  const auto pts = box_grid(box, grid);
  for (const auto& [n, dom] : sequence) {
    ConvergenceRow row;
    row.n = n;
    for (const Point& z : pts)
      row.sup_r_error =
          std::max(row.sup_r_error, std::abs(dom->defining_value(z) - target.defining_value(z)));
    row.sup_metric_error =
        metric_sup_error(*dom, target, box, grid, directions, workers).sup_abs_error;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const ConvergenceRow& a, const ConvergenceRow& b) { return a.n < b.n; });
  return rows;
}

std::vector<ConvergenceRow> convergence_report(const ScalingSequence& seq,
                                               const ModelDomain& target, const Box& box,
                                               int grid, int directions, int workers) {
  std::vector<std::pair<long long, const ModelDomain*>> doms;
  for (const ScalingStep& st : seq.steps) doms.emplace_back(st.n, &st.scaled);
  auto rows = convergence_report(doms, target, box, grid, directions, workers);
  for (ConvergenceRow& row : rows) {
    for (const ScalingStep& st : seq.steps) {
      if (st.n == row.n) {
        row.eps = st.eps;
        row.tau = st.tau;
        break;
      }
    }
  }
  return rows;
}

}  // namespace corank1
