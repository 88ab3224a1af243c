#include "corank1/curves.hpp"

#include <algorithm>
#include <cmath>

#include "corank1/catlin_metric.hpp"

namespace corank1 {

void CurvePath::validate() const {
  if (points.size() < 2) fail(errc::bad_input, "curve needs at least two samples");
  if (params.size() != points.size())
    fail(errc::bad_input, "curve params/points length mismatch");
  for (size_t i = 1; i < params.size(); ++i)
    if (!(params[i] > params[i - 1])) fail(errc::bad_input, "curve params must ascend");
}

CurvePath reversed(CurvePath c) {
  std::reverse(c.points.begin(), c.points.end());
  const double lo = c.params.front(), hi = c.params.back();
  std::vector<double> p(c.params.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = lo + hi - c.params[c.params.size() - 1 - i];
  c.params = std::move(p);
  return c;
}

CurvePath concatenate(const CurvePath& a, const CurvePath& b) {
  a.validate();
  b.validate();
  if (!(a.points.back() == b.points.front()))
    fail(errc::bad_input, "concatenation requires matching junction points");
  CurvePath out;
  const size_t n = a.size() + b.size() - 1;
  out.points.reserve(n);
  out.points.insert(out.points.end(), a.points.begin(), a.points.end());
  out.points.insert(out.points.end(), b.points.begin() + 1, b.points.end());
  out.params.resize(n);
  for (size_t i = 0; i < n; ++i) out.params[i] = static_cast<double>(i) / (n - 1);
  return out;
}

CurvePath resample(const CurvePath& c, int samples) {
  c.validate();
  if (samples < 2) fail(errc::bad_input, "resample needs >= 2 samples");
  CurvePath out;
  out.params.resize(static_cast<size_t>(samples));
  out.points.resize(static_cast<size_t>(samples));
  const double t0 = c.params.front(), t1 = c.params.back();
  size_t seg = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    while (seg + 2 < c.params.size() && c.params[seg + 1] < t) ++seg;
    const double a = c.params[seg], b = c.params[seg + 1];
    const double u = (t - a) / (b - a);
    Point p;
    p.z.resize(c.points[seg].z.size());
    for (size_t k = 0; k < p.z.size(); ++k)
      p.z[k] = c.points[seg][k] + u * (c.points[seg + 1][k] - c.points[seg][k]);
    out.params[static_cast<size_t>(i)] = t;
    out.points[static_cast<size_t>(i)] = std::move(p);
  }
  return out;
}

namespace {

double simpson_on_segment(const ModelDomain& D, const Point& a, const Tangent& dir,
                          int subintervals) {
  // composite Simpson over u in [0,1] of M(a + u dir; dir)
  const int n = subintervals;  // even
  const double h = 1.0 / n;
  auto f = [&](double u) {
    Point p = a;
    for (size_t k = 0; k < p.z.size(); ++k) p.z[k] += u * dir.x[k];
    return catlin_metric(D, p, dir);
  };
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

double segment_length(const ModelDomain& D, const Point& a, const Point& b, int order) {
  if (order < 2) fail(errc::bad_input, "quadrature order must be >= 2");
  if (order % 2) ++order;
  Tangent dir = b - a;
  if (dir.is_zero()) {
    if (D.defining_value(a) >= 0.0) fail(errc::curve_exits_domain, "curve sample not interior");
    return 0.0;
  }
  try {
    double coarse = simpson_on_segment(D, a, dir, order);
    for (int n = 2 * order; n <= 128 * order; n *= 2) {
      const double fine = simpson_on_segment(D, a, dir, n);
      if (std::abs(fine - coarse) <= 1e-6 * std::max(std::abs(fine), 1e-12)) return fine;
      coarse = fine;
    }
    return coarse;
  } catch (const Error& e) {
    if (e.code() == errc::point_not_interior)
      fail(errc::curve_exits_domain, "quadrature node left the domain");
    throw;
  }
}

double curve_length(const ModelDomain& D, const CurvePath& c, int quadrature_order) {
  c.validate();
  double len = 0.0;
  for (size_t i = 0; i + 1 < c.points.size(); ++i)
    len += segment_length(D, c.points[i], c.points[i + 1], quadrature_order);
  return len;
}

CurvePath normal_geodesic(const ModelDomain& D, const Point& x, double a, double t0,
                          double t1, int samples) {
  if (a <= 0.0) fail(errc::bad_input, "depth scale a must be positive");
  if (!(t1 > t0)) fail(errc::bad_input, "t range must be increasing");
  if (samples < 2) fail(errc::bad_input, "need at least two samples");
  const double r = D.defining_value(x);
  if (std::abs(r) > 1e-9 * (1.0 + std::abs(x[0].real())))
    fail(errc::not_boundary_point, "normal geodesic base must lie on the boundary");
  CurvePath c;
  c.params.resize(static_cast<size_t>(samples));
  c.points.resize(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    Point p = x;
    p.z[0] -= a * std::exp(-t);
    c.params[static_cast<size_t>(i)] = t;
    c.points[static_cast<size_t>(i)] = std::move(p);
  }
  return c;
}

}  // namespace corank1
