#include "corank1/model_domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace corank1 {

double Tangent::norm() const {
  double s = 0.0;
  for (const cplx& c : x) s += std::norm(c);
  return std::sqrt(s);
}

bool Tangent::is_zero() const {
  for (const cplx& c : x)
    if (c != cplx{0.0, 0.0}) return false;
  return true;
}

Point operator+(Point p, const Tangent& v) {
  if (p.dim() != v.dim()) fail(errc::dimension_mismatch, "point/vector dims differ");
  for (size_t i = 0; i < p.z.size(); ++i) p.z[i] += v.x[i];
  return p;
}

Point operator-(Point p, const Tangent& v) {
  if (p.dim() != v.dim()) fail(errc::dimension_mismatch, "point/vector dims differ");
  for (size_t i = 0; i < p.z.size(); ++i) p.z[i] -= v.x[i];
  return p;
}

Tangent operator-(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) fail(errc::dimension_mismatch, "point dims differ");
  Tangent v;
  v.x.resize(a.z.size());
  for (size_t i = 0; i < a.z.size(); ++i) v.x[i] = a.z[i] - b.z[i];
  return v;
}

Tangent operator*(cplx s, Tangent v) {
  for (cplx& c : v.x) c *= s;
  return v;
}

bool lex_less(const Point& a, const Point& b) {
  for (size_t i = 0; i < std::min(a.z.size(), b.z.size()); ++i) {
    if (a.z[i].real() != b.z[i].real()) return a.z[i].real() < b.z[i].real();
    if (a.z[i].imag() != b.z[i].imag()) return a.z[i].imag() < b.z[i].imag();
  }
  return a.z.size() < b.z.size();
}

std::vector<Point> box_grid(const Box& box, int radii_per_coord) {
  if (radii_per_coord < 1) fail(errc::bad_input, "grid must be >= 1");
  const int dim = box.center.dim();
  if (static_cast<int>(box.radii.size()) != dim)
    fail(errc::dimension_mismatch, "box radii/center dims differ");
  const int n_theta = 2 * radii_per_coord;
  std::vector<std::vector<cplx>> per_coord(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    auto& vals = per_coord[static_cast<size_t>(i)];
    vals.push_back(box.center[static_cast<size_t>(i)]);
    for (int r = 1; r <= radii_per_coord; ++r) {
      const double rad = box.radii[static_cast<size_t>(i)] * r / radii_per_coord;
      for (int m = 0; m < n_theta; ++m) {
        const double th = 2.0 * std::numbers::pi * m / n_theta;
        vals.push_back(box.center[static_cast<size_t>(i)] + std::polar(rad, th));
      }
    }
  }
  std::vector<Point> out;
  std::vector<size_t> idx(static_cast<size_t>(dim), 0);
  while (true) {
    Point p;
    p.z.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) p.z[static_cast<size_t>(i)] = per_coord[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    out.push_back(std::move(p));
    int carry = dim - 1;
    while (carry >= 0) {
      if (++idx[static_cast<size_t>(carry)] < per_coord[static_cast<size_t>(carry)].size()) break;
      idx[static_cast<size_t>(carry)] = 0;
      --carry;
    }
    if (carry < 0) break;
  }
  return out;
}

ModelDomain::ModelDomain(int ambient_dim, HermitianPoly P, std::string label)
    : ambient_dim_(ambient_dim), P_(std::move(P)), label_(std::move(label)) {
  if (ambient_dim_ < 2) fail(errc::invalid_domain, "ambient dimension must be >= 2");
  if (P_.empty()) fail(errc::degenerate_type, "defining polynomial is identically zero");
  if (!P_.is_centered())
    fail(errc::invalid_domain, "defining polynomial must contain mixed terms only");
  const int deg = P_.degree();
  if (deg < 2 || deg % 2 != 0)
    fail(errc::invalid_domain, "defining polynomial must have even degree >= 2");
  const auto rep = subharmonicity_report(P_, 2.0, 24);
  if (!rep.pass)
    fail(errc::invalid_domain,
         "defining polynomial fails subharmonicity on the default box (min Laplacian " +
             std::to_string(rep.min_laplacian) + ")");

  dP_ = P_.wirtinger(1, 0);
  lap_quarter_ = P_.wirtinger(1, 1);
  caps_.resize(static_cast<size_t>(deg) - 1);
  for (int l = 2; l <= deg; ++l) {
    auto& row = caps_[static_cast<size_t>(l) - 2];
    for (int j = 1; j <= l - 1; ++j) row.push_back(P_.wirtinger(j, l - j));
  }
}

double ModelDomain::defining_value(const Point& z) const {
  if (z.dim() != ambient_dim_) fail(errc::dimension_mismatch, "point dimension mismatch");
  double v = z[0].real() + P_.eval(z[1]);
  for (int a = 2; a < ambient_dim_; ++a) v += std::norm(z[static_cast<size_t>(a)]);
  return v;
}

Point ModelDomain::boundary_from_slice(std::span<const cplx> tail, double im0) const {
  if (static_cast<int>(tail.size()) != d())
    fail(errc::dimension_mismatch, "tail must have d = ambient_dim - 1 entries");
  double re0 = -P_.eval(tail[0]);
  for (size_t a = 1; a < tail.size(); ++a) re0 -= std::norm(tail[a]);
  Point p;
  p.z.reserve(static_cast<size_t>(ambient_dim_));
  p.z.emplace_back(re0, im0);
  p.z.insert(p.z.end(), tail.begin(), tail.end());
  return p;
}

ModelDomain::TypeData ModelDomain::type_data() const {
  if (P_.empty()) fail(errc::degenerate_type, "defining polynomial is identically zero");
  TypeData td;
  td.degree = P_.degree();
  int lo = td.degree;
  for (const auto& [key, c] : P_.raw().terms()) lo = std::min(lo, key.j + key.k);
  td.vanishing_order = lo;
  return td;
}

double ModelDomain::derivative_cap(int l, cplx z1) const {
  if (l < 2 || l > P_.degree()) fail(errc::out_of_range, "cap order outside [2, degree]");
  double m = 0.0;
  for (const BiPoly& q : caps_[static_cast<size_t>(l) - 2]) m = std::max(m, std::abs(q.eval(z1)));
  return m;
}

const std::vector<BiPoly>& ModelDomain::cap_derivatives(int l) const {
  if (l < 2 || l > P_.degree()) fail(errc::out_of_range, "cap order outside [2, degree]");
  return caps_[static_cast<size_t>(l) - 2];
}

}  // namespace corank1
