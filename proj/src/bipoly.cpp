#include "corank1/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace corank1 {

const char* errc_name(errc c) {
  switch (c) {
    case errc::hermitian_violation: return "HermitianViolation";
    case errc::realness_violation: return "RealnessViolation";
    case errc::out_of_range: return "OutOfRange";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degenerate_type: return "DegenerateType";
    case errc::point_not_interior: return "PointNotInterior";
    case errc::zero_vector: return "ZeroVector";
    case errc::empty_intersection: return "EmptyIntersection";
    case errc::curve_exits_domain: return "CurveExitsDomain";
    case errc::not_boundary_point: return "NotBoundaryPoint";
    case errc::disconnected: return "Disconnected";
    case errc::infinite_type_point: return "InfiniteTypePoint";
    case errc::not_normal_approach: return "NotNormalApproach";
    case errc::degenerate_limit: return "DegenerateLimit";
    case errc::invalid_domain: return "InvalidDomain";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

BiPoly BiPoly::monomial(int j, int k, cplx c) {
  BiPoly p;
  p.add_term(j, k, c);
  p.prune();
  return p;
}

void BiPoly::add_term(int j, int k, cplx c) {
  if (j < 0 || k < 0) fail(errc::bad_input, "negative exponent");
  terms_[{j, k}] += c;
}

int BiPoly::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.j + key.k);
  return d;
}

cplx BiPoly::eval(cplx z) const {
  if (terms_.empty()) return {0.0, 0.0};
  const int d = degree();
  std::vector<cplx> zp(static_cast<size_t>(d) + 1), zc(static_cast<size_t>(d) + 1);
  zp[0] = zc[0] = 1.0;
  const cplx zb = std::conj(z);
  for (int i = 1; i <= d; ++i) {
    zp[static_cast<size_t>(i)] = zp[static_cast<size_t>(i) - 1] * z;
    zc[static_cast<size_t>(i)] = zc[static_cast<size_t>(i) - 1] * zb;
  }
  cplx acc{0.0, 0.0};
  for (const auto& [key, c] : terms_)
    acc += c * zp[static_cast<size_t>(key.j)] * zc[static_cast<size_t>(key.k)];
  return acc;
}

BiPoly BiPoly::wirtinger(int dj, int dk) const {
  if (dj < 0 || dk < 0) fail(errc::bad_input, "negative derivative order");
  BiPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.j < dj || key.k < dk) continue;
    double f = 1.0;
    for (int a = 0; a < dj; ++a) f *= static_cast<double>(key.j - a);
    for (int a = 0; a < dk; ++a) f *= static_cast<double>(key.k - a);
    out.add_term(key.j - dj, key.k - dk, c * f);
  }
  out.prune();
  return out;
}

BiPoly BiPoly::homogeneous_part(int total) const {
  BiPoly out;
  for (const auto& [key, c] : terms_)
    if (key.j + key.k == total) out.add_term(key.j, key.k, c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] += c;
  prune();
  return *this;
}

BiPoly& BiPoly::operator*=(cplx s) {
  for (auto& [key, c] : terms_) c *= s;
  prune();
  return *this;
}

void BiPoly::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

BiPoly BiPoly::dilate(double lambda) const {
  BiPoly out;
  for (const auto& [key, c] : terms_)
    out.add_term(key.j, key.k, c * std::pow(lambda, key.j + key.k));
  out.prune();
  return out;
}

double BiPoly::gradient_bound(double u) const {
  double b = 0.0;
  for (const auto& [key, c] : terms_) {
    const int t = key.j + key.k;
    if (t == 0) continue;
    b += std::abs(c) * t * std::pow(u, t - 1);
  }
  return b;
}

namespace {

// Symmetrize an accumulated coefficient table and validate conjugate pairing.
BiPoly hermitian_close(const std::map<TermKey, cplx>& raw) {
  BiPoly out;
  for (const auto& [key, c] : raw) {
    if (key.j == key.k) {
      if (std::abs(c.imag()) > kRealnessTol * (1.0 + std::abs(c)))
        fail(errc::hermitian_violation,
             "diagonal coefficient (" + std::to_string(key.j) + "," + std::to_string(key.k) +
                 ") must be real");
      out.add_term(key.j, key.k, cplx(c.real(), 0.0));
      continue;
    }
    if (key.j < key.k) continue;  // handled from the (j > k) side
    auto mirror = raw.find({key.k, key.j});
    if (mirror == raw.end()) {
      out.add_term(key.j, key.k, c);
      out.add_term(key.k, key.j, std::conj(c));
    } else {
      const cplx m = mirror->second;
      if (std::abs(std::conj(c) - m) > kRealnessTol * (1.0 + std::abs(c) + std::abs(m)))
        fail(errc::hermitian_violation,
             "coefficients at (" + std::to_string(key.j) + "," + std::to_string(key.k) +
                 ") and its mirror are not conjugate");
      const cplx avg = 0.5 * (c + std::conj(m));
      out.add_term(key.j, key.k, avg);
      out.add_term(key.k, key.j, std::conj(avg));
    }
  }
  // a (j<k) term with no (j>k) mirror was skipped above; add it now
  for (const auto& [key, c] : raw) {
    if (key.j >= key.k) continue;
    if (raw.find({key.k, key.j}) == raw.end()) {
      out.add_term(key.j, key.k, c);
      out.add_term(key.k, key.j, std::conj(c));
    }
  }
  out.prune();
  return out;
}

}  // namespace

HermitianPoly HermitianPoly::from_terms(const std::vector<std::tuple<int, int, cplx>>& terms) {
  std::map<TermKey, cplx> raw;
  for (const auto& [j, k, c] : terms) {
    if (j < 0 || k < 0) fail(errc::bad_input, "negative exponent in term list");
    raw[{j, k}] += c;
  }
  HermitianPoly out;
  out.p_ = hermitian_close(raw);
  return out;
}

HermitianPoly HermitianPoly::from_bipoly(BiPoly p) {
  p.prune();
  HermitianPoly out;
  out.p_ = hermitian_close(p.terms());
  return out;
}

double HermitianPoly::eval(cplx z) const {
  const cplx v = p_.eval(z);
  if (std::abs(v.imag()) > kRealnessTol * (1.0 + std::abs(v)))
    fail(errc::realness_violation, "non-real value of a Hermitian polynomial");
  return v.real();
}

double HermitianPoly::derivative_cap(int l, cplx z) const {
  if (l < 2 || l > degree()) fail(errc::out_of_range, "cap order outside [2, degree]");
  double m = 0.0;
  for (int j = 1; j <= l - 1; ++j) {
    const int k = l - j;
    m = std::max(m, std::abs(p_.wirtinger(j, k).eval(z)));
  }
  return m;
}

double HermitianPoly::coefficient_cap(int l) const {
  if (l < 2 || l > degree()) fail(errc::out_of_range, "cap order outside [2, degree]");
  double m = 0.0;
  for (const auto& [key, c] : p_.terms())
    if (key.j >= 1 && key.k >= 1 && key.j + key.k == l) m = std::max(m, std::abs(c));
  return m;
}

HermitianPoly HermitianPoly::homogeneous_part(int total) const {
  HermitianPoly out;
  out.p_ = p_.homogeneous_part(total);
  return out;
}

bool HermitianPoly::has_harmonic_terms() const {
  for (const auto& [key, c] : p_.terms())
    if ((key.j == 0) != (key.k == 0)) return true;
  return false;
}

bool HermitianPoly::has_constant_term() const {
  return p_.terms().contains({0, 0});
}

HermitianPoly HermitianPoly::dilate(double lambda) const {
  HermitianPoly out;
  out.p_ = p_.dilate(lambda);
  return out;
}

HermitianPoly HermitianPoly::scaled(double s) const {
  HermitianPoly out;
  out.p_ = p_ * cplx(s, 0.0);
  return out;
}

HermitianPoly HermitianPoly::plus(const HermitianPoly& o) const {
  HermitianPoly out;
  out.p_ = p_ + o.p_;
  return out;
}

RecenterResult HermitianPoly::recenter(cplx xi) const {
  const int d = degree();
  // Pascal triangle; degrees stay far below the 2^53 exactness limit.
  std::vector<std::vector<double>> binom(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1.0);
    for (int r = 1; r < n; ++r)
      binom[static_cast<size_t>(n)][static_cast<size_t>(r)] =
          binom[static_cast<size_t>(n) - 1][static_cast<size_t>(r) - 1] +
          binom[static_cast<size_t>(n) - 1][static_cast<size_t>(r)];
  }
  std::vector<cplx> xp(static_cast<size_t>(d) + 1), xc(static_cast<size_t>(d) + 1);
  xp[0] = xc[0] = 1.0;
  for (int i = 1; i <= d; ++i) {
    xp[static_cast<size_t>(i)] = xp[static_cast<size_t>(i) - 1] * xi;
    xc[static_cast<size_t>(i)] = xc[static_cast<size_t>(i) - 1] * std::conj(xi);
  }

  // coefficient of w^a conj(w)^b in P(xi + w)
  std::map<TermKey, cplx> shifted;
  for (const auto& [key, c] : p_.terms()) {
    for (int a = 0; a <= key.j; ++a) {
      for (int b = 0; b <= key.k; ++b) {
        const cplx contrib = c * binom[static_cast<size_t>(key.j)][static_cast<size_t>(a)] *
                             binom[static_cast<size_t>(key.k)][static_cast<size_t>(b)] *
                             xp[static_cast<size_t>(key.j - a)] *
                             xc[static_cast<size_t>(key.k - b)];
        shifted[{a, b}] += contrib;
      }
    }
  }

  RecenterResult res;
  BiPoly centered;
  std::map<int, cplx> holo;
  for (const auto& [key, c] : shifted) {
    if (std::abs(c) < kCoeffPruneTol) continue;
    if (key.j == 0 && key.k == 0) {
      res.constant = c.real();
    } else if (key.k == 0) {
      holo[key.j] += c;
    } else if (key.j == 0) {
      // conjugate block; Hermitian symmetry makes it redundant with holo
      continue;
    } else {
      centered.add_term(key.j, key.k, c);
    }
  }
  int max_j = holo.empty() ? 0 : holo.rbegin()->first;
  res.holo_coeffs.assign(static_cast<size_t>(max_j), cplx{0.0, 0.0});
  for (const auto& [j, c] : holo) res.holo_coeffs[static_cast<size_t>(j) - 1] = c;
  centered.prune();
  res.centered = from_bipoly(centered);
  return res;
}

SubharmonicityReport subharmonicity_report(const HermitianPoly& P, double box_radius,
                                           int samples) {
  if (samples < 1) fail(errc::bad_input, "samples must be >= 1");
  if (box_radius <= 0) fail(errc::bad_input, "box_radius must be positive");
  const BiPoly lap_quarter = P.wirtinger(1, 1);  // Laplacian = 4 * d dbar P
  SubharmonicityReport rep;
  double mn = 4.0 * lap_quarter.eval({0.0, 0.0}).real();
  double mx_abs = std::abs(mn);
  int count = 1;
  const int n_theta = 2 * samples;
  for (int i = 1; i <= samples; ++i) {
    const double r = box_radius * static_cast<double>(i) / samples;
    for (int m = 0; m < n_theta; ++m) {
      const double th = 2.0 * std::numbers::pi * m / n_theta;
      const cplx z = std::polar(r, th);
      const double v = 4.0 * lap_quarter.eval(z).real();
      mn = std::min(mn, v);
      mx_abs = std::max(mx_abs, std::abs(v));
      ++count;
    }
  }
  rep.min_laplacian = mn;
  rep.grid_points = count;
  rep.pass = mn >= -1e-10 * (1.0 + mx_abs);
  return rep;
}

}  // namespace corank1
