#include "corank1/catlin_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace corank1 {

double catlin_metric(const ModelDomain& D, const Point& z, const Tangent& X) {
  if (X.dim() != D.ambient_dim()) fail(errc::dimension_mismatch, "vector dimension mismatch");
  const double r = D.defining_value(z);
  if (r >= 0.0) fail(errc::point_not_interior, "metric requested at a non-interior point");
  const double ar = -r;
  const cplx z1 = z[1];

  cplx b0 = X[0] + 2.0 * D.dP().eval(z1) * X[1];
  for (int a = 2; a < D.ambient_dim(); ++a)
    b0 += 2.0 * X[static_cast<size_t>(a)] * std::conj(z[static_cast<size_t>(a)]);
  double value = std::abs(b0) / ar;

  const double ax1 = std::abs(X[1]);
  if (ax1 > 0.0) {
    for (int l = 2; l <= D.poly().degree(); ++l) {
      const double cap = D.derivative_cap(l, z1);
      if (cap > 0.0) value += ax1 * std::pow(cap / ar, 1.0 / l);
    }
  }
  const double sq = std::sqrt(ar);
  for (int a = 2; a < D.ambient_dim(); ++a) value += std::abs(X[static_cast<size_t>(a)]) / sq;
  return value;
}

double log_ratio_lower_bound(const ModelDomain& D, const Point& p, const Point& q) {
  const double rp = D.defining_value(p);
  const double rq = D.defining_value(q);
  if (rp >= 0.0 || rq >= 0.0) fail(errc::point_not_interior, "points must be interior");
  return std::abs(std::log(rp / rq));
}

namespace {

// Certified minorant of inf over paths from u0 to u1 (radii in the z1 plane)
// of the integral of A_l(z1)^(1/l) |dz1|.  Uses the radial projection: any
// path sweeps all radii in between, so it suffices to integrate a certified
// lower bound of min_{|z|=u} A_l(z)^(1/l) over u.  Circle minima are
// certified by dense angular sampling with a coefficient-norm Lipschitz
// correction.
double radial_crossing_minorant(const ModelDomain& D, int l, double u0, double u1) {
  if (u1 < u0) std::swap(u0, u1);
  if (u1 - u0 < 1e-15) return 0.0;
  const auto& derivs = D.cap_derivatives(l);
  constexpr int kPanels = 48;
  constexpr int kAngles = 48;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double ua = u0 + (u1 - u0) * p / kPanels;
    const double ub = u0 + (u1 - u0) * (p + 1) / kPanels;
    // certified lower bound of A_l on the closed annulus [ua, ub]
    double cap_lo = 0.0;
    for (const BiPoly& q : derivs) {
      double sample_min = std::numeric_limits<double>::infinity();
      for (double u : {ua, 0.5 * (ua + ub), ub}) {
        for (int m = 0; m < kAngles; ++m) {
          const double th = 2.0 * std::numbers::pi * m / kAngles;
          sample_min = std::min(sample_min, std::abs(q.eval(std::polar(u, th))));
        }
      }
      // farthest sample distance inside the annulus: half an angular step
      // plus a quarter of the radial panel
      const double grad = q.gradient_bound(ub);
      const double slack = grad * (ub * std::numbers::pi / kAngles + 0.25 * (ub - ua));
      cap_lo = std::max(cap_lo, sample_min - slack);
    }
    if (cap_lo > 0.0) total += std::pow(cap_lo, 1.0 / l) * (ub - ua);
  }
  return total;
}

struct CrossingProfile {
  std::vector<double> weights;  // W_l minorants, index 0 <-> l = 2
  double s_min_endpoint = 0.0;  // min(s_p, s_q)
  double vertical_base = 0.0;   // |s_p - s_q|

  bool trivial() const {
    for (double w : weights)
      if (w > 0.0) return false;
    return true;
  }
  double cross_cost(double s) const {
    double c = 0.0;
    for (size_t i = 0; i < weights.size(); ++i)
      c += weights[i] * std::exp(s / static_cast<double>(i + 2));
    return c;
  }
  double cross_cost_slope(double s) const {
    double c = 0.0;
    for (size_t i = 0; i < weights.size(); ++i)
      c += weights[i] / static_cast<double>(i + 2) * std::exp(s / static_cast<double>(i + 2));
    return c;
  }
};

CrossingProfile crossing_profile(const ModelDomain& D, const Point& p, const Point& q) {
  const double rp = D.defining_value(p);
  const double rq = D.defining_value(q);
  if (rp >= 0.0 || rq >= 0.0) fail(errc::point_not_interior, "points must be interior");
  CrossingProfile prof;
  const double sp = -std::log(-rp);
  const double sq = -std::log(-rq);
  prof.s_min_endpoint = std::min(sp, sq);
  prof.vertical_base = std::abs(sp - sq);
  const double u0 = std::abs(p[1]);
  const double u1 = std::abs(q[1]);
  for (int l = 2; l <= D.poly().degree(); ++l)
    prof.weights.push_back(radial_crossing_minorant(D, l, u0, u1));
  return prof;
}

// Minimizes g(s) = s_p + s_q - 2s + cross(s) over s <= min(s_p, s_q).
// cross is convex increasing, so bisection on g'(s) = -2 + cross'(s).
double optimal_level(const CrossingProfile& prof) {
  double hi = prof.s_min_endpoint;
  if (prof.trivial() || prof.cross_cost_slope(hi) <= 2.0) return hi;
  double lo = hi - 8.0;
  while (prof.cross_cost_slope(lo) > 2.0 && lo > hi - 400.0) lo -= 8.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (prof.cross_cost_slope(mid) > 2.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double distance_lower_bound(const ModelDomain& D, const Point& p, const Point& q) {
  if (p.dim() != D.ambient_dim() || q.dim() != D.ambient_dim())
    fail(errc::dimension_mismatch, "point dimension mismatch");
  if (p == q) return 0.0;
  const CrossingProfile prof = crossing_profile(D, p, q);
  if (prof.trivial()) return prof.vertical_base;
  const double sp_plus_sq = prof.vertical_base + 2.0 * prof.s_min_endpoint;
  const double s_star = optimal_level(prof);
  const double bound = sp_plus_sq - 2.0 * s_star + prof.cross_cost(s_star);
  return std::max(prof.vertical_base, bound);
}

double optimal_crossing_level(const ModelDomain& D, const Point& p, const Point& q) {
  return optimal_level(crossing_profile(D, p, q));
}

namespace {

// First positive root of the real polynomial f along a ray, approached from
// below by Lipschitz-safe steps: with |f'| <= L on [0,B], a step of
// (-f)/L never crosses a zero, so the returned value never exceeds the true
// first root (the conservative side for an upper metric bound).  Returns
// +inf when no root is found below rho_max.
double first_crossing(const std::vector<double>& coeffs, double rho_max) {
  auto eval = [&](double t) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
  };
  auto lipschitz = [&](double B) {
    double lip = 0.0;
    for (size_t m = 1; m < coeffs.size(); ++m)
      lip += static_cast<double>(m) * std::abs(coeffs[m]) *
             std::pow(B, static_cast<double>(m - 1));
    return lip;
  };
  if (eval(0.0) >= 0.0) return 0.0;
  double rho = 0.0;
  // block-local bound: keeping B near rho keeps the step ratio close to the
  // local slope, so convergence stays geometric even for small roots
  double block = 1e-6;
  for (int outer = 0; outer < 600; ++outer) {
    if (block > 2.0 * rho_max) return std::numeric_limits<double>::infinity();
    const double lip = lipschitz(block);
    if (lip <= 0.0) return std::numeric_limits<double>::infinity();  // constant, negative
    int it = 0;
    for (; it < 3000; ++it) {
      const double v = eval(rho);
      if (v >= 0.0) return rho;  // f < 0 strictly before rho, so this is the root
      const double step = -v / lip;
      if (step < 1e-16 * (1.0 + rho)) return rho;  // converged onto the root from below
      if (rho + step >= block) {
        rho = block;
        break;
      }
      rho += step;
      if (rho > 0.6 * block) break;  // retighten the bound around the march
    }
    if (it >= 3000) return rho;  // iteration cap; still an under-approximation
    block = std::max(2.0 * rho, 1.0000001 * block);
  }
  return rho > 0.0 ? rho : std::numeric_limits<double>::infinity();
}

}  // namespace

double disc_upper_bound(const ModelDomain& D, const Point& z, const Tangent& X,
                        int angle_samples) {
  if (X.dim() != D.ambient_dim()) fail(errc::dimension_mismatch, "vector dimension mismatch");
  if (X.is_zero()) fail(errc::zero_vector, "disc direction must be nonzero");
  if (D.defining_value(z) >= 0.0) fail(errc::point_not_interior, "disc center must be interior");
  if (angle_samples < 1) fail(errc::bad_input, "angle_samples must be >= 1");

  const int deg = D.poly().degree();
  // Taylor data of P at z1, shared across angles: deriv[a][b] = d^a dbar^b P / (a! b!)
  std::vector<std::vector<cplx>> taylor(static_cast<size_t>(deg) + 1);
  {
    double fact_a = 1.0;
    for (int a = 0; a <= deg; ++a) {
      if (a > 1) fact_a *= a;
      double fact_b = 1.0;
      for (int b = 0; a + b <= deg; ++b) {
        if (b > 1) fact_b *= b;
        taylor[static_cast<size_t>(a)].push_back(D.poly().wirtinger(a, b).eval(z[1]) /
                                                 (fact_a * fact_b));
      }
    }
  }
  double R = std::numeric_limits<double>::infinity();
  for (int m = 0; m < angle_samples; ++m) {
    const double th = 2.0 * std::numbers::pi * m / angle_samples;
    const cplx w = std::polar(1.0, th);
    // r(z + t w X) as a real polynomial in t >= 0
    std::vector<double> coeffs(static_cast<size_t>(std::max(deg, 2)) + 1, 0.0);
    coeffs[0] += z[0].real();
    if (std::abs(X[0]) > 0.0) coeffs[1] += (w * X[0]).real();
    // P(z1 + t w x1), expanded in (t w x1, conj(...))
    const cplx w1 = w * X[1];
    const cplx w1c = std::conj(w1);
    for (int a = 0; a <= deg; ++a) {
      for (int b = 0; a + b <= deg; ++b) {
        const cplx term = taylor[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                          std::pow(w1, a) * std::pow(w1c, b);
        coeffs[static_cast<size_t>(a + b)] += term.real();
      }
    }
    for (int al = 2; al < D.ambient_dim(); ++al) {
      const cplx za = z[static_cast<size_t>(al)];
      const cplx xa = w * X[static_cast<size_t>(al)];
      coeffs[0] += std::norm(za);
      coeffs[1] += 2.0 * (std::conj(za) * xa).real();
      coeffs[2] += std::norm(xa);
    }
    R = std::min(R, first_crossing(coeffs, 1e9));
  }
  if (!std::isfinite(R)) return 0.0;
  return 1.0 / R;
}

MetricComparisonReport metric_sup_error(const ModelDomain& Da, const ModelDomain& Db,
                                        const Box& box, int grid, int directions,
                                        int workers, unsigned long long seed) {
  if (Da.ambient_dim() != Db.ambient_dim())
    fail(errc::dimension_mismatch, "domains have different ambient dimensions");
  if (directions < 1) fail(errc::bad_input, "directions must be >= 1");
  const int dim = Da.ambient_dim();

  std::vector<Point> pts;
  for (Point& p : box_grid(box, grid))
    if (Da.contains(p) && Db.contains(p)) pts.push_back(std::move(p));
  if (pts.empty())
    fail(errc::empty_intersection, "no grid point is interior to both domains");

  std::vector<Tangent> dirs;
  for (int i = 0; i < dim && static_cast<int>(dirs.size()) < directions; ++i) {
    Tangent e;
    e.x.assign(static_cast<size_t>(dim), {0.0, 0.0});
    e[static_cast<size_t>(i)] = {1.0, 0.0};
    dirs.push_back(e);
    if (static_cast<int>(dirs.size()) < directions) {
      e[static_cast<size_t>(i)] = {0.0, 1.0};
      dirs.push_back(e);
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(dirs.size()) < directions) {
    Tangent v;
    v.x.resize(static_cast<size_t>(dim));
    for (cplx& c : v.x) c = {gauss(rng), gauss(rng)};
    const double n = v.norm();
    if (n < 1e-8) continue;
    for (cplx& c : v.x) c /= n;
    dirs.push_back(std::move(v));
  }

  auto chunk_max = [&](size_t lo, size_t hi) {
    double m = 0.0;
    for (size_t i = lo; i < hi; ++i)
      for (const Tangent& X : dirs)
        m = std::max(m, std::abs(catlin_metric(Da, pts[i], X) - catlin_metric(Db, pts[i], X)));
    return m;
  };

  double sup = 0.0;
  if (workers <= 1 || pts.size() < 64) {
    sup = chunk_max(0, pts.size());
  } else {
    const size_t n_threads = std::min<size_t>(static_cast<size_t>(workers), pts.size());
    std::vector<double> partial(n_threads, 0.0);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n_threads; ++t) {
      const size_t lo = pts.size() * t / n_threads;
      const size_t hi = pts.size() * (t + 1) / n_threads;
      pool.emplace_back([&, t, lo, hi] { partial[t] = chunk_max(lo, hi); });
    }
    for (auto& th : pool) th.join();
    sup = *std::max_element(partial.begin(), partial.end());
  }

  MetricComparisonReport rep;
  rep.sup_abs_error = sup;
  rep.grid_points = static_cast<long>(pts.size());
  rep.directions = directions;
  std::ostringstream os;
  os << "grid=" << grid << " per coord, radii";
  for (double r : box.radii) os << ' ' << r;
  rep.box_note = os.str();
  return rep;
}

}  // namespace corank1
