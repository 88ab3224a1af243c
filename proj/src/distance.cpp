#include "corank1/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>

#include "corank1/catlin_metric.hpp"

namespace corank1 {

const char* distance_method_name(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::graph: return "graph";
    case DistanceMethod::variational: return "variational";
    case DistanceMethod::composite: return "composite";
  }
  return "?";
}

namespace {

double log_depth(const ModelDomain& D, const Point& p) {
  const double r = D.defining_value(p);
  if (r >= 0.0) fail(errc::point_not_interior, "point must be interior");
  return -std::log(-r);
}

// Interior point from transformed coordinates: the graph structure makes
// Re z0 a function of the log-depth s and the slice, so every node is
// interior by construction.
Point from_transformed(const ModelDomain& D, double s, double im0,
                       const std::vector<double>& tail_reim) {
  const int d = D.d();
  std::vector<cplx> tail(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    tail[static_cast<size_t>(i)] = {tail_reim[static_cast<size_t>(2 * i)],
                                    tail_reim[static_cast<size_t>(2 * i + 1)]};
  double re0 = -std::exp(-s) - D.poly().eval(tail[0]);
  for (int a = 1; a < d; ++a) re0 -= std::norm(tail[static_cast<size_t>(a)]);
  Point p;
  p.z.reserve(static_cast<size_t>(d) + 1);
  p.z.emplace_back(re0, im0);
  p.z.insert(p.z.end(), tail.begin(), tail.end());
  return p;
}

std::vector<double> to_transformed(const ModelDomain& D, const Point& p) {
  std::vector<double> out;
  out.push_back(log_depth(D, p));
  out.push_back(p[0].imag());
  for (int i = 1; i < p.dim(); ++i) {
    out.push_back(p[static_cast<size_t>(i)].real());
    out.push_back(p[static_cast<size_t>(i)].imag());
  }
  return out;
}

double cheap_segment(const ModelDomain& D, const Point& a, const Point& b) {
  // fixed-order Simpson, no refinement: used for search; final answers are
  // re-measured with segment_length
  Tangent dir = b - a;
  if (dir.is_zero()) return 0.0;
  const int n = 8;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    Point p = a;
    const double u = static_cast<double>(i) / n;
    for (size_t k = 0; k < p.z.size(); ++k) p.z[k] += u * dir.x[k];
    acc += catlin_metric(D, p, dir) * (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  return acc / (3.0 * n);
}

double cheap_curve_length(const ModelDomain& D, const CurvePath& c) {
  double len = 0.0;
  for (size_t i = 0; i + 1 < c.points.size(); ++i)
    len += cheap_segment(D, c.points[i], c.points[i + 1]);
  return len;
}

}  // namespace

DistanceEstimate distance_graph(const ModelDomain& D, const Point& p, const Point& q,
                                const Box& box, const GraphSpacing& spacing) {
  if (p.dim() != D.ambient_dim() || q.dim() != D.ambient_dim())
    fail(errc::dimension_mismatch, "point dimension mismatch");
  const int n_tail_dims = 2 * D.d() + 1;  // Im z0 plus re/im per tail coordinate
  const int n_dims = n_tail_dims + 1;     // plus log-depth

  if (p == q) {
    DistanceEstimate est;
    est.method = DistanceMethod::graph;
    est.lower = est.upper = 0.0;
    est.witness.params = {0.0, 1.0};
    est.witness.points = {p, q};
    if (!D.contains(p)) fail(errc::point_not_interior, "endpoints must be interior");
    return est;
  }

  const std::vector<double> tp = to_transformed(D, p);
  const std::vector<double> tq = to_transformed(D, q);

  // Anchor the lattice on p; adjust steps per dimension so q lands on a node
  // (coordinates that already agree to 1e-6 are treated as shared).
  std::vector<double> step(static_cast<size_t>(n_dims), spacing.h0);
  std::vector<int> lo(static_cast<size_t>(n_dims)), hi(static_cast<size_t>(n_dims));
  for (int dmi = 0; dmi < n_dims; ++dmi) {
    const double delta = tq[static_cast<size_t>(dmi)] - tp[static_cast<size_t>(dmi)];
    int q_cell = 0;
    if (std::abs(delta) > 1e-6) {
      const int cells = std::max(1, static_cast<int>(std::lround(std::abs(delta) / spacing.h0)));
      step[static_cast<size_t>(dmi)] = std::abs(delta) / cells;
      q_cell = delta >= 0 ? cells : -cells;
    }
    lo[static_cast<size_t>(dmi)] = std::min(0, q_cell);
    hi[static_cast<size_t>(dmi)] = std::max(0, q_cell);
  }
  // depth: allow descending below both endpoints
  lo[0] -= std::max(1, static_cast<int>(std::ceil(spacing.depth_margin / step[0])));
  // lateral slack of a few cells on the non-depth dimensions, clipped to the box
  for (int dmi = 1; dmi < n_dims; ++dmi) {
    const int coord = dmi / 2;  // box coordinate: 0 for Im z0, i for tail i
    const double radius = box.radii[static_cast<size_t>(coord)];
    const double center = dmi == 1 ? box.center[0].imag()
                          : (dmi % 2 == 0 ? box.center[static_cast<size_t>(coord)].real()
                                          : box.center[static_cast<size_t>(coord)].imag());
    const double anchor = tp[static_cast<size_t>(dmi)];
    if (std::abs(anchor - center) > radius + 1e-9 ||
        std::abs(tq[static_cast<size_t>(dmi)] - center) > radius + 1e-9)
      fail(errc::bad_input, "endpoints must lie inside the graph box");
    const double h = step[static_cast<size_t>(dmi)];
    for (int slack = 0; slack < 3; ++slack) {
      if (anchor + (lo[static_cast<size_t>(dmi)] - 1) * h >= center - radius)
        --lo[static_cast<size_t>(dmi)];
      if (anchor + (hi[static_cast<size_t>(dmi)] + 1) * h <= center + radius)
        ++hi[static_cast<size_t>(dmi)];
    }
  }

  std::vector<int> extent(static_cast<size_t>(n_dims));
  long long total = 1;
  for (int dmi = 0; dmi < n_dims; ++dmi) {
    extent[static_cast<size_t>(dmi)] = hi[static_cast<size_t>(dmi)] - lo[static_cast<size_t>(dmi)] + 1;
    total *= extent[static_cast<size_t>(dmi)];
    if (total > spacing.node_cap)
      fail(errc::bad_input, "graph lattice exceeds the node cap; coarsen h0 or shrink the box");
  }

  auto cell_to_index = [&](const std::vector<int>& cell) {
    long long idx = 0;
    for (int dmi = 0; dmi < n_dims; ++dmi)
      idx = idx * extent[static_cast<size_t>(dmi)] +
            (cell[static_cast<size_t>(dmi)] - lo[static_cast<size_t>(dmi)]);
    return idx;
  };
  auto index_to_cell = [&](long long idx) {
    std::vector<int> cell(static_cast<size_t>(n_dims));
    for (int dmi = n_dims - 1; dmi >= 0; --dmi) {
      cell[static_cast<size_t>(dmi)] =
          lo[static_cast<size_t>(dmi)] + static_cast<int>(idx % extent[static_cast<size_t>(dmi)]);
      idx /= extent[static_cast<size_t>(dmi)];
    }
    return cell;
  };
  auto cell_point = [&](const std::vector<int>& cell) {
    const double s = tp[0] + cell[0] * step[0];
    const double im0 = tp[1] + cell[1] * step[1];
    std::vector<double> tail(static_cast<size_t>(n_tail_dims) - 1);
    for (size_t i = 0; i < tail.size(); ++i)
      tail[i] = tp[i + 2] + cell[i + 2] * step[i + 2];
    return from_transformed(D, s, im0, tail);
  };

  const long long start = cell_to_index(std::vector<int>(static_cast<size_t>(n_dims), 0));
  std::vector<int> q_cell(static_cast<size_t>(n_dims));
  for (int dmi = 0; dmi < n_dims; ++dmi) {
    const double delta = tq[static_cast<size_t>(dmi)] - tp[static_cast<size_t>(dmi)];
    q_cell[static_cast<size_t>(dmi)] =
        std::abs(delta) > 1e-12 ? static_cast<int>(std::lround(delta / step[static_cast<size_t>(dmi)])) : 0;
  }
  const long long goal = cell_to_index(q_cell);

  // Dijkstra with lazy edge weights; ties broken by node index.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<size_t>(total), inf);
  std::vector<long long> prev(static_cast<size_t>(total), -1);
  using QE = std::pair<double, long long>;
  std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
  dist[static_cast<size_t>(start)] = 0.0;
  pq.push({0.0, start});
  std::vector<int> offsets_scratch;
  while (!pq.empty()) {
    const auto [du, u] = pq.top();
    pq.pop();
    if (du > dist[static_cast<size_t>(u)]) continue;
    if (u == goal) break;
    const std::vector<int> cell = index_to_cell(u);
    const Point pu = cell_point(cell);
    // enumerate {-1,0,1}^n_dims offsets
    std::vector<int> off(static_cast<size_t>(n_dims), -1);
    while (true) {
      bool all_zero = true;
      bool in_range = true;
      std::vector<int> nb(static_cast<size_t>(n_dims));
      for (int dmi = 0; dmi < n_dims; ++dmi) {
        if (off[static_cast<size_t>(dmi)] != 0) all_zero = false;
        nb[static_cast<size_t>(dmi)] = cell[static_cast<size_t>(dmi)] + off[static_cast<size_t>(dmi)];
        if (nb[static_cast<size_t>(dmi)] < lo[static_cast<size_t>(dmi)] ||
            nb[static_cast<size_t>(dmi)] > hi[static_cast<size_t>(dmi)])
          in_range = false;
      }
      if (!all_zero && in_range) {
        const long long v = cell_to_index(nb);
        double w = std::numeric_limits<double>::infinity();
        try {
          w = cheap_segment(D, pu, cell_point(nb));
        } catch (const Error&) {
          // straight edge leaves the domain between lattice nodes; skip it
        }
        const double cand = du + w;
        if (std::isfinite(cand) &&
            (cand < dist[static_cast<size_t>(v)] ||
             (cand == dist[static_cast<size_t>(v)] && u < prev[static_cast<size_t>(v)]))) {
          dist[static_cast<size_t>(v)] = cand;
          prev[static_cast<size_t>(v)] = u;
          pq.push({cand, v});
        }
      }
      int carry = n_dims - 1;
      while (carry >= 0 && ++off[static_cast<size_t>(carry)] > 1) {
        off[static_cast<size_t>(carry)] = -1;
        --carry;
      }
      if (carry < 0) break;
    }
  }
  if (!std::isfinite(dist[static_cast<size_t>(goal)]))
    fail(errc::disconnected, "endpoints fall in different lattice components");

  CurvePath path;
  for (long long v = goal; v != -1; v = prev[static_cast<size_t>(v)]) {
    path.points.push_back(cell_point(index_to_cell(v)));
    if (v == start) break;
  }
  std::reverse(path.points.begin(), path.points.end());
  // endpoints are lattice-exact up to rounding; pin them bit-exactly
  path.points.front() = p;
  path.points.back() = q;
  path.params.resize(path.points.size());
  for (size_t i = 0; i < path.params.size(); ++i)
    path.params[i] = path.points.size() == 1 ? 0.0 : static_cast<double>(i) / (path.points.size() - 1);

  DistanceEstimate est;
  est.method = DistanceMethod::graph;
  est.lower = distance_lower_bound(D, p, q);
  est.witness = std::move(path);
  est.upper = curve_length(D, est.witness, 8);
  return est;
}

namespace {

// Local objective for one control point: the two adjacent segment lengths.
double local_length(const ModelDomain& D, const CurvePath& c, size_t i) {
  double len = 0.0;
  if (i > 0) len += cheap_segment(D, c.points[i - 1], c.points[i]);
  if (i + 1 < c.points.size()) len += cheap_segment(D, c.points[i], c.points[i + 1]);
  return len;
}

// One gradient step with backtracking on the local objective; assumes `base`
// holds local_length at the current position.
bool gradient_step(const ModelDomain& D, CurvePath& c, size_t i, double& step_scale,
                   double base) {
  const Point saved = c.points[i];
  const int dims = 2 * c.points[i].dim();
  const double fd = 1e-6 * (1.0 + std::abs(saved[0].real()));
  std::vector<double> grad(static_cast<size_t>(dims), 0.0);
  double gnorm = 0.0;
  for (int k = 0; k < dims; ++k) {
    auto nudge = [&](double h) {
      Point& pt = c.points[i];
      cplx& coord = pt.z[static_cast<size_t>(k / 2)];
      coord += (k % 2 == 0) ? cplx(h, 0.0) : cplx(0.0, h);
    };
    double plus, minus;
    try {
      nudge(fd);
      plus = local_length(D, c, i);
      nudge(-2.0 * fd);
      minus = local_length(D, c, i);
      c.points[i] = saved;
    } catch (const Error&) {
      c.points[i] = saved;
      return false;  // finite differencing hit the boundary; leave the point alone
    }
    grad[static_cast<size_t>(k)] = (plus - minus) / (2.0 * fd);
    gnorm += grad[static_cast<size_t>(k)] * grad[static_cast<size_t>(k)];
  }
  gnorm = std::sqrt(gnorm);
  if (gnorm < 1e-14) return false;

  for (int attempt = 0; attempt < 12; ++attempt) {
    Point trial = saved;
    for (int k = 0; k < dims; ++k) {
      const double delta = -step_scale * grad[static_cast<size_t>(k)] / gnorm;
      trial.z[static_cast<size_t>(k / 2)] += (k % 2 == 0) ? cplx(delta, 0.0) : cplx(0.0, delta);
    }
    if (D.defining_value(trial) >= 0.0) {
      step_scale *= 0.5;
      continue;
    }
    c.points[i] = trial;
    double cand;
    try {
      cand = local_length(D, c, i);
    } catch (const Error&) {
      c.points[i] = saved;
      step_scale *= 0.5;
      continue;
    }
    if (cand < base) {
      step_scale *= 1.4;
      return true;
    }
    c.points[i] = saved;
    step_scale *= 0.5;
  }
  return false;
}

// Respacing by (cheap) arc length: new vertices lie on the old polyline, so
// interiority is preserved.  In the descent loop the result is accepted only
// when it does not lengthen the curve, keeping the sweep monotone.
CurvePath respace_by_length_impl(const ModelDomain& D, const CurvePath& c, int samples) {
  const size_t n = c.points.size();
  std::vector<double> cum(n, 0.0);
  for (size_t i = 1; i < n; ++i)
    cum[i] = cum[i - 1] + cheap_segment(D, c.points[i - 1], c.points[i]);
  const double total = cum.back();
  CurvePath out;
  out.params.resize(static_cast<size_t>(samples));
  out.points.resize(static_cast<size_t>(samples));
  out.points.front() = c.points.front();
  out.points.back() = c.points.back();
  for (int i = 0; i < samples; ++i)
    out.params[static_cast<size_t>(i)] = static_cast<double>(i) / (samples - 1);
  if (total <= 0.0) {
    for (int i = 1; i + 1 < samples; ++i) out.points[static_cast<size_t>(i)] = c.points.front();
    return out;
  }
  size_t seg = 0;
  for (int i = 1; i + 1 < samples; ++i) {
    const double target = total * static_cast<double>(i) / (samples - 1);
    while (seg + 2 < n && cum[seg + 1] < target) ++seg;
    const double span = cum[seg + 1] - cum[seg];
    const double u = span > 0.0 ? (target - cum[seg]) / span : 0.0;
    Point p;
    p.z.resize(c.points[seg].z.size());
    for (size_t k = 0; k < p.z.size(); ++k)
      p.z[k] = c.points[seg][k] + u * (c.points[seg + 1][k] - c.points[seg][k]);
    out.points[static_cast<size_t>(i)] = std::move(p);
  }
  return out;
}

bool descend_point(const ModelDomain& D, CurvePath& c, size_t i, double& step_scale) {
  double base;
  try {
    base = local_length(D, c, i);
  } catch (const Error&) {
    return false;
  }
  bool improved = false;
  // midpoint relaxation first: the pure coordinate-gradient sweep can lock
  // into a zigzag plateau, and chord smoothing breaks it cheaply
  if (i > 0 && i + 1 < c.points.size()) {
    const Point saved = c.points[i];
    Point mid;
    mid.z.resize(saved.z.size());
    for (size_t k = 0; k < mid.z.size(); ++k)
      mid.z[k] = 0.5 * (c.points[i - 1][k] + c.points[i + 1][k]);
    if (D.defining_value(mid) < 0.0) {
      c.points[i] = mid;
      double relaxed = base;
      try {
        relaxed = local_length(D, c, i);
      } catch (const Error&) {
        relaxed = base;
      }
      if (relaxed < base) {
        base = relaxed;
        improved = true;
      } else {
        c.points[i] = saved;
      }
    }
  }
  return gradient_step(D, c, i, step_scale, base) || improved;
}

}  // namespace

DistanceEstimate distance_variational(const ModelDomain& D, const Point& p, const Point& q,
                                      CurvePath init, int iterations,
                                      const DistanceOptions& opts) {
  init.validate();
  if (!(init.points.front() == p) || !(init.points.back() == q))
    fail(errc::bad_input, "init curve must connect p to q");
  double current = cheap_curve_length(D, init);  // throws curve_exits_domain if init invalid

  std::vector<double> steps(init.points.size(), 0.05);
  for (int sweep = 0; sweep < iterations; ++sweep) {
    for (size_t i = 1; i + 1 < init.points.size(); ++i) descend_point(D, init, i, steps[i]);
    if ((sweep + 1) % 6 == 0) {
      try {
        CurvePath respaced = arc_length_respace(D, init);
        if (cheap_curve_length(D, respaced) <= cheap_curve_length(D, init))
          init = std::move(respaced);
      } catch (const Error&) {
        // respaced polyline grazed the boundary; keep the current one
      }
    }
    const double after = cheap_curve_length(D, init);
    if (current - after < opts.improve_tol * std::max(current, 1e-12)) {
      current = std::min(current, after);
      break;
    }
    current = after;
  }

  DistanceEstimate est;
  est.method = DistanceMethod::variational;
  est.lower = distance_lower_bound(D, p, q);
  est.witness = std::move(init);
  est.upper = curve_length(D, est.witness, opts.quadrature_order);
  return est;
}

namespace {

CurvePath straight_seed(const Point& p, const Point& q, int samples) {
  CurvePath c;
  c.params.resize(static_cast<size_t>(samples));
  c.points.resize(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double u = static_cast<double>(i) / (samples - 1);
    Point pt;
    pt.z.resize(p.z.size());
    for (size_t k = 0; k < p.z.size(); ++k) pt.z[k] = p[k] + u * (q[k] - p[k]);
    c.params[static_cast<size_t>(i)] = u;
    c.points[static_cast<size_t>(i)] = std::move(pt);
  }
  c.points.front() = p;
  c.points.back() = q;  // p + 1.0*(q - p) is not bit-exactly q
  return c;
}

// Down-across-up seed through the crossing level s (log-depth): normal
// geodesic legs at both ends, and a crossing that follows the straight slice
// path at constant depth (Re z0 solves r = const exactly; Im z0 linear).
// Built as one sample list so junctions are consistent by construction.
CurvePath composite_seed(const ModelDomain& D, const Point& p, const Point& q, double s,
                         int samples) {
  const double rp = D.defining_value(p);
  const double rq = D.defining_value(q);
  const double sp = -std::log(-rp);
  const double sq = -std::log(-rq);
  s = std::min(s, std::min(sp, sq));
  const int leg = std::max(4, samples / 3);

  std::vector<Point> pts;
  // descend from p along its normal geodesic (tails and Im z0 fixed)
  {
    const int n = std::max(2, static_cast<int>(std::lround(
                                  leg * std::min(1.0, (sp - s) / 4.0 + 0.25))));
    for (int i = 0; i < n; ++i) {
      const double si = sp + (s - sp) * i / (n - 1);
      Point pt = p;
      pt.z[0] = cplx(p[0].real() + std::exp(-sp) - std::exp(-si), p[0].imag());
      pts.push_back(std::move(pt));
    }
  }
  // cross at the reached level: tails straight toward q, Re z0 from the graph
  // formula at the actual level of the descent endpoint, Im z0 linear
  const double level = D.defining_value(pts.back());
  {
    const Point a = pts.back();
    const int n = std::max(3, leg);
    for (int i = 1; i < n; ++i) {
      const double u = static_cast<double>(i) / (n - 1);
      std::vector<cplx> tail(static_cast<size_t>(D.d()));
      for (int t = 0; t < D.d(); ++t)
        tail[static_cast<size_t>(t)] =
            a[static_cast<size_t>(t + 1)] +
            u * (q[static_cast<size_t>(t + 1)] - a[static_cast<size_t>(t + 1)]);
      double re0 = level - D.poly().eval(tail[0]);
      for (int t = 1; t < D.d(); ++t) re0 -= std::norm(tail[static_cast<size_t>(t)]);
      Point pt;
      pt.z.reserve(static_cast<size_t>(D.ambient_dim()));
      pt.z.emplace_back(re0, a[0].imag() + u * (q[0].imag() - a[0].imag()));
      pt.z.insert(pt.z.end(), tail.begin(), tail.end());
      pts.push_back(std::move(pt));
    }
  }
  // ascend to q along its slice, levels geometric from `level` to r(q)
  {
    const Point b = pts.back();
    const double lb = std::log(-level);
    const double le = std::log(-rq);
    const int n = std::max(2, static_cast<int>(std::lround(
                                  leg * std::min(1.0, (sq - s) / 4.0 + 0.25))));
    for (int i = 1; i < n; ++i) {
      const double li = lb + (le - lb) * i / (n - 1);
      Point pt = b;
      pt.z[0] = cplx(b[0].real() - level - std::exp(li), b[0].imag());
      pts.push_back(std::move(pt));
    }
    pts.back() = q;  // forced landing; off by rounding only
  }

  CurvePath c;
  c.points = std::move(pts);
  c.params.resize(c.points.size());
  for (size_t i = 0; i < c.params.size(); ++i)
    c.params[i] = static_cast<double>(i) / (c.params.size() - 1);
  return c;
}

}  // namespace

DistanceEstimate distance(const ModelDomain& D, const Point& p, const Point& q,
                          const DistanceOptions& opts, const std::optional<Box>& graph_box,
                          const GraphSpacing& spacing) {
  if (p.dim() != D.ambient_dim() || q.dim() != D.ambient_dim())
    fail(errc::dimension_mismatch, "point dimension mismatch");
  if (!D.contains(p) || !D.contains(q))
    fail(errc::point_not_interior, "distance endpoints must be interior");

  if (p == q) {
    DistanceEstimate est;
    est.lower = est.upper = 0.0;
    est.witness.params = {0.0, 1.0};
    est.witness.points = {p, q};
    est.method = DistanceMethod::composite;
    return est;
  }

  // canonical orientation: solve for the lexicographically smaller endpoint
  // first so distance(p,q) and distance(q,p) agree exactly
  if (lex_less(q, p)) {
    DistanceEstimate est = distance(D, q, p, opts, graph_box, spacing);
    est.witness = reversed(std::move(est.witness));
    return est;
  }

  std::vector<CurvePath> seeds;
  {
    CurvePath straight = straight_seed(p, q, opts.curve_samples);
    seeds.push_back(std::move(straight));
    const double s_star = optimal_crossing_level(D, p, q);
    const double s_top = std::min(log_depth(D, p), log_depth(D, q));
    std::vector<double> levels{s_star};
    for (int i = 1; i < opts.depth_trials; ++i)
      levels.push_back(s_star + ((i % 2) ? -1.0 : 1.0) * 0.7 * ((i + 1) / 2));
    for (double s : levels)
      seeds.push_back(composite_seed(D, p, q, std::min(s, s_top), opts.curve_samples));
  }

  const CurvePath* best = nullptr;
  double best_len = std::numeric_limits<double>::infinity();
  for (const CurvePath& c : seeds) {
    try {
      const double len = cheap_curve_length(D, c);
      if (len < best_len) {
        best_len = len;
        best = &c;
      }
    } catch (const Error&) {
      continue;  // seed exits the domain; skip it
    }
  }
  if (best == nullptr) fail(errc::curve_exits_domain, "no admissible seed curve");

  DistanceEstimate est = distance_variational(D, p, q, *best, opts.max_sweeps, opts);
  est.method = DistanceMethod::composite;

  if (graph_box) {
    DistanceEstimate ge = distance_graph(D, p, q, *graph_box, spacing);
    if (ge.upper < est.upper) {
      est.upper = ge.upper;
      est.witness = std::move(ge.witness);
    }
  }
  return est;
}

QuasiGeodesicReport verify_quasi_geodesic(const ModelDomain& D, const CurvePath& c, double A,
                                          double B, int pair_samples,
                                          const DistanceOptions& opts,
                                          unsigned long long seed) {
  c.validate();
  if (A < 1.0 || B < 0.0) fail(errc::bad_input, "need A >= 1 and B >= 0");
  const size_t n = c.points.size();
  std::vector<std::pair<size_t, size_t>> pairs;
  const size_t all = n * (n - 1) / 2;
  if (static_cast<size_t>(pair_samples) >= all) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    while (pairs.size() < static_cast<size_t>(pair_samples)) {
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }

  QuasiGeodesicReport rep;
  rep.pass = true;
  double worst_score = -std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : pairs) {
    const double dt = std::abs(c.params[j] - c.params[i]);
    if (dt < 1e-12) continue;
    const DistanceEstimate est = distance(D, c.points[i], c.points[j], opts);
    const bool upper_ok = est.lower <= A * dt + B;
    const bool lower_ok = est.upper >= dt / A - B;
    if (!upper_ok || !lower_ok) rep.pass = false;
    // smallest A passing with the given B, and vice versa
    double needA = 1.0;
    if (est.lower > B) needA = std::max(needA, (est.lower - B) / dt);
    needA = std::max(needA, dt / (est.upper + B));
    rep.A_required = std::max(rep.A_required, needA);
    rep.B_required = std::max({rep.B_required, est.lower - A * dt, dt / A - est.upper});
    const double score = needA;
    if (score > worst_score) {
      worst_score = score;
      rep.worst_pair = {c.params[i], c.params[j]};
    }
  }
  rep.B_required = std::max(rep.B_required, 0.0);
  return rep;
}

}  // namespace corank1
