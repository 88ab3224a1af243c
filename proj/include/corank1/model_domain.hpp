#pragma once

// Model domains  Omega = { Re z0 + P(z1, conj z1) + sum_{a>=2} |z_a|^2 < 0 }
// in C^(d+1), together with the ambient point/vector types.

#include <span>
#include <string>
#include <vector>

#include "corank1/bipoly.hpp"

namespace corank1 {

/// A point of C^(d+1) in coordinates (z0, z1, ..., zd).
struct Point {
  std::vector<cplx> z;

  Point() = default;
  explicit Point(std::vector<cplx> coords) : z(std::move(coords)) {}
  Point(std::initializer_list<cplx> coords) : z(coords) {}

  int dim() const { return static_cast<int>(z.size()); }
  cplx& operator[](size_t i) { return z[i]; }
  const cplx& operator[](size_t i) const { return z[i]; }
  bool operator==(const Point& o) const { return z == o.z; }
};

/// A tangent vector of C^(d+1); same layout as Point.
struct Tangent {
  std::vector<cplx> x;

  Tangent() = default;
  explicit Tangent(std::vector<cplx> coords) : x(std::move(coords)) {}
  Tangent(std::initializer_list<cplx> coords) : x(coords) {}

  int dim() const { return static_cast<int>(x.size()); }
  cplx& operator[](size_t i) { return x[i]; }
  const cplx& operator[](size_t i) const { return x[i]; }
  double norm() const;
  bool is_zero() const;
};

Point operator+(Point p, const Tangent& v);
Point operator-(Point p, const Tangent& v);
Tangent operator-(const Point& a, const Point& b);
Tangent operator*(cplx s, Tangent v);

/// Lexicographic order on (re, im) pairs; used for deterministic tie-breaking.
bool lex_less(const Point& a, const Point& b);

/// Axis-aligned sampling box: per complex coordinate, a disc of the given
/// radius around the center.
struct Box {
  Point center;
  std::vector<double> radii;
};

/// Deterministic tensor grid over the box: per complex coordinate a polar
/// grid with `radii_per_coord` radii (outermost exactly on the box radius)
/// and 2*radii_per_coord angles, plus the center value.
std::vector<Point> box_grid(const Box& box, int radii_per_coord);

class ModelDomain {
 public:
  /// Validates on construction: ambient_dim >= 2, P centered (mixed terms
  /// only), even degree >= 2, and subharmonicity on the default box.
  ModelDomain(int ambient_dim, HermitianPoly P, std::string label = "");

  int ambient_dim() const { return ambient_dim_; }
  int d() const { return ambient_dim_ - 1; }
  const HermitianPoly& poly() const { return P_; }
  const std::string& label() const { return label_; }

  /// r_P(z) = Re z0 + P(z1) + sum |z_a|^2.
  double defining_value(const Point& z) const;
  bool contains(const Point& z) const { return defining_value(z) < 0.0; }

  /// Boundary point over the given slice: Re z0 solves r_P = 0 exactly.
  Point boundary_from_slice(std::span<const cplx> tail, double im0) const;

  struct TypeData {
    int degree = 0;           // 2m
    int vanishing_order = 0;  // lowest j+k with a nonzero term
  };
  TypeData type_data() const;

  // Cached calculus for the metric and scaling paths.
  const BiPoly& dP() const { return dP_; }                      // dP/dz1
  const BiPoly& mixed_hessian() const { return lap_quarter_; }  // d dbar P
  double derivative_cap(int l, cplx z1) const;
  const std::vector<BiPoly>& cap_derivatives(int l) const;

 private:
  int ambient_dim_ = 0;
  HermitianPoly P_;
  std::string label_;
  BiPoly dP_;
  BiPoly lap_quarter_;
  // caps_[l-2][j-1] = d^j dbar^(l-j) P for j = 1..l-1
  std::vector<std::vector<BiPoly>> caps_;
};

}  // namespace corank1
