#pragma once

// Bivariate polynomials in (z, conj z) with complex coefficients, plus the
// Hermitian-symmetric (real-valued) subclass that carries the defining data
// of a model domain.

#include <complex>
#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "corank1/errors.hpp"

namespace corank1 {

using cplx = std::complex<double>;

inline constexpr double kCoeffPruneTol = 1e-14;  // drop |c| below this after arithmetic
inline constexpr double kRealnessTol = 1e-12;    // |Im| <= tol * (1 + |value|)

struct TermKey {
  int j = 0;  // power of z
  int k = 0;  // power of conj(z)
  auto operator<=>(const TermKey&) const = default;
};

/// Finite sum  sum_{j,k} c_{j,k} z^j conj(z)^k.  Not necessarily real-valued;
/// Wirtinger derivatives of Hermitian polynomials land here.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly monomial(int j, int k, cplx c);

  void add_term(int j, int k, cplx c);
  const std::map<TermKey, cplx>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const;  // max j+k over stored terms, 0 when empty

  cplx eval(cplx z) const;
  /// d^dj/dz^dj  d^dk/dconj(z)^dk, computed on coefficients (exact).
  BiPoly wirtinger(int dj, int dk) const;
  BiPoly homogeneous_part(int total) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(cplx s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    a += b;
    return a;
  }
  friend BiPoly operator*(BiPoly a, cplx s) {
    a *= s;
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    a += b * cplx(-1.0);
    return a;
  }

  void prune(double tol = kCoeffPruneTol);
  double max_abs_coeff() const;
  /// Substitute z -> lambda z with real lambda: c_{j,k} *= lambda^(j+k).
  BiPoly dilate(double lambda) const;
  /// Bound for |grad |p|| at |z| = u from coefficient norms:
  /// sum |c_{j,k}| (j+k) u^(j+k-1).  Used to certify circle minima.
  double gradient_bound(double u) const;

 private:
  std::map<TermKey, cplx> terms_;
};

struct SubharmonicityReport {
  double min_laplacian = 0.0;
  bool pass = false;
  int grid_points = 0;
};

struct RecenterResult;

/// Real-valued polynomial P(z, conj z): coefficients satisfy
/// c_{k,j} = conj(c_{j,k}) for every stored term.
class HermitianPoly {
 public:
  HermitianPoly() = default;

  /// Builds the Hermitian symmetrization of the given term list.  Duplicate
  /// (j,k) entries accumulate first.  Throws hermitian_violation when (j,k)
  /// and (k,j) are both supplied with non-conjugate totals, or a diagonal
  /// coefficient has a non-real part beyond tolerance.
  static HermitianPoly from_terms(const std::vector<std::tuple<int, int, cplx>>& terms);
  /// Validates symmetry of an existing coefficient table.
  static HermitianPoly from_bipoly(BiPoly p);

  const BiPoly& raw() const { return p_; }
  bool empty() const { return p_.empty(); }
  int degree() const { return p_.degree(); }

  /// Evaluates and asserts realness; throws realness_violation when
  /// |Im| > kRealnessTol * (1 + |value|).
  double eval(cplx z) const;
  BiPoly wirtinger(int dj, int dk) const { return p_.wirtinger(dj, dk); }

  /// A_l(z) = max |d^j dbar^k P(z)| over j,k > 0, j+k = l.  Requires
  /// 2 <= l <= degree().
  double derivative_cap(int l, cplx z) const;
  /// max |c_{j,k}| over j,k > 0 with j+k = l (coefficient cap of a centered
  /// polynomial).  Same range requirement as derivative_cap.
  double coefficient_cap(int l) const;

  HermitianPoly homogeneous_part(int total) const;
  bool has_harmonic_terms() const;  // stored (j,0) or (0,k) with j+k > 0
  bool has_constant_term() const;
  /// Every stored term has j >= 1 and k >= 1.
  bool is_centered() const { return !has_harmonic_terms() && !has_constant_term(); }

  HermitianPoly dilate(double lambda) const;
  HermitianPoly scaled(double s) const;  // multiply all coefficients by real s
  HermitianPoly plus(const HermitianPoly& o) const;

  /// Exact Taylor re-expansion at xi, split as
  ///   P(xi + w) = constant + 2 Re(sum_j h_j w^j) + centered(w).
  RecenterResult recenter(cplx xi) const;

 private:
  BiPoly p_;
};

struct RecenterResult {
  HermitianPoly centered;         // terms with j >= 1 and k >= 1
  std::vector<cplx> holo_coeffs;  // h_j = coefficient of w^j, index 0 <-> j = 1
  double constant = 0.0;          // P(xi)
};

/// Evaluates the Laplacian 4 * d dbar P on a deterministic polar grid
/// (samples radii x 2*samples angles, plus the center) inside |z| <= box_radius.
SubharmonicityReport subharmonicity_report(const HermitianPoly& P, double box_radius,
                                           int samples);

}  // namespace corank1
