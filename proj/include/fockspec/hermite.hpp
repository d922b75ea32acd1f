// Real Hermite cross-check: the substitution x = (z + zb)/2, y = i(zb - z)/2
// identifies the weighted complex picture with L^2(R^2, e^{-x^2-y^2}), where
// the products H_i(x) H_j(y) of physicists' Hermite polynomials form the
// classical orthogonal system. This module carries the exact change of
// variables, the Hermite recurrence, Gaussian moments, and expansion of
// polynomials in Hermite products.
//
// One-dimensional Gaussian moments carry a sqrt(pi) unit; it is tracked as a
// separate integer power in this module only and never mixes with the pi^n
// of ExactScalar.
#ifndef FOCKSPEC_HERMITE_HPP
#define FOCKSPEC_HERMITE_HPP

#include <map>
#include <string>
#include <vector>

#include "fockspec/poly.hpp"

namespace fockspec {

/// Polynomial in the 2n real variables x_1..x_n, y_1..y_n. Reuses Bidegree
/// with alpha = x-exponents, beta = y-exponents. Coefficients stay Gaussian
/// rational because the change of variables introduces i transiently.
class RealPoly {
 public:
  using TermMap = std::map<Bidegree, GaussianRational, BidegreeOrder>;

  explicit RealPoly(int n);

  static RealPoly constant(int n, GaussianRational c);
  static RealPoly monomial(Bidegree d, GaussianRational c = GaussianRational(1));
  static RealPoly variable_x(int n, int j);  // x_j, 1-based
  static RealPoly variable_y(int n, int j);  // y_j, 1-based

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const Bidegree& d) const;
  /// Graded-lex largest term; throws on the zero polynomial.
  const Bidegree& leading() const;

  void add_term(const Bidegree& d, const GaussianRational& c);

  RealPoly& operator+=(const RealPoly& o);
  RealPoly& operator-=(const RealPoly& o);
  RealPoly& operator*=(const RealPoly& o);
  RealPoly& scale(const GaussianRational& c);

  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const GaussianRational& c, RealPoly p) { return p.scale(c); }
  friend bool operator==(const RealPoly& a, const RealPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Same grammar as Poly but with monomials `x1^a y1^b`.
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;

  void check_same_dimension(const RealPoly& o) const;
};

/// Exact substitution z_j = x_j + i y_j, zb_j = x_j - i y_j.
RealPoly to_real(const Poly& p);
/// Exact inverse substitution x_j = (z_j + zb_j)/2, y_j = i (zb_j - z_j)/2.
Poly to_complex(const RealPoly& r);

/// Physicists' Hermite polynomial H_k in x_1 (n = 1), via the recurrence
/// H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}.
RealPoly hermite_poly(int k);

/// H_i(x_1) H_j(y_1) at n = 1.
RealPoly hermite_product(int i, int j);

/// Integral of x^k e^{-x^2} over R as a rational multiple of sqrt(pi):
/// (2m)!/(4^m m!) for k = 2m, zero for odd k.
Rational gauss_moment(int k);

/// coeff * sqrt(pi)^sqrt_pi_power; inner products of n-dimensional real
/// polynomials carry sqrt_pi_power = 2n.
struct SqrtPiScalar {
  GaussianRational coeff;
  int sqrt_pi_power = 0;

  SqrtPiScalar() = default;
  SqrtPiScalar(GaussianRational c, int power) : coeff(std::move(c)), sqrt_pi_power(power) {}
  static SqrtPiScalar zero(int power) { return SqrtPiScalar(GaussianRational(), power); }

  bool is_zero() const { return coeff.is_zero(); }

  SqrtPiScalar& operator+=(const SqrtPiScalar& o);

  friend bool operator==(const SqrtPiScalar& a, const SqrtPiScalar& b) {
    if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
    return a.coeff == b.coeff && a.sqrt_pi_power == b.sqrt_pi_power;
  }

  /// Requires a real value; throws otherwise.
  double to_double() const;

  std::string to_string() const;  // "c * sqrtpi^m", "0" for zero
};

/// Weighted inner product over R^{2n} with weight e^{-|x|^2-|y|^2},
/// conjugate-linear in the second slot; exact via gauss_moment.
SqrtPiScalar real_inner(const RealPoly& p, const RealPoly& q);

struct HermiteTerm {
  int i = 0;  // degree in x
  int j = 0;  // degree in y
  GaussianRational coeff;

  friend bool operator==(const HermiteTerm& a, const HermiteTerm& b) = default;
};

/// Exact expansion of an n = 1 polynomial over the products H_i(x) H_j(y),
/// by leading-term back-substitution (leading coefficient of H_i H_j is
/// 2^{i+j}). Reconstruction is exact.
std::vector<HermiteTerm> hermite_expand(const Poly& p);

}  // namespace fockspec

#endif  // FOCKSPEC_HERMITE_HPP
