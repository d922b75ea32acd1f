// Polynomials in the 2n commuting variables z_1..z_n, zb_1..zb_n over the
// Gaussian rationals, with the Wirtinger derivatives d/dz_j and d/dzb_j.
// z_j and zb_j are formally independent; conjugation only enters through
// evaluation and inner products.
#ifndef FOCKSPEC_POLY_HPP
#define FOCKSPEC_POLY_HPP

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fockspec/rational.hpp"

namespace fockspec {

/// Exponent pair (alpha, beta) of a monomial z^alpha zb^beta.
struct Bidegree {
  std::vector<int> alpha;
  std::vector<int> beta;

  Bidegree(std::vector<int> a, std::vector<int> b);

  int dimension() const { return static_cast<int>(alpha.size()); }
  int total_degree() const;
  /// Componentwise alpha - beta; invariant of the Laplacian's action.
  std::vector<int> charge() const;

  friend bool operator==(const Bidegree& a, const Bidegree& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

/// Graded lexicographic: total degree first, then lex on (alpha, beta).
struct BidegreeOrder {
  bool operator()(const Bidegree& a, const Bidegree& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Bidegree, GaussianRational, BidegreeOrder>;

  explicit Poly(int n);

  static Poly constant(int n, GaussianRational c);
  static Poly monomial(Bidegree d, GaussianRational c = GaussianRational(1));
  static Poly variable_z(int n, int j);     // z_j, 1-based
  static Poly variable_zbar(int n, int j);  // zb_j, 1-based

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const Bidegree& d) const;
  /// Graded-lex largest term; throws on the zero polynomial.
  const Bidegree& leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& scale(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& c, Poly p) { return p.scale(c); }
  friend Poly operator-(const Poly& a) { return GaussianRational(-1) * a; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void add_term(const Bidegree& d, const GaussianRational& c);

  Poly d_z(int j) const;
  Poly d_zbar(int j) const;
  /// Sum_j d^2/dz_j dzb_j, i.e. one quarter of the real Laplacian under
  /// the convention laplace = 4 Sum_j d_z_j d_zb_j.
  Poly laplace_quarter() const;

  /// zb_j evaluates to the conjugate of point[j-1].
  std::complex<double> eval(std::span<const std::complex<double>> point) const;

  /// Canonical rendering: graded-lex descending, monomials as `z1^a zb1^b`.
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;

  void check_same_dimension(const Poly& o) const;
};

}  // namespace fockspec

#endif  // FOCKSPEC_POLY_HPP
