// Weighted inner products for phi(z) = |z|^2, closed in exact arithmetic.
// Every monomial pairing is a rational multiple of pi^n via the factorial
// formula; no floating point enters here.
#ifndef FOCKSPEC_INNER_HPP
#define FOCKSPEC_INNER_HPP

#include <span>
#include <string>
#include <vector>

#include "fockspec/forms.hpp"
#include "fockspec/poly.hpp"

namespace fockspec {

/// coeff * pi^pi_power with coeff an exact Gaussian rational. All inner
/// products of n-dimensional forms carry pi_power = n.
struct ExactScalar {
  GaussianRational coeff;
  int pi_power = 0;

  ExactScalar() = default;
  ExactScalar(GaussianRational c, int power) : coeff(std::move(c)), pi_power(power) {}
  static ExactScalar zero(int power) { return ExactScalar(GaussianRational(), power); }

  bool is_zero() const { return coeff.is_zero(); }
  ExactScalar conj() const { return ExactScalar(coeff.conj(), pi_power); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& scale(const GaussianRational& c) {
    coeff *= c;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
    return a.coeff == b.coeff && a.pi_power == b.pi_power;
  }

  /// Requires a real value; throws otherwise.
  double to_double() const;

  std::string to_string() const;  // "c * pi^n", "0" for zero
};

/// <z^a.alpha zb^a.beta, z^b.alpha zb^b.beta>_phi. Nonzero exactly when the
/// charges a.alpha - a.beta and b.alpha - b.beta agree componentwise, in
/// which case the value is pi^n * prod_j (a.alpha_j + b.beta_j)!.
ExactScalar monomial_inner(const Bidegree& a, const Bidegree& b);

/// Sesquilinear extension, conjugate-linear in the second slot.
ExactScalar poly_inner(const Poly& p, const Poly& q);

/// Componentwise over common increasing multi-indices.
ExactScalar form_inner(const QForm& f, const QForm& g);

/// Hermitian matrix of pairwise form_inner values, entry (i,j) = <b_j, b_i>.
/// Rejects zero members and mixed degrees or dimensions.
std::vector<std::vector<ExactScalar>> gram(std::span<const QForm> basis);

}  // namespace fockspec

#endif  // FOCKSPEC_INNER_HPP
