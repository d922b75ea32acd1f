// The weighted dbar-complex for phi(z) = |z|^2 and the complex Witten
// complex, each as exact operators on polynomial (0,q)-forms.
//
// Two independent routes exist for every Laplacian: the operator composition
// (dbar/dbar_star resp. D/Dstar built from Z_k, Z_k^*) and the coordinate
// formula; their exact agreement is a test obligation, so the code paths
// deliberately share nothing beyond the polynomial algebra.
//
// Witten operators act on the polynomial part p of h = p * exp(-|z|^2/2),
// the Gaussian envelope is never materialized:
//   Z_k     acts as  d/dzb_k
//   Z_k^*   acts as  -d/dz_k + zb_k
#ifndef FOCKSPEC_OPERATORS_HPP
#define FOCKSPEC_OPERATORS_HPP

#include "fockspec/forms.hpp"
#include "fockspec/inner.hpp"

namespace fockspec {

/// dbar u = sum_J sum_j du_J/dzb_j dzb_j ^ dzb_J; degree q -> q+1.
/// Throws for q = n.
QForm dbar(const QForm& u);

/// dbar*_phi u = -sum_K sum_k delta_k u_{kK} dzb_K with
/// delta_k = d/dz_k - zb_k; degree q -> q-1. Throws for q = 0.
QForm dbar_star(const QForm& u);

/// box_{phi,q} = dbar dbar*_phi + dbar*_phi dbar (the undefined half is
/// dropped at q = 0 and q = n).
QForm box_laplacian(const QForm& u);

/// Diagonal coordinate form: componentwise
/// -laplace_quarter(u_J) + sum_j zb_j du_J/dzb_j + q u_J.
QForm box_coord(const QForm& u);

/// Scalar part of the coordinate Laplacian (no q-shift):
/// -laplace_quarter(p) + sum_j zb_j dp/dzb_j.
Poly scalar_box(const Poly& p);

/// Q_phi(f,g) = (dbar f, dbar g)_phi + (dbar* f, dbar* g)_phi; for
/// polynomial forms equals form_inner(box f, g).
ExactScalar dirichlet_form(const QForm& f, const QForm& g);

/// Polynomial part of a (0,q)-form h = sum_J p_J exp(-|z|^2/2) dzb_J.
struct WittenRep {
  QForm form;
  explicit WittenRep(QForm f) : form(std::move(f)) {}
  int dimension() const { return form.dimension(); }
  int degree() const { return form.degree(); }
  friend bool operator==(const WittenRep& a, const WittenRep& b) = default;
};

/// Z_k applied to every component coefficient (no wedge).
WittenRep witten_z(const WittenRep& h, int k);
/// Z_k^* applied to every component coefficient (no contraction).
WittenRep witten_z_star(const WittenRep& h, int k);

/// Dbar_{q+1} h = sum_k sum_J Z_k(h_J) dzb_k ^ dzb_J.
WittenRep witten_d(const WittenRep& h);
/// Dbar_q^* h = sum_k sum_J Z_k^*(h_J) dzb_k -| dzb_J.
WittenRep witten_d_star(const WittenRep& h);

/// Delta^{(0,q)} = Dbar_q Dbar_q^* + Dbar_{q+1}^* Dbar_{q+1}, same edge
/// conventions as box_laplacian.
WittenRep witten_laplacian(const WittenRep& h);

/// The coordinate formula
///   -1/4 laplace h_J + 1/2 sum_j (zb_j h_{J,zb_j} - z_j h_{J,z_j})
///   + 1/4 |z|^2 h_J + (q - n/2) h_J
/// applied to h_J * exp(-|z|^2/2) with the envelope derivatives expanded
/// symbolically; returns the polynomial part.
WittenRep witten_coord(const WittenRep& h);

/// Pauli operators on L^2(C), n = 1 only. pauli_minus is the scalar rep of
/// dbar* dbar; pauli_plus the rep of dbar dbar* on the dzb coefficient.
Poly pauli_minus(const Poly& p);
Poly pauli_plus(const Poly& p);

}  // namespace fockspec

#endif  // FOCKSPEC_OPERATORS_HPP
