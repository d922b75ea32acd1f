#include "fockspec/operators.hpp"

#include <stdexcept>

namespace fockspec {

namespace {

// delta_k p = dp/dz_k - zb_k p  (phi = |z|^2, so dphi/dz_k = zb_k)
Poly delta_k(const Poly& p, int k) {
  return p.d_z(k) - Poly::variable_zbar(p.dimension(), k) * p;
}

// Z_k p = dp/dzb_k in the Gaussian-envelope representation
Poly z_op(const Poly& p, int k) { return p.d_zbar(k); }

// Z_k^* p = -dp/dz_k + zb_k p
Poly z_star_op(const Poly& p, int k) {
  return -p.d_z(k) + Poly::variable_zbar(p.dimension(), k) * p;
}

}  // namespace

QForm dbar(const QForm& u) {
  const int n = u.dimension();
  const int q = u.degree();
  if (q >= n) throw std::invalid_argument("dbar: already at top degree q = n");
  QForm out(n, q + 1);
  for (const auto& [J, p] : u.coefficients()) {
    for (int j = 1; j <= n; ++j) {
      Poly dp = p.d_zbar(j);
      if (dp.is_zero()) continue;
      auto w = wedge_basis(j, J);
      if (!w) continue;
      out.add_term(w->first, w->second == 1 ? dp : -dp);
    }
  }
  return out;
}

QForm dbar_star(const QForm& u) {
  const int n = u.dimension();
  const int q = u.degree();
  if (q == 0) throw std::invalid_argument("dbar_star: no adjoint below degree 0");
  QForm out(n, q - 1);
  for (const auto& [J, p] : u.coefficients()) {
    for (int k : J.indices()) {
      auto c = contract_basis(k, J);
      Poly term = delta_k(p, k);
      term.scale(GaussianRational(-c->second));
      out.add_term(c->first, term);
    }
  }
  return out;
}

QForm box_laplacian(const QForm& u) {
  const int n = u.dimension();
  const int q = u.degree();
  if (q == 0) return dbar_star(dbar(u));
  if (q == n) return dbar(dbar_star(u));
  return dbar(dbar_star(u)) + dbar_star(dbar(u));
}

Poly scalar_box(const Poly& p) {
  Poly out = -p.laplace_quarter();
  for (int j = 1; j <= p.dimension(); ++j)
    out += Poly::variable_zbar(p.dimension(), j) * p.d_zbar(j);
  return out;
}

QForm box_coord(const QForm& u) {
  QForm out(u.dimension(), u.degree());
  const GaussianRational q_shift(u.degree());
  for (const auto& [J, p] : u.coefficients()) {
    Poly comp = scalar_box(p);
    comp += q_shift * p;
    out.add_term(J, comp);
  }
  return out;
}

ExactScalar dirichlet_form(const QForm& f, const QForm& g) {
  const int n = f.dimension();
  const int q = f.degree();
  if (g.dimension() != n || g.degree() != q)
    throw std::invalid_argument("dirichlet_form: mismatched forms");
  ExactScalar acc = ExactScalar::zero(n);
  if (q < n) acc += form_inner(dbar(f), dbar(g));
  if (q > 0) acc += form_inner(dbar_star(f), dbar_star(g));
  return acc;
}

WittenRep witten_z(const WittenRep& h, int k) {
  if (k < 1 || k > h.dimension()) throw std::invalid_argument("witten_z: index out of range");
  QForm out(h.dimension(), h.degree());
  for (const auto& [J, p] : h.form.coefficients()) out.add_term(J, z_op(p, k));
  return WittenRep(std::move(out));
}

WittenRep witten_z_star(const WittenRep& h, int k) {
  if (k < 1 || k > h.dimension())
    throw std::invalid_argument("witten_z_star: index out of range");
  QForm out(h.dimension(), h.degree());
  for (const auto& [J, p] : h.form.coefficients()) out.add_term(J, z_star_op(p, k));
  return WittenRep(std::move(out));
}

WittenRep witten_d(const WittenRep& h) {
  const int n = h.dimension();
  const int q = h.degree();
  if (q >= n) throw std::invalid_argument("witten_d: already at top degree q = n");
  QForm out(n, q + 1);
  for (const auto& [J, p] : h.form.coefficients()) {
    for (int k = 1; k <= n; ++k) {
      Poly zp = z_op(p, k);
      if (zp.is_zero()) continue;
      auto w = wedge_basis(k, J);
      if (!w) continue;
      out.add_term(w->first, w->second == 1 ? zp : -zp);
    }
  }
  return WittenRep(std::move(out));
}

WittenRep witten_d_star(const WittenRep& h) {
  const int n = h.dimension();
  const int q = h.degree();
  if (q == 0) throw std::invalid_argument("witten_d_star: no adjoint below degree 0");
  QForm out(n, q - 1);
  for (const auto& [J, p] : h.form.coefficients()) {
    for (int k : J.indices()) {
      auto c = contract_basis(k, J);
      Poly term = z_star_op(p, k);
      term.scale(GaussianRational(c->second));
      out.add_term(c->first, term);
    }
  }
  return WittenRep(std::move(out));
}

WittenRep witten_laplacian(const WittenRep& h) {
  const int n = h.dimension();
  const int q = h.degree();
  if (q == 0) return witten_d_star(witten_d(h));
  if (q == n) return witten_d(witten_d_star(h));
  WittenRep a = witten_d(witten_d_star(h));
  WittenRep b = witten_d_star(witten_d(h));
  return WittenRep(a.form + b.form);
}

WittenRep witten_coord(const WittenRep& h) {
  const int n = h.dimension();
  const int q = h.degree();
  // Envelope rules: on the polynomial part,
  //   d/dz_j   becomes  D_j  = d_z(.,j)  - 1/2 zb_j
  //   d/dzb_j  becomes  Db_j = d_zbar(.,j) - 1/2 z_j
  auto env_dz = [&](const Poly& p, int j) {
    return p.d_z(j) - GaussianRational(Rational(1, 2)) * (Poly::variable_zbar(n, j) * p);
  };
  auto env_dzbar = [&](const Poly& p, int j) {
    return p.d_zbar(j) - GaussianRational(Rational(1, 2)) * (Poly::variable_z(n, j) * p);
  };
  const GaussianRational half(Rational(1, 2));
  const GaussianRational quarter(Rational(1, 4));
  const GaussianRational order_term(Rational(2 * q - n, 2));  // q - n/2
  QForm out(n, q);
  for (const auto& [J, p] : h.form.coefficients()) {
    Poly comp(n);
    for (int j = 1; j <= n; ++j) {
      // -1/4 laplace = -sum_j d/dz_j d/dzb_j
      comp -= env_dz(env_dzbar(p, j), j);
      comp += half * (Poly::variable_zbar(n, j) * env_dzbar(p, j));
      comp -= half * (Poly::variable_z(n, j) * env_dz(p, j));
      comp += quarter * (Poly::variable_z(n, j) * Poly::variable_zbar(n, j) * p);
    }
    comp += order_term * p;
    out.add_term(J, comp);
  }
  return WittenRep(std::move(out));
}

Poly pauli_minus(const Poly& p) {
  if (p.dimension() != 1) throw std::invalid_argument("pauli_minus: defined for n = 1 only");
  WittenRep h(QForm::monomial_form(1, 0, MultiIndex(), p));
  return witten_d_star(witten_d(h)).form.coefficient(MultiIndex());
}

Poly pauli_plus(const Poly& p) {
  if (p.dimension() != 1) throw std::invalid_argument("pauli_plus: defined for n = 1 only");
  const MultiIndex dzb1(std::vector<int>{1});
  WittenRep h(QForm::monomial_form(1, 1, dzb1, p));
  return witten_d(witten_d_star(h)).form.coefficient(dzb1);
}

}  // namespace fockspec
