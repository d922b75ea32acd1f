#include "fockspec/eigenfunctions.hpp"

#include <stdexcept>
#include <string>

#include "fockspec/operators.hpp"

namespace fockspec {

namespace {

Poly monomial_1d(int a, int b, GaussianRational c) {
  return Poly::monomial(Bidegree({a}, {b}), std::move(c));
}

// Embeds an n = 1 polynomial as a polynomial in variable j of dimension n.
Poly embed_factor(const Poly& p, int n, int j) {
  Poly out(n);
  for (const auto& [d, c] : p.terms()) {
    std::vector<int> alpha(n, 0);
    std::vector<int> beta(n, 0);
    alpha[j - 1] = d.alpha[0];
    beta[j - 1] = d.beta[0];
    out.add_term(Bidegree(std::move(alpha), std::move(beta)), c);
  }
  return out;
}

// Internal scalar tensor: product of factors with no component attached.
EigenFunction scalar_tensor(const std::vector<EigenFunction>& factors) {
  const int n = static_cast<int>(factors.size());
  EigenFunction f;
  f.kind = EigenKind::tensor;
  f.poly = Poly::constant(n, GaussianRational(1));
  for (int j = 1; j <= n; ++j) {
    const EigenFunction& factor = factors[j - 1];
    f.eigenvalue += factor.eigenvalue;
    f.params.insert(f.params.end(), factor.params.begin(), factor.params.end());
    f.poly *= embed_factor(factor.poly, n, j);
  }
  return f;
}

}  // namespace

EigenFunction u_fn(int k, int m) {
  if (k < 0 || m < 1)
    throw std::invalid_argument("u_fn: requires k >= 0, m >= 1, got k=" + std::to_string(k) +
                                ", m=" + std::to_string(m));
  EigenFunction f;
  f.eigenvalue = k + m;
  f.kind = EigenKind::u;
  f.params = {{k, m}};
  f.poly = Poly(1);
  for (int j = 0; j <= m; ++j) {
    Rational a(factorial(k + m) * factorial(m), factorial(j) * factorial(k + m - j) * factorial(m - j));
    if (j % 2 == 1) a = -a;
    f.poly += monomial_1d(m - j, k + m - j, GaussianRational(a));
  }
  return f;
}

EigenFunction v_fn(int k, int m) {
  if (k < 1 || m < 0)
    throw std::invalid_argument("v_fn: requires k >= 1, m >= 0, got k=" + std::to_string(k) +
                                ", m=" + std::to_string(m));
  EigenFunction f;
  f.eigenvalue = k;
  f.kind = EigenKind::v;
  f.params = {{k, m}};
  f.poly = Poly(1);
  for (int j = 0; j <= k; ++j) {
    Rational b(factorial(k + m) * factorial(k), factorial(j) * factorial(k + m - j) * factorial(k - j));
    if (j % 2 == 1) b = -b;
    f.poly += monomial_1d(k + m - j, k - j, GaussianRational(b));
  }
  return f;
}

EigenFunction holomorphic_fn(int m) {
  if (m < 0) throw std::invalid_argument("holomorphic_fn: requires m >= 0");
  EigenFunction f;
  f.eigenvalue = 0;
  f.kind = EigenKind::holomorphic;
  f.params = {{0, m}};
  f.poly = monomial_1d(m, 0, GaussianRational(1));
  return f;
}

EigenFunction scalar_basis_fn(int alpha, int beta) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("scalar_basis_fn: negative exponent");
  if (beta == 0) return holomorphic_fn(alpha);
  if (alpha == 0) {
    // zb^beta, the m = 0 degeneration of the u-family.
    EigenFunction f;
    f.eigenvalue = beta;
    f.kind = EigenKind::u;
    f.params = {{beta, 0}};
    f.poly = monomial_1d(0, beta, GaussianRational(1));
    return f;
  }
  if (beta >= alpha) return u_fn(beta - alpha, alpha);
  return v_fn(beta, alpha - beta);
}

EigenFunction tensor_fn(const std::vector<EigenFunction>& factors, const MultiIndex& J, int q) {
  const int n = static_cast<int>(factors.size());
  if (n < 1) throw std::invalid_argument("tensor_fn: needs at least one factor");
  if (J.size() != q) throw std::invalid_argument("tensor_fn: |J| must equal q");
  if (J.max_index() > n) throw std::invalid_argument("tensor_fn: J exceeds dimension");
  for (const EigenFunction& factor : factors) {
    if (factor.poly.dimension() != 1 || factor.component.has_value())
      throw std::invalid_argument("tensor_fn: factors must be scalar n = 1 functions");
  }
  EigenFunction f = scalar_tensor(factors);
  f.eigenvalue += q;
  f.component = J;
  return f;
}

VerifyResult verify_eigen(const EigenFunction& f) {
  const GaussianRational lambda{Rational(f.eigenvalue)};
  if (!f.component) {
    Poly residual = scalar_box(f.poly) - lambda * f.poly;
    const bool ok = residual.is_zero();  // evaluate before the move below
    return VerifyResult(ok, std::move(residual));
  }
  const int n = f.poly.dimension();
  const int q = f.component->size();
  QForm embedded = QForm::monomial_form(n, q, *f.component, f.poly);
  QForm residual_form = box_coord(embedded) - lambda * embedded;
  // box_coord is diagonal, so the only possibly nonzero component is J.
  Poly residual = residual_form.coefficient(*f.component);
  const bool ok = residual_form.is_zero();
  return VerifyResult(ok, std::move(residual));
}

std::vector<std::pair<EigenFunction, GaussianRational>> expand_monomial(const Bidegree& a) {
  const int n = a.dimension();
  std::vector<std::pair<EigenFunction, GaussianRational>> result;
  Poly remainder = Poly::monomial(a);
  while (!remainder.is_zero()) {
    const Bidegree lead = remainder.leading();
    const GaussianRational c = remainder.coefficient(lead);
    EigenFunction basis;
    if (n == 1) {
      basis = scalar_basis_fn(lead.alpha[0], lead.beta[0]);
    } else {
      std::vector<EigenFunction> factors;
      factors.reserve(n);
      for (int j = 0; j < n; ++j) factors.push_back(scalar_basis_fn(lead.alpha[j], lead.beta[j]));
      basis = scalar_tensor(factors);
    }
    remainder -= c * basis.poly;
    result.emplace_back(std::move(basis), c);
  }
  return result;
}

}  // namespace fockspec
