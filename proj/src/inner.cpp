#include "fockspec/inner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fockspec {

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.coeff.is_zero()) return *this;
  if (coeff.is_zero()) {
    *this = o;
    return *this;
  }
  if (pi_power != o.pi_power)
    throw std::invalid_argument("ExactScalar: mixed powers of pi");
  coeff += o.coeff;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  ExactScalar neg = o;
  neg.coeff = -neg.coeff;
  return *this += neg;
}

double ExactScalar::to_double() const {
  if (!coeff.is_real()) throw std::domain_error("ExactScalar::to_double: value is not real");
  double v = fockspec::to_double(coeff.re);
  for (int i = 0; i < pi_power; ++i) v *= std::numbers::pi;
  return v;
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::string cs = coeff.to_string();
  if (!coeff.is_real() && coeff.re != 0) cs = "(" + cs + ")";
  std::ostringstream os;
  os << cs << " * pi^" << pi_power;
  return os.str();
}

ExactScalar monomial_inner(const Bidegree& a, const Bidegree& b) {
  const int n = a.dimension();
  if (b.dimension() != n) throw std::invalid_argument("monomial_inner: dimension mismatch");
  Rational value = 1;
  for (int j = 0; j < n; ++j) {
    if (a.alpha[j] - a.beta[j] != b.alpha[j] - b.beta[j]) return ExactScalar::zero(n);
    value *= Rational(factorial(a.alpha[j] + b.beta[j]));
  }
  return ExactScalar(GaussianRational(value), n);
}

ExactScalar poly_inner(const Poly& p, const Poly& q) {
  const int n = p.dimension();
  if (q.dimension() != n) throw std::invalid_argument("poly_inner: dimension mismatch");
  ExactScalar acc = ExactScalar::zero(n);
  for (const auto& [dp, cp] : p.terms()) {
    for (const auto& [dq, cq] : q.terms()) {
      ExactScalar base = monomial_inner(dp, dq);
      if (base.is_zero()) continue;
      base.scale(cp * cq.conj());
      acc += base;
    }
  }
  return acc;
}

ExactScalar form_inner(const QForm& f, const QForm& g) {
  if (f.dimension() != g.dimension())
    throw std::invalid_argument("form_inner: dimension mismatch");
  if (f.degree() != g.degree()) throw std::invalid_argument("form_inner: degree mismatch");
  ExactScalar acc = ExactScalar::zero(f.dimension());
  for (const auto& [J, pf] : f.coefficients()) {
    auto it = g.coefficients().find(J);
    if (it == g.coefficients().end()) continue;
    acc += poly_inner(pf, it->second);
  }
  return acc;
}

std::vector<std::vector<ExactScalar>> gram(std::span<const QForm> basis) {
  if (basis.empty()) throw std::invalid_argument("gram: empty basis");
  for (const QForm& f : basis) {
    if (f.is_zero()) throw std::invalid_argument("gram: zero form is not a basis element");
    if (f.dimension() != basis[0].dimension() || f.degree() != basis[0].degree())
      throw std::invalid_argument("gram: mixed dimensions or degrees");
  }
  const size_t m = basis.size();
  std::vector<std::vector<ExactScalar>> g(m, std::vector<ExactScalar>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[i][j] = form_inner(basis[j], basis[i]);
  return g;
}

}  // namespace fockspec
