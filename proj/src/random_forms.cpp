#include "fockspec/random_forms.hpp"

#include <stdexcept>

namespace fockspec {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next() % span);
}

GaussianRational Rng::coefficient() {
  auto small = [&]() { return Rational(uniform(-4, 4), uniform(1, 3)); };
  Rational re = small();
  Rational im = uniform(0, 1) == 1 ? small() : Rational(0);
  if (re == 0 && im == 0) re = 1;
  return GaussianRational(std::move(re), std::move(im));
}

Poly random_poly(Rng& rng, int n, int max_degree, int max_terms) {
  if (n < 1) throw std::invalid_argument("random_poly: dimension must be >= 1");
  if (max_degree < 0 || max_terms < 1) throw std::invalid_argument("random_poly: bad bounds");
  Poly p(n);
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int budget = rng.uniform(0, max_degree);
    std::vector<int> alpha(n, 0), beta(n, 0);
    for (int j = 0; j < n; ++j) {
      alpha[j] = rng.uniform(0, budget);
      budget -= alpha[j];
      beta[j] = rng.uniform(0, budget);
      budget -= beta[j];
    }
    p.add_term(Bidegree(std::move(alpha), std::move(beta)), rng.coefficient());
  }
  return p;
}

QForm random_form(Rng& rng, int n, int q, int max_degree, int max_terms) {
  const std::vector<MultiIndex> components = all_multi_indices(n, q);
  for (int attempt = 0; attempt < 8; ++attempt) {
    QForm f(n, q);
    for (const MultiIndex& J : components)
      if (rng.uniform(0, 1) == 1) f.add_term(J, random_poly(rng, n, max_degree, max_terms));
    if (f.is_zero()) {
      const int pick = rng.uniform(0, static_cast<int>(components.size()) - 1);
      f.add_term(components[pick], random_poly(rng, n, max_degree, max_terms));
    }
    if (!f.is_zero()) return f;
  }
  // Cancellation eight times in a row is practically impossible; fall back
  // to a deterministic nonzero form so callers never see zero.
  return QForm::monomial_form(n, q, components.front(), Poly::constant(n, GaussianRational(1)));
}

}  // namespace fockspec
