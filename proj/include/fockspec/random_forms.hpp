// Seeded random polynomials and forms for the property suites. The raw
// mt19937_64 stream is reduced by modulo instead of going through the
// standard distributions, so a seed reproduces the same inputs on every
// platform and standard library.
#ifndef FOCKSPEC_RANDOM_FORMS_HPP
#define FOCKSPEC_RANDOM_FORMS_HPP

#include <cstdint>
#include <random>

#include "fockspec/forms.hpp"
#include "fockspec/poly.hpp"

namespace fockspec {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform over the inclusive range [lo, hi].
  int uniform(int lo, int hi);
  /// Nonzero Gaussian rational with small numerators and denominators;
  /// complex roughly half the time.
  GaussianRational coefficient();

 private:
  std::mt19937_64 engine_;
};

/// Up to max_terms random monomials of total degree <= max_degree with
/// coefficients from Rng::coefficient. May be shorter after cancellation.
Poly random_poly(Rng& rng, int n, int max_degree, int max_terms);

/// Random (0,q)-form with a nonempty subset of components carrying random
/// polynomials; never the zero form.
QForm random_form(Rng& rng, int n, int q, int max_degree, int max_terms);

}  // namespace fockspec

#endif  // FOCKSPEC_RANDOM_FORMS_HPP
