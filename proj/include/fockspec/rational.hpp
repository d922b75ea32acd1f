// Exact scalar arithmetic: arbitrary-precision rationals and Gaussian
// rationals a + b*i. Coefficient field for every polynomial in the library;
// all identities downstream are checked by exact equality, never by epsilon.
#ifndef FOCKSPEC_RATIONAL_HPP
#define FOCKSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace fockspec {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps lowest terms with positive denominator by construction.
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int k);
Integer binomial(int n, int k);
Integer int_pow(const Integer& base, int exp);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(int real) : re(real) {}  // NOLINT: implicit by design
  GaussianRational(long real) : re(real) {}

  static GaussianRational i() { return GaussianRational(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return GaussianRational(re, -im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational new_re = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(new_re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re, -a.im);
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const;

  // Fixed grammar `p/q+r/s*i`; pure parts collapse to `p/q` or `r/s*i`.
  std::string to_string() const;
};

}  // namespace fockspec

#endif  // FOCKSPEC_RATIONAL_HPP
