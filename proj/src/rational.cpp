#include "fockspec/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace fockspec {

Integer factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Integer acc = 1;
  for (int i = 2; i <= k; ++i) acc *= i;
  return acc;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);  // exact at every step: product of j consecutive ints is divisible by j!
  }
  return acc;
}

Integer int_pow(const Integer& base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Integer acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
  Rational norm = o.re * o.re + o.im * o.im;
  Rational new_re = (re * o.re + im * o.im) / norm;
  im = (im * o.re - re * o.im) / norm;
  re = std::move(new_re);
  return *this;
}

std::complex<double> GaussianRational::to_complex() const {
  return {to_double(re), to_double(im)};
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (im == 0) return fockspec::to_string(re);
  std::string im_part = fockspec::to_string(im < 0 ? Rational(-im) : im) + "*i";
  if (re == 0) return (im < 0 ? "-" : "") + im_part;
  return fockspec::to_string(re) + (im < 0 ? "-" : "+") + im_part;
}

}  // namespace fockspec
