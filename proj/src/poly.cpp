#include "fockspec/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockspec {

Bidegree::Bidegree(std::vector<int> a, std::vector<int> b)
    : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.empty() || alpha.size() != beta.size())
    throw std::invalid_argument("Bidegree: alpha and beta must have equal positive length");
  for (int e : alpha)
    if (e < 0) throw std::invalid_argument("Bidegree: negative exponent");
  for (int e : beta)
    if (e < 0) throw std::invalid_argument("Bidegree: negative exponent");
}

int Bidegree::total_degree() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0) +
         std::accumulate(beta.begin(), beta.end(), 0);
}

std::vector<int> Bidegree::charge() const {
  std::vector<int> c(alpha.size());
  for (size_t j = 0; j < alpha.size(); ++j) c[j] = alpha[j] - beta[j];
  return c;
}

bool BidegreeOrder::operator()(const Bidegree& a, const Bidegree& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

Poly::Poly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Poly: dimension must be >= 1");
}

Poly Poly::constant(int n, GaussianRational c) {
  Poly p(n);
  p.add_term(Bidegree(std::vector<int>(n, 0), std::vector<int>(n, 0)), c);
  return p;
}

Poly Poly::monomial(Bidegree d, GaussianRational c) {
  Poly p(d.dimension());
  p.add_term(d, c);
  return p;
}

Poly Poly::variable_z(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("variable_z: index out of range");
  std::vector<int> a(n, 0);
  a[j - 1] = 1;
  return monomial(Bidegree(std::move(a), std::vector<int>(n, 0)));
}

Poly Poly::variable_zbar(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("variable_zbar: index out of range");
  std::vector<int> b(n, 0);
  b[j - 1] = 1;
  return monomial(Bidegree(std::vector<int>(n, 0), std::move(b)));
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

GaussianRational Poly::coefficient(const Bidegree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? GaussianRational() : it->second;
}

const Bidegree& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
  return terms_.rbegin()->first;
}

void Poly::check_same_dimension(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Poly: dimension mismatch");
}

void Poly::add_term(const Bidegree& d, const GaussianRational& c) {
  if (d.dimension() != n_) throw std::invalid_argument("Poly: term dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_dimension(o);
  if (this == &o) return scale(GaussianRational(2));
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_dimension(o);
  if (this == &o) {  // erasing while iterating the same map is not an option
    terms_.clear();
    return *this;
  }
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_dimension(b);
  Poly out(a.n_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      std::vector<int> alpha(da.alpha), beta(da.beta);
      for (int j = 0; j < a.n_; ++j) {
        alpha[j] += db.alpha[j];
        beta[j] += db.beta[j];
      }
      out.add_term(Bidegree(std::move(alpha), std::move(beta)), ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::d_z(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("d_z: index out of range");
  Poly out(n_);
  for (const auto& [d, c] : terms_) {
    const int e = d.alpha[j - 1];
    if (e == 0) continue;
    std::vector<int> alpha(d.alpha);
    alpha[j - 1] -= 1;
    out.add_term(Bidegree(std::move(alpha), d.beta), GaussianRational(e) * c);
  }
  return out;
}

Poly Poly::d_zbar(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("d_zbar: index out of range");
  Poly out(n_);
  for (const auto& [d, c] : terms_) {
    const int e = d.beta[j - 1];
    if (e == 0) continue;
    std::vector<int> beta(d.beta);
    beta[j - 1] -= 1;
    out.add_term(Bidegree(d.alpha, std::move(beta)), GaussianRational(e) * c);
  }
  return out;
}

Poly Poly::laplace_quarter() const {
  Poly out(n_);
  for (const auto& [d, c] : terms_) {
    for (int j = 0; j < n_; ++j) {
      const int a = d.alpha[j];
      const int b = d.beta[j];
      if (a == 0 || b == 0) continue;
      std::vector<int> alpha(d.alpha), beta(d.beta);
      alpha[j] -= 1;
      beta[j] -= 1;
      out.add_term(Bidegree(std::move(alpha), std::move(beta)),
                   GaussianRational(static_cast<long>(a) * b) * c);
    }
  }
  return out;
}

namespace {

std::complex<double> cpow(std::complex<double> w, int e) {
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < e; ++i) acc *= w;
  return acc;
}

}  // namespace

std::complex<double> Poly::eval(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("Poly::eval: wrong number of coordinates");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [d, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (int j = 0; j < n_; ++j) {
      term *= cpow(point[j], d.alpha[j]);
      term *= cpow(std::conj(point[j]), d.beta[j]);
    }
    acc += term;
  }
  return acc;
}

namespace {

std::string monomial_string(const Bidegree& d) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < d.dimension(); ++j) {
    if (d.alpha[j] > 0) {
      if (!first) os << ' ';
      os << 'z' << (j + 1) << '^' << d.alpha[j];
      first = false;
    }
    if (d.beta[j] > 0) {
      if (!first) os << ' ';
      os << "zb" << (j + 1) << '^' << d.beta[j];
      first = false;
    }
  }
  return os.str();
}

// Splits a purely negative coefficient off as a leading minus so terms can
// be joined with " - " instead of " + -".
bool is_pure_negative(const GaussianRational& c) {
  return (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
}

std::string coefficient_body(const GaussianRational& c, const std::string& mono) {
  if (mono.empty()) return c.to_string();
  if (c == GaussianRational(1)) return mono;
  std::string cs = c.to_string();
  if (!c.is_real() && c.re != 0) cs = "(" + cs + ")";
  return cs + "*" + mono;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    GaussianRational c = it->second;
    const bool neg = is_pure_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    os << coefficient_body(c, monomial_string(it->first));
    first = false;
  }
  return os.str();
}

}  // namespace fockspec
