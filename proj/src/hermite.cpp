#include "fockspec/hermite.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fockspec {

RealPoly::RealPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RealPoly: dimension must be >= 1");
}

RealPoly RealPoly::constant(int n, GaussianRational c) {
  RealPoly p(n);
  p.add_term(Bidegree(std::vector<int>(n, 0), std::vector<int>(n, 0)), c);
  return p;
}

RealPoly RealPoly::monomial(Bidegree d, GaussianRational c) {
  RealPoly p(d.dimension());
  p.add_term(d, c);
  return p;
}

RealPoly RealPoly::variable_x(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("variable_x: index out of range");
  std::vector<int> a(n, 0);
  a[j - 1] = 1;
  return monomial(Bidegree(std::move(a), std::vector<int>(n, 0)));
}

RealPoly RealPoly::variable_y(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("variable_y: index out of range");
  std::vector<int> b(n, 0);
  b[j - 1] = 1;
  return monomial(Bidegree(std::vector<int>(n, 0), std::move(b)));
}

int RealPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

GaussianRational RealPoly::coefficient(const Bidegree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? GaussianRational() : it->second;
}

const Bidegree& RealPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("RealPoly::leading: zero polynomial");
  return terms_.rbegin()->first;
}

void RealPoly::check_same_dimension(const RealPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RealPoly: dimension mismatch");
}

void RealPoly::add_term(const Bidegree& d, const GaussianRational& c) {
  if (d.dimension() != n_) throw std::invalid_argument("RealPoly: term dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RealPoly& RealPoly::operator+=(const RealPoly& o) {
  check_same_dimension(o);
  if (this == &o) return scale(GaussianRational(2));
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

RealPoly& RealPoly::operator-=(const RealPoly& o) {
  check_same_dimension(o);
  if (this == &o) {  // erasing while iterating the same map is not an option
    terms_.clear();
    return *this;
  }
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  a.check_same_dimension(b);
  RealPoly out(a.n_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      std::vector<int> xs(da.alpha), ys(da.beta);
      for (int j = 0; j < a.n_; ++j) {
        xs[j] += db.alpha[j];
        ys[j] += db.beta[j];
      }
      out.add_term(Bidegree(std::move(xs), std::move(ys)), ca * cb);
    }
  }
  return out;
}

RealPoly& RealPoly::operator*=(const RealPoly& o) { return *this = *this * o; }

RealPoly& RealPoly::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

std::string real_monomial_string(const Bidegree& d) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < d.dimension(); ++j) {
    if (d.alpha[j] > 0) {
      if (!first) os << ' ';
      os << 'x' << (j + 1) << '^' << d.alpha[j];
      first = false;
    }
    if (d.beta[j] > 0) {
      if (!first) os << ' ';
      os << 'y' << (j + 1) << '^' << d.beta[j];
      first = false;
    }
  }
  return os.str();
}

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

RealPoly real_pow(const RealPoly& base, int e) {
  RealPoly acc = RealPoly::constant(base.dimension(), GaussianRational(1));
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

Poly complex_pow(const Poly& base, int e) {
  Poly acc = Poly::constant(base.dimension(), GaussianRational(1));
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

std::string RealPoly::to_string() const {
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
    os << coefficient_body(c, real_monomial_string(it->first));
    first = false;
  }
  return os.str();
}

RealPoly to_real(const Poly& p) {
  const int n = p.dimension();
  RealPoly out(n);
  for (const auto& [d, c] : p.terms()) {
    RealPoly acc = RealPoly::constant(n, c);
    for (int j = 1; j <= n; ++j) {
      const RealPoly x = RealPoly::variable_x(n, j);
      const RealPoly iy = GaussianRational::i() * RealPoly::variable_y(n, j);
      if (d.alpha[j - 1] > 0) acc *= real_pow(x + iy, d.alpha[j - 1]);
      if (d.beta[j - 1] > 0) acc *= real_pow(x - iy, d.beta[j - 1]);
    }
    out += acc;
  }
  return out;
}

Poly to_complex(const RealPoly& r) {
  const int n = r.dimension();
  const GaussianRational half(Rational(1, 2));
  const GaussianRational half_i(Rational(0), Rational(1, 2));
  Poly out(n);
  for (const auto& [d, c] : r.terms()) {
    Poly acc = Poly::constant(n, c);
    for (int j = 1; j <= n; ++j) {
      const Poly z = Poly::variable_z(n, j);
      const Poly zb = Poly::variable_zbar(n, j);
      if (d.alpha[j - 1] > 0) acc *= complex_pow(half * (z + zb), d.alpha[j - 1]);
      if (d.beta[j - 1] > 0) acc *= complex_pow(half_i * (zb - z), d.beta[j - 1]);
    }
    out += acc;
  }
  return out;
}

RealPoly hermite_poly(int k) {
  if (k < 0) throw std::invalid_argument("hermite_poly: negative degree");
  RealPoly prev = RealPoly::constant(1, GaussianRational(1));  // H_0
  if (k == 0) return prev;
  const RealPoly two_x = GaussianRational(2) * RealPoly::variable_x(1, 1);
  RealPoly cur = two_x;  // H_1
  for (int i = 1; i < k; ++i) {
    RealPoly next = two_x * cur;
    next -= GaussianRational(2 * i) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RealPoly hermite_product(int i, int j) {
  const RealPoly hx = hermite_poly(i);
  // H_j with x replaced by y: swap the exponent roles.
  const RealPoly hj = hermite_poly(j);
  RealPoly hy(1);
  for (const auto& [d, c] : hj.terms()) hy.add_term(Bidegree(d.beta, d.alpha), c);
  return hx * hy;
}

Rational gauss_moment(int k) {
  if (k < 0) throw std::invalid_argument("gauss_moment: negative power");
  if (k % 2 == 1) return Rational(0);
  const int m = k / 2;
  return Rational(factorial(2 * m), int_pow(Integer(4), m) * factorial(m));
}

SqrtPiScalar& SqrtPiScalar::operator+=(const SqrtPiScalar& o) {
  if (o.coeff.is_zero()) return *this;
  if (coeff.is_zero()) {
    *this = o;
    return *this;
  }
  if (sqrt_pi_power != o.sqrt_pi_power)
    throw std::invalid_argument("SqrtPiScalar: mixed sqrt(pi) powers");
  coeff += o.coeff;
  return *this;
}

double SqrtPiScalar::to_double() const {
  if (!coeff.is_real()) throw std::logic_error("SqrtPiScalar::to_double: value is not real");
  double value = fockspec::to_double(coeff.re);
  const double sqrt_pi = 1.7724538509055160273;
  for (int i = 0; i < sqrt_pi_power; ++i) value *= sqrt_pi;
  for (int i = 0; i > sqrt_pi_power; --i) value /= sqrt_pi;
  return value;
}

std::string SqrtPiScalar::to_string() const {
  if (is_zero()) return "0";
  std::string cs = coeff.to_string();
  if (!coeff.is_real() && coeff.re != 0) cs = "(" + cs + ")";
  return cs + " * sqrtpi^" + std::to_string(sqrt_pi_power);
}

SqrtPiScalar real_inner(const RealPoly& p, const RealPoly& q) {
  if (p.dimension() != q.dimension())
    throw std::invalid_argument("real_inner: dimension mismatch");
  const int n = p.dimension();
  SqrtPiScalar acc = SqrtPiScalar::zero(2 * n);
  for (const auto& [dp, cp] : p.terms()) {
    for (const auto& [dq, cq] : q.terms()) {
      Rational weight(1);
      bool vanished = false;
      for (int j = 0; j < n && !vanished; ++j) {
        const Rational mx = gauss_moment(dp.alpha[j] + dq.alpha[j]);
        const Rational my = gauss_moment(dp.beta[j] + dq.beta[j]);
        if (mx == 0 || my == 0) {
          vanished = true;
          break;
        }
        weight *= mx * my;
      }
      if (vanished) continue;
      SqrtPiScalar term(cp * cq.conj(), 2 * n);
      term.coeff *= GaussianRational(weight);
      acc += term;
    }
  }
  return acc;
}

std::vector<HermiteTerm> hermite_expand(const Poly& p) {
  if (p.dimension() != 1)
    throw std::invalid_argument("hermite_expand: defined for n = 1 only");
  std::vector<HermiteTerm> result;
  RealPoly remainder = to_real(p);
  while (!remainder.is_zero()) {
    const Bidegree lead = remainder.leading();
    const int i = lead.alpha[0];
    const int j = lead.beta[0];
    const GaussianRational top = remainder.coefficient(lead);
    const GaussianRational coeff =
        top / GaussianRational(Rational(int_pow(Integer(2), i + j)));
    RealPoly subtract = hermite_product(i, j);
    subtract.scale(coeff);
    remainder -= subtract;
    result.push_back(HermiteTerm{i, j, coeff});
  }
  return result;
}

}  // namespace fockspec
