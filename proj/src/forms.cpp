#include "fockspec/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockspec {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) throw std::invalid_argument("MultiIndex: indices are 1-based");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw std::invalid_argument("MultiIndex: indices must be strictly increasing");
  }
}

std::optional<std::pair<MultiIndex, int>> MultiIndex::normalized(std::vector<int> indices) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (size_t i = 1; i < indices.size(); ++i) {
    for (size_t j = i; j > 0 && indices[j] < indices[j - 1]; --j) {
      std::swap(indices[j], indices[j - 1]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1]) return std::nullopt;
  return std::make_pair(MultiIndex(std::move(indices)), sign);
}

bool MultiIndex::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i];
  }
  os << ')';
  return os.str();
}

std::optional<std::pair<MultiIndex, int>> wedge_basis(int k, const MultiIndex& J) {
  if (k < 1) throw std::invalid_argument("wedge_basis: index is 1-based");
  if (J.contains(k)) return std::nullopt;
  const auto& idx = J.indices();
  std::vector<int> out;
  out.reserve(idx.size() + 1);
  int below = 0;
  for (int j : idx)
    if (j < k) ++below;
  out.insert(out.end(), idx.begin(), idx.begin() + below);
  out.push_back(k);
  out.insert(out.end(), idx.begin() + below, idx.end());
  return std::make_pair(MultiIndex(std::move(out)), below % 2 == 0 ? 1 : -1);
}

std::optional<std::pair<MultiIndex, int>> contract_basis(int k, const MultiIndex& J) {
  if (k < 1) throw std::invalid_argument("contract_basis: index is 1-based");
  if (!J.contains(k)) return std::nullopt;
  const auto& idx = J.indices();
  std::vector<int> out;
  out.reserve(idx.size() - 1);
  int pos = 0;
  for (int j : idx) {
    if (j == k) break;
    ++pos;
  }
  for (int j : idx)
    if (j != k) out.push_back(j);
  return std::make_pair(MultiIndex(std::move(out)), pos % 2 == 0 ? 1 : -1);
}

std::vector<MultiIndex> all_multi_indices(int n, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("all_multi_indices: need 0 <= q <= n");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  // lexicographic enumeration of q-subsets of {1..n}
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == q) {
      out.emplace_back(MultiIndex(cur));
      return;
    }
    for (int j = start; j <= n; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

QForm::QForm(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw std::invalid_argument("QForm: dimension must be >= 1");
  if (q < 0 || q > n) throw std::invalid_argument("QForm: degree must satisfy 0 <= q <= n");
}

QForm QForm::monomial_form(int n, int q, const MultiIndex& J, Poly coeff) {
  QForm f(n, q);
  f.add_term(J, coeff);
  return f;
}

Poly QForm::coefficient(const MultiIndex& J) const {
  auto it = coeffs_.find(J);
  return it == coeffs_.end() ? Poly(n_) : it->second;
}

void QForm::add_term(const MultiIndex& J, const Poly& p) {
  if (J.size() != q_) throw std::invalid_argument("QForm: multi-index length must equal q");
  if (J.max_index() > n_) throw std::invalid_argument("QForm: multi-index exceeds dimension");
  if (p.dimension() != n_) throw std::invalid_argument("QForm: coefficient dimension mismatch");
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(J, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void QForm::add_term_unnormalized(std::vector<int> indices, const Poly& p) {
  auto norm = MultiIndex::normalized(std::move(indices));
  if (!norm) return;  // repeated index: dzb_j ^ dzb_j = 0
  add_term(norm->first, norm->second == 1 ? p : -p);
}

void QForm::check_compatible(const QForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("QForm: dimension mismatch");
  if (q_ != o.q_) throw std::invalid_argument("QForm: degree mismatch");
}

QForm& QForm::operator+=(const QForm& o) {
  check_compatible(o);
  if (this == &o) return scale(GaussianRational(2));
  for (const auto& [J, p] : o.coeffs_) add_term(J, p);
  return *this;
}

QForm& QForm::operator-=(const QForm& o) {
  check_compatible(o);
  if (this == &o) {  // erasing while iterating the same map is not an option
    coeffs_.clear();
    return *this;
  }
  for (const auto& [J, p] : o.coeffs_) add_term(J, -p);
  return *this;
}

QForm& QForm::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [J, p] : coeffs_) p.scale(c);
  return *this;
}

std::string QForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [J, p] : coeffs_) {
    if (!first) os << " + ";
    if (q_ == 0) {
      os << p.to_string();
    } else {
      os << '(' << p.to_string() << ") dzb" << J.to_string();
    }
    first = false;
  }
  return os.str();
}

QForm form_add(const QForm& a, const QForm& b) { return a + b; }

QForm form_scale(const GaussianRational& c, const QForm& f) { return c * f; }

}  // namespace fockspec
