// (0,q)-forms with polynomial coefficients over increasing multi-indices,
// plus the basis-level wedge and contraction with their sign conventions.
#ifndef FOCKSPEC_FORMS_HPP
#define FOCKSPEC_FORMS_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockspec/poly.hpp"

namespace fockspec {

/// Strictly increasing list of q distinct indices in 1..n (1-based).
class MultiIndex {
 public:
  MultiIndex() = default;  // empty index, q = 0
  explicit MultiIndex(std::vector<int> indices);

  /// Sorts an arbitrary index list, returning the increasing multi-index and
  /// the permutation sign; nullopt when an index repeats (the form vanishes).
  static std::optional<std::pair<MultiIndex, int>> normalized(std::vector<int> indices);

  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int k) const;
  int max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.indices_ <=> b.indices_;
  }

  std::string to_string() const;  // "(1,2)"

 private:
  std::vector<int> indices_;
};

/// dzb_k ^ dzb_J as a signed increasing multi-index; nullopt when k is in J.
/// Sign is (-1)^(number of elements of J below k).
std::optional<std::pair<MultiIndex, int>> wedge_basis(int k, const MultiIndex& J);

/// dzb_k -| dzb_J (interior product); nullopt when k is not in J.
/// Sign is (-1)^(zero-based position of k in J), pinned by the pairing
/// identity <a, dzb_k -| dzb_J> = <dzb_k ^ a, dzb_J>.
std::optional<std::pair<MultiIndex, int>> contract_basis(int k, const MultiIndex& J);

/// All increasing multi-indices of size q inside 1..n, lexicographic order.
std::vector<MultiIndex> all_multi_indices(int n, int q);

class QForm {
 public:
  QForm(int n, int q);

  static QForm monomial_form(int n, int q, const MultiIndex& J, Poly coeff);

  int dimension() const { return n_; }
  int degree() const { return q_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Zero coefficients are never stored; reads of absent components give 0.
  Poly coefficient(const MultiIndex& J) const;
  const std::map<MultiIndex, Poly>& coefficients() const { return coeffs_; }

  void add_term(const MultiIndex& J, const Poly& p);
  /// Accepts an unsorted index list and applies the permutation sign.
  void add_term_unnormalized(std::vector<int> indices, const Poly& p);

  QForm& operator+=(const QForm& o);
  QForm& operator-=(const QForm& o);
  QForm& scale(const GaussianRational& c);

  friend QForm operator+(QForm a, const QForm& b) { return a += b; }
  friend QForm operator-(QForm a, const QForm& b) { return a -= b; }
  friend QForm operator*(const GaussianRational& c, QForm f) { return f.scale(c); }
  friend bool operator==(const QForm& a, const QForm& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int n_;
  int q_;
  std::map<MultiIndex, Poly> coeffs_;

  void check_compatible(const QForm& o) const;
};

QForm form_add(const QForm& a, const QForm& b);
QForm form_scale(const GaussianRational& c, const QForm& f);

}  // namespace fockspec

#endif  // FOCKSPEC_FORMS_HPP
