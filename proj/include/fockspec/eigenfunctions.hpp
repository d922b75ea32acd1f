// Closed-form eigenfunctions of box_{phi,q} for phi = |z|^2: the scalar
// families u_{k,m} (eigenvalue k+m) and v_{k,m} (eigenvalue k) at n = 1,
// their tensor products for n > 1, exact verification of the eigenvalue
// equation, and expansion of arbitrary monomials in the eigenbasis.
//
// Conventions:
//   * eigenvalue always states the eigenvalue of the object as it stands:
//     scalar functions carry the scalar eigenvalue, and a function embedded
//     in component J of a (0,q)-form carries the shifted value (scalar + q).
//   * the antiholomorphic monomial zb^k (eigenvalue k) is the m = 0
//     degeneration of the u-family; u_fn keeps its documented domain m >= 1
//     and scalar_basis_fn constructs the degenerate case directly.
#ifndef FOCKSPEC_EIGENFUNCTIONS_HPP
#define FOCKSPEC_EIGENFUNCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fockspec/forms.hpp"
#include "fockspec/poly.hpp"

namespace fockspec {

enum class EigenKind { u, v, tensor, holomorphic };

struct EigenFunction {
  long eigenvalue = 0;
  EigenKind kind = EigenKind::holomorphic;
  /// One (k, m) pair per scalar factor; a single pair for n = 1 functions.
  /// For kind holomorphic the pair is (0, m) meaning z^m.
  std::vector<std::pair<int, int>> params;
  Poly poly;
  /// Present when the function lives in component J of a (0,q)-form,
  /// q = component->size(); absent for plain scalar functions.
  std::optional<MultiIndex> component;

  EigenFunction() : poly(1) {}
};

/// u_{k,m} = zb^{k+m} z^m + sum_{j=1}^m a_j zb^{k+m-j} z^{m-j} with
/// a_j = (-1)^j (k+m)! m! / (j! (k+m-j)! (m-j)!); eigenvalue k + m.
/// Requires k >= 0, m >= 1.
EigenFunction u_fn(int k, int m);

/// v_{k,m} = zb^k z^{k+m} + sum_{j=1}^k b_j zb^{k-j} z^{k+m-j} with
/// b_j = (-1)^j (k+m)! k! / (j! (k+m-j)! (k-j)!); eigenvalue k.
/// Requires k >= 1, m >= 0.
EigenFunction v_fn(int k, int m);

/// The holomorphic monomial z^m at n = 1; eigenvalue 0. Requires m >= 0.
EigenFunction holomorphic_fn(int m);

/// The unique family member with leading monomial zb^beta z^alpha at n = 1:
/// a holomorphic monomial (beta = 0), the degenerate u-member zb^beta
/// (alpha = 0), u_fn(beta-alpha, alpha) for beta >= alpha >= 1 or
/// v_fn(beta, alpha-beta) for alpha > beta >= 1. Eigenvalue is beta in
/// every case.
EigenFunction scalar_basis_fn(int alpha, int beta);

/// Product of n scalar factors (factor j in variable z_j), placed in
/// component J of a (0,q)-form; eigenvalue = sum of factor eigenvalues + q.
/// Requires |J| = q and every factor scalar with dimension 1.
EigenFunction tensor_fn(const std::vector<EigenFunction>& factors, const MultiIndex& J, int q);

struct VerifyResult {
  bool ok = false;
  /// box_coord(f) - eigenvalue * f, as the single nonzero component.
  Poly residual;

  VerifyResult() : residual(1) {}
  VerifyResult(bool o, Poly r) : ok(o), residual(std::move(r)) {}
};

/// Exact check of the eigenvalue equation. Scalar functions are checked
/// against scalar_box; embedded functions against box_coord on the full
/// (0,q)-form.
VerifyResult verify_eigen(const EigenFunction& f);

/// Exact coefficients expressing z^alpha zb^beta in the eigenfamily, by
/// leading-term back-substitution inside the fixed charge class alpha-beta.
/// Works for any dimension; n > 1 entries are tensors of scalar_basis_fn
/// factors with component absent.
std::vector<std::pair<EigenFunction, GaussianRational>> expand_monomial(const Bidegree& a);

}  // namespace fockspec

#endif  // FOCKSPEC_EIGENFUNCTIONS_HPP
