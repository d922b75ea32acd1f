// Galerkin spectral computation on degree-truncated monomial bases split by
// charge class (the componentwise alpha - beta vector, an invariant of the
// Laplacian). Matrices are assembled exactly as rationals -- the common pi^n
// of all inner products cancels in the pencil (A, B) -- and floats enter
// only at the generalized symmetric eigensolve.
//
// Truncation is exact: the Laplacian never raises total degree, so every
// computed eigenvalue must sit on an integer >= q. Deviations beyond the
// cluster tolerance are treated as implementation bugs (hard failure),
// never as truncation error.
#ifndef FOCKSPEC_GALERKIN_HPP
#define FOCKSPEC_GALERKIN_HPP

#include <Eigen/Dense>

#include <vector>

#include "fockspec/poly.hpp"

namespace fockspec {

/// Operator driving the spectral computation. box is dbar dbar* + dbar* dbar;
/// witten the conjugated complex Witten Laplacian (identical matrices is the
/// computational content of the conjugation identity); the Pauli pair are the
/// n = 1 scalar reps, pauli_minus ~ (q = 0) and pauli_plus ~ (q = 1).
enum class OperatorKind { box, witten, pauli_minus, pauli_plus };

struct ChargeClass {
  int n = 1;
  std::vector<int> charge;  // componentwise alpha - beta
  int degree_cap = 0;

  friend bool operator==(const ChargeClass& a, const ChargeClass& b) = default;
};

/// All classes with sum |charge_j| <= degree_cap (the others are empty),
/// in a fixed deterministic order.
std::vector<ChargeClass> charge_classes(int n, int degree_cap);

/// Monomials z^alpha zb^beta with alpha - beta = charge and total degree
/// <= degree_cap, ordered by total degree then lexicographically.
std::vector<Bidegree> class_basis(const ChargeClass& c);

struct ClassMatrices {
  Eigen::MatrixXd a;  // a(i,j) = <op e_j, e_i> / pi^n
  Eigen::MatrixXd b;  // b(i,j) = <e_j, e_i> / pi^n
};

/// Exact assembly of the operator and Gram blocks for one class, embedded in
/// the component J0 = (1..q) for the form-valued operators. Entries are
/// verified real and symmetric before conversion to floats.
ClassMatrices build_class_matrices(const ChargeClass& c, int q,
                                   OperatorKind op = OperatorKind::box);

/// Generalized eigenvalues of A x = lambda B x, ascending. The pencil is
/// prescaled by diag(1/sqrt(B_ii)) before the Cholesky-based solve; a
/// reciprocal condition estimate of B below 1e-10 raises an error suggesting
/// a lower degree cap.
std::vector<double> solve_class(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct SpectralCluster {
  double eigenvalue = 0;    // mean of the clustered raw eigenvalues
  long nearest = 0;         // the shared nearest integer
  long multiplicity = 0;    // across all charge classes and components J
  double max_residual = 0;  // max |lambda - nearest| within the cluster

  friend bool operator==(const SpectralCluster& a, const SpectralCluster& b) = default;
};

struct SpectralReport {
  int n = 1;
  int q = 0;
  int degree_cap = 0;
  long basis_dimension = 0;  // multiplicities sum to this
  std::vector<SpectralCluster> clusters;  // ascending by nearest integer

  friend bool operator==(const SpectralReport& a, const SpectralReport& b) = default;
};

struct SpectralOptions {
  double tolerance = 1e-6;
  OperatorKind op = OperatorKind::box;
  /// degree_cap > 16 is refused without this (factorial Gram growth).
  bool allow_large_degree = false;
  /// 0 resolves FOCKSPEC_THREADS, then hardware concurrency.
  int threads = 0;
};

/// Union of the per-class spectra over all charge classes and all C(n,q)
/// components, clustered to nearest integers. Classes are solved
/// concurrently; the merge is deterministic. Any eigenvalue farther than
/// the tolerance from every integer >= q is a hard failure.
SpectralReport full_spectrum(int n, int q, int degree_cap,
                             const SpectralOptions& options = {});
SpectralReport full_spectrum(int n, int q, int degree_cap, double tolerance);

/// Multiplicity of the integer eigenvalue mu across increasing truncations;
/// the finite witness of infinite multiplicity. Requires mu >= q.
std::vector<long> multiplicity_growth(int n, int q, long mu,
                                      const std::vector<int>& degree_caps,
                                      const SpectralOptions& options = {});

/// requested >= 1 wins; otherwise FOCKSPEC_THREADS, then hardware count.
int resolve_threads(int requested);

}  // namespace fockspec

#endif  // FOCKSPEC_GALERKIN_HPP
