// Randomized exact identity suites for the dbar-complex and the Witten
// complex, plus the deterministic spectral-equality checks. Every identity
// is verified by exact equality of polynomials, forms or exact scalars;
// a failing case is reported with the offending inputs rendered.
//
// Each check spreads its `count` random forms across all valid (n, q) pairs
// with n <= n_max, drawing from a single seeded stream, so a fixed seed
// reproduces the exact inputs.
#ifndef FOCKSPEC_CHECKS_HPP
#define FOCKSPEC_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fockspec {

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string counterexample;  // empty when passed; first failure otherwise
};

// dbar-complex identities.
CheckResult check_dbar_squared(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_dbar_star_squared(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_box_coord_agreement(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_adjoint_relation(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_box_self_adjoint(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_dirichlet_box(int n_max, int max_degree, int count, std::uint64_t seed);

/// The six dbar-complex identities with one derived seed per check.
std::vector<CheckResult> operator_identity_suite(int n_max, int max_degree, int count,
                                                 std::uint64_t seed);

// Witten-complex identities.
CheckResult check_witten_d_squared(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_witten_d_star_squared(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_witten_conjugation(int n_max, int max_degree, int count, std::uint64_t seed);
CheckResult check_witten_coord_agreement(int n_max, int max_degree, int count, std::uint64_t seed);
/// Both commutation identities: D (q -> q+1) and D* (q+1 -> q) against the
/// Laplacians of the adjacent degrees.
CheckResult check_witten_commutation(int n_max, int max_degree, int count, std::uint64_t seed);
/// Delta^{(0,1)} = (Delta^{(0,0)} tensor I) + M_phi with M_phi = identity.
CheckResult check_witten_split(int n_max, int max_degree, int count, std::uint64_t seed);

/// Spectral reports from Witten matrices equal the box reports, bitwise,
/// for all 0 <= q <= n <= n_max at the given truncation.
CheckResult check_witten_spectral_equality(int n_max, int degree_cap);

/// Pauli reports at n = 1: P- equals the (q = 0) box report, P+ the (q = 1)
/// box report.
CheckResult check_pauli_reports(int degree_cap);

/// Witten identities plus the spectral equality at (n, q, degree_cap).
/// d^2-type checks are included only when n allows them.
std::vector<CheckResult> witten_identity_suite(int n, int q, int degree_cap, int max_degree,
                                               int count, std::uint64_t seed);

/// Hermite cross-checks: expansion round-trips and span dimensions for all
/// n = 1 monomials of degree <= degree_cap, exact orthogonality and norms of
/// the Hermite products, coverage of the eigenfunction families, and seeded
/// real/complex substitution round-trips for n <= 3.
std::vector<CheckResult> hermite_check_suite(int degree_cap, int count, std::uint64_t seed);

}  // namespace fockspec

#endif  // FOCKSPEC_CHECKS_HPP
