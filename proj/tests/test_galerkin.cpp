#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "fockspec/galerkin.hpp"
#include "fockspec/rational.hpp"

using namespace fockspec;

namespace {

// Independent multiplicity oracle: eigenvalue mu at (n, q, D) has
// multiplicity C(n,q) * #{(alpha, beta) : |beta| = mu - q, |alpha + beta| <= D}.
long dimension_oracle(int n, int q, long mu, int degree_cap) {
  const long level = mu - q;
  if (level < 0) return 0;
  long scalar = 0;
  std::vector<int> alpha(n, 0), beta(n, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == 2 * n) {
      long beta_sum = 0;
      for (int b : beta) beta_sum += b;
      if (beta_sum == level) ++scalar;
      return;
    }
    int& slot = pos < n ? alpha[pos] : beta[pos - n];
    for (int e = 0; e <= rem; ++e) {
      slot = e;
      self(self, pos + 1, rem - e);
    }
    slot = 0;
  };
  rec(rec, 0, degree_cap);
  return scalar * static_cast<long>(binomial(n, q).convert_to<long>());
}

const SpectralCluster* find_cluster(const SpectralReport& r, long mu) {
  for (const SpectralCluster& c : r.clusters)
    if (c.nearest == mu) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("charge class enumeration and bases") {
  const auto classes = charge_classes(1, 4);
  // charges -4..4 at n = 1
  CHECK(classes.size() == 9u);
  std::set<int> seen;
  for (const ChargeClass& c : classes) {
    REQUIRE(c.charge.size() == 1u);
    seen.insert(c.charge[0]);
    CHECK(c.degree_cap == 4);
  }
  CHECK(seen.count(-4) == 1u);
  CHECK(seen.count(0) == 1u);
  CHECK(seen.count(4) == 1u);

  const ChargeClass zero{1, {0}, 4};
  const auto basis = class_basis(zero);
  REQUIRE(basis.size() == 3u);
  CHECK(basis[0] == Bidegree({0}, {0}));
  CHECK(basis[1] == Bidegree({1}, {1}));
  CHECK(basis[2] == Bidegree({2}, {2}));

  const ChargeClass minus{1, {-1}, 2};
  const auto mb = class_basis(minus);
  REQUIRE(mb.size() == 1u);
  CHECK(mb[0] == Bidegree({0}, {1}));

  // total basis size across classes matches the full truncated space
  long total = 0;
  for (const ChargeClass& c : classes) total += static_cast<long>(class_basis(c).size());
  CHECK(total == 15);  // monomials z^a zb^b with a + b <= 4

  SUBCASE("n = 2 classes") {
    const auto c2 = charge_classes(2, 2);
    long total2 = 0;
    for (const ChargeClass& c : c2) total2 += static_cast<long>(class_basis(c).size());
    CHECK(total2 == 15);  // C(2*2 + 2, 2*2) = monomials of degree <= 2 in 4 variables
  }
}

TEST_CASE("exact matrix assembly") {
  const ChargeClass zero{1, {0}, 4};
  const auto mats = build_class_matrices(zero, 0);
  REQUIRE(mats.b.rows() == 3);
  const double expected_b[3][3] = {{1, 1, 2}, {1, 2, 6}, {2, 6, 24}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(mats.b(i, j) == expected_b[i][j]);
  // A_ij = <box e_j, e_i>: box(zb^t z^t) has eigen-structure giving
  // A = B * diag-like action; spot values from box(z^t zb^t) = t z^t zb^t + ...
  // box(1) = 0 so the first column is zero.
  CHECK(mats.a(0, 0) == 0.0);
  CHECK(mats.a(1, 0) == 0.0);
  CHECK(mats.a(2, 0) == 0.0);
  // symmetry
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(mats.a(i, j) == mats.a(j, i));
}

TEST_CASE("single class spectra") {
  // class {zb}: box zb = zb, eigenvalue 1 at q = 0
  const ChargeClass minus{1, {-1}, 2};
  const auto m = build_class_matrices(minus, 0);
  const auto ev = solve_class(m.a, m.b);
  REQUIRE(ev.size() == 1u);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-10));

  // same class at q = 1: shift by one
  const auto m1 = build_class_matrices(minus, 1);
  const auto ev1 = solve_class(m1.a, m1.b);
  REQUIRE(ev1.size() == 1u);
  CHECK(ev1[0] == doctest::Approx(2.0).epsilon(1e-10));

  // charge-zero class, cap 4: eigenvalues {0, 1, 2}
  const ChargeClass zero{1, {0}, 4};
  const auto mz = build_class_matrices(zero, 0);
  const auto evz = solve_class(mz.a, mz.b);
  REQUIRE(evz.size() == 3u);
  CHECK(evz[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(evz[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(evz[2] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("full spectrum at n = 1, q = 0") {
  const SpectralReport r = full_spectrum(1, 0, 8, 1e-6);
  CHECK(r.basis_dimension == 45);  // (8+1)(8+2)/2
  REQUIRE(r.clusters.size() == 9u);
  long total = 0;
  for (long mu = 0; mu <= 8; ++mu) {
    const SpectralCluster* c = find_cluster(r, mu);
    REQUIRE(c != nullptr);
    CHECK(c->multiplicity == 8 - mu + 1);  // D - mu + 1
    CHECK(c->max_residual <= 1e-6);
    CHECK(std::abs(c->eigenvalue - static_cast<double>(mu)) <= 1e-6);
    total += c->multiplicity;
  }
  CHECK(total == r.basis_dimension);
  // ascending order
  CHECK(std::is_sorted(r.clusters.begin(), r.clusters.end(),
                       [](const SpectralCluster& a, const SpectralCluster& b) {
                         return a.nearest < b.nearest;
                       }));
}

TEST_CASE("full spectrum shifts with q") {
  const SpectralReport r = full_spectrum(1, 1, 6, 1e-6);
  CHECK(r.clusters.front().nearest == 1);
  CHECK(r.clusters.back().nearest == 7);
  for (const SpectralCluster& c : r.clusters)
    CHECK(c.multiplicity == dimension_oracle(1, 1, c.nearest, 6));
}

TEST_CASE("full spectrum multiplicities match the counting oracle") {
  for (int n = 1; n <= 2; ++n)
    for (int q = 0; q <= n; ++q) {
      const SpectralReport r = full_spectrum(n, q, 4, 1e-6);
      long total = 0;
      for (const SpectralCluster& c : r.clusters) {
        CHECK(c.multiplicity == dimension_oracle(n, q, c.nearest, 4));
        total += c.multiplicity;
      }
      CHECK(total == r.basis_dimension);
      // the bottom of the spectrum is exactly q
      CHECK(r.clusters.front().nearest == q);
    }
}

TEST_CASE("witten and pauli operators reproduce the box spectra") {
  SpectralOptions witten;
  witten.op = OperatorKind::witten;
  for (int q = 0; q <= 1; ++q) {
    const SpectralReport a = full_spectrum(1, q, 6, SpectralOptions{});
    const SpectralReport b = full_spectrum(1, q, 6, witten);
    CHECK(a == b);
  }
  SpectralOptions pm;
  pm.op = OperatorKind::pauli_minus;
  CHECK(full_spectrum(1, 0, 6, pm) == full_spectrum(1, 0, 6, SpectralOptions{}));
  SpectralOptions pp;
  pp.op = OperatorKind::pauli_plus;
  CHECK(full_spectrum(1, 1, 6, pp) == full_spectrum(1, 1, 6, SpectralOptions{}));
  // pauli operators are n = 1 constructions only
  CHECK_THROWS_AS(full_spectrum(2, 0, 4, pm), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(1, 1, 4, pm), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(1, 0, 4, pp), std::invalid_argument);
}

TEST_CASE("multiplicity growth is the infinite-multiplicity witness") {
  const std::vector<int> caps{4, 8, 12};
  for (int q = 0; q <= 1; ++q)
    for (long mu = q; mu <= 4; ++mu) {
      const auto growth = multiplicity_growth(1, q, mu, caps);
      REQUIRE(growth.size() == 3u);
      CHECK(growth[0] < growth[1]);
      CHECK(growth[1] < growth[2]);
      for (size_t i = 0; i < caps.size(); ++i)
        CHECK(growth[i] == dimension_oracle(1, q, mu, caps[i]));
    }
  CHECK_THROWS_AS(multiplicity_growth(1, 1, 0, caps), std::invalid_argument);
}

TEST_CASE("input validation and guard rails") {
  CHECK_THROWS_AS(full_spectrum(0, 0, 4, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(1, 2, 4, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(1, 0, 0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(1, 0, 4, -1.0), std::invalid_argument);
  // degree caps above 16 need the explicit opt-in
  CHECK_THROWS_AS(full_spectrum(1, 0, 18, 1e-6), std::invalid_argument);
}

TEST_CASE("thread count resolution and determinism") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(1) == 1);
  CHECK(resolve_threads(0) >= 1);
  SpectralOptions serial;
  serial.threads = 1;
  SpectralOptions parallel;
  parallel.threads = 4;
  const SpectralReport a = full_spectrum(2, 1, 6, serial);
  const SpectralReport b = full_spectrum(2, 1, 6, parallel);
  CHECK(a == b);
}
