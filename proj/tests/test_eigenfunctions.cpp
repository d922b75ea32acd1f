#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fockspec/eigenfunctions.hpp"
#include "fockspec/inner.hpp"
#include "fockspec/operators.hpp"

using namespace fockspec;

namespace {

Poly zv(int n, int j) { return Poly::variable_z(n, j); }
Poly zb(int n, int j) { return Poly::variable_zbar(n, j); }
Poly one(int n) { return Poly::constant(n, GaussianRational(1)); }

}  // namespace

TEST_CASE("u family closed forms") {
  const EigenFunction u11 = u_fn(1, 1);
  CHECK(u11.eigenvalue == 2);
  CHECK(u11.kind == EigenKind::u);
  CHECK(u11.params == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK_FALSE(u11.component.has_value());
  CHECK(u11.poly == zb(1, 1) * zb(1, 1) * zv(1, 1) - GaussianRational(2) * zb(1, 1));

  const EigenFunction u01 = u_fn(0, 1);
  CHECK(u01.eigenvalue == 1);
  CHECK(u01.poly == zb(1, 1) * zv(1, 1) - one(1));

  // u_{2,2} = zb^4 z^2 - 8 zb^3 z + 12 zb^2
  const EigenFunction u22 = u_fn(2, 2);
  CHECK(u22.eigenvalue == 4);
  CHECK(u22.poly.coefficient(Bidegree({2}, {4})) == GaussianRational(1));
  CHECK(u22.poly.coefficient(Bidegree({1}, {3})) == GaussianRational(-8));
  CHECK(u22.poly.coefficient(Bidegree({0}, {2})) == GaussianRational(12));
  CHECK(u22.poly.terms().size() == 3);

  CHECK_THROWS_AS(u_fn(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(u_fn(0, 0), std::invalid_argument);
}

TEST_CASE("v family closed forms") {
  const EigenFunction v11 = v_fn(1, 1);
  CHECK(v11.eigenvalue == 1);
  CHECK(v11.kind == EigenKind::v);
  CHECK(v11.poly == zb(1, 1) * zv(1, 1) * zv(1, 1) - GaussianRational(2) * zv(1, 1));

  // v_{2,0} = zb^2 z^2 - 4 zb z + 2
  const EigenFunction v20 = v_fn(2, 0);
  CHECK(v20.eigenvalue == 2);
  CHECK(v20.poly.coefficient(Bidegree({2}, {2})) == GaussianRational(1));
  CHECK(v20.poly.coefficient(Bidegree({1}, {1})) == GaussianRational(-4));
  CHECK(v20.poly.coefficient(Bidegree({0}, {0})) == GaussianRational(2));

  CHECK_THROWS_AS(v_fn(0, 1), std::invalid_argument);
}

TEST_CASE("coefficient recurrences") {
  // a_j = -a_{j-1} (k+m-j+1)(m-j+1)/j starting from a_0 = 1, same for b_j
  // with m and k swapped in the falling factor.
  for (int k = 0; k <= 5; ++k)
    for (int m = 1; m <= 5; ++m) {
      const Poly& p = u_fn(k, m).poly;
      GaussianRational prev(1);
      for (int j = 1; j <= m; ++j) {
        const GaussianRational expected =
            -prev * GaussianRational(Rational(k + m - j + 1) * Rational(m - j + 1), 0) /
            GaussianRational(j);
        CHECK(p.coefficient(Bidegree({m - j}, {k + m - j})) == expected);
        prev = expected;
      }
    }
  for (int k = 1; k <= 5; ++k)
    for (int m = 0; m <= 5; ++m) {
      const Poly& p = v_fn(k, m).poly;
      GaussianRational prev(1);
      for (int j = 1; j <= k; ++j) {
        const GaussianRational expected =
            -prev * GaussianRational(Rational(k + m - j + 1) * Rational(k - j + 1), 0) /
            GaussianRational(j);
        CHECK(p.coefficient(Bidegree({k + m - j}, {k - j})) == expected);
        prev = expected;
      }
    }
}

TEST_CASE("family overlap on the diagonal") {
  // u_{0,m} and v_{m,0} are the same polynomial with the same eigenvalue.
  for (int m = 1; m <= 6; ++m) {
    CHECK(u_fn(0, m).poly == v_fn(m, 0).poly);
    CHECK(u_fn(0, m).eigenvalue == v_fn(m, 0).eigenvalue);
  }
}

TEST_CASE("exact eigenvalue verification") {
  for (int k = 0; k <= 5; ++k)
    for (int m = 1; m <= 5; ++m) {
      const VerifyResult r = verify_eigen(u_fn(k, m));
      CHECK(r.ok);
      CHECK(r.residual.is_zero());
    }
  for (int k = 1; k <= 5; ++k)
    for (int m = 0; m <= 5; ++m) CHECK(verify_eigen(v_fn(k, m)).ok);
  for (int m = 0; m <= 5; ++m) CHECK(verify_eigen(holomorphic_fn(m)).ok);

  SUBCASE("tampered functions fail with a nonzero residual") {
    EigenFunction bad = u_fn(2, 1);
    bad.poly += one(1);
    const VerifyResult r = verify_eigen(bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.residual.is_zero());

    EigenFunction wrong = u_fn(2, 1);
    wrong.eigenvalue = 4;
    CHECK_FALSE(verify_eigen(wrong).ok);
  }
}

TEST_CASE("scalar basis covers every leading monomial") {
  for (int alpha = 0; alpha <= 5; ++alpha)
    for (int beta = 0; beta <= 5; ++beta) {
      const EigenFunction f = scalar_basis_fn(alpha, beta);
      CHECK(f.eigenvalue == beta);
      CHECK(f.poly.leading() == Bidegree({alpha}, {beta}));
      CHECK(f.poly.coefficient(f.poly.leading()) == GaussianRational(1));
      CHECK(verify_eigen(f).ok);
    }
  CHECK(scalar_basis_fn(0, 3).kind == EigenKind::u);
  CHECK(scalar_basis_fn(3, 0).kind == EigenKind::holomorphic);
  CHECK(scalar_basis_fn(2, 3).kind == EigenKind::u);
  CHECK(scalar_basis_fn(3, 2).kind == EigenKind::v);
}

TEST_CASE("tensor eigenfunctions") {
  const std::vector<EigenFunction> factors{u_fn(1, 1), v_fn(1, 0)};
  const EigenFunction t = tensor_fn(factors, MultiIndex({1}), 1);
  // scalar eigenvalues 2 and 1, q-shift 1
  CHECK(t.eigenvalue == 4);
  CHECK(t.kind == EigenKind::tensor);
  CHECK(t.params == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}});
  REQUIRE(t.component.has_value());
  CHECK(*t.component == MultiIndex({1}));
  CHECK(t.poly.dimension() == 2);
  // factor product: (zb1^2 z1 - 2 zb1)(zb2 z2 - 1)
  const Poly expected = (zb(2, 1) * zb(2, 1) * zv(2, 1) - GaussianRational(2) * zb(2, 1)) *
                        (zb(2, 2) * zv(2, 2) - one(2));
  CHECK(t.poly == expected);
  CHECK(verify_eigen(t).ok);

  // the same tensor as a plain scalar (q = 0)
  const EigenFunction s = tensor_fn(factors, MultiIndex(), 0);
  CHECK(s.eigenvalue == 3);
  CHECK(verify_eigen(s).ok);

  // a 2-form component at n = 2
  const EigenFunction top =
      tensor_fn({u_fn(0, 1), holomorphic_fn(2)}, MultiIndex({1, 2}), 2);
  CHECK(top.eigenvalue == 1 + 0 + 2);
  CHECK(verify_eigen(top).ok);

  CHECK_THROWS_AS(tensor_fn(factors, MultiIndex({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(tensor_fn({}, MultiIndex(), 0), std::invalid_argument);
  CHECK_THROWS_AS(tensor_fn({t}, MultiIndex({1}), 1), std::invalid_argument);
}

TEST_CASE("eigenfunctions with distinct eigenvalues are orthogonal") {
  // Within one charge class the basis members have pairwise distinct
  // eigenvalues, so self-adjointness forces exact orthogonality.
  for (int c = -3; c <= 3; ++c) {
    std::vector<EigenFunction> members;
    for (int beta = 0; beta + std::max(c, 0) <= 6 - std::max(-c, 0); ++beta) {
      const int alpha = beta + c;
      if (alpha < 0 || alpha + beta > 6) continue;
      members.push_back(scalar_basis_fn(alpha, beta));
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        CHECK(members[i].eigenvalue != members[j].eigenvalue);
        CHECK(poly_inner(members[i].poly, members[j].poly).is_zero());
      }
  }
}

TEST_CASE("monomial expansion is exact and complete") {
  std::set<std::pair<int, int>> used;
  for (int alpha = 0; alpha <= 8; ++alpha)
    for (int beta = 0; alpha + beta <= 8; ++beta) {
      const Bidegree target({alpha}, {beta});
      const auto terms = expand_monomial(target);
      Poly rebuilt(1);
      for (const auto& [f, c] : terms) {
        CHECK(verify_eigen(f).ok);
        CHECK(f.eigenvalue == f.poly.leading().beta[0]);
        rebuilt += c * f.poly;
        used.emplace(f.poly.leading().alpha[0], f.poly.leading().beta[0]);
      }
      CHECK(rebuilt == Poly::monomial(target));
      // the leading member enters with coefficient one
      CHECK(terms.front().second == GaussianRational(1));
      CHECK(terms.front().first.poly.leading() == target);
    }
  // every family member of degree <= 8 appears in some expansion
  CHECK(used.size() == 45u);  // (8+1)(8+2)/2

  SUBCASE("two-variable expansion") {
    const Bidegree target({1, 0}, {1, 1});
    const auto terms = expand_monomial(target);
    Poly rebuilt(2);
    for (const auto& [f, c] : terms) {
      CHECK(verify_eigen(f).ok);
      CHECK(f.kind == EigenKind::tensor);
      CHECK(f.params.size() == 2u);
      rebuilt += c * f.poly;
    }
    CHECK(rebuilt == Poly::monomial(target));
  }
}
