#include "fockspec/checks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "fockspec/eigenfunctions.hpp"
#include "fockspec/galerkin.hpp"
#include "fockspec/hermite.hpp"
#include "fockspec/inner.hpp"
#include "fockspec/operators.hpp"
#include "fockspec/random_forms.hpp"

namespace fockspec {

namespace {

using PairList = std::vector<std::pair<int, int>>;

PairList degree_pairs(int n_max, int q_lo, int q_from_top) {
  PairList pairs;
  for (int n = 1; n <= n_max; ++n)
    for (int q = q_lo; q <= n - q_from_top; ++q) pairs.emplace_back(n, q);
  return pairs;
}

std::string describe(int n, int q, const QForm& f) {
  return "n=" + std::to_string(n) + " q=" + std::to_string(q) + " f=" + f.to_string();
}

CheckResult run_pairs(std::string name, const PairList& pairs, int count, std::uint64_t seed,
                      const std::function<std::string(Rng&, int, int)>& body) {
  if (pairs.empty())
    throw std::invalid_argument("check '" + name + "': no valid (n, q) pairs at this n_max");
  CheckResult result;
  result.name = std::move(name);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto [n, q] = pairs[i % pairs.size()];
    std::string why = body(rng, n, q);
    result.cases += 1;
    if (!why.empty()) {
      result.passed = false;
      result.counterexample = std::move(why);
      break;
    }
  }
  return result;
}

std::string spectral_pair_mismatch(int n, int q, int degree_cap, OperatorKind op) {
  SpectralOptions reference;
  SpectralOptions other;
  other.op = op;
  const SpectralReport expect = full_spectrum(n, q, degree_cap, reference);
  const SpectralReport got = full_spectrum(n, q, degree_cap, other);
  if (expect == got) return "";
  return "n=" + std::to_string(n) + " q=" + std::to_string(q) +
         " D=" + std::to_string(degree_cap) + ": reports differ";
}

CheckResult spectral_equality_single(int n, int q, int degree_cap) {
  CheckResult result;
  result.name = "witten_spectral_equality";
  result.cases = 1;
  std::string why = spectral_pair_mismatch(n, q, degree_cap, OperatorKind::witten);
  if (!why.empty()) {
    result.passed = false;
    result.counterexample = std::move(why);
  }
  return result;
}

}  // namespace

CheckResult check_dbar_squared(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("dbar_squared_zero", degree_pairs(n_max, 0, 2), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (dbar(dbar(f)).is_zero()) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_dbar_star_squared(int n_max, int max_degree, int count, std::uint64_t seed) {
  PairList pairs;
  for (int n = 2; n <= n_max; ++n)
    for (int q = 2; q <= n; ++q) pairs.emplace_back(n, q);
  return run_pairs("dbar_star_squared_zero", pairs, count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (dbar_star(dbar_star(f)).is_zero()) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_box_coord_agreement(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("box_equals_box_coord", degree_pairs(n_max, 0, 0), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (box_laplacian(f) == box_coord(f)) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_adjoint_relation(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("adjoint_relation", degree_pairs(n_max, 0, 1), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     const QForm g = random_form(rng, n, q + 1, max_degree, 3);
                     if (form_inner(dbar(f), g) == form_inner(f, dbar_star(g))) return "";
                     return describe(n, q, f) + " g=" + g.to_string();
                   });
}

CheckResult check_box_self_adjoint(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs(
      "box_self_adjoint_positive", degree_pairs(n_max, 0, 0), count, seed,
      [=](Rng& rng, int n, int q) -> std::string {
        const QForm f = random_form(rng, n, q, max_degree, 3);
        const QForm g = random_form(rng, n, q, max_degree, 3);
        const QForm box_f = box_laplacian(f);
        if (!(form_inner(box_f, g) == form_inner(f, box_laplacian(g))))
          return "symmetry: " + describe(n, q, f) + " g=" + g.to_string();
        const ExactScalar energy = form_inner(box_f, f);
        if (!energy.coeff.is_real() || energy.coeff.re < 0)
          return "positivity: " + describe(n, q, f) + " <box f, f>=" + energy.to_string();
        return "";
      });
}

CheckResult check_dirichlet_box(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs(
      "dirichlet_equals_box_inner", degree_pairs(n_max, 0, 0), count, seed,
      [=](Rng& rng, int n, int q) -> std::string {
        const QForm f = random_form(rng, n, q, max_degree, 3);
        const QForm g = random_form(rng, n, q, max_degree, 3);
        const QForm box_f = box_laplacian(f);
        if (!(dirichlet_form(f, g) == form_inner(box_f, g)))
          return describe(n, q, f) + " g=" + g.to_string();
        if (!(dirichlet_form(f, f) == form_inner(box_f, f)))
          return "f=f case: " + describe(n, q, f);
        return "";
      });
}

std::vector<CheckResult> operator_identity_suite(int n_max, int max_degree, int count,
                                                 std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (n_max >= 2) results.push_back(check_dbar_squared(n_max, max_degree, count, seed));
  if (n_max >= 2) results.push_back(check_dbar_star_squared(n_max, max_degree, count, seed + 1));
  results.push_back(check_box_coord_agreement(n_max, max_degree, count, seed + 2));
  results.push_back(check_adjoint_relation(n_max, max_degree, count, seed + 3));
  results.push_back(check_box_self_adjoint(n_max, max_degree, count, seed + 4));
  results.push_back(check_dirichlet_box(n_max, max_degree, count, seed + 5));
  return results;
}

CheckResult check_witten_d_squared(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("witten_d_squared_zero", degree_pairs(n_max, 0, 2), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (witten_d(witten_d(WittenRep(f))).form.is_zero()) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_witten_d_star_squared(int n_max, int max_degree, int count, std::uint64_t seed) {
  PairList pairs;
  for (int n = 2; n <= n_max; ++n)
    for (int q = 2; q <= n; ++q) pairs.emplace_back(n, q);
  return run_pairs("witten_d_star_squared_zero", pairs, count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (witten_d_star(witten_d_star(WittenRep(f))).form.is_zero()) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_witten_conjugation(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("witten_conjugation", degree_pairs(n_max, 0, 0), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const QForm f = random_form(rng, n, q, max_degree, 3);
                     if (witten_laplacian(WittenRep(f)).form == box_laplacian(f)) return "";
                     return describe(n, q, f);
                   });
}

CheckResult check_witten_coord_agreement(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs("witten_coord_formula", degree_pairs(n_max, 0, 0), count, seed,
                   [=](Rng& rng, int n, int q) -> std::string {
                     const WittenRep h(random_form(rng, n, q, max_degree, 3));
                     if (witten_coord(h) == witten_laplacian(h)) return "";
                     return describe(n, q, h.form);
                   });
}

CheckResult check_witten_commutation(int n_max, int max_degree, int count, std::uint64_t seed) {
  return run_pairs(
      "witten_commutation", degree_pairs(n_max, 0, 1), count, seed,
      [=](Rng& rng, int n, int q) -> std::string {
        const WittenRep h(random_form(rng, n, q, max_degree, 3));
        if (!(witten_d(witten_laplacian(h)) == witten_laplacian(witten_d(h))))
          return "D commutation: " + describe(n, q, h.form);
        const WittenRep g(random_form(rng, n, q + 1, max_degree, 3));
        if (!(witten_d_star(witten_laplacian(g)) == witten_laplacian(witten_d_star(g))))
          return "D* commutation: " + describe(n, q + 1, g.form);
        return "";
      });
}

CheckResult check_witten_split(int n_max, int max_degree, int count, std::uint64_t seed) {
  PairList pairs;
  for (int n = 1; n <= n_max; ++n) pairs.emplace_back(n, 1);
  return run_pairs(
      "witten_split_q1", pairs, count, seed, [=](Rng& rng, int n, int q) -> std::string {
        const QForm g = random_form(rng, n, q, max_degree, 3);
        QForm expected(n, 1);
        for (const auto& [J, p] : g.coefficients()) {
          const WittenRep scalar(QForm::monomial_form(n, 0, MultiIndex(), p));
          expected.add_term(J, witten_laplacian(scalar).form.coefficient(MultiIndex()));
          expected.add_term(J, p);  // M_phi = identity for phi = |z|^2
        }
        if (witten_laplacian(WittenRep(g)).form == expected) return "";
        return describe(n, q, g);
      });
}

CheckResult check_witten_spectral_equality(int n_max, int degree_cap) {
  CheckResult result;
  result.name = "witten_spectral_equality";
  for (int n = 1; n <= n_max; ++n) {
    for (int q = 0; q <= n; ++q) {
      result.cases += 1;
      std::string why = spectral_pair_mismatch(n, q, degree_cap, OperatorKind::witten);
      if (!why.empty()) {
        result.passed = false;
        result.counterexample = std::move(why);
        return result;
      }
    }
  }
  return result;
}

CheckResult check_pauli_reports(int degree_cap) {
  CheckResult result;
  result.name = "pauli_reports_match";
  result.cases = 2;
  std::string why = spectral_pair_mismatch(1, 0, degree_cap, OperatorKind::pauli_minus);
  if (why.empty()) why = spectral_pair_mismatch(1, 1, degree_cap, OperatorKind::pauli_plus);
  if (!why.empty()) {
    result.passed = false;
    result.counterexample = "pauli: " + why;
  }
  return result;
}

std::vector<CheckResult> witten_identity_suite(int n, int q, int degree_cap, int max_degree,
                                               int count, std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(check_witten_conjugation(n, max_degree, count, seed));
  results.push_back(check_witten_coord_agreement(n, max_degree, count, seed + 1));
  results.push_back(check_witten_commutation(n, max_degree, count, seed + 2));
  results.push_back(check_witten_split(n, max_degree, count, seed + 3));
  if (n >= 2) {
    results.push_back(check_witten_d_squared(n, max_degree, count, seed + 4));
    results.push_back(check_witten_d_star_squared(n, max_degree, count, seed + 5));
  }
  results.push_back(spectral_equality_single(n, q, degree_cap));
  return results;
}

namespace {

std::vector<Bidegree> scalar_monomials_up_to(int degree_cap) {
  std::vector<Bidegree> out;
  for (int total = 0; total <= degree_cap; ++total)
    for (int a = total; a >= 0; --a) out.push_back(Bidegree({a}, {total - a}));
  return out;
}

CheckResult hermite_roundtrip_check(int degree_cap, std::set<std::pair<int, int>>& used) {
  CheckResult result;
  result.name = "hermite_expand_roundtrip";
  for (const Bidegree& d : scalar_monomials_up_to(degree_cap)) {
    result.cases += 1;
    const Poly mono = Poly::monomial(d);
    RealPoly rebuilt(1);
    for (const HermiteTerm& t : hermite_expand(mono)) {
      used.emplace(t.i, t.j);
      RealPoly prod = hermite_product(t.i, t.j);
      prod.scale(t.coeff);
      rebuilt += prod;
    }
    if (!(rebuilt == to_real(mono)) || !(to_complex(rebuilt) == mono)) {
      result.passed = false;
      result.counterexample = "monomial " + mono.to_string();
      break;
    }
  }
  return result;
}

CheckResult hermite_span_check(int degree_cap, const std::set<std::pair<int, int>>& used) {
  CheckResult result;
  result.name = "hermite_span_dimension";
  result.cases = static_cast<long>(used.size());
  const long expected = static_cast<long>(degree_cap + 1) * (degree_cap + 2) / 2;
  for (const auto& [i, j] : used) {
    if (i + j > degree_cap) {
      result.passed = false;
      result.counterexample =
          "H_" + std::to_string(i) + " H_" + std::to_string(j) + " exceeds degree cap";
      return result;
    }
  }
  if (static_cast<long>(used.size()) != expected) {
    result.passed = false;
    result.counterexample = "span dimension " + std::to_string(used.size()) + ", expected " +
                            std::to_string(expected);
  }
  return result;
}

CheckResult hermite_orthogonality_check(int degree_cap) {
  CheckResult result;
  result.name = "hermite_orthogonality";
  const int cap = std::min(degree_cap, 6);
  std::vector<std::pair<int, int>> products;
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) products.emplace_back(i, j);
  for (const auto& [i, j] : products) {
    const RealPoly pij = hermite_product(i, j);
    for (const auto& [k, l] : products) {
      result.cases += 1;
      const SqrtPiScalar inner = real_inner(pij, hermite_product(k, l));
      if (i == k && j == l) {
        // ||H_i H_j||^2 = 2^{i+j} i! j! * pi
        const Rational expected =
            Rational(int_pow(Integer(2), i + j) * factorial(i) * factorial(j));
        if (!(inner == SqrtPiScalar(GaussianRational(expected), 2))) {
          result.passed = false;
          result.counterexample = "norm of H_" + std::to_string(i) + " H_" + std::to_string(j) +
                                  " = " + inner.to_string();
          return result;
        }
      } else if (!inner.is_zero()) {
        result.passed = false;
        result.counterexample = "<H_" + std::to_string(i) + " H_" + std::to_string(j) + ", H_" +
                                std::to_string(k) + " H_" + std::to_string(l) +
                                "> = " + inner.to_string();
        return result;
      }
    }
  }
  return result;
}

CheckResult hermite_eigenfunction_cover_check(int degree_cap) {
  CheckResult result;
  result.name = "hermite_eigenfunction_cover";
  const int cap = std::min(degree_cap, 6);
  auto covered = [&](const Poly& p) -> std::string {
    RealPoly rebuilt(1);
    int max_degree = 0;
    for (const HermiteTerm& t : hermite_expand(p)) {
      max_degree = std::max(max_degree, t.i + t.j);
      RealPoly prod = hermite_product(t.i, t.j);
      prod.scale(t.coeff);
      rebuilt += prod;
    }
    if (!(rebuilt == to_real(p))) return "reconstruction failed for " + p.to_string();
    if (max_degree > p.total_degree())
      return "expansion degree " + std::to_string(max_degree) + " exceeds polynomial degree for " +
             p.to_string();
    return "";
  };
  for (int k = 0; k <= cap; ++k) {
    for (int m = 1; k + m <= cap; ++m) {
      result.cases += 1;
      // total degree of u_{k,m} is k + 2m
      if (std::string why = covered(u_fn(k, m).poly); !why.empty()) {
        result.passed = false;
        result.counterexample = "u(" + std::to_string(k) + "," + std::to_string(m) + "): " + why;
        return result;
      }
    }
  }
  for (int k = 1; k <= cap; ++k) {
    for (int m = 0; k + m <= cap; ++m) {
      result.cases += 1;
      if (std::string why = covered(v_fn(k, m).poly); !why.empty()) {
        result.passed = false;
        result.counterexample = "v(" + std::to_string(k) + "," + std::to_string(m) + "): " + why;
        return result;
      }
    }
  }
  return result;
}

CheckResult real_roundtrip_check(int count, std::uint64_t seed) {
  CheckResult result;
  result.name = "real_complex_roundtrip";
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    result.cases += 1;
    const int n = 1 + (i % 3);
    const Poly p = random_poly(rng, n, 6, 4);
    const RealPoly r = to_real(p);
    if (!(to_complex(r) == p) || r.total_degree() != p.total_degree()) {
      result.passed = false;
      result.counterexample = "n=" + std::to_string(n) + " p=" + p.to_string();
      break;
    }
  }
  return result;
}

}  // namespace

std::vector<CheckResult> hermite_check_suite(int degree_cap, int count, std::uint64_t seed) {
  std::vector<CheckResult> results;
  std::set<std::pair<int, int>> used;
  results.push_back(hermite_roundtrip_check(degree_cap, used));
  results.push_back(hermite_span_check(degree_cap, used));
  results.push_back(hermite_orthogonality_check(degree_cap));
  results.push_back(hermite_eigenfunction_cover_check(degree_cap));
  results.push_back(real_roundtrip_check(count, seed));
  return results;
}

}  // namespace fockspec
