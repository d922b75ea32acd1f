#include "fockspec/galerkin.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "fockspec/forms.hpp"
#include "fockspec/inner.hpp"
#include "fockspec/operators.hpp"

namespace fockspec {

namespace {

void gather_charges(int n, int budget, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int c = -budget; c <= budget; ++c) {
    cur.push_back(c);
    gather_charges(n, budget - std::abs(c), cur, out);
    cur.pop_back();
  }
}

void gather_shifts(int n, int budget, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int t = 0; t <= budget; ++t) {
    cur.push_back(t);
    gather_shifts(n, budget - t, cur, out);
    cur.pop_back();
  }
}

MultiIndex leading_component(int q) {
  std::vector<int> idx(q);
  std::iota(idx.begin(), idx.end(), 1);
  return MultiIndex(std::move(idx));
}

// Applies the requested operator to one basis monomial, returning the
// polynomial living in the embedding component J0.
Poly apply_operator(const Poly& mono, int n, int q, const MultiIndex& j0, OperatorKind op) {
  switch (op) {
    case OperatorKind::box: {
      QForm image = box_laplacian(QForm::monomial_form(n, q, j0, mono));
      for (const auto& [J, p] : image.coefficients())
        if (!(J == j0))
          throw std::logic_error("galerkin: box image left the embedding component");
      return image.coefficient(j0);
    }
    case OperatorKind::witten: {
      WittenRep image = witten_laplacian(WittenRep(QForm::monomial_form(n, q, j0, mono)));
      for (const auto& [J, p] : image.form.coefficients())
        if (!(J == j0))
          throw std::logic_error("galerkin: witten image left the embedding component");
      return image.form.coefficient(j0);
    }
    case OperatorKind::pauli_minus:
      return pauli_minus(mono);
    case OperatorKind::pauli_plus:
      return pauli_plus(mono);
  }
  throw std::logic_error("galerkin: unknown operator kind");
}

Rational exact_entry(const ExactScalar& s, int n, const char* what) {
  if (s.is_zero()) return Rational(0);
  if (s.pi_power != n) throw std::logic_error(std::string("galerkin: ") + what + " has wrong pi power");
  if (!s.coeff.is_real())
    throw std::logic_error(std::string("galerkin: ") + what + " entry is not real");
  return s.coeff.re;
}

void validate_pauli(const ChargeClass& c, int q, OperatorKind op) {
  if (op == OperatorKind::pauli_minus && (c.n != 1 || q != 0))
    throw std::invalid_argument("pauli_minus spectra require n = 1, q = 0");
  if (op == OperatorKind::pauli_plus && (c.n != 1 || q != 1))
    throw std::invalid_argument("pauli_plus spectra require n = 1, q = 1");
}

}  // namespace

std::vector<ChargeClass> charge_classes(int n, int degree_cap) {
  if (n < 1) throw std::invalid_argument("charge_classes: n must be >= 1");
  if (degree_cap < 0) throw std::invalid_argument("charge_classes: negative degree cap");
  std::vector<std::vector<int>> charges;
  std::vector<int> cur;
  gather_charges(n, degree_cap, cur, charges);
  std::vector<ChargeClass> out;
  out.reserve(charges.size());
  for (auto& c : charges) out.push_back(ChargeClass{n, std::move(c), degree_cap});
  return out;
}

std::vector<Bidegree> class_basis(const ChargeClass& c) {
  const int n = c.n;
  int charge_weight = 0;
  for (int cj : c.charge) charge_weight += std::abs(cj);
  if (charge_weight > c.degree_cap)
    throw std::invalid_argument("class_basis: empty class, |charge| exceeds degree cap");
  std::vector<std::vector<int>> shifts;
  std::vector<int> cur;
  gather_shifts(n, (c.degree_cap - charge_weight) / 2, cur, shifts);
  std::sort(shifts.begin(), shifts.end(), [](const auto& a, const auto& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::vector<Bidegree> basis;
  basis.reserve(shifts.size());
  for (const auto& t : shifts) {
    std::vector<int> alpha(n), beta(n);
    for (int j = 0; j < n; ++j) {
      alpha[j] = t[j] + std::max(c.charge[j], 0);
      beta[j] = t[j] + std::max(-c.charge[j], 0);
    }
    basis.emplace_back(std::move(alpha), std::move(beta));
  }
  return basis;
}

ClassMatrices build_class_matrices(const ChargeClass& c, int q, OperatorKind op) {
  if (q < 0 || q > c.n) throw std::invalid_argument("build_class_matrices: q out of range");
  validate_pauli(c, q, op);
  const std::vector<Bidegree> basis = class_basis(c);
  const int m = static_cast<int>(basis.size());
  const int n = c.n;
  const MultiIndex j0 = leading_component(q);

  std::vector<Poly> monos;
  std::vector<Poly> images;
  monos.reserve(m);
  images.reserve(m);
  for (const Bidegree& d : basis) {
    monos.push_back(Poly::monomial(d));
    images.push_back(apply_operator(monos.back(), n, q, j0, op));
  }

  Eigen::MatrixXd a(m, m), b(m, m);
  std::vector<std::vector<Rational>> ar(m, std::vector<Rational>(m));
  std::vector<std::vector<Rational>> br(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      ar[i][j] = exact_entry(poly_inner(images[j], monos[i]), n, "operator");
      br[i][j] = exact_entry(poly_inner(monos[j], monos[i]), n, "gram");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (ar[i][j] != ar[j][i]) throw std::logic_error("galerkin: operator block not symmetric");
      if (br[i][j] != br[j][i]) throw std::logic_error("galerkin: gram block not symmetric");
      a(i, j) = to_double(ar[i][j]);
      b(i, j) = to_double(br[i][j]);
    }
  }
  return ClassMatrices{std::move(a), std::move(b)};
}

std::vector<double> solve_class(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const auto m = a.rows();
  if (a.cols() != m || b.rows() != m || b.cols() != m)
    throw std::invalid_argument("solve_class: matrices must be square and same size");
  if (m == 0) return {};

  Eigen::VectorXd scale(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(b(i, i) > 0)) throw std::runtime_error("solve_class: gram diagonal not positive");
    scale(i) = 1.0 / std::sqrt(b(i, i));
  }
  const Eigen::MatrixXd ap = scale.asDiagonal() * a * scale.asDiagonal();
  const Eigen::MatrixXd bp = scale.asDiagonal() * b * scale.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_eigs(bp, Eigen::EigenvaluesOnly);
  if (gram_eigs.info() != Eigen::Success)
    throw std::runtime_error("solve_class: gram eigenvalue estimate failed");
  const double lo = gram_eigs.eigenvalues()(0);
  const double hi = gram_eigs.eigenvalues()(m - 1);
  if (!(lo > 0) || lo / hi < 1e-10) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "solve_class: gram matrix numerically singular (rcond %.3e); "
                  "use a lower degree cap",
                  lo > 0 ? lo / hi : 0.0);
    throw std::runtime_error(msg);
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      ap, bp, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solve_class: generalized eigensolve failed");
  std::vector<double> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

SpectralReport full_spectrum(int n, int q, int degree_cap, const SpectralOptions& options) {
  if (n < 1) throw std::invalid_argument("full_spectrum: n must be >= 1");
  if (q < 0 || q > n) throw std::invalid_argument("full_spectrum: requires 0 <= q <= n");
  if (degree_cap < 1) throw std::invalid_argument("full_spectrum: degree cap must be >= 1");
  if (degree_cap > 16 && !options.allow_large_degree)
    throw std::invalid_argument(
        "full_spectrum: degree cap > 16 refused (factorial gram growth); "
        "set allow_large_degree to override");
  if (!(options.tolerance > 0)) throw std::invalid_argument("full_spectrum: tolerance must be > 0");
  validate_pauli(ChargeClass{n, std::vector<int>(n, 0), degree_cap}, q, options.op);

  const std::vector<ChargeClass> classes = charge_classes(n, degree_cap);
  std::vector<std::vector<double>> slots(classes.size());
  std::vector<long> sizes(classes.size(), 0);

  const int worker_count =
      std::clamp(resolve_threads(options.threads), 1, static_cast<int>(classes.size()));
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      try {
        ClassMatrices mats = build_class_matrices(classes[i], q, options.op);
        sizes[i] = mats.a.rows();
        slots[i] = solve_class(mats.a, mats.b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (worker_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  const long components = static_cast<long>(binomial(n, q));
  struct Accum {
    long count = 0;
    double sum = 0;
    double max_residual = 0;
  };
  std::map<long, Accum> by_integer;
  long scalar_dimension = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    scalar_dimension += sizes[i];
    for (double lambda : slots[i]) {
      const long r = std::lround(lambda);
      const double residual = std::abs(lambda - static_cast<double>(r));
      if (residual > options.tolerance || r < q) {
        char msg[200];
        std::snprintf(msg, sizeof(msg),
                      "full_spectrum: eigenvalue %.12g is not an integer >= q "
                      "within tolerance %.3e (truncation is exact; this is a bug)",
                      lambda, options.tolerance);
        throw std::runtime_error(msg);
      }
      Accum& acc = by_integer[r];
      acc.count += 1;
      acc.sum += lambda;
      acc.max_residual = std::max(acc.max_residual, residual);
    }
  }

  SpectralReport report;
  report.n = n;
  report.q = q;
  report.degree_cap = degree_cap;
  report.basis_dimension = scalar_dimension * components;
  for (const auto& [r, acc] : by_integer) {
    SpectralCluster cluster;
    cluster.eigenvalue = acc.sum / static_cast<double>(acc.count);
    cluster.nearest = r;
    cluster.multiplicity = acc.count * components;
    cluster.max_residual = acc.max_residual;
    report.clusters.push_back(cluster);
  }
  return report;
}

SpectralReport full_spectrum(int n, int q, int degree_cap, double tolerance) {
  SpectralOptions options;
  options.tolerance = tolerance;
  return full_spectrum(n, q, degree_cap, options);
}

std::vector<long> multiplicity_growth(int n, int q, long mu,
                                      const std::vector<int>& degree_caps,
                                      const SpectralOptions& options) {
  if (mu < q) throw std::invalid_argument("multiplicity_growth: requires mu >= q");
  std::vector<long> out;
  out.reserve(degree_caps.size());
  for (int d : degree_caps) {
    const SpectralReport report = full_spectrum(n, q, d, options);
    long mult = 0;
    for (const SpectralCluster& cluster : report.clusters)
      if (cluster.nearest == mu) mult = cluster.multiplicity;
    out.push_back(mult);
  }
  return out;
}

int resolve_threads(int requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("FOCKSPEC_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024)
      return static_cast<int>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace fockspec
