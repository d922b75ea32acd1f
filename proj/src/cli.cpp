#include "fockspec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockspec/checks.hpp"
#include "fockspec/eigenfunctions.hpp"
#include "fockspec/galerkin.hpp"
#include "fockspec/poly.hpp"

namespace fockspec {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// All floats pass through here before serialization: 12 significant digits,
// so reports are stable across runs and formats.
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

const char* command_name(Command c) {
  switch (c) {
    case Command::verify_eigen: return "verify-eigen";
    case Command::spectrum: return "spectrum";
    case Command::multiplicity: return "multiplicity";
    case Command::witten_check: return "witten-check";
    case Command::hermite_check: return "hermite-check";
    case Command::expand: return "expand";
  }
  return "?";
}

const char* kind_name(EigenKind k) {
  switch (k) {
    case EigenKind::u: return "u";
    case EigenKind::v: return "v";
    case EigenKind::tensor: return "tensor";
    case EigenKind::holomorphic: return "holomorphic";
  }
  return "?";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct VerifyRow {
  char family;
  int k;
  int m;
  long eigenvalue;
  bool ok;
};

int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<VerifyRow> rows;
  std::string first_failure;
  long passed = 0;
  auto record = [&](char family, const EigenFunction& f) {
    const VerifyResult vr = verify_eigen(f);
    rows.push_back(VerifyRow{family, f.params[0].first, f.params[0].second, f.eigenvalue, vr.ok});
    if (vr.ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = std::string(1, family) + "(" + std::to_string(f.params[0].first) + "," +
                      std::to_string(f.params[0].second) +
                      ") residual=" + vr.residual.to_string();
    }
  };
  for (int k = 0; k <= cfg.kmax; ++k)
    for (int m = 1; m <= cfg.mmax; ++m) record('u', u_fn(k, m));
  for (int k = 1; k <= cfg.kmax; ++k)
    for (int m = 0; m <= cfg.mmax; ++m) record('v', v_fn(k, m));
  const long total = static_cast<long>(rows.size());

  switch (cfg.format) {
    case OutputFormat::json: {
      Json j;
      j["schema_version"] = 1;
      j["command"] = command_name(cfg.command);
      j["kmax"] = cfg.kmax;
      j["mmax"] = cfg.mmax;
      j["total"] = total;
      j["passed"] = passed;
      j["failed"] = total - passed;
      Json failures = Json::array();
      for (const VerifyRow& r : rows)
        if (!r.ok)
          failures.push_back(Json{{"family", std::string(1, r.family)}, {"k", r.k}, {"m", r.m}});
      j["failures"] = failures;
      if (!first_failure.empty()) j["first_failure"] = first_failure;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "family,k,m,eigenvalue,verified\n";
      for (const VerifyRow& r : rows)
        out << r.family << ',' << r.k << ',' << r.m << ',' << r.eigenvalue << ','
            << (r.ok ? 1 : 0) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << "verify-eigen kmax=" << cfg.kmax << " mmax=" << cfg.mmax << ": " << passed << "/"
          << total << " eigenfunctions verified exactly\n";
      if (!first_failure.empty()) out << "first failure: " << first_failure << '\n';
      break;
    }
  }
  return passed == total ? 0 : 1;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  SpectralOptions options;
  options.tolerance = cfg.tolerance;
  options.allow_large_degree = cfg.allow_large_degree;
  const SpectralReport report = full_spectrum(cfg.n, cfg.q, cfg.degree, options);

  switch (cfg.format) {
    case OutputFormat::json: {
      Json j;
      j["schema_version"] = 1;
      j["command"] = command_name(cfg.command);
      j["n"] = report.n;
      j["q"] = report.q;
      j["degree"] = report.degree_cap;
      j["tolerance"] = round12(cfg.tolerance);
      j["basis_dimension"] = report.basis_dimension;
      Json clusters = Json::array();
      for (const SpectralCluster& c : report.clusters) {
        clusters.push_back(Json{{"eigenvalue", c.nearest},
                                {"estimate", round12(c.eigenvalue)},
                                {"multiplicity", c.multiplicity},
                                {"max_residual", round12(c.max_residual)}});
      }
      j["clusters"] = clusters;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "eigenvalue,multiplicity,max_residual\n";
      for (const SpectralCluster& c : report.clusters)
        out << c.nearest << ',' << c.multiplicity << ',' << fmt12(c.max_residual) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << "spectrum n=" << report.n << " q=" << report.q << " D=" << report.degree_cap
          << " (tolerance " << fmt12(cfg.tolerance) << ")\n";
      out << "basis dimension " << report.basis_dimension << '\n';
      for (const SpectralCluster& c : report.clusters)
        out << "  eigenvalue " << c.nearest << "  multiplicity " << c.multiplicity
            << "  max residual " << fmt12(c.max_residual) << '\n';
      break;
    }
  }
  return 0;
}

int run_multiplicity(const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> degrees = cfg.degrees.empty() ? std::vector<int>{4, 8, 12} : cfg.degrees;
  SpectralOptions options;
  options.tolerance = cfg.tolerance;
  options.allow_large_degree = cfg.allow_large_degree;
  const std::vector<long> mults = multiplicity_growth(cfg.n, cfg.q, cfg.mu, degrees, options);
  bool increasing = true;
  for (size_t i = 1; i < mults.size(); ++i)
    if (mults[i] <= mults[i - 1]) increasing = false;

  switch (cfg.format) {
    case OutputFormat::json: {
      Json j;
      j["schema_version"] = 1;
      j["command"] = command_name(cfg.command);
      j["n"] = cfg.n;
      j["q"] = cfg.q;
      j["mu"] = cfg.mu;
      j["degrees"] = degrees;
      j["multiplicities"] = mults;
      j["strictly_increasing"] = increasing;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "degree,multiplicity\n";
      for (size_t i = 0; i < degrees.size(); ++i) out << degrees[i] << ',' << mults[i] << '\n';
      break;
    }
    case OutputFormat::text: {
      out << "multiplicity of eigenvalue " << cfg.mu << " at n=" << cfg.n << " q=" << cfg.q
          << ":";
      for (size_t i = 0; i < degrees.size(); ++i)
        out << (i ? "," : "") << " D=" << degrees[i] << " -> " << mults[i];
      out << '\n' << "strictly increasing: " << (increasing ? "yes" : "NO") << '\n';
      break;
    }
  }
  return increasing ? 0 : 1;
}

int emit_checks(const RunConfig& cfg, const Json& header, const std::vector<CheckResult>& checks,
                std::ostream& out) {
  const bool all_passed =
      std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  switch (cfg.format) {
    case OutputFormat::json: {
      Json j;
      j["schema_version"] = 1;
      j["command"] = command_name(cfg.command);
      for (const auto& [key, value] : header.items()) j[key] = value;
      Json arr = Json::array();
      for (const CheckResult& c : checks) {
        Json item{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
        if (!c.passed) item["counterexample"] = c.counterexample;
        arr.push_back(item);
      }
      j["checks"] = arr;
      j["all_passed"] = all_passed;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "name,passed,cases,counterexample\n";
      for (const CheckResult& c : checks)
        out << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.cases << ','
            << csv_quote(c.counterexample) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << command_name(cfg.command);
      for (const auto& [key, value] : header.items()) {
        if (value.is_string())
          out << ' ' << key << '=' << value.get<std::string>();
        else
          out << ' ' << key << '=' << value.dump();
      }
      out << '\n';
      for (const CheckResult& c : checks) {
        if (c.passed)
          out << "  [pass] " << c.name << " (" << c.cases << " cases)\n";
        else
          out << "  [FAIL] " << c.name << ": " << c.counterexample << '\n';
      }
      break;
    }
  }
  return all_passed ? 0 : 1;
}

int run_witten_check(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CheckResult> checks =
      witten_identity_suite(cfg.n, cfg.q, cfg.degree, 4, cfg.count, cfg.seed);
  Json header;
  header["n"] = cfg.n;
  header["q"] = cfg.q;
  header["degree"] = cfg.degree;
  header["count"] = cfg.count;
  header["seed"] = cfg.seed;
  return emit_checks(cfg, header, checks, out);
}

int run_hermite_check(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CheckResult> checks = hermite_check_suite(cfg.degree, cfg.count, cfg.seed);
  Json header;
  header["degree"] = cfg.degree;
  header["count"] = cfg.count;
  header["seed"] = cfg.seed;
  return emit_checks(cfg, header, checks, out);
}

int run_expand(const RunConfig& cfg, std::ostream& out) {
  const Bidegree target(cfg.alpha, cfg.beta);
  const int n = target.dimension();
  const auto terms = expand_monomial(target);

  Poly rebuilt(n);
  bool eigen_ok = true;
  for (const auto& [f, c] : terms) {
    rebuilt += c * f.poly;
    if (!verify_eigen(f).ok) eigen_ok = false;
  }
  const Poly mono = Poly::monomial(target);
  const bool reconstructed = rebuilt == mono;

  auto params_string = [](const EigenFunction& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.params.size(); ++i) {
      if (i) os << ' ';
      os << f.params[i].first << ':' << f.params[i].second;
    }
    return os.str();
  };

  switch (cfg.format) {
    case OutputFormat::json: {
      Json j;
      j["schema_version"] = 1;
      j["command"] = command_name(cfg.command);
      j["alpha"] = cfg.alpha;
      j["beta"] = cfg.beta;
      j["monomial"] = mono.to_string();
      Json arr = Json::array();
      for (const auto& [f, c] : terms) {
        Json params = Json::array();
        for (const auto& [k, m] : f.params) params.push_back(Json::array({k, m}));
        arr.push_back(Json{{"kind", kind_name(f.kind)},
                           {"params", params},
                           {"eigenvalue", f.eigenvalue},
                           {"coeff", c.to_string()},
                           {"poly", f.poly.to_string()}});
      }
      j["terms"] = arr;
      j["reconstructed"] = reconstructed;
      j["eigen_verified"] = eigen_ok;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "kind,eigenvalue,coeff,params,poly\n";
      for (const auto& [f, c] : terms)
        out << kind_name(f.kind) << ',' << f.eigenvalue << ',' << csv_quote(c.to_string()) << ','
            << csv_quote(params_string(f)) << ',' << csv_quote(f.poly.to_string()) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << "expand " << mono.to_string() << " (" << terms.size() << " eigenfunction terms)\n";
      for (const auto& [f, c] : terms)
        out << "  " << c.to_string() << " * " << kind_name(f.kind) << "(" << params_string(f)
            << ") [eigenvalue " << f.eigenvalue << "]: " << f.poly.to_string() << '\n';
      out << "reconstruction exact: " << (reconstructed ? "yes" : "NO") << '\n';
      break;
    }
  }
  return reconstructed && eigen_ok ? 0 : 1;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
  if (cfg.q < 0 || cfg.q > cfg.n) throw std::invalid_argument("q must satisfy 0 <= q <= n");
  if (cfg.degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
  if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
  if (cfg.command == Command::verify_eigen && (cfg.kmax < 1 || cfg.mmax < 1))
    throw std::invalid_argument("kmax and mmax must be >= 1");
  if (cfg.command == Command::multiplicity) {
    if (cfg.mu < cfg.q) throw std::invalid_argument("mu must be >= q");
    for (int d : cfg.degrees)
      if (d < 1) throw std::invalid_argument("every degree must be >= 1");
  }
  if (cfg.command == Command::expand) {
    if (cfg.alpha.empty() || cfg.alpha.size() != cfg.beta.size())
      throw std::invalid_argument("alpha and beta must have the same nonzero length");
    for (int e : cfg.alpha)
      if (e < 0) throw std::invalid_argument("alpha exponents must be >= 0");
    for (int e : cfg.beta)
      if (e < 0) throw std::invalid_argument("beta exponents must be >= 0");
  }
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::verify_eigen: return run_verify(cfg, out);
    case Command::spectrum: return run_spectrum(cfg, out);
    case Command::multiplicity: return run_multiplicity(cfg, out);
    case Command::witten_check: return run_witten_check(cfg, out);
    case Command::hermite_check: return run_hermite_check(cfg, out);
    case Command::expand: return run_expand(cfg, out);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    return dispatch(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"Spectral toolkit for the Gaussian-weighted dbar-complex and Witten complex"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json},
                                                    {"csv", OutputFormat::csv},
                                                    {"text", OutputFormat::text}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format: json, csv, or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  CLI::App* verify =
      app.add_subcommand("verify-eigen", "Exactly verify the closed-form eigenfunction families");
  verify->add_option("--kmax", config.kmax, "Largest k in the parameter grid (default 8)");
  verify->add_option("--mmax", config.mmax, "Largest m in the parameter grid (default 8)");
  add_format(verify);
  verify->callback([&] { config.command = Command::verify_eigen; });

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Truncated spectrum with integer clusters and multiplicities");
  spectrum->add_option("--n", config.n, "Complex dimension");
  spectrum->add_option("--q", config.q, "Form degree (0 <= q <= n)");
  spectrum->add_option("--degree", config.degree, "Truncation degree D");
  spectrum->add_option("--tolerance", config.tolerance, "Integer-cluster tolerance (default 1e-6)");
  spectrum->add_flag("--allow-large-degree", config.allow_large_degree,
                     "Permit truncation degrees above 16");
  add_format(spectrum);
  spectrum->callback([&] { config.command = Command::spectrum; });

  CLI::App* multiplicity = app.add_subcommand(
      "multiplicity", "Multiplicity of one integer eigenvalue across increasing truncations");
  multiplicity->add_option("--n", config.n, "Complex dimension");
  multiplicity->add_option("--q", config.q, "Form degree");
  multiplicity->add_option("--mu", config.mu, "Tracked integer eigenvalue (>= q)");
  multiplicity->add_option("--degrees", config.degrees, "Truncation degrees (default 4,8,12)")
      ->delimiter(',');
  multiplicity->add_option("--tolerance", config.tolerance, "Integer-cluster tolerance");
  multiplicity->add_flag("--allow-large-degree", config.allow_large_degree,
                         "Permit truncation degrees above 16");
  add_format(multiplicity);
  multiplicity->callback([&] { config.command = Command::multiplicity; });

  CLI::App* witten = app.add_subcommand(
      "witten-check", "Witten-complex identity suite and spectral comparison against the box");
  witten->add_option("--n", config.n, "Complex dimension for the suites");
  witten->add_option("--q", config.q, "Form degree for the spectral comparison");
  witten->add_option("--degree", config.degree, "Truncation degree for the spectral comparison");
  witten->add_option("--count", config.count, "Random forms per identity (default 100)");
  witten->add_option("--seed", config.seed, "Seed for the random-form stream");
  add_format(witten);
  witten->callback([&] { config.command = Command::witten_check; });

  CLI::App* hermite = app.add_subcommand(
      "hermite-check", "Hermite-basis cross-checks: round-trips, orthogonality, span dimensions");
  hermite->add_option("--degree", config.degree, "Monomial degree cap (default 8)");
  hermite->add_option("--count", config.count, "Random round-trip polynomials (default 100)");
  hermite->add_option("--seed", config.seed, "Seed for the random-polynomial stream");
  add_format(hermite);
  hermite->callback([&] { config.command = Command::hermite_check; });

  CLI::App* expand =
      app.add_subcommand("expand", "Expand a monomial over the closed-form eigenfunctions");
  expand->add_option("--alpha", config.alpha, "z-exponents, comma separated")->delimiter(',');
  expand->add_option("--beta", config.beta, "zb-exponents, comma separated")->delimiter(',');
  add_format(expand);
  expand->callback([&] { config.command = Command::expand; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace fockspec
