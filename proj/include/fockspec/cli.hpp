// Command-line front end: configuration record, suite execution, and
// serialization to json, csv, or text. All output is deterministic for a
// fixed configuration (stable ordering, floats rounded to 12 significant
// digits); json reports carry a schema_version field.
#ifndef FOCKSPEC_CLI_HPP
#define FOCKSPEC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace fockspec {

enum class Command { verify_eigen, spectrum, multiplicity, witten_check, hermite_check, expand };
enum class OutputFormat { json, csv, text };

struct RunConfig {
  Command command = Command::spectrum;
  int n = 1;
  int q = 0;
  int degree = 8;       // truncation degree D
  int kmax = 8;         // verify-eigen parameter grid
  int mmax = 8;
  double tolerance = 1e-6;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 1;
  int count = 100;      // randomized suite size per identity
  long mu = 1;          // multiplicity: tracked eigenvalue
  std::vector<int> degrees;      // multiplicity: truncations, default {4, 8, 12}
  std::vector<int> alpha, beta;  // expand: monomial exponents
  bool allow_large_degree = false;
};

/// Executes the configured command; the report goes to `out`, error text to
/// `err`. Returns 0 when every check passes, 1 on a check failure or
/// computation error (first counterexample serialized), 2 on invalid
/// configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Flag-parsing front end around run(), same exit-code contract.
int run_cli(int argc, const char* const* argv);

}  // namespace fockspec

#endif  // FOCKSPEC_CLI_HPP
