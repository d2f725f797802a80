#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minrep {

struct VerifyCase {
  std::string id;
  std::vector<std::pair<std::string, double>> params;
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  int passed = 0;
  int failed = 0;
  double wall_seconds = 0.0;

  bool all_passed() const { return failed == 0; }
};

struct VerifyOptions {
  /// Restricts suites to one dimension where the suite supports it.
  std::optional<int> m;
  /// Replaces every case tolerance when set.
  std::optional<double> tol;
  /// Quadrature order for operator applications on the open half plane.
  int quad_n = 200;
};

// Check groups. Each returns its cases sorted by id; they run concurrently.
std::vector<VerifyCase> check_specfun(const VerifyOptions& opts);
std::vector<VerifyCase> check_eigenfunctions(const VerifyOptions& opts);
std::vector<VerifyCase> check_semigroup_law(const VerifyOptions& opts);
std::vector<VerifyCase> check_sector_algebra(const VerifyOptions& opts);
std::vector<VerifyCase> check_weber(const VerifyOptions& opts);
std::vector<VerifyCase> check_reduction(const VerifyOptions& opts);
std::vector<VerifyCase> check_expansion(const VerifyOptions& opts);
std::vector<VerifyCase> check_inversion(const VerifyOptions& opts);
std::vector<VerifyCase> check_bruhat(const VerifyOptions& opts);
std::vector<VerifyCase> check_dirac(const VerifyOptions& opts);

/// all, specfun, eigen, weber, reduction, inversion, bruhat, dirac, expansion.
const std::vector<std::string>& suite_names();
/// Runs a suite. Unknown names throw ArgumentError.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace minrep
