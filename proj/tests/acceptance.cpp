// One line per acceptance criterion: PASS/FAIL, worst error against its
// tolerance, and wall time against the budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "minrep/verify.hpp"

using namespace minrep;

namespace {

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::vector<std::vector<VerifyCase> (*)(const VerifyOptions&)> checks;
  std::function<bool(const std::string&)> select;
};

bool contains(const std::string& id, const char* part) { return id.find(part) != std::string::npos; }
bool starts(const std::string& id, const char* prefix) { return id.rfind(prefix, 0) == 0; }

}  // namespace

int main() {
  const auto all = [](const std::string&) { return true; };
  const std::vector<Criterion> criteria = {
      {1, "eigenfunction identity", 30.0, {check_eigenfunctions}, all},
      {2, "Weber second exponential integral", 5.0, {check_weber}, all},
      {3, "radial semigroup law", 10.0, {check_semigroup_law}, all},
      {4, "angular reduction", 60.0, {check_reduction}, all},
      {5, "expansion formula", 20.0, {check_expansion}, all},
      {6, "inversion order and Plancherel", 30.0, {check_inversion},
       [](const std::string& id) {
         return (starts(id, "inversion/") && contains(id, "/order")) ||
                (starts(id, "hankel/") && (contains(id, "/order") || contains(id, "/plancherel")));
       }},
      {7, "Bruhat factorization", 5.0, {check_bruhat}, all},
      {8, "exact sector algebra", 1.0, {check_sector_algebra}, all},
      {9, "special-function suite", 30.0, {check_specfun}, all},
      {10, "Dirac sequence", 10.0, {check_dirac}, [](const std::string& id) { return starts(id, "dirac/"); }},
  };

  VerifyOptions opts;
  opts.quad_n = 200;
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerifyCase> cases;
    for (auto check : c.checks) {
      for (auto& v : check(opts))
        if (c.select(v.id)) cases.push_back(std::move(v));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int bad = 0;
    const VerifyCase* worst = nullptr;
    double worst_ratio = -1.0;
    for (const auto& v : cases) {
      if (!v.pass) ++bad;
      const double ratio = v.tol > 0.0 ? v.error / v.tol : (v.error > 0.0 ? 1e300 : 0.0);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = &v;
      }
    }
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = bad == 0 && in_time && !cases.empty();
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %zu cases, %d failed; worst %s error %.3e tol %.1e; %.2f s of %.0f s budget\n",
                pass ? "PASS" : "FAIL", c.number, c.title, cases.size(), bad, worst ? worst->id.c_str() : "-",
                worst ? worst->error : 0.0, worst ? worst->tol : 0.0, secs, c.budget_seconds);
    for (const auto& v : cases)
      if (!v.pass) std::printf("    failed case %s: error %.3e tol %.1e\n", v.id.c_str(), v.error, v.tol);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
