#include <doctest.h>

#include <algorithm>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/verify.hpp"

using namespace minrep;

TEST_CASE("report ordering and pass flags") {
  const VerificationReport r = run_suite("weber");
  CHECK(r.suite == "weber");
  CHECK(r.cases.size() == 12);
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const auto& c : r.cases) CHECK(c.pass == (c.error <= c.tol));
  CHECK(r.passed + r.failed == static_cast<int>(r.cases.size()));
  CHECK(r.wall_seconds >= 0.0);
}

TEST_CASE("tolerance override applies to every case") {
  VerifyOptions o;
  o.tol = -1.0;
  const VerificationReport r = run_suite("weber", o);
  CHECK(r.failed == static_cast<int>(r.cases.size()));
  CHECK_FALSE(r.all_passed());
  for (const auto& c : r.cases) CHECK(c.tol == -1.0);
}

TEST_CASE("dimension filter restricts the cases") {
  VerifyOptions o;
  o.m = 3;
  const std::vector<VerifyCase> cases = check_sector_algebra(o);
  CHECK_FALSE(cases.empty());
  for (const auto& c : cases) CHECK(c.id.find("/m=3/") != std::string::npos);
  o.m = 7;
  CHECK(check_sector_algebra(o).empty());
}

TEST_CASE("runs are deterministic") {
  const auto a = check_sector_algebra({});
  const auto b = check_sector_algebra({});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].error == b[i].error);
  }
}

TEST_CASE("suite names") {
  const auto& names = suite_names();
  for (const char* s : {"all", "specfun", "eigen", "weber", "reduction", "inversion", "bruhat", "dirac", "expansion"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  CHECK_THROWS_AS(run_suite("nosuch"), ArgumentError);
}
