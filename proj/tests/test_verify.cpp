#include <doctest.h>

#include "minmat/verify.hpp"

using namespace minmat;

TEST_CASE("every suite passes at n-max 12") {
  VerifyOptions opt;
  opt.n_max = 12;
  const VerifyReport report = run_verify(Suite::all, opt);
  CHECK(report.passed());
  CHECK(report.checks.size() >= 10);
  for (const auto& c : report.checks) {
    CAPTURE(c.identity);
    CHECK(c.passed);
    CHECK(c.counterexample.empty());
  }
}

TEST_CASE("dets at n-max 1 marks the vacuous theta check") {
  VerifyOptions opt;
  opt.n_max = 1;
  const VerifyReport report = run_verify(Suite::dets, opt);
  CHECK(report.passed());
  bool saw_theta = false;
  for (const auto& c : report.checks) {
    if (c.identity.find("Theta") != std::string::npos) {
      saw_theta = true;
      CHECK(c.cases == 0);
      CHECK_FALSE(c.note.empty());
    }
  }
  CHECK(saw_theta);
}

TEST_CASE("symfun suite beyond the minor cap") {
  VerifyOptions opt;
  opt.n_max = 20;
  opt.minor_cap = 8;
  const VerifyReport report = run_verify(Suite::symfun, opt);
  CHECK(report.passed());
  CHECK(report.checks.front().note.find("minors skipped") != std::string::npos);
}

TEST_CASE("fibonacci and binomial suites") {
  VerifyOptions opt;
  opt.n_max = 100;
  CHECK(run_verify(Suite::fibonacci, opt).passed());
  opt.n_max = 40;
  CHECK(run_verify(Suite::binomial, opt).passed());
}

TEST_CASE("suite names") {
  CHECK(parse_suite("dets") == Suite::dets);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_FALSE(parse_suite("everything"));
}
