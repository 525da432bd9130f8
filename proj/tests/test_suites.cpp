#include <stdexcept>

#include "doctest.h"
#include "ortho/suites.hpp"

using ortho::default_alphas;
using ortho::default_kappas;
using ortho::Rational;
using ortho::run_suite;
using ortho::suite_names;
using ortho::SuiteConfig;
using ortho::VerificationReport;

namespace {

SuiteConfig small() {
  SuiteConfig cfg;
  cfg.alphas = {Rational(0), Rational(1, 2)};
  cfg.kappas = {Rational(0), Rational(1, 4), Rational(1)};
  // mmax must cover the discrete tail: the basis suite asserts a fixed 1e-8
  // Gram deviation and the truncation error at mmax = 60 is ~9e-8
  cfg.nmax = 3;
  cfg.mmax = 150;
  cfg.xmax = 12.0;
  return cfg;
}

}  // namespace

TEST_CASE("default grids") {
  const SuiteConfig cfg;
  CHECK(cfg.alphas == default_alphas());
  CHECK(cfg.kappas == default_kappas());
  CHECK(default_alphas().size() == 5);
  CHECK(default_alphas()[4] == Rational(7, 3));
  CHECK(default_kappas().size() == 8);
  CHECK(cfg.nmax == 12);
  CHECK(cfg.mmax == 200);
  CHECK(cfg.tol == 1e-10);
  CHECK(suite_names().size() == 6);
}

TEST_CASE("every suite passes on a small grid") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const VerificationReport r = run_suite(name, small());
    INFO(name << " report:\n" << r.to_csv());
    CHECK(r.pass());
    CHECK(r.suite == name);
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("aggregate suite concatenates the five members") {
  const SuiteConfig cfg = small();
  const VerificationReport all = run_suite("all", cfg);
  std::size_t total = 0;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    total += run_suite(name, cfg).checks.size();
  }
  CHECK(all.checks.size() == total);
  CHECK(all.pass());
  CHECK(all.suite == "all");
}

TEST_CASE("serial and parallel execution produce identical reports") {
  SuiteConfig cfg = small();
  cfg.parallel = false;
  const VerificationReport serial = run_suite("ortho", cfg);
  cfg.parallel = true;
  const VerificationReport parallel = run_suite("ortho", cfg);
  CHECK(serial.to_json() == parallel.to_json());
  CHECK(serial.to_csv() == parallel.to_csv());
}

TEST_CASE("unknown suite and bad configs are rejected") {
  CHECK_THROWS_AS(static_cast<void>(run_suite("bogus", small())), std::invalid_argument);
  SuiteConfig cfg = small();
  cfg.alphas.clear();
  CHECK_THROWS_AS(static_cast<void>(run_suite("ortho", cfg)), std::invalid_argument);
  cfg = small();
  cfg.alphas = {Rational(-3, 2)};
  CHECK_THROWS_AS(static_cast<void>(run_suite("ortho", cfg)), std::invalid_argument);
  // the discrete suites need alpha >= 0
  cfg = small();
  cfg.alphas = {Rational(-1, 2)};
  CHECK_THROWS_AS(static_cast<void>(run_suite("basis", cfg)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(run_suite("operator", cfg)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(run_suite("limit", cfg)), std::invalid_argument);
  cfg = small();
  cfg.kappas.clear();
  CHECK_THROWS_AS(static_cast<void>(run_suite("uniqueness", cfg)), std::invalid_argument);
  // weight exponent alpha + kappa must stay above -1
  cfg = small();
  cfg.alphas = {Rational(0)};
  cfg.kappas = {Rational(-3, 2)};
  CHECK_THROWS_AS(static_cast<void>(run_suite("uniqueness", cfg)), std::invalid_argument);
  // degenerate linear condition alpha + 2 kappa + 1 = 0
  cfg = small();
  cfg.alphas = {Rational(0)};
  cfg.kappas = {Rational(-1, 2)};
  CHECK_THROWS_AS(static_cast<void>(run_suite("uniqueness", cfg)), std::invalid_argument);
  cfg = small();
  cfg.nmax = 0;
  CHECK_THROWS_AS(static_cast<void>(run_suite("ortho", cfg)), std::invalid_argument);
  cfg = small();
  cfg.tol = 0.0;
  CHECK_THROWS_AS(static_cast<void>(run_suite("ortho", cfg)), std::invalid_argument);
  cfg = small();
  cfg.xmax = 1.0;
  CHECK_THROWS_AS(static_cast<void>(run_suite("limit", cfg)), std::invalid_argument);
}

TEST_CASE("failing tolerance shows up as failed checks") {
  SuiteConfig cfg = small();
  cfg.tol = 1e-30;  // below what floating cross checks can reach
  const VerificationReport r = run_suite("ortho", cfg);
  CHECK(r.failed() > 0);
  CHECK(!r.pass());
}
