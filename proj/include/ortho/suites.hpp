#pragma once

#include <string>
#include <vector>

#include "ortho/rational.hpp"
#include "ortho/report.hpp"

namespace ortho {

// Shared configuration for the verification suites and data tables.
// alphas must exceed -1 everywhere; the basis/operator/limit suites
// additionally require alphas >= 0 (their discrete family needs it).
// Every (alpha, kappa) pair must keep the weight exponent above -1.
struct SuiteConfig {
  std::vector<Rational> alphas;
  std::vector<Rational> kappas;
  long nmax = 12;
  long mmax = 200;
  double tol = 1e-10;
  double xmax = 30.0;
  bool parallel = true;
  bool timing = false;
  SuiteConfig();
};

std::vector<Rational> default_alphas();  // {0, 1/2, 1, 2, 7/3}
std::vector<Rational> default_kappas();  // {-1/3, 0, 1/4, 1/2, 1, 3/2, 2, 3}

// {"ortho", "uniqueness", "basis", "operator", "limit", "all"}
const std::vector<std::string>& suite_names();

// Runs the named suite; checks appear in a fixed order independent of the
// execution mode. Unknown names and inadmissible configs throw
// std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace ortho
