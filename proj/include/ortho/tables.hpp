#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ortho/suites.hpp"

namespace ortho {

// {"transform-matrix", "energy-levels", "h-values", "zeros", "limit-errors"}
const std::vector<std::string>& table_kinds();

// Writes one CSV table (header row, RFC-4180, floats with 17 significant
// digits, exact columns as "p/q"). Unknown kind throws std::invalid_argument.
// transform-matrix / h-values / zeros use cfg.alphas.front().
void emit_table(const std::string& kind, const SuiteConfig& cfg, std::ostream& out);

}  // namespace ortho
