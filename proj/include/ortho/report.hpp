#pragma once

#include <string>
#include <vector>

namespace ortho {

// One verification record. `exact` marks checks decided in rational
// arithmetic (expected/computed are exact strings); otherwise the strings
// are 17-significant-digit floats. runtime_ms is only serialized when the
// owning report has timing enabled, keeping default output byte-stable.
struct CheckRecord {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string computed;
  bool exact = false;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  bool timing = false;
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool pass() const { return failed() == 0; }
  std::string to_json() const;
  std::string to_csv() const;
};

// 17 significant digits, enough to round-trip any double.
std::string fmt_double(double v);

}  // namespace ortho
