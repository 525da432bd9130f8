#include "ortho/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace ortho {

std::size_t VerificationReport::passed() const {
  std::size_t k = 0;
  for (const auto& c : checks)
    if (c.pass) ++k;
  return k;
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "1";
  j["suite"] = suite;
  j["passed"] = passed();
  j["failed"] = failed();
  j["pass"] = pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["inputs"] = c.inputs;
    r["expected"] = c.expected;
    r["computed"] = c.computed;
    r["exact"] = c.exact;
    r["pass"] = c.pass;
    if (timing) r["runtime_ms"] = fmt_double(c.runtime_ms);
    j["checks"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

namespace {

// RFC-4180: quote fields containing comma, quote, or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::string out = "suite,name,inputs,expected,computed,exact,pass";
  if (timing) out += ",runtime_ms";
  out += "\r\n";
  for (const auto& c : checks) {
    out += csv_field(suite);
    out += ',';
    out += csv_field(c.name);
    out += ',';
    out += csv_field(c.inputs);
    out += ',';
    out += csv_field(c.expected);
    out += ',';
    out += csv_field(c.computed);
    out += ',';
    out += c.exact ? "true" : "false";
    out += ',';
    out += c.pass ? "true" : "false";
    if (timing) {
      out += ',';
      out += fmt_double(c.runtime_ms);
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace ortho
