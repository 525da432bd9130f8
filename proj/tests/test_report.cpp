#include <string>

#include "doctest.h"
#include "ortho/report.hpp"

using ortho::CheckRecord;
using ortho::fmt_double;
using ortho::VerificationReport;

namespace {

VerificationReport sample() {
  VerificationReport r;
  r.suite = "demo";
  r.checks.push_back({"plain", "n=1", "1/2", "1/2", true, true, 1.5});
  r.checks.push_back({"quoted, name", "alpha=7/3", "0", "1e-12", false, false, 2.5});
  return r;
}

}  // namespace

TEST_CASE("double formatting round trips") {
  CHECK(fmt_double(0.1) == "0.10000000000000001");
  CHECK(fmt_double(1.0) == "1");
  CHECK(fmt_double(-2.5e-13) == "-2.4999999999999999e-13");
  CHECK(std::stod(fmt_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("pass and fail counting") {
  const VerificationReport r = sample();
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK(!r.pass());
  VerificationReport empty;
  CHECK(empty.pass());
}

TEST_CASE("json shape") {
  const VerificationReport r = sample();
  const std::string j = r.to_json();
  CHECK(j.find("\"schema\": \"1\"") != std::string::npos);
  CHECK(j.find("\"suite\": \"demo\"") != std::string::npos);
  CHECK(j.find("\"passed\": 1") != std::string::npos);
  CHECK(j.find("\"failed\": 1") != std::string::npos);
  CHECK(j.find("\"runtime_ms\"") == std::string::npos);
  CHECK(j.back() == '\n');
  // repeated serialization is byte-identical
  CHECK(r.to_json() == j);
  VerificationReport timed = sample();
  timed.timing = true;
  CHECK(timed.to_json().find("\"runtime_ms\"") != std::string::npos);
}

TEST_CASE("csv shape") {
  const VerificationReport r = sample();
  const std::string c = r.to_csv();
  CHECK(c.find("suite,name,inputs,expected,computed,exact,pass\r\n") == 0);
  // a comma inside a field forces quoting
  CHECK(c.find("\"quoted, name\"") != std::string::npos);
  CHECK(c.find("\r\ndemo,plain,n=1,1/2,1/2,true,true\r\n") != std::string::npos);
  CHECK(r.to_csv() == c);
  VerificationReport timed = sample();
  timed.timing = true;
  CHECK(timed.to_csv().find("suite,name,inputs,expected,computed,exact,pass,runtime_ms\r\n") == 0);
}
