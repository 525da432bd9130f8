#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ortho/suites.hpp"
#include "ortho/tables.hpp"

namespace {

std::vector<ortho::Rational> parse_grid(const std::vector<std::string>& items) {
  std::vector<ortho::Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(ortho::Rational::parse(s));
  return out;
}

// Writes text to the path (or stdout when empty). Returns false when the
// path cannot be opened.
bool write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifies degree-scaled Laguerre orthogonality, its uniqueness, the discrete "
               "basis transform, and the difference-operator eigenproblem"};
  app.require_subcommand(1);

  std::vector<std::string> alpha_s, kappa_s;
  long nmax = 12, mmax = 200;
  double tol = 1e-10, xmax = 30.0;
  std::string out_path, format = "json";
  bool serial = false, timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha_s, "alpha grid entries as rationals, e.g. 7/3")
        ->type_name("RAT");
    sub->add_option("--kappa-grid", kappa_s, "kappa grid entries as rationals")->type_name("RAT");
    sub->add_option("--nmax", nmax, "largest polynomial degree");
    sub->add_option("--mmax", mmax, "largest transform column");
    sub->add_option("--tol", tol, "relative tolerance for floating cross-checks");
    sub->add_option("--xmax", xmax, "right end of the zero-scan range");
    sub->add_option("--out", out_path, "output path (stdout when omitted)");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--serial", serial, "run checks on one thread");
    sub->add_flag("--timing", timing, "record per-check runtimes (breaks byte determinism)");
  };

  std::string suite, kind;
  CLI::App* run = app.add_subcommand("run", "run a verification suite and write its report");
  run->add_option("suite", suite, "one of: " + joined(ortho::suite_names()))->required();
  add_common(run);
  CLI::App* emit = app.add_subcommand("emit", "write one CSV data table");
  emit->add_option("kind", kind, "one of: " + joined(ortho::table_kinds()))->required();
  add_common(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ortho::SuiteConfig cfg;
    if (!alpha_s.empty()) cfg.alphas = parse_grid(alpha_s);
    if (!kappa_s.empty()) cfg.kappas = parse_grid(kappa_s);
    cfg.nmax = nmax;
    cfg.mmax = mmax;
    cfg.tol = tol;
    cfg.xmax = xmax;
    cfg.parallel = !serial;
    cfg.timing = timing;

    if (run->parsed()) {
      const ortho::VerificationReport rep = ortho::run_suite(suite, cfg);
      const std::string text = (format == "csv") ? rep.to_csv() : rep.to_json();
      if (!write_out(out_path, text)) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      std::cerr << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
                << " failed\n";
      return rep.pass() ? 0 : 1;
    }
    std::ostringstream table;
    ortho::emit_table(kind, cfg, table);
    if (!write_out(out_path, table.str())) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
