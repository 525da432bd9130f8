#include "ortho/tables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ortho/meixner_basis.hpp"
#include "ortho/meixner_operator.hpp"
#include "ortho/radial.hpp"

namespace ortho {

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"transform-matrix", "energy-levels", "h-values",
                                                 "zeros", "limit-errors"};
  return kinds;
}

namespace {

constexpr const char* kEol = "\r\n";

void emit_transform_matrix(const SuiteConfig& cfg, std::ostream& out) {
  const Rational alpha = cfg.alphas.front();
  const TransformMatrix m = orthogonal_block(alpha, cfg.nmax, cfg.mmax);
  out << "n";
  for (long j = 0; j <= cfg.mmax; ++j) out << ",m" << j;
  out << kEol;
  for (long i = 0; i <= cfg.nmax; ++i) {
    out << i;
    for (long j = 0; j <= cfg.mmax; ++j)
      out << ',' << fmt_double(m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out << kEol;
  }
}

void emit_energy_levels(std::ostream& out) {
  out << "dim,l,n,k,alpha,energy" << kEol;
  for (long l = 0; l <= 2; ++l)
    for (long n = 0; n <= 5; ++n) {
      const RadialMode mode(3, l, n, Rational(1));
      out << "3," << l << ',' << n << ",1," << mode.alpha().str() << ','
          << mode.energy().str() << kEol;
    }
}

void emit_h_values(const SuiteConfig& cfg, std::ostream& out) {
  const Rational alpha = cfg.alphas.front();
  const HFunction h1(alpha, 1), h2(alpha, 2);
  out << "x,n,h" << kEol;
  for (double x = 0.0; x <= cfg.xmax + 1e-9; x += 0.5) {
    out << fmt_double(x) << ",1," << fmt_double(h_eval(h1, x)) << kEol;
    out << fmt_double(x) << ",2," << fmt_double(h_eval(h2, x)) << kEol;
    out << fmt_double(x) << ",inf," << fmt_double(h_infinity_eval(alpha, x, 1e-14)) << kEol;
  }
}

void emit_zeros(const SuiteConfig& cfg, std::ostream& out) {
  const Rational alpha = cfg.alphas.front();
  out << "n,zero1,zero2,zero3" << kEol;
  for (long n : {5L, 20L, 80L}) {
    const HFunction h(alpha, n);
    const auto z = first_zeros([&](double x) { return h_eval(h, x); }, 3, cfg.xmax);
    out << n << ',' << fmt_double(z[0]) << ',' << fmt_double(z[1]) << ',' << fmt_double(z[2])
        << kEol;
  }
  const auto zi =
      first_zeros([&](double x) { return h_infinity_eval(alpha, x, 1e-14); }, 3, cfg.xmax);
  out << "inf," << fmt_double(zi[0]) << ',' << fmt_double(zi[1]) << ',' << fmt_double(zi[2])
      << kEol;
}

void emit_limit_errors(const SuiteConfig& cfg, std::ostream& out) {
  out << "alpha,x,n,error" << kEol;
  for (const Rational& alpha : cfg.alphas)
    for (double x : {0.5, 1.0, 2.5}) {
      const LimitStudy st = limit_study(alpha, x, {10, 50, 200}, 1e-14);
      for (const LimitRow& row : st.rows)
        out << alpha.str() << ',' << fmt_double(x) << ',' << row.n << ','
            << fmt_double(row.error) << kEol;
    }
}

}  // namespace

void emit_table(const std::string& kind, const SuiteConfig& cfg, std::ostream& out) {
  const auto& kinds = table_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw std::invalid_argument("unknown table kind '" + kind + "'");
  if (cfg.alphas.empty()) throw std::invalid_argument("alpha grid is empty");
  for (const Rational& a : cfg.alphas)
    if (kind != "energy-levels" && a.sign() < 0)
      throw std::invalid_argument("tables need alpha >= 0");
  if (kind == "transform-matrix")
    emit_transform_matrix(cfg, out);
  else if (kind == "energy-levels")
    emit_energy_levels(out);
  else if (kind == "h-values")
    emit_h_values(cfg, out);
  else if (kind == "zeros")
    emit_zeros(cfg, out);
  else
    emit_limit_errors(cfg, out);
}

}  // namespace ortho
