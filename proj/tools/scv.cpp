#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "scv/error.hpp"
#include "scv/harness.hpp"
#include "scv/identities.hpp"
#include "scv/padic_gamma.hpp"
#include "scv/qseries.hpp"
#include "scv/variety.hpp"

namespace {

constexpr int kUsage = 2;

scv::Rational parse_rational(const std::string& text) {
  scv::Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw scv::Error(scv::ErrorKind::BadRange, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

int run_verify(const std::string& name, const std::string& primes, const scv::RunOptions& opts, const std::string& format,
               const std::string& out) {
  scv::CaseSpec spec;
  spec.name = name;
  std::tie(spec.lo, spec.hi) = scv::parse_range(primes);
  spec.options = opts;
  spec.options.cache = &scv::EtaCache::global();
  const scv::Report report = scv::run_case(spec);
  const auto fmt = format == "csv" ? scv::ReportFormat::Csv : scv::ReportFormat::Json;
  if (out.empty()) {
    scv::emit_report(report, fmt, std::cout);
  } else {
    scv::emit_report(report, fmt, out);
  }
  return report.ok() ? 0 : 1;
}

int run_identity(const std::string& which, std::uint64_t m, std::uint64_t n, std::uint64_t P, const std::string& c1,
                 const std::string& c2, std::size_t samples) {
  std::vector<scv::IdentityCheck> checks;
  if (which == "3.2") {
    checks.push_back(scv::identity_corollary1(m, n));
  } else if (which == "3.4") {
    checks.push_back(scv::identity_corollary2(P, m, n, parse_rational(c1), parse_rational(c2)));
  } else {
    const auto lo = -static_cast<std::int64_t>(m);
    const auto band_lo = static_cast<std::int64_t>(P) - static_cast<std::int64_t>(m);
    const auto band_hi = static_cast<std::int64_t>(m);
    const bool weighted = which == "3.3";
    if (samples == 0) samples = 2 * scv::identity_degree(m, n, weighted ? P : 0) + 2;
    const auto points = scv::sample_points(samples, [&](const scv::Rational& x) {
      if (x.get_den() != 1) return true;
      if (x >= lo && x <= 0) return false;
      return !(weighted && x >= band_lo && x <= band_hi);
    });
    checks = weighted ? scv::identity_theorem2(P, m, n, parse_rational(c1), parse_rational(c2), points)
                      : scv::identity_theorem1(m, n, points);
  }
  std::size_t held = 0;
  for (const auto& c : checks) {
    if (c.holds()) {
      ++held;
    } else {
      std::cout << "mismatch: " << scv::to_string(c.lhs) << " != " << scv::to_string(c.rhs) << '\n';
    }
  }
  std::cout << held << '/' << checks.size() << " checks hold\n";
  return held == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercongruence verification toolkit"};
  app.require_subcommand(1);

  std::string case_name, primes, format = "json", out;
  scv::RunOptions opts;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run one verification case over a prime range");
  verify->add_option("--case", case_name, "Case name (see 'scv list')")->required();
  verify->add_option("--primes", primes, "Inclusive range lo..hi")->required();
  verify->add_option("--mod-power", opts.mod_power, "Exponent k of the modulus p^k");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out, "Write the report here instead of stdout");
  verify->add_option("--threads", opts.threads)->check(CLI::PositiveNumber);
  verify->add_option("--gamma-cap", opts.gamma_cap, "Largest prime for mod p^3 Gamma_p tables");
  verify->add_option("--enum-cap", opts.enum_cap, "Largest prime for brute-force point counts");
  verify->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0");

  std::string form;
  std::size_t upto = 0;
  auto* etaq = app.add_subcommand("etaq", "Print q-expansion coefficients");
  etaq->add_option("--form", form)->required()->check(CLI::IsMember({"gamma", "a", "c"}));
  etaq->add_option("--upto", upto)->required();

  std::uint64_t prime = 0, enum_cap = 31;
  auto* count = app.add_subcommand("count", "Brute-force point count of the quintic");
  count->add_option("--prime", prime)->required();
  count->add_option("--enum-cap", enum_cap);

  unsigned power = 1;
  std::string at;
  auto* gamma = app.add_subcommand("gamma", "Evaluate Gamma_p at a rational");
  gamma->add_option("--prime", prime)->required();
  gamma->add_option("--power", power)->required();
  gamma->add_option("--at", at)->required();

  std::string which, c1 = "1", c2 = "1";
  std::uint64_t m = 0, n = 0, P = 0;
  std::size_t samples = 0;
  auto* identity = app.add_subcommand("identity", "Check a binomial-harmonic identity exactly");
  identity->add_option("--which", which)->required()->check(CLI::IsMember({"3.1", "3.2", "3.3", "3.4"}));
  identity->add_option("--m", m)->required();
  identity->add_option("--n", n)->required();
  identity->add_option("--P", P, "Integer parameter of the weighted identities");
  identity->add_option("--c1", c1);
  identity->add_option("--c2", c2);
  identity->add_option("--samples", samples, "Sample count (default 2 * degree + 2)");

  auto* list = app.add_subcommand("list", "List registered cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      opts.timing = !no_timing;
      return run_verify(case_name, primes, opts, format, out);
    }
    if (*etaq) {
      const auto f = form == "gamma" ? scv::ModularForm::Gamma : form == "a" ? scv::ModularForm::A : scv::ModularForm::C;
      const scv::QSeries s = scv::modular_form(f, upto + 1, &scv::EtaCache::global());
      for (std::size_t i = 0; i <= upto; ++i) std::cout << i << ' ' << s[i].get_str() << '\n';
      return 0;
    }
    if (*count) {
      const scv::CountResult r = scv::count_quintic(prime, enum_cap);
      std::cout << "p " << r.p << "\nN_p " << r.points.get_str() << "\ncharts";
      for (const auto& c : r.charts) std::cout << ' ' << c.get_str();
      std::cout << "\nc(p) " << scv::c_from_points(prime, r.points).get_str() << '\n';
      return 0;
    }
    if (*gamma) {
      const scv::GammaTable table = scv::build_gamma_table(prime, power);
      std::cout << scv::gamma_at(parse_rational(at), table).value() << '\n';
      return 0;
    }
    if (*identity) return run_identity(which, m, n, P, c1, c2, samples);
    if (*list) {
      for (const auto& c : scv::list_cases()) std::cout << c.name << '\t' << c.lo << ".." << c.hi << '\t' << c.statement << '\n';
      return 0;
    }
  } catch (const scv::Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
