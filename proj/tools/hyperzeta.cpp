// hyperzeta: exact zeta statistics for hyperelliptic curves over small odd
// prime fields.
//
//   zeta     L-polynomial, point counts and scaled traces of one curve
//   avg      exact family averages of the scaled traces, with main terms
//   charsum  the S(beta;n) grid with duality checks and main-term residuals
//   verify   every invariant suite at the configured (q, g)
//
// Exit codes: 0 ok, 1 parse/config, 2 bad curve, 3 budget exceeded,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "hyperzeta/charsum.hpp"
#include "hyperzeta/curve.hpp"
#include "hyperzeta/ensemble.hpp"
#include "hyperzeta/report.hpp"
#include "hyperzeta/verify.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitCurve = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

std::vector<hz::FamilyKind> parse_families(const std::string& s) {
  if (s == "all")
    return {hz::FamilyKind::FOdd, hz::FamilyKind::FEven, hz::FamilyKind::Union, hz::FamilyKind::Hg,
            hz::FamilyKind::HgMonic};
  if (s == "f-odd") return {hz::FamilyKind::FOdd};
  if (s == "f-even") return {hz::FamilyKind::FEven};
  if (s == "union") return {hz::FamilyKind::Union};
  if (s == "hg") return {hz::FamilyKind::Hg};
  if (s == "hg-monic") return {hz::FamilyKind::HgMonic};
  throw std::invalid_argument("unknown family '" + s + "'");
}

int cmd_zeta(const hz::RunConfig& cfg, const std::string& poly_str) {
  hz::FieldCtx F(cfg.q);
  hz::Curve C = hz::make_curve(hz::poly_from_string(poly_str, F), F);
  uint32_t n_max = cfg.n_max ? cfg.n_max : 2 * C.g + 2;
  if (n_max > 4 * C.g + 4) throw std::invalid_argument("config: n_max must be in [1, 4g+4]");

  std::vector<int64_t> t(2 * C.g + 1, 0);
  std::vector<int64_t> counts(2 * C.g + 1, 0);
  for (uint32_t n = 1; n <= 2 * C.g; ++n) {
    hz::ExtFieldCtx E = hz::build_extension(n, F, uint32_t(C.Q.deg()));
    counts[n] = hz::count_points(C, n, E);
    t[n] = hz::scaled_trace_from_count(counts[n], n, F);
  }
  hz::FrobeniusData fro = hz::lpoly_from_full_counts(C, t);
  bool fe_ok = hz::fe_symmetric(fro.lcoeffs, C.q, C.g);
  double weil_err = hz::weil_max_radius_error(fro);
  bool weil_ok = weil_err < 1e-9;
  std::vector<int64_t> traces = fro.traces(n_max);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "zeta";
    j["q"] = C.q;
    j["poly"] = hz::poly_to_string(C.Q);
    j["genus"] = C.g;
    j["lambda"] = C.lambda;
    nlohmann::json jc = nlohmann::json::array();
    for (uint32_t n = 1; n <= 2 * C.g; ++n) jc.push_back(counts[n]);
    j["counts"] = jc;
    j["lstar"] = fro.lcoeffs;
    nlohmann::json jt = nlohmann::json::array();
    for (uint32_t n = 1; n <= n_max; ++n) jt.push_back(traces[n]);
    j["scaled_traces"] = jt;
    j["fe_ok"] = fe_ok;
    j["weil_ok"] = weil_ok;
    j["weil_err"] = hz::fmt_sig12(weil_err);
    os << j.dump(2) << "\n";
  } else {
    os << "q " << C.q << " genus " << C.g << " lambda " << C.lambda << "\n";
    os << "Q " << hz::poly_to_string(C.Q) << "\n";
    for (uint32_t n = 1; n <= 2 * C.g; ++n) os << "count n=" << n << " " << counts[n] << "\n";
    os << "L*";
    for (int64_t c : fro.lcoeffs) os << " " << c;
    os << "\n";
    for (uint32_t n = 1; n <= n_max; ++n) os << "t " << n << " " << traces[n] << "\n";
    os << "fe " << (fe_ok ? "PASS" : "FAIL") << "\n";
    os << "weil " << (weil_ok ? "PASS" : "FAIL") << " max_radius_err " << hz::fmt_sig12(weil_err) << "\n";
  }
  hz::write_output(os.str(), cfg.out);
  return (fe_ok && weil_ok) ? 0 : kExitVerify;
}

int cmd_avg(const hz::RunConfig& cfg) {
  hz::IrreducibleTable T = hz::build_irreducible_table(cfg.effective_n_max(), hz::FieldCtx(cfg.q));
  std::vector<hz::ReportRow> rows = hz::avg_report(cfg, T);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "avg";
    j["q"] = cfg.q;
    j["g"] = cfg.g;
    j["n_max"] = cfg.effective_n_max();
    j["rows"] = hz::rows_to_json(rows);
    hz::write_output(j.dump(2) + "\n", cfg.out);
  } else {
    hz::write_output(hz::rows_to_csv(rows), cfg.out);
  }
  return 0;
}

int cmd_charsum(const hz::RunConfig& cfg) {
  uint32_t n_max = cfg.n_max ? cfg.n_max : 5;
  hz::FieldCtx F(cfg.q);
  hz::IrreducibleTable T = hz::build_irreducible_table(n_max + 2, F);
  std::ostringstream os;
  nlohmann::json arr = nlohmann::json::array();
  if (cfg.format != "json") os << "q,n,beta,S,main_term,residual,dual_ok\n";
  for (uint32_t n = 1; n <= n_max; ++n) {
    for (uint32_t beta = 0; beta <= n + 2; ++beta) {
      hz::CharSumRecord rec = hz::charsum_record(beta, n, T);
      double resid = hz::to_double(hz::Rational(rec.value) - rec.main_term);
      bool dual = beta < n ? hz::S_dual_check(beta, n, T) : rec.value == 0;
      if (cfg.format == "json") {
        arr.push_back({{"q", cfg.q},
                       {"n", n},
                       {"beta", beta},
                       {"S", rec.value},
                       {"main_num", hz::num_str(rec.main_term)},
                       {"main_den", hz::den_str(rec.main_term)},
                       {"residual", hz::fmt_sig12(resid)},
                       {"dual_ok", dual}});
      } else {
        os << cfg.q << ',' << n << ',' << beta << ',' << rec.value << ',' << hz::fmt_sig12(hz::to_double(rec.main_term))
           << ',' << hz::fmt_sig12(resid) << ',' << (dual ? 1 : 0) << '\n';
      }
    }
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "charsum";
    j["q"] = cfg.q;
    j["rows"] = arr;
    hz::write_output(j.dump(2) + "\n", cfg.out);
  } else {
    hz::write_output(os.str(), cfg.out);
  }
  return 0;
}

int cmd_verify(const hz::RunConfig& cfg) {
  std::vector<hz::SuiteResult> results = hz::run_verify(cfg.q, cfg.g, cfg.budget);
  uint64_t failures = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : results) {
    failures += s.failures;
    arr.push_back({{"suite", s.suite}, {"cases", s.cases}, {"failures", s.failures}, {"seconds", s.seconds}});
    std::fprintf(stderr, "%-24s cases %8llu failures %llu (%.2fs)\n", s.suite.c_str(),
                 (unsigned long long)s.cases, (unsigned long long)s.failures, s.seconds);
  }
  nlohmann::json j;
  j["command"] = "verify";
  j["q"] = cfg.q;
  j["g"] = cfg.g;
  j["suites"] = arr;
  j["total_failures"] = failures;
  hz::write_output(j.dump(2) + "\n", cfg.out);
  return failures == 0 ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zeta-function statistics for hyperelliptic curves y^2 = Q(x) over F_q"};
  app.require_subcommand(1);

  hz::RunConfig cfg;
  std::string family_str = "all";
  std::string poly_str;

  auto add_common = [&](CLI::App* sub, bool needs_g) {
    sub->add_option("--q", cfg.q, "base field cardinality (odd prime)");
    if (needs_g) sub->add_option("--g", cfg.g, "genus");
    sub->add_option("--n-max", cfg.n_max, "largest trace power (default 2g+2)");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--workers", cfg.workers, "worker threads (default $HYPERZETA_WORKERS or 1)");
    sub->add_option("--budget", cfg.budget, "enumeration budget in candidates");
    sub->add_option("--check-stride", cfg.check_stride, "cross-check every k-th curve (0 disables)");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "single-curve zeta data");
  add_common(zeta, false);
  zeta->add_option("--poly", poly_str, "coefficients of Q, low degree first, comma separated")->required();

  CLI::App* avg = app.add_subcommand("avg", "family averages of scaled traces");
  add_common(avg, true);
  avg->add_option("--family", family_str, "f-odd|f-even|union|hg|hg-monic|all");

  CLI::App* charsum = app.add_subcommand("charsum", "S(beta;n) grid");
  add_common(charsum, false);

  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (zeta->parsed()) {
      if (!hz::is_odd_prime(cfg.q)) throw std::invalid_argument("config: q must be an odd prime");
      return cmd_zeta(cfg, poly_str);
    }
    cfg.families = parse_families(family_str);
    cfg.validate();
    if (avg->parsed()) return cmd_avg(cfg);
    if (charsum->parsed()) return cmd_charsum(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const hz::CurveError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCurve;
  } catch (const hz::BudgetError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerify;
  }
  return 0;
}
