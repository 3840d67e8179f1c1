#pragma once

// Bit-stable table output.  Exact rationals are serialized as separate
// numerator/denominator decimal strings; the float columns are rendered with
// 12 significant digits from the merged exact values, so output bytes do not
// depend on the worker count.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperzeta/ensemble.hpp"
#include "hyperzeta/rational.hpp"

namespace hz {

struct RunConfig {
  uint32_t q = 3;
  uint32_t g = 2;
  uint32_t n_max = 0;  // 0: use 2g+2
  std::vector<FamilyKind> families = {FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union,
                                      FamilyKind::Hg, FamilyKind::HgMonic};
  std::string format = "csv";
  std::string out;  // empty: stdout
  unsigned workers = 0;  // 0: HYPERZETA_WORKERS or 1
  uint64_t budget = 10'000'000;
  uint32_t check_stride = 97;

  uint32_t effective_n_max() const { return n_max ? n_max : 2 * g + 2; }
  unsigned effective_workers() const { return workers ? workers : default_workers(); }
  void validate() const {
    if (!is_odd_prime(q)) throw std::invalid_argument("config: q must be an odd prime");
    if (g < 1) throw std::invalid_argument("config: g must be >= 1");
    uint32_t nm = effective_n_max();
    if (nm < 1 || nm > 4 * g + 4) throw std::invalid_argument("config: n_max must be in [1, 4g+4]");
    if (format != "csv" && format != "json") throw std::invalid_argument("config: format must be csv or json");
  }
};

struct ReportRow {
  std::string family;
  uint32_t q = 0, g = 0, n = 0;
  Rational avg_scaled;
  Rational main_scaled;
  int rmt = 0;
  std::string branch;
};

inline std::vector<ReportRow> avg_report(const RunConfig& cfg, const IrreducibleTable& T) {
  std::vector<ReportRow> rows;
  const uint32_t nm = cfg.effective_n_max();
  ScanOptions opt;
  opt.workers = cfg.effective_workers();
  opt.budget = cfg.budget;
  opt.check_stride = cfg.check_stride;
  for (FamilyKind kind : cfg.families) {
    FamilySpec spec{kind, cfg.q, cfg.g};
    TraceSums sums = family_trace_sums(spec, nm, T, opt);
    for (uint32_t n = 1; n <= nm; ++n) {
      ReportRow r;
      r.family = family_label(kind);
      r.q = cfg.q;
      r.g = cfg.g;
      r.n = n;
      r.avg_scaled = Rational(sums.acc[n], BigInt(sums.curves));
      auto [mt, branch] = main_term(spec, n, T);
      r.main_scaled = mt;
      r.branch = branch;
      r.rmt = rmt_value(n, cfg.g);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

inline std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "family,q,g,n,avg_num,avg_den,avg_trace,main_term,rmt,deviation,branch\n";
  for (const auto& r : rows) {
    double avg_tr = trace_units(r.avg_scaled, r.q, r.n);
    double main_tr = trace_units(r.main_scaled, r.q, r.n);
    os << r.family << ',' << r.q << ',' << r.g << ',' << r.n << ',' << num_str(r.avg_scaled) << ','
       << den_str(r.avg_scaled) << ',' << fmt_sig12(avg_tr) << ',' << fmt_sig12(main_tr) << ',' << r.rmt
       << ',' << fmt_sig12(avg_tr - main_tr) << ',' << r.branch << '\n';
  }
  return os.str();
}

inline nlohmann::json rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    double avg_tr = trace_units(r.avg_scaled, r.q, r.n);
    double main_tr = trace_units(r.main_scaled, r.q, r.n);
    arr.push_back({{"family", r.family},
                   {"q", r.q},
                   {"g", r.g},
                   {"n", r.n},
                   {"avg_num", num_str(r.avg_scaled)},
                   {"avg_den", den_str(r.avg_scaled)},
                   {"avg_trace", fmt_sig12(avg_tr)},
                   {"main_term", fmt_sig12(main_tr)},
                   {"rmt", r.rmt},
                   {"deviation", fmt_sig12(avg_tr - main_tr)},
                   {"branch", r.branch}});
  }
  return arr;
}

inline void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
}

}  // namespace hz
