// Command-line front end for the extremal-polynomial library: coefficient
// dumps, boundary traces, positivity certification, family comparison and
// degree sweeps, in json/csv/text form.
//
// Exit codes: 0 success (incl. certified/degenerate verdicts), 1 refuted,
// 2 usage or validation error, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "koebe/koebe.hpp"
#include "koebe/report_io.hpp"

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::string out;
  int grid = 4096;
  int max_depth = 40;
};

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open output file: " + g.out);
  f << payload;
}

std::string dump_json(const koebe::ordered_json& j) { return j.dump(2) + "\n"; }

koebe::FamilySpec family_from_options(const CLI::Option* dss_opt, int dss_n,
                                      const CLI::Option* suf_opt,
                                      const std::vector<int>& suf) {
  const bool have_dss = dss_opt->count() > 0;
  const bool have_suf = suf_opt->count() > 0;
  if (have_dss == have_suf)
    throw std::invalid_argument("specify exactly one of --dss N or --suffridge n j");
  if (have_dss) return koebe::FamilySpec::dss(dss_n);
  return koebe::FamilySpec::suffridge(suf[0], suf[1]);
}

int exit_code_for(koebe::Verdict v) {
  switch (v) {
    case koebe::Verdict::Certified:
    case koebe::Verdict::Degenerate: return 0;
    case koebe::Verdict::Refuted: return 1;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal univalent polynomials: coefficients, boundary data, "
               "positivity certificates and Koebe-radius comparisons"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--grid", g.grid, "Circle-scan sample count")
      ->check(CLI::Range(64, 1 << 24))
      ->capture_default_str();
  app.add_option("--max-depth", g.max_depth, "Bisection depth limit")
      ->check(CLI::Range(1, 60))
      ->capture_default_str();

  // coeffs
  auto* cmd_coeffs = app.add_subcommand("coeffs", "Print family coefficients");
  int coeffs_dss_n = 0;
  std::vector<int> coeffs_suf;
  auto* coeffs_dss = cmd_coeffs->add_option("--dss", coeffs_dss_n, "P_N degree N");
  auto* coeffs_sufo =
      cmd_coeffs->add_option("--suffridge", coeffs_suf, "Suffridge indices n j")
          ->expected(2);

  // trace
  auto* cmd_trace = app.add_subcommand("trace", "Boundary curve samples over [0, 2pi]");
  int trace_dss_n = 0;
  std::vector<int> trace_suf;
  int trace_samples = 1024;
  auto* trace_dss = cmd_trace->add_option("--dss", trace_dss_n, "P_N degree N");
  auto* trace_sufo =
      cmd_trace->add_option("--suffridge", trace_suf, "Suffridge indices n j")
          ->expected(2);
  cmd_trace->add_option("--samples", trace_samples, "Number of panels")
      ->check(CLI::Range(16, 1 << 24))
      ->capture_default_str();

  // certify
  auto* cmd_certify = app.add_subcommand("certify", "Certify R'_N > 0 on (-1, 1)");
  int certify_n = 0;
  cmd_certify->add_option("N", certify_n, "Family degree")->required();

  // compare
  auto* cmd_compare =
      app.add_subcommand("compare", "Compare P_N against Suffridge S_{N,1}");
  int compare_n_max = 0;
  cmd_compare->add_option("N_max", compare_n_max, "Largest degree")->required();

  // sweep
  auto* cmd_sweep =
      app.add_subcommand("sweep", "Run the univalence certifier over a degree range");
  int sweep_from = 0, sweep_to = 0;
  cmd_sweep->add_option("N_from", sweep_from, "First degree")->required();
  cmd_sweep->add_option("N_to", sweep_to, "Last degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_coeffs) {
      const koebe::FamilySpec fam =
          family_from_options(coeffs_dss, coeffs_dss_n, coeffs_sufo, coeffs_suf);
      const koebe::RealPolynomial p = koebe::family_coeffs(fam);
      if (g.format == "json")
        emit(g, dump_json(koebe::coeffs_json(fam, p)));
      else if (g.format == "csv")
        emit(g, koebe::coeffs_csv(p));
      else
        emit(g, koebe::coeffs_text(p));
      return 0;
    }
    if (*cmd_trace) {
      const koebe::FamilySpec fam =
          family_from_options(trace_dss, trace_dss_n, trace_sufo, trace_suf);
      const koebe::RealPolynomial p = koebe::family_coeffs(fam);
      if (g.format == "json")
        emit(g, dump_json(koebe::trace_json(fam, p, trace_samples)));
      else
        emit(g, koebe::trace_csv(p, trace_samples));  // csv and text coincide
      return 0;
    }
    if (*cmd_certify) {
      const koebe::UnivalenceReport rep =
          koebe::certify_univalence(certify_n, g.max_depth);
      if (g.format == "json")
        emit(g, dump_json(koebe::certify_json(rep)));
      else if (g.format == "csv")
        emit(g, koebe::certify_csv(rep));
      else
        emit(g, koebe::certify_text(rep));
      return exit_code_for(rep.verdict);
    }
    if (*cmd_compare) {
      const std::vector<koebe::ComparisonRow> rows =
          koebe::comparison_table(compare_n_max, g.grid);
      if (g.format == "json")
        emit(g, dump_json(koebe::compare_json(rows, compare_n_max)));
      else if (g.format == "csv")
        emit(g, koebe::compare_csv(rows));
      else
        emit(g, koebe::compare_text(rows));
      return 0;
    }
    if (*cmd_sweep) {
      if (sweep_from < 2 || sweep_from > sweep_to || sweep_to > 200)
        throw std::invalid_argument("sweep: requires 2 <= N_from <= N_to <= 200");
      std::vector<koebe::UnivalenceReport> reports;
      reports.reserve(static_cast<size_t>(sweep_to - sweep_from) + 1);
      for (int n = sweep_from; n <= sweep_to; ++n)
        reports.push_back(koebe::certify_univalence(n, g.max_depth));
      if (g.format == "json")
        emit(g, dump_json(koebe::sweep_json(reports, sweep_from, sweep_to)));
      else if (g.format == "csv")
        emit(g, koebe::sweep_csv(reports));
      else
        emit(g, koebe::sweep_text(reports));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // no subcommand (require_subcommand should prevent this)
}
