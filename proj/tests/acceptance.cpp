// Acceptance runner: ten end-to-end criteria over the library and the CLI,
// each with its tolerance pinned in code and a wall-clock budget.  Prints
// one pass/fail line per criterion and exits with the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "koebe/koebe.hpp"

using koebe::dss_coeffs;
using koebe::RealPolynomial;

namespace {

std::vector<std::string> g_detail;  // failure diagnostics for the current criterion

bool close(double got, double want, double tol, const char* what) {
  if (std::abs(got - want) <= tol) return true;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s: got %.17g, want %.17g (tol %.3g)", what,
                got, want, tol);
  g_detail.emplace_back(buf);
  return false;
}

bool require(bool ok, const char* what) {
  if (!ok) g_detail.emplace_back(what);
  return ok;
}

// --- criterion bodies -------------------------------------------------------

bool coefficient_goldens() {
  bool ok = true;
  const double tol = 1e-12;
  const RealPolynomial p2 = dss_coeffs(2);
  ok &= close(p2.coeff(0), 0.0, tol, "a_0(P_2)");
  ok &= close(p2.coeff(1), 1.0, tol, "a_1(P_2)");
  ok &= close(p2.coeff(2), 0.5, tol, "a_2(P_2)");

  const double s5 = std::sqrt(5.0);
  const RealPolynomial p3 = dss_coeffs(3);
  ok &= close(p3.coeff(2), 2.0 / s5, tol, "a_2(P_3)");
  ok &= close(p3.coeff(3), (1.0 - 1.0 / s5) / 2.0, tol, "a_3(P_3)");

  const RealPolynomial p4 = dss_coeffs(4);
  ok &= close(p4.coeff(2), 7.0 / 6.0, tol, "a_2(P_4)");
  ok &= close(p4.coeff(3), 2.0 / 3.0, tol, "a_3(P_4)");
  ok &= close(p4.coeff(4), 1.0 / 6.0, tol, "a_4(P_4)");

  const double s2 = std::sqrt(2.0);
  const double den = 4 * s2 + 8;
  const RealPolynomial p6 = dss_coeffs(6);
  ok &= close(p6.coeff(2), (9 + 8 * s2) / den, tol, "a_2(P_6)");
  ok &= close(p6.coeff(3), (6 * s2 + 10) / den, tol, "a_3(P_6)");
  ok &= close(p6.coeff(4), (4 * s2 + 6) / den, tol, "a_4(P_6)");
  ok &= close(p6.coeff(5), (2 * s2 + 2) / den, tol, "a_5(P_6)");
  ok &= close(p6.coeff(6), 1.0 / den, tol, "a_6(P_6)");
  return ok;
}

bool radius_values() {
  bool ok = true;
  ok &= close(koebe::koebe_radius_formula(2), 0.5, 1e-12, "radius(2)");
  ok &= close(koebe::koebe_radius_formula(3), (3.0 - std::sqrt(5.0)) / 2.0,
              1e-12, "radius(3)");
  ok &= close(koebe::koebe_radius_formula(4), 1.0 / 3.0, 1e-12, "radius(4)");
  ok &= close(koebe::koebe_radius_formula(5), 0.3080, 5e-4, "radius(5)");
  ok &= close(koebe::koebe_radius_formula(6), 0.2929, 5e-4, "radius(6)");
  return ok;
}

bool suffridge_values() {
  bool ok = true;
  const RealPolynomial s3 = koebe::suffridge_coeffs(3, 1);
  ok &= close(std::abs(koebe::eval_complex(s3, {-1.0, 0.0})), 0.3905, 5e-4,
              "|S_{3,1}(-1)|");
  ok &= close(koebe::min_modulus_on_circle(s3).radius, 0.3849, 5e-4,
              "circle min S_{3,1}");
  const RealPolynomial s5 = koebe::suffridge_coeffs(5, 1);
  ok &= close(std::abs(koebe::eval_complex(s5, {-1.0, 0.0})), 0.3215, 5e-4,
              "|S_{5,1}(-1)|");
  ok &= close(koebe::min_modulus_on_circle(s5).radius, 0.3196, 5e-4,
              "circle min S_{5,1}");
  ok &= close(koebe::suffridge_at_minus_one_formula(4), 0.3455, 5e-4, "r_4");
  ok &= close(koebe::suffridge_at_minus_one_formula(6), 0.3069, 5e-4, "r_6");
  return ok;
}

bool r_poly_goldens() {
  bool ok = true;
  const RealPolynomial r4 = 4.0 * koebe::r_poly(4);
  ok &= close(r4.coeff(0), 40.0 / 9.0, 1e-10, "4R_4 c0");
  ok &= close(r4.coeff(1), 112.0 / 9.0, 1e-10, "4R_4 c1");
  ok &= close(r4.coeff(2), 124.0 / 9.0, 1e-10, "4R_4 c2");
  ok &= close(r4.coeff(3), 16.0 / 3.0, 1e-10, "4R_4 c3");

  const double r = std::sqrt(2.0);
  const RealPolynomial r6 = 4.0 * koebe::r_poly(6);
  const double want6[6] = {2.0,          8 * r - 4,  38 - 12 * r,
                           28 * r - 4,   28 * r - 10, 32 - 16 * r};
  for (int d = 0; d < 6; ++d) {
    char label[16];
    std::snprintf(label, sizeof(label), "4R_6 c%d", d);
    ok &= close(r6.coeff(d), want6[d], 1e-10, label);
  }

  const RealPolynomial r2 = koebe::r_poly(2);
  ok &= close(r2.coeff(0), 1.25, 1e-12, "R_2 c0");
  ok &= close(r2.coeff(1), 1.0, 1e-12, "R_2 c1");
  ok &= close(koebe::r_poly(1).coeff(0), 1.0, 1e-12, "R_1");
  return ok;
}

bool discriminant_value() {
  // Quadratic discriminant b^2 - 4ac of 4 R'_4.
  const RealPolynomial q = 4.0 * koebe::r_prime_poly(4);
  const double disc =
      q.coeff(1) * q.coeff(1) - 4.0 * q.coeff(2) * q.coeff(0);
  return close(disc, -3008.0 / 81.0, 0.01, "disc(4 R'_4)");
}

bool certification() {
  bool ok = true;
  ok &= require(koebe::certify_univalence(1).verdict == koebe::Verdict::Degenerate,
                "degree 1 must be degenerate");
  for (int n = 2; n <= 6; ++n) {
    const koebe::UnivalenceReport rep = koebe::certify_univalence(n);
    ok &= require(rep.verdict == koebe::Verdict::Certified,
                  "degrees 2..6 must be certified");
    for (const koebe::CertificationReport& m : rep.methods)
      ok &= require(m.verdict == koebe::Verdict::Certified,
                    "every method must agree on degrees 2..6");
  }

  const koebe::UnivalenceReport r5 = koebe::certify_univalence(5);
  ok &= require(r5.methods.size() == 3 &&
                    r5.methods[2].has_discriminant &&
                    r5.methods[2].discriminant.strictly_negative(),
                "degree 5 discriminant enclosure must be strictly negative");

  const koebe::UnivalenceReport r6 = koebe::certify_univalence(6);
  if (require(r6.methods.size() == 3 && r6.methods[2].shift_coeffs.size() == 5,
              "degree 6 must carry five shifted coefficients")) {
    const double r = std::sqrt(2.0);
    const double want[5] = {108 - 76 * r, 464 * r - 660, 1068 - 732 * r,
                            432 * r - 680, 160 - 80 * r};
    for (int d = 0; d < 5; ++d) {
      const koebe::Interval& iv = r6.methods[2].shift_coeffs[d];
      char label[32];
      std::snprintf(label, sizeof(label), "shifted c%d enclosure", d);
      ok &= require(iv.lo() <= want[d] + 1e-10 && iv.hi() >= want[d] - 1e-10,
                    label);
      ok &= close(iv.mid(), want[d], 1e-10, label);
    }
  } else {
    ok = false;
  }
  return ok;
}

bool closed_form_identity_suite() {
  bool ok = true;
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ts(1e-6, M_PI - 1e-6);
  for (int N = 1; N <= 12 && ok; ++N) {
    const RealPolynomial p = dss_coeffs(N);
    for (int trial = 0; trial < 200; ++trial) {
      const double t = ts(rng);
      const std::complex<double> direct =
          koebe::eval_complex(p, {std::cos(t), std::sin(t)});
      const std::complex<double> closed = koebe::closed_form_value(N, t);
      if (std::abs(closed - direct) > 1e-9) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "value identity off at N=%d t=%.17g (err %.3g)", N, t,
                      std::abs(closed - direct));
        g_detail.emplace_back(buf);
        ok = false;
        break;
      }
      const double sq = koebe::closed_form_sq_modulus(N, t);
      if (std::abs(sq - std::norm(direct)) > 1e-9) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "sq-modulus identity off at N=%d t=%.17g", N, t);
        g_detail.emplace_back(buf);
        ok = false;
        break;
      }
    }
  }
  for (int N = 1; N <= 12; ++N) {
    const RealPolynomial a = koebe::r_poly(N);
    const RealPolynomial b = koebe::r_poly_via_closed_form(N);
    for (int d = 0; d < N; ++d) {
      char label[48];
      std::snprintf(label, sizeof(label), "R reconstruction N=%d c%d", N, d);
      ok &= close(b.coeff(d), a.coeff(d), 1e-8, label);
    }
  }
  return ok;
}

bool real_axis_witness() {
  bool ok = true;
  for (int N = 2; N <= 6; ++N) {
    const RealPolynomial p = dss_coeffs(N);
    char label[32];
    std::snprintf(label, sizeof(label), "real-axis min N=%d", N);
    ok &= close(koebe::real_axis_min(p), p(-1.0), 1e-9, label);
  }
  return ok;
}

bool quarter_floor() {
  bool ok = true;
  // Every radius quantity surfaced by criteria 2 and 3.
  std::vector<double> radii;
  for (int n = 2; n <= 6; ++n) radii.push_back(koebe::koebe_radius_formula(n));
  radii.push_back(std::abs(koebe::eval_complex(koebe::suffridge_coeffs(3, 1), {-1.0, 0.0})));
  radii.push_back(koebe::min_modulus_on_circle(koebe::suffridge_coeffs(3, 1)).radius);
  radii.push_back(std::abs(koebe::eval_complex(koebe::suffridge_coeffs(5, 1), {-1.0, 0.0})));
  radii.push_back(koebe::min_modulus_on_circle(koebe::suffridge_coeffs(5, 1)).radius);
  radii.push_back(koebe::suffridge_at_minus_one_formula(4));
  radii.push_back(koebe::suffridge_at_minus_one_formula(6));
  for (size_t i = 0; i < radii.size(); ++i) {
    char label[64];
    std::snprintf(label, sizeof(label), "radius %zu below 1/4: %.17g", i, radii[i]);
    ok &= require(radii[i] >= 0.25, label);
  }
  return ok;
}

bool exploratory_sweep() {
  const char* cli = std::getenv("KOEBE_CLI_PATH");
  if (!require(cli != nullptr, "KOEBE_CLI_PATH not set")) return false;
  const std::string cmd = std::string(cli) + " sweep 7 20 --format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!require(pipe != nullptr, "failed to spawn CLI")) return false;
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  bool ok = require(WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "sweep must exit 0");

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(out);
  } catch (const std::exception& e) {
    g_detail.emplace_back(std::string("sweep output is not valid JSON: ") + e.what());
    return false;
  }
  ok &= require(j.value("command", "") == "sweep", "command field");
  ok &= require(j.value("from", 0) == 7 && j.value("to", 0) == 20, "range fields");
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 14) {
    g_detail.emplace_back("rows must be an array of 14 entries");
    return false;
  }
  int expect_n = 7;
  for (const auto& row : j["rows"]) {
    ok &= require(row.value("n", -1) == expect_n, "rows ordered by degree");
    const std::string v = row.value("verdict", "");
    ok &= require(v == "certified" || v == "refuted" || v == "degenerate" ||
                      v == "inconclusive",
                  "verdict vocabulary");
    ok &= require(row.value("exploratory", false), "exploratory flag");
    ok &= require(row.contains("methods") && row["methods"].is_array(),
                  "methods array");
    ++expect_n;
  }
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  bool (*body)();
  double budget_seconds;  // 0 = no budget
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "coefficient golden values (degrees 2,3,4,6)", coefficient_goldens, 1.0},
      {2, "closed-form radius values (degrees 2..6)", radius_values, 1.0},
      {3, "Suffridge moduli and circle minima", suffridge_values, 5.0},
      {4, "R polynomial golden coefficients", r_poly_goldens, 0.0},
      {5, "discriminant of 4 R'_4 is -3008/81", discriminant_value, 0.0},
      {6, "univalence certification, degrees 1..6", certification, 10.0},
      {7, "closed-form boundary identity suite", closed_form_identity_suite, 0.0},
      {8, "real-axis minimum equals value at -1", real_axis_witness, 0.0},
      {9, "quarter-theorem floor on all radii", quarter_floor, 0.0},
      {10, "exploratory sweep 7..20 via CLI, schema-valid", exploratory_sweep, 60.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    g_detail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      g_detail.emplace_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "runtime %.2f s exceeds budget %.0f s",
                    secs, c.budget_seconds);
      g_detail.emplace_back(buf);
      ok = false;
    }
    std::printf("criterion %2d: %s  %s (%.2f s)\n", c.id, ok ? "PASS" : "FAIL",
                c.label, secs);
    for (const std::string& d : g_detail) std::printf("    - %s\n", d.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
