#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "koebe/boundary.hpp"
#include "koebe/certify.hpp"
#include "koebe/families.hpp"
#include "koebe/radii.hpp"

namespace koebe {

using ordered_json = nlohmann::ordered_json;

/// Round-trip-exact decimal rendering of a binary64 value.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline const char* bool_name(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// JSON builders
// ---------------------------------------------------------------------------

inline ordered_json family_json(const FamilySpec& fam) {
  ordered_json j;
  j["kind"] = fam.kind == FamilyKind::Dss ? "dss" : "suffridge";
  j["n"] = fam.n;
  if (fam.kind == FamilyKind::Suffridge) j["j"] = fam.j;
  j["label"] = fam.label();
  return j;
}

inline ordered_json interval_json(const Interval& iv) {
  ordered_json j;
  j["lo"] = iv.lo();
  j["hi"] = iv.hi();
  return j;
}

inline ordered_json coeffs_json(const FamilySpec& fam, const RealPolynomial& p) {
  ordered_json j;
  j["command"] = "coeffs";
  j["family"] = family_json(fam);
  j["degree"] = p.degree();
  j["coefficients"] = p.coeffs();
  return j;
}

inline ordered_json trace_json(const FamilySpec& fam, const RealPolynomial& p,
                               int samples) {
  ordered_json j;
  j["command"] = "trace";
  j["family"] = family_json(fam);
  j["samples"] = samples;
  ordered_json points = ordered_json::array();
  for (int i = 0; i <= samples; ++i) {
    const double t = 2.0 * M_PI * i / samples;
    const std::complex<double> v =
        eval_complex(p, std::complex<double>{std::cos(t), std::sin(t)});
    ordered_json pt;
    pt["t"] = t;
    pt["re"] = v.real();
    pt["im"] = v.imag();
    pt["abs"] = std::abs(v);
    points.push_back(std::move(pt));
  }
  j["points"] = std::move(points);
  return j;
}

inline ordered_json certification_report_json(const CertificationReport& rep) {
  ordered_json j;
  j["method"] = method_name(rep.method);
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.has_margin) {
    j["margin"] = rep.margin;
    j["margin_rigorous"] = rep.margin_rigorous;
  }
  if (rep.root_count >= 0) j["root_count"] = rep.root_count;
  if (rep.method == Method::IntervalBisection) {
    j["subdivisions"] = rep.subdivisions;
    j["depth_reached"] = rep.depth_reached;
  }
  if (!rep.shift_coeffs.empty()) {
    ordered_json arr = ordered_json::array();
    for (const Interval& iv : rep.shift_coeffs) arr.push_back(interval_json(iv));
    j["shift_coefficients"] = std::move(arr);
  }
  if (rep.has_discriminant) j["discriminant"] = interval_json(rep.discriminant);
  if (rep.method == Method::Sturm || rep.method == Method::IntervalBisection) {
    ordered_json ep;
    ep["left"] = rep.endpoint_left;
    ep["right"] = rep.endpoint_right;
    j["endpoint_values"] = std::move(ep);
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline ordered_json univalence_report_json(const UnivalenceReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["verdict"] = verdict_name(rep.verdict);
  j["exploratory"] = rep.exploratory;
  j["koebe_radius_formula"] = koebe_radius_formula(rep.n);
  if (!rep.note.empty()) j["note"] = rep.note;
  ordered_json arr = ordered_json::array();
  for (const CertificationReport& m : rep.methods)
    arr.push_back(certification_report_json(m));
  j["methods"] = std::move(arr);
  return j;
}

inline ordered_json certify_json(const UnivalenceReport& rep) {
  ordered_json j = univalence_report_json(rep);
  ordered_json out;
  out["command"] = "certify";
  for (auto& kv : j.items()) out[kv.key()] = kv.value();
  return out;
}

inline ordered_json compare_json(const std::vector<ComparisonRow>& rows, int n_max) {
  ordered_json j;
  j["command"] = "compare";
  j["n_max"] = n_max;
  ordered_json arr = ordered_json::array();
  for (const ComparisonRow& r : rows) {
    ordered_json row;
    row["n"] = r.n;
    row["dss_radius"] = r.dss_radius;
    row["suffridge_at_minus_one"] = r.suffridge_at_minus_one;
    row["suffridge_circle_min"] = r.suffridge_circle_min;
    row["dimitrov_winner"] = r.dimitrov_winner;
    row["exploratory"] = r.exploratory;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

inline ordered_json sweep_json(const std::vector<UnivalenceReport>& reports,
                               int from, int to) {
  ordered_json j;
  j["command"] = "sweep";
  j["from"] = from;
  j["to"] = to;
  ordered_json arr = ordered_json::array();
  for (const UnivalenceReport& r : reports) arr.push_back(univalence_report_json(r));
  j["rows"] = std::move(arr);
  return j;
}

// ---------------------------------------------------------------------------
// CSV / text builders
// ---------------------------------------------------------------------------

inline std::string coeffs_csv(const RealPolynomial& p) {
  std::ostringstream os;
  os << "k,a_k\n";
  for (int k = 0; k <= p.degree(); ++k)
    os << k << "," << fmt17(p.coeff(k)) << "\n";
  return os.str();
}

/// Single comma-joined line, a_0 .. a_deg.
inline std::string coeffs_text(const RealPolynomial& p) {
  std::ostringstream os;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) os << ",";
    os << fmt17(p.coeff(k));
  }
  os << "\n";
  return os.str();
}

inline std::string trace_csv(const RealPolynomial& p, int samples) {
  std::ostringstream os;
  os << "t,re,im,abs\n";
  for (int i = 0; i <= samples; ++i) {
    const double t = 2.0 * M_PI * i / samples;
    const std::complex<double> v =
        eval_complex(p, std::complex<double>{std::cos(t), std::sin(t)});
    os << fmt17(t) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << ","
       << fmt17(std::abs(v)) << "\n";
  }
  return os.str();
}

/// Smallest rigorous margin among certified methods; empty when none.
inline std::string overall_margin_csv_field(const UnivalenceReport& rep) {
  bool found = false;
  double m = 0.0;
  for (const CertificationReport& c : rep.methods)
    if (c.verdict == Verdict::Certified && c.has_margin && c.margin_rigorous)
      if (!found || c.margin < m) {
        m = c.margin;
        found = true;
      }
  return found ? fmt17(m) : std::string();
}

inline std::string certify_csv(const UnivalenceReport& rep) {
  std::ostringstream os;
  os << "n,method,verdict,margin,exploratory\n";
  for (const CertificationReport& m : rep.methods)
    os << rep.n << "," << method_name(m.method) << "," << verdict_name(m.verdict)
       << "," << (m.has_margin ? fmt17(m.margin) : std::string()) << ","
       << bool_name(rep.exploratory) << "\n";
  os << rep.n << ",overall," << verdict_name(rep.verdict) << ","
     << overall_margin_csv_field(rep) << "," << bool_name(rep.exploratory) << "\n";
  return os.str();
}

inline std::string certify_text(const UnivalenceReport& rep) {
  std::ostringstream os;
  os << "N = " << rep.n << ": " << verdict_name(rep.verdict)
     << (rep.exploratory ? " (exploratory)" : "") << "\n";
  if (!rep.note.empty()) os << "note: " << rep.note << "\n";
  os << "closed-form radius: " << fmt17(koebe_radius_formula(rep.n)) << "\n";
  for (const CertificationReport& m : rep.methods) {
    os << "  " << method_name(m.method) << ": " << verdict_name(m.verdict);
    if (m.has_margin)
      os << ", margin " << fmt17(m.margin)
         << (m.margin_rigorous ? " (rigorous)" : " (sampled)");
    if (m.root_count >= 0) os << ", roots " << m.root_count;
    if (!m.note.empty()) os << " -- " << m.note;
    os << "\n";
  }
  return os.str();
}

inline std::string compare_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << "n,dss_radius,suffridge_at_minus_one,suffridge_circle_min,"
        "dimitrov_winner,exploratory\n";
  for (const ComparisonRow& r : rows)
    os << r.n << "," << fmt17(r.dss_radius) << "," << fmt17(r.suffridge_at_minus_one)
       << "," << fmt17(r.suffridge_circle_min) << "," << r.dimitrov_winner << ","
       << bool_name(r.exploratory) << "\n";
  return os.str();
}

inline std::string compare_text(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << "N | P_N radius | |S_{N,1}(-1)| | S_{N,1} circle min | larger\n";
  for (const ComparisonRow& r : rows)
    os << r.n << " | " << fmt17(r.dss_radius) << " | "
       << fmt17(r.suffridge_at_minus_one) << " | " << fmt17(r.suffridge_circle_min)
       << " | " << r.dimitrov_winner << (r.exploratory ? " (exploratory)" : "")
       << "\n";
  return os.str();
}

inline std::string sweep_csv(const std::vector<UnivalenceReport>& reports) {
  std::ostringstream os;
  os << "n,verdict,margin,exploratory,note\n";
  for (const UnivalenceReport& r : reports)
    os << r.n << "," << verdict_name(r.verdict) << ","
       << overall_margin_csv_field(r) << "," << bool_name(r.exploratory) << ","
       << csv_escape(r.note) << "\n";
  return os.str();
}

inline std::string sweep_text(const std::vector<UnivalenceReport>& reports) {
  std::ostringstream os;
  for (const UnivalenceReport& r : reports) {
    os << "N = " << r.n << ": " << verdict_name(r.verdict)
       << (r.exploratory ? " (exploratory)" : "");
    if (!r.note.empty()) os << " -- " << r.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace koebe
