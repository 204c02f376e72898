#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/families.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

/// Koebe radius of P_N in closed form: (1/4) sec^2(pi/(N+2)).
inline double koebe_radius_formula(int N) {
  if (N < 1) throw std::invalid_argument("koebe_radius_formula: N must be >= 1");
  const double c = std::cos(M_PI / (N + 2));
  return 0.25 / (c * c);
}

/// |S_{n,1}(-1)| in closed form: (1/4) ((n+1)/n) sec^2(pi/(2(n+1))).
/// For even n this is also the circle minimum of |S_{n,1}|.
inline double suffridge_at_minus_one_formula(int n) {
  if (n < 1) throw std::invalid_argument("suffridge_at_minus_one_formula: n must be >= 1");
  const double c = std::cos(M_PI / (2 * (n + 1)));
  return 0.25 * (n + 1.0) / n * (1.0 / (c * c));
}

/// Result of a minimum-modulus search over the upper unit semicircle.
struct RadiusReport {
  std::optional<FamilySpec> family;
  double radius = 0.0;    // min |p(e^{it})| over t in [0, pi]
  double argmin_t = 0.0;  // location of the minimum
  bool at_minus_one = false;  // argmin within 1e-6 of pi
  std::optional<double> formula_value;  // closed-form radius for the P_N family
};

namespace detail {

inline double sq_modulus_at(const RealPolynomial& p, double t) {
  return std::norm(eval_complex(p, std::complex<double>{std::cos(t), std::sin(t)}));
}

/// Golden-section minimisation of f on [lo, hi] down to width tol.
template <typename F>
inline double golden_section(F&& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
  while (hi - lo > tol) {
    const double c = hi - invphi * (hi - lo);
    const double d = lo + invphi * (hi - lo);
    if (f(c) < f(d))
      hi = d;
    else
      lo = c;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Minimum of |p(e^{it})| for t in [0, pi] (enough for real coefficients,
/// by conjugate symmetry): coarse scan of the squared modulus on a grid of
/// `grid` panels, then golden-section refinement of the best bracket down
/// to |dt| < 1e-12.
inline RadiusReport min_modulus_on_circle(const RealPolynomial& p, int grid = 4096) {
  if (grid < 64) throw std::invalid_argument("min_modulus_on_circle: grid must be >= 64");
  auto f = [&](double t) { return detail::sq_modulus_at(p, t); };
  int best = 0;
  double best_val = f(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double t = M_PI * i / grid;
    const double v = f(t);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = M_PI * std::max(0, best - 1) / grid;
  const double hi = M_PI * std::min(grid, best + 1) / grid;
  const double t_min = detail::golden_section(f, lo, hi, 1e-12);

  RadiusReport rep;
  rep.argmin_t = t_min;
  rep.radius = std::sqrt(f(t_min));
  rep.at_minus_one = std::abs(t_min - M_PI) < 1e-6;
  return rep;
}

/// Family-aware convenience overload; attaches the closed-form radius for
/// the P_N family.
inline RadiusReport min_modulus_on_circle(const FamilySpec& fam, int grid = 4096) {
  RadiusReport rep = min_modulus_on_circle(family_coeffs(fam), grid);
  rep.family = fam;
  if (fam.kind == FamilyKind::Dss) rep.formula_value = koebe_radius_formula(fam.n);
  return rep;
}

/// Minimum of Re(p(e^{it})) over the t in [0, pi] where Im(p(e^{it})) = 0.
/// Crossings of the imaginary part are bracketed by sign change on a
/// `grid`-panel scan and refined by bisection to 1e-12; t = 0 and t = pi
/// are always crossings for real coefficients.  Samples whose magnitude is
/// below the Horner evaluation noise carry no sign: this deliberately
/// skips tangential (even-order) touches of the real axis -- which the
/// boundary curve does not cross -- and in particular keeps rounding
/// wobble at an exact tangency (P_6 touches at t = pi/2) from faking a
/// crossing.  When two adjacent samples sit near zero without a sign
/// change between them, the scan retries once at 4x resolution.
inline double real_axis_min(const RealPolynomial& p, int grid = 4096) {
  if (grid < 64) throw std::invalid_argument("real_axis_min: grid must be >= 64");
  auto value_at = [&](double t) {
    return eval_complex(p, std::complex<double>{std::cos(t), std::sin(t)});
  };
  auto im_at = [&](double t) { return value_at(t).imag(); };
  const double scale = std::max(1.0, p.sum_abs_coeffs());
  const double sign_noise =
      16.0 * std::numeric_limits<double>::epsilon() * (p.degree() + 1) * scale;

  for (int attempt = 0; attempt < 2; ++attempt) {
    const double near_zero = 1e-8 * scale;
    std::vector<double> crossings{0.0, M_PI};
    bool suspicious = false;
    int last_sign = 0;
    double last_sign_t = 0.0;
    double prev_im = im_at(0.0);
    for (int i = 1; i <= grid; ++i) {
      const double t = M_PI * i / grid;
      const double im = im_at(t);
      const int sign = (im > sign_noise) ? 1 : (im < -sign_noise ? -1 : 0);
      if (sign != 0) {
        if (last_sign != 0 && sign != last_sign) {
          double lo = last_sign_t, hi = t;
          const double flo = im_at(lo);
          while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fm = im_at(mid);
            if ((flo < 0.0) == (fm < 0.0))
              lo = mid;
            else
              hi = mid;
          }
          crossings.push_back(0.5 * (lo + hi));
        }
        last_sign = sign;
        last_sign_t = t;
      }
      if (i > 1 && i < grid && std::abs(prev_im) < near_zero &&
          std::abs(im) < near_zero)
        suspicious = true;
      prev_im = im;
    }
    if (suspicious && attempt == 0) {
      grid *= 4;
      continue;
    }
    double m = value_at(crossings.front()).real();
    for (double t : crossings) m = std::min(m, value_at(t).real());
    return m;
  }
  return value_at(M_PI).real();  // unreachable
}

/// One row of the family comparison: the P_N radius against the Suffridge
/// values at the same degree.
struct ComparisonRow {
  int n = 0;
  double dss_radius = 0.0;
  double suffridge_at_minus_one = 0.0;
  double suffridge_circle_min = 0.0;
  std::string dimitrov_winner;  // "dss", "suffridge" or "tie"
  bool exploratory = false;     // N > 6
};

/// Rows N = 2..N_max comparing the two families' minimum boundary moduli.
inline std::vector<ComparisonRow> comparison_table(int N_max, int grid = 4096) {
  if (N_max < 2) throw std::invalid_argument("comparison_table: N_max must be >= 2");
  std::vector<ComparisonRow> rows;
  rows.reserve(static_cast<size_t>(N_max) - 1);
  for (int n = 2; n <= N_max; ++n) {
    ComparisonRow row;
    row.n = n;
    row.dss_radius = koebe_radius_formula(n);
    const RealPolynomial s = suffridge_coeffs(n, 1);
    row.suffridge_at_minus_one = std::abs(eval_complex(s, std::complex<double>{-1.0, 0.0}));
    row.suffridge_circle_min = min_modulus_on_circle(s, grid).radius;
    const double diff = row.dss_radius - row.suffridge_circle_min;
    if (std::abs(diff) < 1e-9)
      row.dimitrov_winner = "tie";
    else
      row.dimitrov_winner = diff > 0.0 ? "dss" : "suffridge";
    row.exploratory = n > 6;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace koebe
