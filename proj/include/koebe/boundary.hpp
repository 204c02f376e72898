#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/chebyshev.hpp"
#include "koebe/families.hpp"
#include "koebe/interval.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

/// Radius of the fallback neighbourhood around the removable singularity
/// t = 2pi/(N+2) (and around t = 0) inside which the closed forms delegate
/// to direct Horner evaluation.  The closed forms lose roughly
/// ~1e-15/d^2 of absolute accuracy at distance d from the pole, so at
/// d = 2e-3 the error is a few 1e-10 -- comfortably inside the 1e-9
/// contract -- while Horner is accurate to ~1e-14 throughout the patch.
inline constexpr double kSingularityFallbackRadius = 2e-3;

/// One boundary sample of P_N: the point t, the value P_N(e^{it}) and its
/// squared modulus.
struct BoundaryPoint {
  double t = 0.0;
  std::complex<double> value{0.0, 0.0};
  double sq_modulus = 0.0;
};

namespace detail {

inline void require_t_in_open_0_pi(double t, const char* who) {
  if (!(t > 0.0 && t < M_PI))
    throw std::domain_error(std::string(who) + ": t must lie in (0, pi)");
}

/// Distance from t to the singular set of the closed forms inside (0, pi):
/// the endpoint t = 0 and the removable singularity t = 2pi/(N+2).
inline double singularity_distance(int N, double t) {
  const double t_star = 2.0 * M_PI / (N + 2);
  return std::min(t, std::abs(t - t_star));
}

}  // namespace detail

/// P_N(e^{it}) from the closed-form boundary presentation
///   1/(2(cos t - b)) + ((1-b)/((N+2)(1-cos t)))
///       * (sin t * sin((N+2)t/2) / (cos t - b)^2) * e^{i(N+2)t/2},
/// b = cos(2pi/(N+2)).  Valid for t in (0, pi); near the removable
/// singularity t = 2pi/(N+2) (and near t = 0) the evaluation switches to
/// direct Horner on the coefficients.  1-cos is computed as 2 sin^2 of the
/// half angle to avoid cancellation for small arguments.
inline std::complex<double> closed_form_value(int N, double t) {
  if (N < 1) throw std::invalid_argument("closed_form_value: N must be >= 1");
  detail::require_t_in_open_0_pi(t, "closed_form_value");
  if (detail::singularity_distance(N, t) < kSingularityFallbackRadius) {
    const std::complex<double> z{std::cos(t), std::sin(t)};
    return eval_complex(dss_coeffs(N), z);
  }
  const double theta = M_PI / (N + 2);
  const double b = std::cos(2.0 * theta);
  const double one_minus_b = 2.0 * std::sin(theta) * std::sin(theta);
  const double g = std::cos(t) - b;
  const double one_minus_cos = 2.0 * std::sin(t / 2) * std::sin(t / 2);
  const double half_angle = 0.5 * (N + 2) * t;
  const double amp = one_minus_b / ((N + 2) * one_minus_cos) * std::sin(t) *
                     std::sin(half_angle) / (g * g);
  const std::complex<double> phase{std::cos(half_angle), std::sin(half_angle)};
  return std::complex<double>{1.0 / (2.0 * g), 0.0} + amp * phase;
}

/// |P_N(e^{it})|^2 from the two-bracket closed form
///   4|P_N|^2 = ( cos((N+2)t/2)/(cos t - b)
///                + (2/(N+2)) ((1-b)/(1-cos t)) (sin t/(cos t - b)^2)
///                  sin((N+2)t/2) )^2
///            + ( sin((N+2)t/2)/(cos t - b) )^2,
/// divided by 4.  Same domain and fallback behaviour as closed_form_value.
inline double closed_form_sq_modulus(int N, double t) {
  if (N < 1)
    throw std::invalid_argument("closed_form_sq_modulus: N must be >= 1");
  detail::require_t_in_open_0_pi(t, "closed_form_sq_modulus");
  if (detail::singularity_distance(N, t) < kSingularityFallbackRadius) {
    const std::complex<double> z{std::cos(t), std::sin(t)};
    return std::norm(eval_complex(dss_coeffs(N), z));
  }
  const double theta = M_PI / (N + 2);
  const double b = std::cos(2.0 * theta);
  const double one_minus_b = 2.0 * std::sin(theta) * std::sin(theta);
  const double g = std::cos(t) - b;
  const double one_minus_cos = 2.0 * std::sin(t / 2) * std::sin(t / 2);
  const double half_angle = 0.5 * (N + 2) * t;
  const double bracket1 =
      std::cos(half_angle) / g + (2.0 / (N + 2)) * (one_minus_b / one_minus_cos) *
                                     (std::sin(t) / (g * g)) * std::sin(half_angle);
  const double bracket2 = std::sin(half_angle) / g;
  return (bracket1 * bracket1 + bracket2 * bracket2) / 4.0;
}

/// Both closed-form quantities bundled into one sample.
inline BoundaryPoint boundary_point(int N, double t) {
  BoundaryPoint bp;
  bp.t = t;
  bp.value = closed_form_value(N, t);
  bp.sq_modulus = closed_form_sq_modulus(N, t);
  return bp;
}

/// R_N(x) = |P_N(e^{it})|^2 as a degree-(N-1) polynomial in x = cos t,
/// built by coefficient autocorrelation: with coefficients a_1..a_N,
/// |P_N(e^{it})|^2 = c_0 + sum_d 2 c_d cos(dt), c_d = sum_k a_k a_{k+d},
/// and cos(dt) = T_d(x) converted to the power basis.
inline RealPolynomial r_poly(int N) {
  if (N < 1) throw std::invalid_argument("r_poly: N must be >= 1");
  const RealPolynomial dss = dss_coeffs(N);
  const std::vector<double>& a = dss.coeffs();
  std::vector<double> out(static_cast<size_t>(N), 0.0);
  for (int d = 0; d < N; ++d) {
    double c = 0.0;
    for (int k = 1; k + d <= N; ++k)
      c += a[static_cast<size_t>(k)] * a[static_cast<size_t>(k + d)];
    const double weight = (d == 0) ? c : 2.0 * c;
    const std::vector<double> row = cheb_t_row(d);
    for (size_t i = 0; i < row.size(); ++i) out[i] += weight * row[i];
  }
  return RealPolynomial(std::move(out));
}

/// Interval enclosure of the same construction, seeded from the rigorous
/// coefficient enclosures.  The T_d power-basis rows are exact integers at
/// the degrees used here, so they multiply in as point values.
inline IntervalPoly r_poly_iv(int N) {
  if (N < 1) throw std::invalid_argument("r_poly_iv: N must be >= 1");
  const IntervalPoly a = dss_coeffs_iv(N);
  IntervalPoly out(static_cast<size_t>(N), Interval(0.0));
  for (int d = 0; d < N; ++d) {
    Interval c(0.0);
    for (int k = 1; k + d <= N; ++k)
      c = c + a[static_cast<size_t>(k)] * a[static_cast<size_t>(k + d)];
    const Interval weight = (d == 0) ? c : 2.0 * c;
    const std::vector<double> row = cheb_t_row(d);
    for (size_t i = 0; i < row.size(); ++i)
      out[i] = out[i] + weight * row[i];
  }
  return out;
}

/// Independent reconstruction of R_N from the rational-Chebyshev boundary
/// expression
///   4R_N(x) = 1/(x-b)^2
///           + 2(1-b)(1+x)U_{N+1}(x) / ((N+2)(x-b)^3)
///           + 2(1-b)^2(1+x)(1 - T_{N+2}(x)) / ((N+2)^2 (x-b)^4 (1-x)),
/// sampled at N Chebyshev nodes of the first kind and interpolated back to
/// the power basis (Newton divided differences).  Nodes falling within
/// 0.02 of the pole x = b are pushed out to distance exactly 0.02 (for
/// N = 6 a node lands on b exactly, and closer than ~0.01 the three
/// rational terms cancel catastrophically); nodes near x = 1 are nudged
/// inward.  Serves as an independent oracle for r_poly; throws if the
/// interpolation residual exceeds 1e-8 or the adjusted nodes collide.
inline RealPolynomial r_poly_via_closed_form(int N) {
  if (N < 1)
    throw std::invalid_argument("r_poly_via_closed_form: N must be >= 1");
  constexpr double kPoleGuard = 0.02;
  const double b = std::cos(2.0 * M_PI / (N + 2));
  auto four_r = [&](double x) {
    const double g = x - b;
    const double term1 = 1.0 / (g * g);
    const double term2 =
        2.0 * (1.0 - b) * (1.0 + x) * cheb_u(N + 1, x) / ((N + 2) * g * g * g);
    const double term3 = 2.0 * (1.0 - b) * (1.0 - b) * (1.0 + x) *
                         (1.0 - cheb_t(N + 2, x)) /
                         ((N + 2) * (N + 2) * g * g * g * g * (1.0 - x));
    return term1 + term2 + term3;
  };

  std::vector<double> nodes(static_cast<size_t>(N));
  for (int m = 0; m < N; ++m) {
    double x = std::cos((2 * m + 1) * M_PI / (2 * N));
    if (std::abs(x - b) < kPoleGuard) x = (x >= b) ? b + kPoleGuard : b - kPoleGuard;
    if (std::abs(x - 1.0) < 1e-4) x -= 1e-4;
    nodes[static_cast<size_t>(m)] = x;
  }
  for (int m = 0; m < N; ++m)
    for (int i = m + 1; i < N; ++i)
      if (std::abs(nodes[static_cast<size_t>(m)] - nodes[static_cast<size_t>(i)]) < 1e-9)
        throw std::runtime_error(
            "r_poly_via_closed_form: adjusted interpolation nodes collide");

  // Newton divided differences on the sampled values of 4 R_N.
  std::vector<double> dd(static_cast<size_t>(N));
  for (int m = 0; m < N; ++m) dd[static_cast<size_t>(m)] = four_r(nodes[static_cast<size_t>(m)]);
  for (int level = 1; level < N; ++level)
    for (int m = N - 1; m >= level; --m)
      dd[static_cast<size_t>(m)] =
          (dd[static_cast<size_t>(m)] - dd[static_cast<size_t>(m - 1)]) /
          (nodes[static_cast<size_t>(m)] - nodes[static_cast<size_t>(m - level)]);

  // Expand the Newton form into power-basis coefficients.
  std::vector<double> coeffs(static_cast<size_t>(N), 0.0);
  std::vector<double> basis(static_cast<size_t>(N), 0.0);  // prod (x - nodes[i])
  basis[0] = 1.0;
  int basis_deg = 0;
  for (int m = 0; m < N; ++m) {
    for (int i = 0; i <= basis_deg; ++i)
      coeffs[static_cast<size_t>(i)] += dd[static_cast<size_t>(m)] * basis[static_cast<size_t>(i)];
    if (m + 1 < N) {
      // basis *= (x - nodes[m])
      for (int i = basis_deg + 1; i >= 1; --i)
        basis[static_cast<size_t>(i)] =
            (i - 1 <= basis_deg ? basis[static_cast<size_t>(i - 1)] : 0.0) -
            nodes[static_cast<size_t>(m)] * (i <= basis_deg ? basis[static_cast<size_t>(i)] : 0.0);
      basis[0] = -nodes[static_cast<size_t>(m)] * basis[0];
      ++basis_deg;
    }
  }
  for (double& c : coeffs) c /= 4.0;
  RealPolynomial result(std::move(coeffs));

  double residual = 0.0;
  for (int m = 0; m < N; ++m) {
    const double x = nodes[static_cast<size_t>(m)];
    residual = std::max(residual, std::abs(4.0 * result(x) - four_r(x)));
  }
  if (residual > 1e-8)
    throw std::runtime_error(
        "r_poly_via_closed_form: interpolation residual " + std::to_string(residual) +
        " exceeds 1e-8 for N = " + std::to_string(N));
  return result;
}

/// Formal derivative R'_N in the power basis (degree N-2; the zero
/// polynomial for N = 1).
inline RealPolynomial r_prime_poly(int N) { return r_poly(N).derivative(); }

/// Interval enclosure of R'_N.
inline IntervalPoly r_prime_poly_iv(int N) { return derivative(r_poly_iv(N)); }

}  // namespace koebe
