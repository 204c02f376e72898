#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/chebyshev.hpp"
#include "koebe/interval.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

enum class FamilyKind { Dss, Suffridge };

/// Identifies a polynomial family member: the degree-N member of the P_N
/// family ("dss") or the Suffridge polynomial S_{n,j}.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Dss;
  int n = 1;  // DSS degree N, or Suffridge order n
  int j = 1;  // Suffridge index (ignored for DSS)

  static FamilySpec dss(int N) {
    FamilySpec f;
    f.kind = FamilyKind::Dss;
    f.n = N;
    f.validate();
    return f;
  }

  static FamilySpec suffridge(int n, int j) {
    FamilySpec f;
    f.kind = FamilyKind::Suffridge;
    f.n = n;
    f.j = j;
    f.validate();
    return f;
  }

  void validate() const {
    if (kind == FamilyKind::Dss) {
      if (n < 1) throw std::invalid_argument("DSS family requires N >= 1");
    } else {
      if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("Suffridge family requires 1 <= j <= n");
    }
  }

  std::string label() const {
    if (kind == FamilyKind::Dss) return "P_" + std::to_string(n);
    return "S_{" + std::to_string(n) + "," + std::to_string(j) + "}";
  }
};

/// Coefficients of P_N: a_k = U'_{N-k+1}(c) U_{k-1}(c) / U'_N(c), with
/// c = cos(pi/(N+2)).  The z^1 coefficient is pinned to 1 exactly.
inline RealPolynomial dss_coeffs(int N) {
  if (N < 1) throw std::invalid_argument("dss_coeffs: N must be >= 1");
  const double c = std::cos(M_PI / (N + 2));
  const double norm = cheb_u_prime(N, c);
  std::vector<double> a(static_cast<size_t>(N) + 1, 0.0);
  a[1] = 1.0;
  for (int k = 2; k <= N; ++k)
    a[static_cast<size_t>(k)] = cheb_u_prime(N - k + 1, c) * cheb_u(k - 1, c) / norm;
  return RealPolynomial(std::move(a));
}

/// Same family through the trigonometric coefficient formula
///   [(N-k+3) sin((k+1)theta) - (N-k+1) sin((k-1)theta)] sin(k theta),
/// theta = pi/(N+2), normalised so the z^1 coefficient is 1.  (The raw
/// formula carries an overall factor sin(theta); dividing by its own k = 1
/// value removes it.)  Serves as an independent oracle for dss_coeffs.
inline RealPolynomial dss_coeffs_trig(int N) {
  if (N < 1) throw std::invalid_argument("dss_coeffs_trig: N must be >= 1");
  const double theta = M_PI / (N + 2);
  auto raw = [&](int k) {
    const double bracket = (N - k + 3) * std::sin((k + 1) * theta) -
                           (N - k + 1) * std::sin((k - 1) * theta);
    return bracket * std::sin(k * theta);
  };
  const double norm = raw(1);
  std::vector<double> a(static_cast<size_t>(N) + 1, 0.0);
  a[1] = 1.0;
  for (int k = 2; k <= N; ++k) a[static_cast<size_t>(k)] = raw(k) / norm;
  return RealPolynomial(std::move(a));
}

/// Suffridge polynomial S_{n,j}:
///   a_k = (1 - (k-1)/n) sin(pi j k/(n+1)) / sin(pi j/(n+1)),  k = 1..n.
inline RealPolynomial suffridge_coeffs(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("suffridge_coeffs: requires 1 <= j <= n");
  const double denom = std::sin(M_PI * j / (n + 1));
  std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
  a[1] = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double weight = 1.0 - static_cast<double>(k - 1) / n;
    a[static_cast<size_t>(k)] = weight * std::sin(M_PI * j * k / (n + 1)) / denom;
  }
  return RealPolynomial(std::move(a));
}

inline RealPolynomial family_coeffs(const FamilySpec& fam) {
  fam.validate();
  if (fam.kind == FamilyKind::Dss) return dss_coeffs(fam.n);
  return suffridge_coeffs(fam.n, fam.j);
}

/// Rigorous enclosures of the P_N coefficients: the constant cos(pi/(N+2))
/// enters as an interval and the whole recurrence runs in interval
/// arithmetic.  a_1 = [1,1] exactly (the true coefficient is exactly 1).
inline IntervalPoly dss_coeffs_iv(int N) {
  if (N < 1) throw std::invalid_argument("dss_coeffs_iv: N must be >= 1");
  const Interval c = cos_pi_multiple(1, N + 2);
  const Interval norm = cheb_u_prime_iv(N, c);
  if (!norm.strictly_positive())
    throw std::domain_error("dss_coeffs_iv: U'_N enclosure not positive");
  IntervalPoly a(static_cast<size_t>(N) + 1, Interval(0.0));
  a[1] = Interval(1.0);
  for (int k = 2; k <= N; ++k)
    a[static_cast<size_t>(k)] = cheb_u_prime_iv(N - k + 1, c) * cheb_u_iv(k - 1, c) / norm;
  return a;
}

}  // namespace koebe
