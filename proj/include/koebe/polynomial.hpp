#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "koebe/interval.hpp"

namespace koebe {

/// Real polynomial in the power basis; coeffs[d] multiplies x^d.
///
/// Trailing zero coefficients are trimmed on construction, so degree() is the
/// index of the highest nonzero coefficient.  The zero polynomial has an
/// empty coefficient vector and degree -1.
class RealPolynomial {
 public:
  RealPolynomial() = default;

  explicit RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
      if (!std::isfinite(c))
        throw std::invalid_argument("RealPolynomial: non-finite coefficient");
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  }

  static RealPolynomial constant(double c) { return RealPolynomial({c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  double coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<size_t>(d)];
  }

  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double x) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  /// Interval Horner: encloses {p(x) : x in X} (degenerate coefficients).
  Interval operator()(const Interval& x) const {
    Interval acc(0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Interval(coeffs_[i]);
    return acc;
  }

  RealPolynomial derivative() const {
    if (coeffs_.size() <= 1) return RealPolynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
      d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return RealPolynomial(std::move(d));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  double sum_abs_coeffs() const {
    double s = 0.0;
    for (double c : coeffs_) s += std::abs(c);
    return s;
  }

  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return RealPolynomial(std::move(c));
  }

  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return RealPolynomial(std::move(c));
  }

  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RealPolynomial();
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RealPolynomial(std::move(c));
  }

  friend RealPolynomial operator*(double s, const RealPolynomial& p) {
    std::vector<double> c = p.coeffs_;
    for (double& v : c) v *= s;
    return RealPolynomial(std::move(c));
  }

  friend RealPolynomial operator*(const RealPolynomial& p, double s) { return s * p; }

 private:
  std::vector<double> coeffs_;
};

/// Horner evaluation at a complex point.
inline std::complex<double> eval_complex(const RealPolynomial& p, std::complex<double> z) {
  return p(z);
}

/// q with q(u) = p(center + u), by the in-place synthetic-division scheme
/// (repeated Horner at the center).  Exact binomial re-expansion up to
/// rounding, so q(0) == p(center) to working precision.
inline RealPolynomial taylor_shift(const RealPolynomial& p, double center) {
  std::vector<double> c = p.coeffs();
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += center * c[j + 1];
  return RealPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Interval-coefficient polynomials.  Kept as bare vectors: they appear only
// inside certificates, where the handful of operations below suffices.

using IntervalPoly = std::vector<Interval>;

inline IntervalPoly to_interval_poly(const RealPolynomial& p) {
  IntervalPoly out;
  out.reserve(p.coeffs().size());
  for (double c : p.coeffs()) out.emplace_back(c);
  return out;
}

inline Interval eval_interval(const IntervalPoly& c, const Interval& x) {
  Interval acc(0.0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline IntervalPoly derivative(const IntervalPoly& c) {
  if (c.size() <= 1) return {};
  IntervalPoly d;
  d.reserve(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

inline IntervalPoly scale(const IntervalPoly& c, double s) {
  IntervalPoly out;
  out.reserve(c.size());
  for (const Interval& v : c) out.push_back(s * v);
  return out;
}

inline IntervalPoly taylor_shift(const IntervalPoly& p, double center) {
  IntervalPoly c = p;
  const int n = static_cast<int>(c.size()) - 1;
  const Interval ctr(center);
  for (int i = 0; i <= n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] = c[j] + ctr * c[j + 1];
  return c;
}

inline RealPolynomial midpoints(const IntervalPoly& c) {
  std::vector<double> m;
  m.reserve(c.size());
  for (const Interval& v : c) m.push_back(v.mid());
  return RealPolynomial(std::move(m));
}

}  // namespace koebe
