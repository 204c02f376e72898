#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace koebe {

// One-ulp outward nudges.  IEEE-754 +,-,*,/ and sqrt are correctly rounded,
// so the exact result lies strictly within one ulp of the computed double;
// nudging the computed endpoints outward preserves containment.
inline double ulp_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double ulp_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

/// Closed real interval [lo, hi] with outward-rounded arithmetic.
///
/// Every operation returns an interval containing the exact result for all
/// points of the operands.  Endpoints are binary64; rounding is simulated by
/// one-ulp outward nudges after each correctly-rounded primitive.  For libm
/// cos/sin (faithful but not correctly rounded) a two-ulp nudge is used.
class Interval {
 public:
  Interval() = default;
  explicit Interval(double v) : lo_(v), hi_(v) { check(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  bool strictly_positive() const { return lo_ > 0.0; }
  bool strictly_negative() const { return hi_ < 0.0; }
  bool nonnegative() const { return lo_ >= 0.0; }
  bool straddles_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  std::string str() const {
    return "[" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]";
  }

 private:
  void check() const {
    if (!(lo_ <= hi_)) throw std::invalid_argument("Interval: lo > hi");
    if (!std::isfinite(lo_) || !std::isfinite(hi_))
      throw std::invalid_argument("Interval: non-finite endpoint");
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

// Identities with the degenerate interval [0, 0] are exact (0 + a = a,
// 0 * a = 0, negation never rounds), so they skip the outward nudge;
// otherwise chains of constructed zeros would inflate into [-eps, eps]
// and defeat sign tests that legitimately expect an exact zero.
inline bool is_point_zero(const Interval& a) {
  return a.lo() == 0.0 && a.hi() == 0.0;
}

inline Interval operator+(const Interval& a, const Interval& b) {
  if (is_point_zero(a)) return b;
  if (is_point_zero(b)) return a;
  return {ulp_down(a.lo() + b.lo()), ulp_up(a.hi() + b.hi())};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  if (is_point_zero(b)) return a;
  if (is_point_zero(a)) return -b;
  return {ulp_down(a.lo() - b.hi()), ulp_up(a.hi() - b.lo())};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  if (is_point_zero(a) || is_point_zero(b)) return Interval(0.0);
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {ulp_down(lo), ulp_up(hi)};
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0.0))
    throw std::domain_error("Interval division by interval containing zero");
  if (is_point_zero(a)) return Interval(0.0);
  const double q1 = a.lo() / b.lo();
  const double q2 = a.lo() / b.hi();
  const double q3 = a.hi() / b.lo();
  const double q4 = a.hi() / b.hi();
  const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
  const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
  return {ulp_down(lo), ulp_up(hi)};
}

inline Interval operator+(const Interval& a, double s) { return a + Interval(s); }
inline Interval operator+(double s, const Interval& a) { return Interval(s) + a; }
inline Interval operator-(const Interval& a, double s) { return a - Interval(s); }
inline Interval operator-(double s, const Interval& a) { return Interval(s) - a; }
inline Interval operator*(const Interval& a, double s) { return a * Interval(s); }
inline Interval operator*(double s, const Interval& a) { return Interval(s) * a; }
inline Interval operator/(const Interval& a, double s) { return a / Interval(s); }

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

inline Interval sqr(const Interval& a) {
  if (is_point_zero(a)) return Interval(0.0);
  if (a.lo() >= 0.0)
    return {std::max(0.0, ulp_down(a.lo() * a.lo())), ulp_up(a.hi() * a.hi())};
  if (a.hi() <= 0.0)
    return {std::max(0.0, ulp_down(a.hi() * a.hi())), ulp_up(a.lo() * a.lo())};
  const double m = std::max(-a.lo(), a.hi());
  return {0.0, ulp_up(m * m)};
}

inline Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw std::domain_error("Interval sqrt of negative interval");
  return {std::max(0.0, ulp_down(std::sqrt(a.lo()))), ulp_up(std::sqrt(a.hi()))};
}

/// Enclosure of pi, two ulps wide.  The nearest double is known to
/// underestimate pi, but the symmetric widening costs nothing here.
inline Interval pi_interval() {
  constexpr double pi = 3.14159265358979323846;
  return {ulp_down(pi), ulp_up(pi)};
}

/// Enclosure of num*pi/den for small integers; width stays within a few ulps.
inline Interval pi_multiple(int num, int den) {
  if (den == 0) throw std::invalid_argument("pi_multiple: zero denominator");
  return pi_interval() * static_cast<double>(num) / static_cast<double>(den);
}

namespace detail {

// libm cos/sin are assumed faithful to < 2 ulp (true for glibc); the extra
// nudges below account for that.
inline double trig_down(double x) { return ulp_down(ulp_down(x)); }
inline double trig_up(double x) { return ulp_up(ulp_up(x)); }

// Does k*pi (or (k+1/2)*pi when half) possibly intersect [lo, hi]?
inline bool multiple_of_pi_in(double lo, double hi, long long k, bool half) {
  Interval m = pi_interval() * static_cast<double>(k);
  if (half) m = m + pi_interval() / 2.0;
  return m.hi() >= lo && m.lo() <= hi;
}

}  // namespace detail

/// Enclosure of cos over an interval.  Interior extrema at multiples of pi
/// are detected conservatively through the pi enclosure.
inline Interval cos(const Interval& x) {
  const double two_pi = 6.283185307179586;
  if (x.width() >= two_pi) return {-1.0, 1.0};
  double lo = std::min(detail::trig_down(std::cos(x.lo())),
                       detail::trig_down(std::cos(x.hi())));
  double hi = std::max(detail::trig_up(std::cos(x.lo())),
                       detail::trig_up(std::cos(x.hi())));
  const long long k_first = static_cast<long long>(std::floor(x.lo() / 3.14159)) - 1;
  const long long k_last = static_cast<long long>(std::ceil(x.hi() / 3.14159)) + 1;
  for (long long k = k_first; k <= k_last; ++k) {
    if (!detail::multiple_of_pi_in(x.lo(), x.hi(), k, false)) continue;
    if (k % 2 == 0) hi = 1.0;
    else lo = -1.0;
  }
  return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

/// Enclosure of sin over an interval; extrema at (k + 1/2)*pi.
inline Interval sin(const Interval& x) {
  const double two_pi = 6.283185307179586;
  if (x.width() >= two_pi) return {-1.0, 1.0};
  double lo = std::min(detail::trig_down(std::sin(x.lo())),
                       detail::trig_down(std::sin(x.hi())));
  double hi = std::max(detail::trig_up(std::sin(x.lo())),
                       detail::trig_up(std::sin(x.hi())));
  const long long k_first = static_cast<long long>(std::floor(x.lo() / 3.14159)) - 2;
  const long long k_last = static_cast<long long>(std::ceil(x.hi() / 3.14159)) + 2;
  for (long long k = k_first; k <= k_last; ++k) {
    if (!detail::multiple_of_pi_in(x.lo(), x.hi(), k, true)) continue;
    const long long m = ((k % 2) + 2) % 2;
    if (m == 0) hi = 1.0;
    else lo = -1.0;
  }
  return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

/// Enclosure of cos(num*pi/den); the constants cos(pi/(N+2)), cos(2pi/(N+2))
/// enter every certificate through this helper, never as bare floats.
inline Interval cos_pi_multiple(int num, int den) {
  return cos(pi_multiple(num, den));
}

inline Interval sin_pi_multiple(int num, int den) {
  return sin(pi_multiple(num, den));
}

}  // namespace koebe
