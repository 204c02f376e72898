#pragma once

#include <stdexcept>
#include <vector>

#include "koebe/interval.hpp"

namespace koebe {

namespace detail {

inline void require_nonnegative_order(int k) {
  if (k < 0) throw std::invalid_argument("Chebyshev order must be >= 0");
}

// Three-term recurrences, shared between plain and interval arithmetic.
// T is double or Interval.
template <class T>
T cheb_t_rec(int k, const T& x) {
  if (k == 0) return T(1.0);
  T prev = T(1.0);
  T cur = x;
  for (int i = 1; i < k; ++i) {
    T next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
T cheb_u_rec(int k, const T& x) {
  if (k == 0) return T(1.0);
  T prev = T(1.0);
  T cur = 2.0 * x;
  for (int i = 1; i < k; ++i) {
    T next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// U'_{k+1} = 2 U_k + 2x U'_k - U'_{k-1}, run jointly with the U recurrence.
template <class T>
T cheb_u_prime_rec(int k, const T& x) {
  if (k == 0) return T(0.0);
  T u_prev = T(1.0);
  T u_cur = 2.0 * x;
  T d_prev = T(0.0);
  T d_cur = T(2.0);
  for (int i = 1; i < k; ++i) {
    T u_next = 2.0 * x * u_cur - u_prev;
    T d_next = 2.0 * u_cur + 2.0 * x * d_cur - d_prev;
    u_prev = u_cur;
    u_cur = u_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

}  // namespace detail

/// T_k(x), Chebyshev polynomial of the first kind.
inline double cheb_t(int k, double x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_t_rec(k, x);
}

/// U_k(x), Chebyshev polynomial of the second kind.
inline double cheb_u(int k, double x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_u_rec(k, x);
}

/// U'_k(x), derivative of the second-kind polynomial.
inline double cheb_u_prime(int k, double x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_u_prime_rec(k, x);
}

inline Interval cheb_t_iv(int k, const Interval& x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_t_rec(k, x);
}

inline Interval cheb_u_iv(int k, const Interval& x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_u_rec(k, x);
}

inline Interval cheb_u_prime_iv(int k, const Interval& x) {
  detail::require_nonnegative_order(k);
  return detail::cheb_u_prime_rec(k, x);
}

/// Power-basis coefficients of T_d.  The entries are integers, exact in
/// binary64 up to d ~ 50; callers beyond desk-scale degrees are on their own.
inline std::vector<double> cheb_t_row(int d) {
  detail::require_nonnegative_order(d);
  std::vector<double> prev{1.0};
  if (d == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < d; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2.0 * cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace koebe
