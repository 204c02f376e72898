#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/boundary.hpp"
#include "koebe/interval.hpp"
#include "koebe/polynomial.hpp"
#include "koebe/sturm.hpp"

namespace koebe {

enum class Verdict { Certified, Refuted, Degenerate, Inconclusive };
enum class Method { Sturm, IntervalBisection, DiscriminantShift, SquareCompletion };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Degenerate: return "degenerate";
    default: return "inconclusive";
  }
}

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Sturm: return "sturm";
    case Method::IntervalBisection: return "interval_bisection";
    case Method::DiscriminantShift: return "discriminant_shift";
    default: return "square_completion";
  }
}

/// Outcome of one positivity-certification attempt.
struct CertificationReport {
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::Sturm;
  double margin = 0.0;   // lower bound of p on the interval, when available
  bool has_margin = false;
  bool margin_rigorous = false;  // true when margin is an interval-certified bound
  int root_count = -1;           // Sturm only
  long subdivisions = 0;         // bisection leaves processed
  int depth_reached = 0;         // deepest bisection level
  std::vector<Interval> shift_coeffs;  // shift certificates: A_0.. / B_0..
  Interval discriminant{0.0, 0.0};
  bool has_discriminant = false;
  double endpoint_left = 0.0;   // p(a)
  double endpoint_right = 0.0;  // p(b)
  std::string note;
};

namespace detail {

inline double grid_min(const RealPolynomial& p, double a, double b, int points) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double x = a + (b - a) * i / (points - 1);
    m = std::min(m, p(x));
  }
  return m;
}

}  // namespace detail

/// Positivity of p on (a, b) via Sturm root counting: Certified when the
/// count is zero and the midpoint sample is positive.  The reported margin
/// is the minimum over a 1001-point grid (informational, not certified).
inline CertificationReport certify_positive_sturm(const RealPolynomial& p,
                                                  double a, double b) {
  if (!(a < b)) throw std::invalid_argument("certify_positive_sturm: requires a < b");
  CertificationReport rep;
  rep.method = Method::Sturm;
  rep.endpoint_left = p(a);
  rep.endpoint_right = p(b);
  if (p.is_zero()) {
    rep.verdict = Verdict::Degenerate;
    rep.note = "zero polynomial";
    return rep;
  }
  const SturmResult sr = sturm_count_checked(p, a, b);
  if (sr.status == SturmStatus::Ambiguous) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "sturm chain ambiguous: " + sr.note;
    return rep;
  }
  rep.root_count = sr.root_count;
  rep.margin = detail::grid_min(p, a, b, 1001);
  rep.has_margin = true;
  const double mid = p(0.5 * (a + b));
  if (sr.root_count == 0 && mid > 0.0) {
    rep.verdict = Verdict::Certified;
    return rep;
  }
  if (mid < 0.0 || rep.margin < 0.0) {
    rep.verdict = Verdict::Refuted;
    rep.note = "negative sample found";
    return rep;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.note = "roots detected without a sign change (tangential zero)";
  return rep;
}

/// Half-width by which the open interval is shrunk before bisection; the
/// polynomial may legitimately vanish at the endpoints themselves.
inline constexpr double kOpenEndpointEps = 1e-9;

/// Positivity of p on (a, b) by adaptive bisection with outward-rounded
/// interval Horner evaluation of the (exact) double coefficients.
/// Certified when every leaf enclosure has a positive lower bound on
/// [a+eps, b-eps]; Refuted when a point sample goes strictly negative;
/// Inconclusive when the depth or node budget runs out.  The margin of a
/// Certified verdict is the smallest certified leaf lower bound.
inline CertificationReport certify_positive_bisection(const RealPolynomial& p,
                                                      double a, double b,
                                                      int max_depth = 40) {
  if (!(a < b)) throw std::invalid_argument("certify_positive_bisection: requires a < b");
  if (max_depth < 1 || max_depth > 60)
    throw std::invalid_argument("certify_positive_bisection: max_depth must be in [1, 60]");
  CertificationReport rep;
  rep.method = Method::IntervalBisection;
  rep.endpoint_left = p(a);
  rep.endpoint_right = p(b);
  if (p.is_zero()) {
    rep.verdict = Verdict::Degenerate;
    rep.note = "zero polynomial";
    return rep;
  }
  const double lo0 = a + kOpenEndpointEps;
  const double hi0 = b - kOpenEndpointEps;
  if (!(lo0 < hi0)) throw std::invalid_argument("certify_positive_bisection: interval too small");

  struct Node {
    double lo, hi;
    int depth;
  };
  std::vector<Node> stack{{lo0, hi0, 0}};
  constexpr long kNodeBudget = 400000;
  double min_lower = std::numeric_limits<double>::infinity();
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    ++rep.subdivisions;
    rep.depth_reached = std::max(rep.depth_reached, node.depth);
    if (rep.subdivisions > kNodeBudget) {
      rep.verdict = Verdict::Inconclusive;
      rep.note = "node budget exhausted";
      return rep;
    }
    const Interval enc = p(Interval(node.lo, node.hi));
    if (enc.lo() > 0.0) {
      min_lower = std::min(min_lower, enc.lo());
      continue;
    }
    const double mid = 0.5 * (node.lo + node.hi);
    const double sample = p(mid);
    if (sample < 0.0) {
      rep.verdict = Verdict::Refuted;
      rep.margin = sample;
      rep.has_margin = true;
      rep.note = "negative sample at x = " + std::to_string(mid);
      return rep;
    }
    if (node.depth >= max_depth) {
      rep.verdict = Verdict::Inconclusive;
      rep.note = "max depth reached with enclosure [" + std::to_string(enc.lo()) +
                 ", " + std::to_string(enc.hi()) + "] straddling zero";
      return rep;
    }
    stack.push_back({node.lo, mid, node.depth + 1});
    stack.push_back({mid, node.hi, node.depth + 1});
  }
  rep.verdict = Verdict::Certified;
  rep.margin = min_lower;
  rep.has_margin = true;
  rep.margin_rigorous = true;
  return rep;
}

namespace detail {

/// Cubic shift certificate on rigorous coefficient enclosures: with
/// p(-1+u) = A_0 + A_1 u + A_2 u^2 + A_3 u^3, positivity on (-1, 1)
/// follows from A_0 >= 0, A_1 > 0, A_3 > 0 and A_2^2 - 4 A_1 A_3 < 0
/// (the inner quadratic then has no real root, so it stays above its
/// positive vertex value and u * quadratic >= 0 for u >= 0).
inline CertificationReport discriminant_from_shift(const IntervalPoly& sh) {
  CertificationReport rep;
  rep.method = Method::DiscriminantShift;
  const Interval A0 = sh[0], A1 = sh[1], A2 = sh[2], A3 = sh[3];
  rep.shift_coeffs = {A0, A1, A2, A3};
  rep.discriminant = sqr(A2) - 4.0 * (A1 * A3);
  rep.has_discriminant = true;
  if (A0.hi() < 0.0) {
    rep.verdict = Verdict::Refuted;
    rep.margin = A0.hi();
    rep.has_margin = true;
    rep.margin_rigorous = true;
    rep.note = "value at -1 is certainly negative";
    return rep;
  }
  std::string failed;
  if (!A0.nonnegative()) failed += " A_0>=0";
  if (!A1.strictly_positive()) failed += " A_1>0";
  if (!A3.strictly_positive()) failed += " A_3>0";
  if (!rep.discriminant.strictly_negative()) failed += " A_2^2-4A_1A_3<0";
  if (!failed.empty()) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "certificate conditions not established:" + failed;
    return rep;
  }
  rep.verdict = Verdict::Certified;
  rep.margin = A0.lo();
  rep.has_margin = true;
  rep.margin_rigorous = true;
  rep.note = "A_0 >= 0, A_1 > 0, A_3 > 0, A_2^2 - 4 A_1 A_3 < 0";
  return rep;
}

}  // namespace detail

inline CertificationReport certify_shift_discriminant_iv(const IntervalPoly& p) {
  if (p.size() != 4)
    throw std::invalid_argument("certify_shift_discriminant: polynomial must be cubic");
  return detail::discriminant_from_shift(taylor_shift(p, -1.0));
}

/// Plain-coefficient entry: the Taylor shift runs in double arithmetic
/// (exact for the modest integer examples this is exercised on) before
/// the enclosure comparisons, so constructed zero coefficients stay
/// exactly zero instead of picking up outward-rounding slack.
inline CertificationReport certify_shift_discriminant(const RealPolynomial& p) {
  if (p.degree() != 3)
    throw std::invalid_argument("certify_shift_discriminant: polynomial must be cubic");
  return detail::discriminant_from_shift(to_interval_poly(taylor_shift(p, -1.0)));
}

namespace detail {

/// Quartic square-completion certificate on rigorous enclosures: with
/// p(-1+u) = B_0 + ... + B_4 u^4 and B_0 > 0,
///   p(-1+u) = (sqrt(B_0) + B_1/(2 sqrt(B_0)) u)^2 + u^2 q(u),
///   q(u) = (B_2 - B_1^2/(4 B_0)) + B_3 u + B_4 u^2,
/// so p > 0 on (-1, 1) once q is positive on [0, 2]: either q has a
/// negative discriminant with positive leading and constant terms, or all
/// of q's coefficients (and B_1) are nonnegative.
inline CertificationReport square_completion_from_shift(const IntervalPoly& sh) {
  CertificationReport rep;
  rep.method = Method::SquareCompletion;
  rep.shift_coeffs = sh;
  const Interval B0 = sh[0], B1 = sh[1], B2 = sh[2], B3 = sh[3], B4 = sh[4];
  if (B0.hi() < 0.0) {
    rep.verdict = Verdict::Refuted;
    rep.margin = B0.hi();
    rep.has_margin = true;
    rep.margin_rigorous = true;
    rep.note = "value at -1 is certainly negative";
    return rep;
  }
  if (!B0.strictly_positive()) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "B_0 enclosure not strictly positive";
    return rep;
  }
  const Interval q0 = B2 - sqr(B1) / (4.0 * B0);
  const Interval q1 = B3;
  const Interval q2 = B4;
  rep.discriminant = sqr(q1) - 4.0 * (q0 * q2);
  rep.has_discriminant = true;

  if (q0.strictly_positive() && q2.strictly_positive() &&
      rep.discriminant.strictly_negative()) {
    // q > 0 on all of R; quantify: p >= (sqrt(B0) + r u)^2 + q_vert u^2
    // with q_vert the vertex value of q, and that envelope's minimum over
    // u is B0 q_vert / (r^2 + q_vert).
    const Interval r = B1 / (2.0 * sqrt(B0));
    const Interval q_vert = q0 - sqr(q1) / (4.0 * q2);
    rep.verdict = Verdict::Certified;
    if (q_vert.strictly_positive()) {
      const Interval m = (B0 * q_vert) / (sqr(r) + q_vert);
      rep.margin = std::max(0.0, m.lo());
      rep.has_margin = true;
      rep.margin_rigorous = true;
    }
    rep.note = "square completion with positive-definite quadratic remainder";
    return rep;
  }
  if (q0.nonnegative() && q1.nonnegative() && q2.nonnegative() && B1.nonnegative()) {
    rep.verdict = Verdict::Certified;
    rep.margin = B0.lo();
    rep.has_margin = true;
    rep.margin_rigorous = true;
    rep.note = "square completion with all remainder terms nonnegative";
    return rep;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.note = "quadratic remainder not certified positive on [0, 2]";
  return rep;
}

}  // namespace detail

inline CertificationReport certify_square_completion_iv(const IntervalPoly& p) {
  if (p.size() != 5)
    throw std::invalid_argument("certify_square_completion: polynomial must be quartic");
  return detail::square_completion_from_shift(taylor_shift(p, -1.0));
}

/// Plain-coefficient entry; see certify_shift_discriminant for why the
/// shift runs in double arithmetic here.
inline CertificationReport certify_square_completion(const RealPolynomial& p) {
  if (p.degree() != 4)
    throw std::invalid_argument("certify_square_completion: polynomial must be quartic");
  return detail::square_completion_from_shift(to_interval_poly(taylor_shift(p, -1.0)));
}

/// Combined univalence certification for P_N.
struct UnivalenceReport {
  int n = 0;
  Verdict verdict = Verdict::Inconclusive;
  bool exploratory = false;  // true for N > 6: no hand-proof ground truth
  std::vector<CertificationReport> methods;
  std::string note;
};

/// Dispatcher: runs Sturm and interval bisection on R'_N over (-1, 1),
/// plus the degree-specific shift certificate for N = 5 (cubic
/// discriminant) and N = 6 (square completion), both on 4 R'_N with
/// rigorously enclosed coefficients.  Certified only when every method
/// that reaches a verdict agrees.  N = 1 is Degenerate (P_1 = z, R'_1 is
/// identically zero).  High degrees whose power-basis coefficients exceed
/// double precision's resolving power return Inconclusive up front.
inline UnivalenceReport certify_univalence(int N, int max_depth = 40) {
  if (N < 1) throw std::invalid_argument("certify_univalence: N must be >= 1");
  UnivalenceReport rep;
  rep.n = N;
  rep.exploratory = N > 6;
  const RealPolynomial rp = r_prime_poly(N);
  if (N == 1) {
    rep.verdict = Verdict::Degenerate;
    rep.note = "P_1(z) = z is trivially univalent; R'_1 is identically zero";
    rep.methods.push_back(certify_positive_sturm(rp, -1.0, 1.0));
    rep.methods.push_back(certify_positive_bisection(rp, -1.0, 1.0, max_depth));
    return rep;
  }

  // Conditioning guard: the power-basis coefficients of R'_N grow roughly
  // like 2.4^N, so beyond N ~ 35 double-precision evaluation noise
  // swamps the polynomial's actual minimum and no double-based method can
  // answer honestly.
  const double noise = rp.sum_abs_coeffs() * (rp.degree() + 1) *
                       std::numeric_limits<double>::epsilon();
  const double observed_min =
      detail::grid_min(rp, -1.0 + kOpenEndpointEps, 1.0 - kOpenEndpointEps, 512);
  if (std::abs(observed_min) < 10.0 * noise) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "coefficient conditioning insufficient at this degree "
               "(evaluation noise exceeds the observed minimum)";
    return rep;
  }

  rep.methods.push_back(certify_positive_sturm(rp, -1.0, 1.0));
  rep.methods.push_back(certify_positive_bisection(rp, -1.0, 1.0, max_depth));
  if (N == 5)
    rep.methods.push_back(certify_shift_discriminant_iv(scale(r_prime_poly_iv(5), 4.0)));
  if (N == 6)
    rep.methods.push_back(certify_square_completion_iv(scale(r_prime_poly_iv(6), 4.0)));

  bool any_decided = false;
  Verdict agreed = Verdict::Inconclusive;
  bool disagreement = false;
  for (const CertificationReport& m : rep.methods) {
    if (m.verdict == Verdict::Inconclusive) continue;
    if (!any_decided) {
      agreed = m.verdict;
      any_decided = true;
    } else if (m.verdict != agreed) {
      disagreement = true;
    }
  }
  if (disagreement) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "methods disagree";
  } else if (!any_decided) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "no method reached a verdict";
  } else {
    rep.verdict = agreed;
    if (rep.exploratory && rep.note.empty())
      rep.note = "exploratory: beyond the range with hand-proof ground truth";
  }
  return rep;
}

}  // namespace koebe
