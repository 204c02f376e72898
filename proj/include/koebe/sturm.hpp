#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/polynomial.hpp"

namespace koebe {

enum class SturmStatus { Ok, Degenerate, Ambiguous };

struct SturmResult {
  SturmStatus status = SturmStatus::Ok;
  int root_count = 0;   // distinct real roots in (a, b]; valid when Ok
  int chain_length = 0;
  std::string note;
};

namespace detail {

/// Relative threshold for deciding that a remainder coefficient is noise.
inline constexpr double kSturmPruneTol = 1e-12;

/// Evaluation noise bound: kSturmPruneTol * sum |c_i| |x|^i.
inline double eval_noise(const std::vector<double>& c, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (size_t i = c.size(); i-- > 0;) acc = acc * ax + std::abs(c[i]);
  return kSturmPruneTol * acc;
}

inline double eval_vec(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

/// Normalise to max-abs-coefficient 1 (positive rescale; preserves signs).
inline void normalize(std::vector<double>& c) {
  const double m = max_abs(c);
  if (m > 0.0)
    for (double& v : c) v /= m;
}

/// Signed Euclidean remainder chain of (p, p'), each member rescaled to
/// unit max-abs-coefficient and the remainder's degree decided by pruning
/// leading coefficients below kSturmPruneTol.  Returns false (ambiguous)
/// when a leading coefficient lands inside the noise band [tol, 10 tol].
inline bool build_sturm_chain(const RealPolynomial& p,
                              std::vector<std::vector<double>>& chain,
                              std::string& note) {
  chain.clear();
  std::vector<double> s0 = p.coeffs();
  normalize(s0);
  chain.push_back(s0);
  if (s0.size() <= 1) return true;

  std::vector<double> s1(s0.size() - 1);
  for (size_t i = 1; i < s0.size(); ++i)
    s1[i - 1] = s0[i] * static_cast<double>(i);
  normalize(s1);
  chain.push_back(s1);

  while (chain.back().size() > 1) {
    const std::vector<double>& u = chain[chain.size() - 2];
    const std::vector<double>& v = chain.back();
    // r = remainder of u / v, then negated.  Eliminates the coefficient at
    // each degree from deg(u) down to deg(v).
    std::vector<double> r = u;
    const size_t dv = v.size() - 1;
    const double lead_v = v.back();
    for (size_t deg = r.size() - 1;; --deg) {
      const double q = r[deg] / lead_v;
      r[deg] = 0.0;
      for (size_t i = 0; i < dv; ++i) r[deg - dv + i] -= q * v[i];
      if (deg == dv) break;
    }
    r.resize(dv);  // remainder degree < deg(v)
    for (double& c : r) c = -c;

    // Degree decision: trim leading noise, flag the borderline band.
    size_t n = r.size();
    while (n > 0 && std::abs(r[n - 1]) <= kSturmPruneTol) --n;
    if (n == 0) break;  // exact-gcd termination: chain ends at v
    if (std::abs(r[n - 1]) <= 10.0 * kSturmPruneTol) {
      note = "remainder leading coefficient within noise band at chain step " +
             std::to_string(chain.size());
      return false;
    }
    r.resize(n);
    normalize(r);
    chain.push_back(std::move(r));
    if (chain.size() > p.coeffs().size() + 2) {
      note = "chain length exceeded degree bound";
      return false;
    }
  }
  return true;
}

/// Sign variations of the chain at x.  Signs with |value| <= noise count
/// as zero; ok is cleared when a zero lands somewhere the variation count
/// is sensitive to it (first member, last member, or two adjacent zeros).
inline int sign_variations(const std::vector<std::vector<double>>& chain,
                           double x, bool& ok, std::string& note) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& c : chain) {
    const double v = eval_vec(c, x);
    const double noise = eval_noise(c, x);
    if (v > noise)
      signs.push_back(1);
    else if (v < -noise)
      signs.push_back(-1);
    else
      signs.push_back(0);
  }
  if (signs.front() == 0) {
    ok = false;
    note = "polynomial value at an endpoint is below noise";
    return 0;
  }
  if (signs.back() == 0) {
    ok = false;
    note = "last chain member value at an endpoint is below noise";
    return 0;
  }
  for (size_t i = 0; i + 1 < signs.size(); ++i)
    if (signs[i] == 0 && signs[i + 1] == 0) {
      ok = false;
      note = "two adjacent chain members vanish at an endpoint";
      return 0;
    }
  int variations = 0;
  int prev = signs.front();
  for (size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] == 0) continue;
    if (signs[i] != prev) ++variations;
    prev = signs[i];
  }
  return variations;
}

}  // namespace detail

/// Distinct real roots of p in (a, b] via the Sturm sign-variation count.
/// Degenerate for the zero polynomial; Ambiguous when remainder pruning or
/// endpoint sign evaluation falls into the noise band.  Endpoints where p
/// itself evaluates below noise are nudged inward by 1e-12 once.
inline SturmResult sturm_count_checked(const RealPolynomial& p, double a, double b) {
  SturmResult res;
  if (!(a < b)) throw std::invalid_argument("sturm_count: requires a < b");
  if (p.is_zero()) {
    res.status = SturmStatus::Degenerate;
    res.note = "zero polynomial";
    return res;
  }
  if (p.degree() == 0) {
    res.status = SturmStatus::Ok;
    res.root_count = 0;
    res.chain_length = 1;
    return res;
  }

  std::vector<std::vector<double>> chain;
  if (!detail::build_sturm_chain(p, chain, res.note)) {
    res.status = SturmStatus::Ambiguous;
    return res;
  }
  res.chain_length = static_cast<int>(chain.size());

  const auto& s0 = chain.front();
  if (std::abs(detail::eval_vec(s0, a)) <= detail::eval_noise(s0, a)) a += 1e-12;
  if (std::abs(detail::eval_vec(s0, b)) <= detail::eval_noise(s0, b)) b -= 1e-12;
  if (!(a < b)) {
    res.status = SturmStatus::Ambiguous;
    res.note = "interval collapsed by endpoint perturbation";
    return res;
  }

  bool ok = true;
  const int va = detail::sign_variations(chain, a, ok, res.note);
  const int vb = detail::sign_variations(chain, b, ok, res.note);
  if (!ok || va < vb) {
    res.status = SturmStatus::Ambiguous;
    if (va < vb && res.note.empty()) res.note = "negative variation difference";
    return res;
  }
  res.status = SturmStatus::Ok;
  res.root_count = va - vb;
  return res;
}

/// Convenience wrapper: returns the count, throwing on Degenerate or
/// Ambiguous outcomes.
inline int sturm_count(const RealPolynomial& p, double a, double b) {
  const SturmResult r = sturm_count_checked(p, a, b);
  if (r.status == SturmStatus::Degenerate)
    throw std::domain_error("sturm_count: zero polynomial");
  if (r.status == SturmStatus::Ambiguous)
    throw std::runtime_error("sturm_count: ambiguous (" + r.note + ")");
  return r.root_count;
}

}  // namespace koebe
