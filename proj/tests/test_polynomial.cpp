// Power-basis polynomial type: Horner evaluation over double, complex and
// interval arguments, derivative and ring operations, the Taylor shift,
// and the interval-coefficient helpers used by the certificates.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "koebe/polynomial.hpp"

using koebe::Interval;
using koebe::IntervalPoly;
using koebe::RealPolynomial;

TEST_CASE("construction trims trailing zeros", "[polynomial]") {
  const RealPolynomial p({1.0, 2.0, 0.0, 0.0});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 1.0);
  CHECK(p.coeff(1) == 2.0);
  CHECK(p.coeff(2) == 0.0);   // out-of-range reads give zero
  CHECK(p.coeff(-1) == 0.0);

  const RealPolynomial z({0.0, 0.0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z(3.7) == 0.0);

  CHECK_THROWS_AS(RealPolynomial({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("evaluation matches explicit expansion", "[polynomial]") {
  // p(x) = 2 - x + 3x^3
  const RealPolynomial p({2.0, -1.0, 0.0, 3.0});
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> xs(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = xs(rng);
    const double want = 2.0 - x + 3.0 * x * x * x;
    CHECK_THAT(p(x), Catch::Matchers::WithinAbs(want, 1e-13));
  }

  const std::complex<double> z{0.3, -0.8};
  const std::complex<double> w = koebe::eval_complex(p, z);
  const std::complex<double> want = 2.0 - z + 3.0 * z * z * z;
  CHECK(std::abs(w - want) < 1e-13);
}

TEST_CASE("interval Horner encloses point evaluations", "[polynomial]") {
  const RealPolynomial p({-1.0, 0.5, 2.0, -0.25});
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = xs(rng), b = xs(rng);
    if (a > b) std::swap(a, b);
    const Interval enc = p(Interval(a, b));
    std::uniform_real_distribution<double> in(a, b);
    for (int j = 0; j < 5; ++j) CHECK(enc.contains(p(in(rng))));
  }
}

TEST_CASE("derivative and arithmetic", "[polynomial]") {
  const RealPolynomial p({2.0, -1.0, 0.0, 3.0});
  const RealPolynomial dp = p.derivative();
  CHECK(dp.degree() == 2);
  CHECK(dp.coeff(0) == -1.0);
  CHECK(dp.coeff(1) == 0.0);
  CHECK(dp.coeff(2) == 9.0);
  CHECK(RealPolynomial::constant(5.0).derivative().is_zero());

  const RealPolynomial q({1.0, 1.0});  // 1 + x
  const RealPolynomial s = p + q;
  CHECK(s.coeff(0) == 3.0);
  CHECK(s.coeff(1) == 0.0);
  const RealPolynomial d = q - q;
  CHECK(d.is_zero());

  // (1 + x)^2 = 1 + 2x + x^2
  const RealPolynomial sq = q * q;
  CHECK(sq.coeff(0) == 1.0);
  CHECK(sq.coeff(1) == 2.0);
  CHECK(sq.coeff(2) == 1.0);

  const RealPolynomial h = 0.5 * p;
  CHECK(h.coeff(3) == 1.5);
  CHECK(p.max_abs_coeff() == 3.0);
  CHECK(p.sum_abs_coeffs() == 6.0);
}

TEST_CASE("taylor shift re-expands exactly on integer examples", "[polynomial]") {
  // (x+1)^3 expressed at center -1 collapses to u^3.
  const RealPolynomial p({1.0, 3.0, 3.0, 1.0});
  const RealPolynomial sh = koebe::taylor_shift(p, -1.0);
  CHECK(sh.coeff(0) == 0.0);
  CHECK(sh.coeff(1) == 0.0);
  CHECK(sh.coeff(2) == 0.0);
  CHECK(sh.coeff(3) == 1.0);

  // Round trip: shifting back restores the original coefficients.
  const RealPolynomial back = koebe::taylor_shift(sh, 1.0);
  for (int d = 0; d <= 3; ++d) CHECK(back.coeff(d) == p.coeff(d));

  // q(u) = p(c + u) as a pointwise identity.
  const RealPolynomial r({0.25, -2.0, 0.0, 1.0, 0.5});
  const double c = 0.375;  // exactly representable
  const RealPolynomial q = koebe::taylor_shift(r, c);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double u = us(rng);
    CHECK_THAT(q(u), Catch::Matchers::WithinAbs(r(c + u), 1e-12));
  }
}

TEST_CASE("interval polynomial helpers", "[polynomial]") {
  const RealPolynomial p({1.0, -3.0, 0.5, 2.0});
  const IntervalPoly iv = koebe::to_interval_poly(p);
  REQUIRE(iv.size() == 4);
  for (size_t i = 0; i < iv.size(); ++i) {
    CHECK(iv[i].lo() == p.coeff(static_cast<int>(i)));
    CHECK(iv[i].width() == 0.0);
  }

  // eval_interval contains the double Horner value.
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> xs(-1.5, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = xs(rng);
    CHECK(koebe::eval_interval(iv, Interval(x)).contains(p(x)));
  }

  // derivative / scale mirror the plain versions coefficientwise.
  const IntervalPoly div = koebe::derivative(iv);
  const RealPolynomial dp = p.derivative();
  REQUIRE(div.size() == 3);
  for (int d = 0; d < 3; ++d) CHECK(div[d].contains(dp.coeff(d)));

  const IntervalPoly sc = koebe::scale(iv, 4.0);
  for (int d = 0; d < 4; ++d) CHECK(sc[d].contains(4.0 * p.coeff(d)));

  // interval taylor shift contains the plain-double shift.
  const IntervalPoly shiv = koebe::taylor_shift(iv, -1.0);
  const RealPolynomial shd = koebe::taylor_shift(p, -1.0);
  for (int d = 0; d < 4; ++d) CHECK(shiv[d].contains(shd.coeff(d)));

  // midpoints round-trips degenerate interval coefficients.
  const RealPolynomial mids = koebe::midpoints(iv);
  for (int d = 0; d < 4; ++d) CHECK(mids.coeff(d) == p.coeff(d));
}
