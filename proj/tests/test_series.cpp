#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gft/series.hpp"

using namespace gft;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

bool near_series(const Series& a, const Series& b, double tol = 1e-12) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (!near(a[k], b[k], tol)) return false;
  return true;
}

Series random_series(std::mt19937& rng, int order, bool zero_c0) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = Complex(u(rng), u(rng));
  if (zero_c0) c[0] = 0.0;
  return Series(std::move(c));
}

}  // namespace

TEST_CASE("products and quotients match closed forms at the truncation order") {
  const Series one_plus = Series({{1, 0}, {1, 0}, {0, 0}});
  const Series one_minus = Series({{1, 0}, {-1, 0}, {0, 0}});
  const Series prod = one_plus * one_minus;
  CHECK(near(prod[0], 1.0));
  CHECK(near(prod[1], 0.0));
  CHECK(near(prod[2], -1.0));

  const Series geo = Series::identity(3) / (Series::one(3) - Series::identity(3));
  for (int k = 1; k <= 3; ++k) CHECK(near(geo[k], 1.0));
  CHECK(near(geo[0], 0.0));

  // z / ((1-z)(1+bz)) with b = 1/2
  const Series den =
      (Series::one(3) - Series::identity(3)) * (Series::one(3) + Series::monomial(1, 3, {0.5, 0}));
  const Series q = Series::identity(3) / den;
  CHECK(near(q[1], 1.0));
  CHECK(near(q[2], 0.5));
  CHECK(near(q[3], 0.75));
}

TEST_CASE("binary operations truncate to the smaller operand order") {
  const Series a = Series::one(5);
  const Series b = Series::one(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a / b).order() == 3);
}

TEST_CASE("exp matches the exponential series") {
  const Series e = exp(Series::identity(3));
  CHECK(near(e[0], 1.0));
  CHECK(near(e[1], 1.0));
  CHECK(near(e[2], 0.5));
  CHECK(near(e[3], 1.0 / 6.0));
}

TEST_CASE("powers of the two-sided linear ratio expand as expected") {
  // ((1+sz)/(1-sz))^(1/(2s)) begins 1 + z + z^2/2 + (1/3)(s^2+1/2) z^3
  for (double beta : {0.25, 0.5}) {
    const double s = std::sqrt(beta);
    const Series base = (Series::one(3) + Series::monomial(1, 3, {s, 0})) /
                        (Series::one(3) - Series::monomial(1, 3, {s, 0}));
    const Series g = pow(base, 1.0 / (2.0 * s));
    CHECK(near(g[0], 1.0));
    CHECK(near(g[1], 1.0));
    CHECK(near(g[2], 0.5));
    CHECK(near(g[3], (beta + 0.5) / 3.0));
  }
}

TEST_CASE("log and exp invert each other on random series") {
  std::mt19937 rng(20260818);
  for (int rep = 0; rep < 8; ++rep) {
    const Series s = random_series(rng, 8, true);
    CHECK(near_series(log(exp(s)), s, 1e-12));
    const Series one_plus = Series::one(10) + random_series(rng, 10, true);
    CHECK(near_series(exp(log(one_plus)), one_plus, 1e-12));
  }
}

TEST_CASE("ring distributivity holds coefficient-wise on random series") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 6; ++rep) {
    const Series a = random_series(rng, 10, false);
    const Series b = random_series(rng, 10, false);
    const Series c = random_series(rng, 10, false);
    CHECK(near_series((a + b) * c, a * c + b * c, 1e-12));
  }
}

TEST_CASE("pow with exponent two agrees with the plain product") {
  std::mt19937 rng(11);
  const Series a = Series::one(9) + random_series(rng, 9, true);
  CHECK(near_series(pow(a, 2.0), a * a, 1e-12));
}

TEST_CASE("composition handles identity, squares, and self-composition") {
  std::mt19937 rng(3);
  const Series s = random_series(rng, 7, false);
  CHECK(near_series(compose(s, Series::identity(7)), s));

  // odd generator under z^2: z + b z^3 + b^2 z^5 + ... -> z^2 + b z^6 + ...
  std::vector<Complex> oc(9, Complex{});
  oc[1] = 1.0;
  oc[3] = 0.3;
  oc[5] = 0.09;
  oc[7] = 0.027;
  const Series odd(std::move(oc));
  const Series sq = compose(odd, Series::monomial(2, 8));
  for (int k = 0; k <= 8; ++k) {
    const Complex want = k == 2 ? Complex(1, 0) : (k == 6 ? Complex(0.3, 0) : Complex(0, 0));
    CHECK(near(sq[k], want));
  }

  std::vector<Complex> pc(5, Complex{});
  pc[1] = 1.0;
  pc[2] = 1.0;
  const Series p(std::move(pc));
  const Series pp = compose(p, p);
  CHECK(near(pp[1], 1.0));
  CHECK(near(pp[2], 2.0));
  CHECK(near(pp[3], 2.0));
  CHECK(near(pp[4], 1.0));

  CHECK_THROWS_AS(compose(p, Series::one(4)), InnerNotVanishing);
}

TEST_CASE("integrate_div_t divides term-wise by the degree") {
  const RationalSeries z = RationalSeries::identity(3);
  CHECK(integrate_div_t(z)[1] == Rational(1));

  RationalSeries cubic =
      RationalSeries::identity(3) + RationalSeries::monomial(3, 3, Rational(1, 3));
  const RationalSeries ic = integrate_div_t(cubic);
  CHECK(ic[1] == Rational(1));
  CHECK(ic[3] == Rational(1, 9));

  std::vector<Rational> c{Rational(0), Rational(1), Rational(1), Rational(1)};
  const RationalSeries full = integrate_div_t(RationalSeries(std::move(c)));
  CHECK(full[1] == Rational(1));
  CHECK(full[2] == Rational(1, 2));
  CHECK(full[3] == Rational(1, 3));

  CHECK_THROWS_AS(integrate_div_t(RationalSeries::one(3)), ConstantTermNotZero);
}

TEST_CASE("euler operator inverts integrate_div_t exactly over rationals") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> c(11, Rational(0));
  for (int k = 1; k <= 10; ++k) c[k] = Rational(d(rng));
  const RationalSeries a(std::move(c));
  const RationalSeries back = z_derivative(integrate_div_t(a));
  for (int k = 0; k <= 10; ++k) CHECK(back[k] == a[k]);
}

TEST_CASE("derivative drops the order by one") {
  std::vector<Complex> c{{0, 0}, {1, 0}, {1, 0}, {1, 0}};
  const Series d = derivative(Series(std::move(c)));
  CHECK(d.order() == 2);
  CHECK(near(d[0], 1.0));
  CHECK(near(d[1], 2.0));
  CHECK(near(d[2], 3.0));
}

TEST_CASE("evaluation returns exact values and certified tails") {
  std::vector<Complex> c{{0, 0}, {1, 0}, {1, 0}, {1, 0}};
  CHECK(near(evaluate(Series(c), 0.0).value, 0.0));

  const Series e20 = exp(Series::identity(20));
  const EvalResult ee = evaluate(e20, 0.5);
  CHECK(ee.tail_certified);
  CHECK(std::abs(ee.value - std::exp(0.5)) < 1e-12);

  std::vector<Complex> g(31, Complex(1, 0));
  const EvalResult ge = evaluate(Series(std::move(g)), 0.9);
  CHECK(ge.tail_certified);
  CHECK(std::abs(ge.value - 10.0) <= ge.tail_bound + 1e-12);

  // polynomial with vanishing trailing window: tail is exactly zero
  const EvalResult pe = evaluate(Series::identity(40), 0.99);
  CHECK(pe.tail_certified);
  CHECK(pe.tail_bound == 0.0);
}

TEST_CASE("majorant partial sums match direct summation and grow with m and r") {
  CHECK(majorant_partial(Series::identity(1), 1, 1, 0.37) == doctest::Approx(0.37));

  std::vector<Complex> c{{0, 0}, {1, 0}, {1, 0}, {1, 0}};
  const Series s(std::move(c));
  CHECK(majorant_partial(s, 2, 3, 0.5) == doctest::Approx(0.375));

  std::mt19937 rng(13);
  const Series f = random_series(rng, 6, true);
  double direct = 0.0;
  for (int n = 1; n <= 4; ++n) direct += std::abs(f[n]) * std::pow(0.3, n);
  CHECK(majorant_partial(f, 1, 4, 0.3) == doctest::Approx(direct).epsilon(1e-12));

  CHECK(majorant_partial(f, 1, 4, 0.3) <= majorant_partial(f, 1, 5, 0.3) + 1e-15);
  CHECK(majorant_partial(f, 1, 4, 0.3) <= majorant_partial(f, 1, 4, 0.4) + 1e-15);

  CHECK_THROWS_AS(majorant_partial(f, 3, 2, 0.3), BadRange);
  CHECK_THROWS_AS(majorant_partial(f, 1, 4, 1.0), BadRange);
}

TEST_CASE("partial sums zero the high coefficients and the degree-0 window") {
  std::vector<Complex> c{{0, 0}, {1, 0}, {1, 0}, {1, 0}};
  const Series s(std::move(c));

  const Series s0 = partial_sum(s, 0);
  for (int k = 0; k <= 3; ++k) CHECK(near(s0[k], 0.0));

  const Series s2 = partial_sum(s, 2);
  CHECK(near(s2[1], 1.0));
  CHECK(near(s2[2], 1.0));
  CHECK(near(s2[3], 0.0));

  CHECK(near_series(partial_sum(s, s.order()), s));
  CHECK_THROWS_AS(partial_sum(s, 4), BadRange);
}

TEST_CASE("absolute-coefficient series and scalar multiplication") {
  std::vector<Complex> c{{0, 0}, {-1, 0}, {0, 2}, {3, -4}};
  const Series a = abs_series(Series(std::move(c)));
  CHECK(near(a[1], 1.0));
  CHECK(near(a[2], 2.0));
  CHECK(near(a[3], 5.0));

  const Series scaled = Complex(2, 0) * Series::identity(2);
  CHECK(near(scaled[1], 2.0));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(Series::one(3) / Series::identity(3), DivisionByZeroConstantTerm);
  CHECK_THROWS_AS(log(Series::identity(3)), NotNormalized);
  CHECK_THROWS_AS(exp(RationalSeries::one(3)), NotNormalized);
  CHECK_THROWS_AS(Series::monomial(5, 3), BadRange);
  CHECK_THROWS_AS(Series({Complex(std::nan(""), 0)}), BadInputError);
  CHECK_THROWS_AS(Series::identity(3).truncated(-1), BadRange);
}

TEST_CASE("rational scalars normalize, compare, and guard overflow") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
