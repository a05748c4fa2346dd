#include <cmath>
#include <functional>

#include "doctest.h"
#include "gft/radius.hpp"

using namespace gft;

namespace {

constexpr double kThird = 1.0 / 3.0;

void check_certificate(const RadiusResult& r) {
  CHECK(r.residual < 1e-10);
  CHECK(r.bracket_lo < r.root);
  CHECK(r.root < r.bracket_hi);
}

}  // namespace

TEST_CASE("bracketed solver finds the smallest root with a certificate") {
  const RadiusResult lin = solve_bracketed([](double r) { return r - 0.5; }, 1e-9, 0.99);
  CHECK(lin.root == doctest::Approx(0.5).epsilon(1e-12));
  check_certificate(lin);

  const auto cubic = [](double r) {
    const double s = 1.0 - r;
    return s * s * s - r + r * r * r;
  };
  const RadiusResult third = solve_bracketed(cubic, 1e-9, 0.99);
  CHECK(std::abs(third.root - kThird) <= 1e-12);
  check_certificate(third);

  const auto triple = [](double r) { return (r - 0.2) * (r - 0.5) * (r - 0.8); };
  const RadiusResult first = solve_bracketed(triple, 1e-9, 0.99);
  CHECK(first.root == doctest::Approx(0.2).epsilon(1e-10));
  // scanner-first: below the certified bracket the equation never changes sign
  const double s0 = triple(1e-9) > 0 ? 1.0 : -1.0;
  for (int i = 0; i < 500; ++i) {
    const double r = 1e-9 + (first.bracket_lo - 2e-9) * i / 499.0;
    CHECK(triple(r) * s0 > 0.0);
  }

  CHECK_THROWS_AS(solve_bracketed([](double) { return 1.0; }, 1e-9, 0.99), NoSignChange);
  CHECK_THROWS_WITH_AS(solve_bracketed([](double) { return 1.0; }, 0.25, 0.75),
                       doctest::Contains("[0.25"), NoSignChange);
  CHECK_THROWS_AS(solve_bracketed([](double r) { return r; }, 0.5, 0.5), BadRange);
}

TEST_CASE("truncation counts") {
  CHECK(MCount::infinite().is_infinite());
  CHECK(!MCount::finite(3).is_infinite());
  CHECK(MCount::finite(3).value() == 3);
  CHECK_THROWS_AS(MCount::finite(0), ParamOutOfRange);
  CHECK_THROWS_AS(MCount::infinite().value(), BadInputError);
}

TEST_CASE("power-majorant radius for convex-image generators") {
  const RadiusResult id = bohr_radius(PsiSpec::identity().with_checked_convexity());
  CHECK(id.radius == doctest::Approx(0.27846454276107379511).epsilon(1e-10));
  CHECK(!id.clamped_at_third);
  CHECK(id.truncation_order >= 64);
  check_certificate(id);

  const RadiusResult b = bohr_radius(PsiSpec::booth(0.1));
  CHECK(b.radius == doctest::Approx(0.27067695470105767185).epsilon(1e-10));
  check_certificate(b);

  // beta -> 0 limit recovers the identity-generator radius
  const RadiusResult b0 = bohr_radius(PsiSpec::booth(1e-8));
  CHECK(std::abs(b0.radius - id.radius) < 1e-6);
}

TEST_CASE("convex-image hypothesis is enforced, not assumed") {
  CHECK_THROWS_AS(bohr_radius(PsiSpec::booth(0.9)), HypothesisUnverified);
  CHECK_THROWS_AS(bohr_radius(PsiSpec::identity()), HypothesisUnverified);
  CHECK_THROWS_AS(bohr_rogosinski_radius(PsiSpec::booth(0.9), MCount::finite(1), 1),
                  HypothesisUnverified);
}

TEST_CASE("partial-sum variant interpolates the power-majorant radius") {
  const PsiSpec id = PsiSpec::identity().with_checked_convexity();

  const RadiusResult m1 = bohr_rogosinski_radius(id, MCount::finite(1), 1);
  CHECK(m1.radius == doctest::Approx(0.15718495148381400959).epsilon(1e-9));
  check_certificate(m1);

  const RadiusResult m2 = bohr_rogosinski_radius(id, MCount::finite(2), 1);
  CHECK(m2.radius == doctest::Approx(0.24083370311467883477).epsilon(1e-9));

  const RadiusResult n2 = bohr_rogosinski_radius(id, MCount::finite(1), 2);
  CHECK(n2.radius == doctest::Approx(0.23892067225516654151).epsilon(1e-9));

  // the infinite-m limit recovers the plain radius
  const RadiusResult full = bohr_rogosinski_radius(id, MCount::infinite(), 1);
  CHECK(std::abs(full.radius - bohr_radius(id).radius) < 1e-9);
  const PsiSpec b01 = PsiSpec::booth(0.1);
  CHECK(std::abs(bohr_rogosinski_radius(b01, MCount::infinite(), 1).radius -
                 bohr_radius(b01).radius) < 1e-9);

  // root grows with m (less truncation of the evaluated sum) and with N
  CHECK(m1.root < m2.root);
  CHECK(m2.root < full.root);
  CHECK(m1.root < n2.root);

  CHECK_THROWS_AS(bohr_rogosinski_radius(id, MCount::finite(1), 0), ParamOutOfRange);
}

TEST_CASE("weighted variant with nu_n(r) = r^n matches the plain one") {
  const PsiSpec id = PsiSpec::identity().with_checked_convexity();
  const RadiusResult plain = bohr_rogosinski_radius(id, MCount::finite(2), 1);
  const RadiusResult weighted = bohr_rogosinski_radius_weighted(
      id, MCount::finite(2), [](int n, double r) { return std::pow(r, n); }, 256);
  CHECK(std::abs(plain.radius - weighted.radius) < 1e-9);
  CHECK_THROWS_AS(bohr_rogosinski_radius_weighted(
                      id, MCount::finite(2), [](int, double) { return 0.0; }, 0),
                  ParamOutOfRange);
}

TEST_CASE("booth partial-sum window radius") {
  const RadiusResult m1 = booth_br_radius(0.1, MCount::finite(1), 1);
  CHECK(m1.radius == doctest::Approx(0.15241229664972871324).epsilon(1e-9));
  check_certificate(m1);

  CHECK(booth_br_radius(0.1, MCount::finite(2), 1).radius ==
        doctest::Approx(0.2346692280114171744).epsilon(1e-9));
  CHECK(booth_br_radius(0.1, MCount::finite(1), 3).radius ==
        doctest::Approx(0.26445254601190755983).epsilon(1e-9));

  CHECK(std::abs(booth_br_radius(0.1, MCount::infinite(), 1).radius -
                 bohr_radius(PsiSpec::booth(0.1)).radius) < 1e-9);

  CHECK_THROWS_AS(booth_br_radius(0.2, MCount::finite(1), 1), ParamOutOfRange);
  CHECK_THROWS_AS(booth_br_radius(0.0, MCount::finite(1), 1), ParamOutOfRange);
}

TEST_CASE("generic truncated-majorant equation with a catalog generator") {
  PolyParams p;
  p.psi = PsiSpec::booth(0.1);

  const RadiusResult ex = polyanalytic_radius(PolyEquation::generic, p);
  CHECK(ex.root == doctest::Approx(0.44338512506881111177).epsilon(1e-9));
  CHECK(ex.clamped_at_third);
  CHECK(ex.radius == doctest::Approx(kThird).epsilon(1e-15));

  p.alpha = 3;
  p.N = 2;
  CHECK(polyanalytic_radius(PolyEquation::generic, p).root ==
        doctest::Approx(0.60346205850085037147).epsilon(1e-9));

  PolyParams pc;
  pc.psi = PsiSpec::booth(0.1);
  pc.part = GenericPart::convex;
  CHECK(polyanalytic_radius(PolyEquation::generic, pc).root ==
        doctest::Approx(0.50815166651904004521).epsilon(1e-9));

  // starlike part needs no convexity certificate
  PolyParams ps;
  ps.psi = PsiSpec::booth(0.9);
  ps.part = GenericPart::starlike;
  const RadiusResult st = polyanalytic_radius(PolyEquation::generic, ps);
  CHECK(st.root > 0.0);
  CHECK(st.root < 1.0);
  CHECK(st.residual < 1e-10);

  PolyParams pe;
  pe.psi = PsiSpec::booth(0.9);
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::generic, pe), HypothesisUnverified);
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::generic, PolyParams{}), ParamOutOfRange);
}

TEST_CASE("convex-part equation roots") {
  PolyParams p;
  const RadiusResult r = polyanalytic_radius(PolyEquation::convex_part, p);
  CHECK(r.root == doctest::Approx(0.54368901269207636157).epsilon(1e-10));
  CHECK(r.clamped_at_third);
  CHECK(r.radius == doctest::Approx(kThird).epsilon(1e-15));
  check_certificate(r);

  PolyParams p2;
  p2.alpha = 3;
  p2.N = 2;
  p2.m = MCount::finite(5);
  const RadiusResult r2 = polyanalytic_radius(PolyEquation::convex_part, p2);
  CHECK(r2.root == doctest::Approx(0.62615999727280769727).epsilon(1e-10));
  CHECK(r2.clamped_at_third);

  // more retained terms (larger m) can only shrink the root; larger N grows it
  PolyParams pm = p2;
  pm.m = MCount::infinite();
  CHECK(polyanalytic_radius(PolyEquation::convex_part, pm).root <= r2.root + 1e-12);
  PolyParams pn;
  pn.N = 2;
  CHECK(polyanalytic_radius(PolyEquation::convex_part, pn).root >= r.root - 1e-12);
}

TEST_CASE("starlike-part equation roots") {
  PolyParams p;
  const RadiusResult r = polyanalytic_radius(PolyEquation::starlike_part, p);
  CHECK(r.root == doctest::Approx(kThird).epsilon(1e-10));
  CHECK(r.radius == doctest::Approx(kThird).epsilon(1e-10));

  PolyParams p2;
  p2.N = 2;
  p2.m = MCount::finite(6);
  const RadiusResult r2 = polyanalytic_radius(PolyEquation::starlike_part, p2);
  CHECK(r2.root == doctest::Approx(0.43599423707045602897).epsilon(1e-9));
  CHECK(r2.clamped_at_third);
  CHECK(r2.radius == doctest::Approx(kThird).epsilon(1e-15));

  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::starlike_part, [] {
                    PolyParams bad;
                    bad.N = 4;
                    bad.m = MCount::finite(2);
                    return bad;
                  }()),
                  ParamOutOfRange);
}

TEST_CASE("janowski equation reports the raw root") {
  PolyParams p;
  p.D = 1.0;
  p.E = -1.0;
  const RadiusResult r = polyanalytic_radius(PolyEquation::janowski, p);
  CHECK(r.root == doctest::Approx(kThird).epsilon(1e-9));
  CHECK(!r.clamped_at_third);
  CHECK(r.radius == doctest::Approx(r.root).epsilon(1e-15));

  PolyParams ph;
  ph.D = 0.5;
  ph.E = -0.5;
  const RadiusResult rh = polyanalytic_radius(PolyEquation::janowski, ph);
  CHECK(rh.root == doctest::Approx(0.43050087404306039367).epsilon(1e-9));
  CHECK(!rh.clamped_at_third);

  PolyParams bad;
  bad.D = 0.5;
  bad.E = 0.5;
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::janowski, bad), ParamOutOfRange);
}

TEST_CASE("rogosinski-convex radii exceed one third for every alpha") {
  const double expected[] = {0.4142135623730950488,  0.39264678170264081176,
                             0.38579461148992643685, 0.38338708281009370638,
                             0.38250187460964249293, 0.38216952932554186297,
                             0.38204355484945251694};
  for (int alpha = 2; alpha <= 8; ++alpha) {
    PolyParams p;
    p.alpha = alpha;
    const RadiusResult r = polyanalytic_radius(PolyEquation::rogosinski_convex, p);
    CHECK(r.root == doctest::Approx(expected[alpha - 2]).epsilon(1e-10));
    CHECK(!r.clamped_at_third);
    CHECK(r.root > kThird);
  }
}

TEST_CASE("order-one equations bracket one third from both sides") {
  PolyParams p;
  const RadiusResult c2 = polyanalytic_radius(PolyEquation::n1_convex, p);
  CHECK(c2.root == doctest::Approx(0.54368901269207636157).epsilon(1e-10));
  CHECK(c2.clamped_at_third);
  CHECK(c2.radius == doctest::Approx(kThird).epsilon(1e-15));

  PolyParams p3;
  p3.alpha = 3;
  CHECK(polyanalytic_radius(PolyEquation::n1_convex, p3).root ==
        doctest::Approx(0.51879006367588422191).epsilon(1e-10));
  PolyParams p8;
  p8.alpha = 8;
  CHECK(polyanalytic_radius(PolyEquation::n1_convex, p8).root ==
        doctest::Approx(0.50049311828655225606).epsilon(1e-10));

  const RadiusResult s2 = polyanalytic_radius(PolyEquation::n1_starlike, p);
  CHECK(s2.root == doctest::Approx(kThird).epsilon(1e-10));
  CHECK(polyanalytic_radius(PolyEquation::n1_starlike, p3).root ==
        doctest::Approx(0.32218535462608559291).epsilon(1e-10));
  CHECK(polyanalytic_radius(PolyEquation::n1_starlike, p8).root ==
        doctest::Approx(0.31768594833449507939).epsilon(1e-10));
  for (int alpha = 2; alpha <= 10; ++alpha) {
    PolyParams pa;
    pa.alpha = alpha;
    CHECK(polyanalytic_radius(PolyEquation::n1_starlike, pa).root <= kThird + 1e-12);
  }
  PolyParams p50;
  p50.alpha = 50;
  CHECK(polyanalytic_radius(PolyEquation::n1_starlike, p50).root ==
        doctest::Approx(0.31767219617198067263).epsilon(1e-9));
}

TEST_CASE("concave-generator equation uses the generator's own coefficients") {
  PolyParams p;
  p.beta = 1.5;
  const RadiusResult r = polyanalytic_radius(PolyEquation::concave, p);
  CHECK(r.root == doctest::Approx(0.36866247306848275852).epsilon(1e-9));
  CHECK(!r.clamped_at_third);
  CHECK(r.radius == doctest::Approx(r.root).epsilon(1e-15));

  PolyParams bad;
  bad.beta = 0.5;
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::concave, bad), ParamOutOfRange);
}

TEST_CASE("first-component window equation") {
  PolyParams p;
  const RadiusResult n1 = polyanalytic_radius(PolyEquation::ff1, p);
  CHECK(n1.root == doctest::Approx(0.28077640640441513746).epsilon(1e-10));
  CHECK(!n1.clamped_at_third);

  PolyParams p2;
  p2.N = 2;
  const RadiusResult n2 = polyanalytic_radius(PolyEquation::ff1, p2);
  CHECK(n2.root == doctest::Approx(0.35320996419932442948).epsilon(1e-10));
  CHECK(n2.clamped_at_third);
  CHECK(n2.radius == doctest::Approx(kThird).epsilon(1e-15));
}

TEST_CASE("alpha and N validation is shared by every equation") {
  PolyParams bad_alpha;
  bad_alpha.alpha = 1;
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::convex_part, bad_alpha), ParamOutOfRange);
  PolyParams bad_n;
  bad_n.N = 0;
  CHECK_THROWS_AS(polyanalytic_radius(PolyEquation::ff1, bad_n), ParamOutOfRange);
}

TEST_CASE("bounded-function schlicht disk") {
  const LandauResult l = landau_radius(2, 2.0);
  CHECK(l.rho1 == doctest::Approx(5.0 - std::sqrt(24.0)).epsilon(1e-9));
  CHECK(l.R1 == doctest::Approx(0.065817973721478955884).epsilon(1e-9));
  CHECK(l.residual < 1e-10);

  const LandauResult l3 = landau_radius(3, 1.5);
  CHECK(l3.rho1 == doctest::Approx(0.11589825080293630632).epsilon(1e-9));
  CHECK(l3.R1 == doctest::Approx(0.07517170048024282707).epsilon(1e-9));

  // a looser bound M gives a larger schlicht disk
  CHECK(landau_radius(2, 1.2).rho1 > landau_radius(2, 2.0).rho1);
  CHECK(landau_radius(2, 1.2).R1 > landau_radius(2, 2.0).R1);

  CHECK_THROWS_AS(landau_radius(1, 2.0), ParamOutOfRange);
  CHECK_THROWS_AS(landau_radius(2, 1.0), ParamOutOfRange);
  CHECK_THROWS_AS(landau_radius(2, 0.5), ParamOutOfRange);
}

TEST_CASE("equation name table is stable") {
  const auto& names = radius_equation_names();
  CHECK(names.size() == 13);
  bool has_bohr = false;
  for (auto n : names)
    if (n == "bohr") has_bohr = true;
  CHECK(has_bohr);
}
