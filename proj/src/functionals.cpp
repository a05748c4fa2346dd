#include "gft/functionals.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "gft/errors.hpp"
#include "gft/optimize.hpp"
#include "gft/parallel.hpp"

namespace gft {
namespace {

constexpr double kRegionTol = 1e-12;
constexpr double kCaseTol = 1e-10;

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double region2_floor(double s) { return (4.0 / 27.0) * (s + 1) * (s + 1) * (s + 1) - (s + 1); }
double ridge_pos(double s) { return 2 * s * (s + 1) / (s * s + 2 * s + 4); }
double ridge_neg(double s) { return 2 * s * (s - 1) / (s * s - 2 * s + 4); }

double closed_h(double q1, double q2, std::string* region) {
  if (!std::isfinite(q1) || !std::isfinite(q2)) throw ParamOutOfRange("H arguments not finite");
  const double s = std::abs(q1), t = q2;
  auto tag = [&](const char* r) {
    if (region) *region = r;
  };

  if (s <= 0.5 + kRegionTol && std::abs(t) <= 1 + kRegionTol) {
    tag("D1");
    return 1.0;
  }
  if (s >= 0.5 - kRegionTol && s <= 2 + kRegionTol && t >= region2_floor(s) - kRegionTol &&
      t <= 1 + kRegionTol) {
    tag("D2");
    return 1.0;
  }
  if (s <= 0.5 + kRegionTol && t <= -1 + kRegionTol) {
    tag("D3");
    return std::abs(t);
  }
  if (s >= 0.5 - kRegionTol && t <= -(2.0 / 3.0) * (s + 1) + kRegionTol) {
    tag("D4");
    return std::abs(t);
  }
  if (s <= 2 + kRegionTol && t >= 1 - kRegionTol) {
    tag("D5");
    return std::abs(t);
  }
  if (s >= 2 - kRegionTol && s <= 4 + kRegionTol && t >= (s * s + 8) / 12.0 - kRegionTol) {
    tag("D6");
    return std::abs(t);
  }
  if (s >= 4 - kRegionTol && t >= (2.0 / 3.0) * (s - 1) - kRegionTol) {
    tag("D7");
    return std::abs(t);
  }
  const auto shoulder = [&] {
    return (2.0 / 3.0) * (s + 1) * std::sqrt((s + 1) / (3 * (s + 1 + t)));
  };
  if (s >= 0.5 - kRegionTol && s <= 2 + kRegionTol && t >= -(2.0 / 3.0) * (s + 1) - kRegionTol &&
      t <= region2_floor(s) + kRegionTol) {
    tag("D8");
    return shoulder();
  }
  if (s >= 2 - kRegionTol && t >= -(2.0 / 3.0) * (s + 1) - kRegionTol &&
      t <= ridge_pos(s) + kRegionTol) {
    tag("D9");
    return shoulder();
  }
  if (s >= 2 - kRegionTol && s <= 4 + kRegionTol && t >= ridge_pos(s) - kRegionTol &&
      t <= (s * s + 8) / 12.0 + kRegionTol) {
    tag("D10");
    return (t / 3.0) * ((s * s - 4) / (s * s - 4 * t)) * std::sqrt((s * s - 4) / (3 * (t - 1)));
  }
  if (s >= 4 - kRegionTol && t >= ridge_pos(s) - kRegionTol && t <= ridge_neg(s) + kRegionTol) {
    tag("D11");
    return (t / 3.0) * ((s * s - 4) / (s * s - 4 * t)) * std::sqrt((s * s - 4) / (3 * (t - 1)));
  }
  if (s >= 4 - kRegionTol && t >= ridge_neg(s) - kRegionTol &&
      t <= (2.0 / 3.0) * (s - 1) + kRegionTol) {
    tag("D12");
    return (2.0 / 3.0) * (s - 1) * std::sqrt((s - 1) / (3 * (s - 1 - t)));
  }
  throw NumericError("Schwarz-cubic region lookup failed at q1=" + fmt("%.17g", q1) +
                     " q2=" + fmt("%.17g", q2));
}

double body_value(double q1, double q2, double t, Complex x) {
  const double one_t2 = 1.0 - t * t;
  const double free_part = one_t2 * (1.0 - std::norm(x));
  const Complex locked = q2 * t * t * t + t * one_t2 * (q1 * x - x * x);
  return free_part + std::abs(locked);
}

double oracle_h(double q1, double q2) {
  constexpr int kT = 200, kR = 100, kA = 36;
  struct Best {
    double v = -1.0;
    double t = 0, re = 0, im = 0;
  };
  std::vector<Best> slot(chunk_count(kT));
  parallel_chunks(kT, [&](int chunk, int lo, int hi) {
    Best b;
    for (int i = lo; i < hi; ++i) {
      const double t = double(i) / (kT - 1);
      for (int j = 0; j < kR; ++j) {
        const double rho = double(j) / (kR - 1);
        for (int k = 0; k < kA; ++k) {
          const double th = 2 * M_PI * k / kA;
          const Complex x = std::polar(rho, th);
          const double v = body_value(q1, q2, t, x);
          if (v > b.v) b = {v, t, x.real(), x.imag()};
        }
      }
    }
    slot[chunk] = b;
  });
  Best best;
  for (const Best& b : slot)
    if (b.v > best.v) best = b;

  const auto clamped = [&](const std::array<double, 3>& p) {
    double t = std::clamp(p[0], 0.0, 1.0);
    Complex x(p[1], p[2]);
    if (std::abs(x) > 1.0) x /= std::abs(x);
    return -body_value(q1, q2, t, x);
  };
  const auto arg = nelder_mead<3>(clamped, {best.t, best.re, best.im}, 0.02, 300);
  return std::max(best.v, -clamped(arg));
}

std::array<double, 3> normalized_a(const PsiSpec& spec) {
  std::array<double, 3> a = spec.a123();
  if (std::abs(a[0]) < 1e-14) throw ParamOutOfRange("first curvature coefficient vanishes");
  if (a[0] < 0) {
    a = {-a[0], a[1], -a[2]};
  }
  return a;
}

std::string h_witness(double value, double q2) {
  if (std::abs(value - std::abs(q2)) <= 1e-12) return "omega(z)=z";
  if (std::abs(value - 1.0) <= 1e-12) return "omega(z)=z^3";
  return "interior schwarz maximizer";
}

}  // namespace

double prokhorov_h(double q1, double q2, ProkhorovMode mode) {
  if (mode == ProkhorovMode::oracle) return oracle_h(q1, q2);
  return closed_h(q1, q2, nullptr);
}

InitialBounds initial_bounds(const PsiSpec& spec, ProkhorovMode mode) {
  const auto a = normalized_a(spec);
  const double a1 = a[0], a2 = a[1], a3 = a[2];
  InitialBounds out;

  out.b2 = FunctionalBound{a1, "single", "omega(z)=z", a};

  const double S = a1 * a1 + a2;
  if (S >= a1) {
    out.b3 = FunctionalBound{0.5 * (a2 + a1 * a1), "(i)", "omega(z)=z", a};
  } else if (S >= -a1) {
    out.b3 = FunctionalBound{0.5 * a1, "(ii)", "omega(z)=z^2", a};
  } else {
    out.b3 = FunctionalBound{-0.5 * (a2 + a1 * a1), "(iii)", "omega(z)=z", a};
  }

  const double q1 = (4 * a2 + 3 * a1 * a1) / (2 * a1);
  const double q2 = (2 * a3 + a1 * a1 * a1 + 3 * a1 * a2) / (2 * a1);
  std::string region = "oracle";
  const double h =
      mode == ProkhorovMode::oracle ? oracle_h(q1, q2) : closed_h(q1, q2, &region);
  out.b4 = FunctionalBound{(a1 / 3.0) * h, "H:" + region, h_witness(h, q2), a};
  return out;
}

FunctionalBound fekete_szego_bound(const PsiSpec& spec, double nu) {
  const auto a = normalized_a(spec);
  const double a1 = a[0], a2 = a[1];
  const double lo = (a2 - a1 + a1 * a1) / (2 * a1 * a1);
  const double hi = (a2 + a1 + a1 * a1) / (2 * a1 * a1);
  if (nu <= lo) return {0.5 * (a2 + (1 - 2 * nu) * a1 * a1), "(i)", "omega(z)=z", a};
  if (nu <= hi) return {0.5 * a1, "(ii)", "omega(z)=z^2", a};
  return {-0.5 * (a2 + (1 - 2 * nu) * a1 * a1), "(iii)", "omega(z)=z", a};
}

FunctionalBound zalcman_bound(const PsiSpec& spec, ProkhorovMode mode) {
  const auto a = normalized_a(spec);
  const double a1 = a[0], a2 = a[1], a3 = a[2];
  const double q1 = (a1 * a1 + 4 * a2) / (2 * a1);
  const double q2 = (a3 - a1 * a1) / a1;
  std::string region = "oracle";
  const double h =
      mode == ProkhorovMode::oracle ? oracle_h(q1, q2) : closed_h(q1, q2, &region);
  return {(a1 / 3.0) * h, "H:" + region, h_witness(h, q2), a};
}

FunctionalBound hankel2_bound(const PsiSpec& spec) {
  const auto a = normalized_a(spec);
  const double a1 = a[0], a2m = std::abs(a[1]), a3 = a[2];
  const double mprime =
      std::abs(a1 * a1 * a1 * a1 - 4 * a1 * a3 + 3 * a[1] * a[1] + 6 * a1 * a1 * a[1]);

  // quartic profile in u = p^2 over [0,4]
  const double A = mprime - a1 * a1 - 2 * a1 * a2m;
  const double B = 8 * a1 * (a2m - a1);
  const double C = 48 * a1 * a1;
  double quartic = std::max(C, 16 * A + 4 * B + C);
  if (A != 0.0) {
    const double u = -B / (2 * A);
    if (u > 0.0 && u < 4.0) quartic = std::max(quartic, A * u * u + B * u + C);
  }
  for (int i = 0; i <= 4000; ++i) {
    const double u = 4.0 * i / 4000;
    quartic = std::max(quartic, A * u * u + B * u + C);
  }
  quartic /= 192.0;

  FunctionalBound out;
  out.inputs = a;
  out.mprime = mprime;
  if (a2m <= a1 + kCaseTol && mprime <= 3 * a1 * a1 + kCaseTol) {
    out.value = a1 * a1 / 4.0;
    out.branch = "(i) M'=" + fmt("%.12g", mprime);
    out.witness = "omega(z)=z^2";
  } else if ((a2m >= a1 - kCaseTol && mprime >= a1 * a2m + 2 * a1 * a1 - kCaseTol) ||
             (a2m <= a1 + kCaseTol && mprime >= 3 * a1 * a1 - kCaseTol)) {
    out.value = mprime / 12.0;
    out.branch = "(ii) M'=" + fmt("%.12g", mprime);
    out.witness = "|x|=1; p=2";
  } else if (a2m > a1 - kCaseTol && mprime <= 2 * a1 * a2m + 2 * a1 * a1 + kCaseTol) {
    const double denom = 48 * (mprime - 2 * a1 * a2m - a1 * a1);
    out.value = a1 * a1 / 4.0 - 4 * a1 * a1 * (a2m - a1) * (a2m - a1) / denom;
    out.branch = "(iii) M'=" + fmt("%.12g", mprime);
    out.witness = "|x|=1; p^2=" + fmt("%.6g", A != 0.0 ? -B / (2 * A) : 0.0);
  } else {
    throw AmbiguousCase("second-Hankel case conditions unresolved: M'=" + fmt("%.12g", mprime) +
                        " |A2|=" + fmt("%.12g", a2m) + " A1=" + fmt("%.12g", a1));
  }
  out.cross_check = quartic;
  const double scale = std::max({std::abs(out.value), std::abs(quartic), 1e-12});
  out.cross_check_agrees = std::abs(out.value - quartic) <= 0.02 * scale;
  return out;
}

std::string_view functional_name(Functional f) {
  switch (f) {
    case Functional::a2: return "a2";
    case Functional::a3: return "a3";
    case Functional::a4: return "a4";
    case Functional::fekete: return "fekete";
    case Functional::zalcman: return "zalcman";
    case Functional::hankel2: return "hankel2";
  }
  throw BadInputError("bad functional enum");
}

Functional functional_from_name(std::string_view name) {
  for (Functional f : {Functional::a2, Functional::a3, Functional::a4, Functional::fekete,
                       Functional::zalcman, Functional::hankel2})
    if (functional_name(f) == name) return f;
  throw BadInputError("unknown functional: " + std::string(name));
}

Complex functional_expression(const Series& s, Functional which, double nu) {
  if (s.order() < 4) throw OrderTooLow("functional needs series order >= 4");
  const Complex a2 = s[2], a3 = s[3], a4 = s[4];
  switch (which) {
    case Functional::a2: return a2;
    case Functional::a3: return a3;
    case Functional::a4: return a4;
    case Functional::fekete: return a3 - nu * a2 * a2;
    case Functional::zalcman: return a2 * a3 - a4;
    case Functional::hankel2: return a2 * a4 - a3 * a3;
  }
  throw BadInputError("bad functional enum");
}

double evaluate_functional(const MemberFn& f, Functional which, double nu) {
  return std::abs(functional_expression(f.series, which, nu));
}

}  // namespace gft
