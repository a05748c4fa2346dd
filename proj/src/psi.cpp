#include "gft/psi.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "gft/errors.hpp"

namespace gft {
namespace {

constexpr double kBoothConvexLimit = 3.0 - 2.0 * std::numbers::sqrt2;

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Golden-section refinement of f over [lo, hi]; sign = +1 maximizes.
template <class F>
double golden_extremum(F f, double lo, double hi, int sign, double* arg_out) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = sign * f(x1), f2 = sign * f(x2);
  for (int it = 0; it < 90 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = sign * f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = sign * f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  if (arg_out) *arg_out = xm;
  return sign * std::max(f1, f2);
}

}  // namespace

const char* family_name(PsiFamily f) {
  switch (f) {
    case PsiFamily::identity: return "identity";
    case PsiFamily::booth: return "booth";
    case PsiFamily::cissoid: return "cissoid";
    case PsiFamily::s_gamma: return "s_gamma";
    case PsiFamily::janowski: return "janowski";
    case PsiFamily::concave: return "concave";
  }
  return "?";
}

std::optional<PsiFamily> family_from_name(std::string_view name) {
  for (PsiFamily f : {PsiFamily::identity, PsiFamily::booth, PsiFamily::cissoid,
                      PsiFamily::s_gamma, PsiFamily::janowski, PsiFamily::concave})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

PsiSpec PsiSpec::identity() { return PsiSpec(PsiFamily::identity, 0.0, 0.0); }

PsiSpec PsiSpec::booth(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("booth beta must lie in [0,1)");
  PsiSpec s(PsiFamily::booth, beta, 0.0);
  // Image convexity is known in closed form up to 3 - 2 sqrt(2).
  if (beta <= kBoothConvexLimit + 1e-12) s.convex_image_ = Tri::yes;
  return s;
}

PsiSpec PsiSpec::cissoid(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("cissoid beta must lie in [0,1)");
  return PsiSpec(PsiFamily::cissoid, beta, 0.0);
}

PsiSpec PsiSpec::s_gamma(double gamma, double eta) {
  if (!(gamma > 0.0)) throw ParamOutOfRange("s_gamma gamma must be positive");
  if (!(eta >= 0.0 && eta < 1.0)) throw ParamOutOfRange("s_gamma eta must lie in [0,1)");
  return PsiSpec(PsiFamily::s_gamma, gamma, eta);
}

PsiSpec PsiSpec::janowski(double D, double E) {
  if (!(E >= -1.0 && E < D && D <= 1.0))
    throw ParamOutOfRange("janowski needs -1 <= E < D <= 1");
  return PsiSpec(PsiFamily::janowski, D, E);
}

PsiSpec PsiSpec::concave(double beta) {
  if (!(beta >= 1.0 && beta <= 2.0)) throw ParamOutOfRange("concave beta must lie in [1,2]");
  return PsiSpec(PsiFamily::concave, beta, 0.0);
}

Complex PsiSpec::eval(Complex z) const {
  switch (family_) {
    case PsiFamily::identity:
      return z;
    case PsiFamily::booth:
      return z / (1.0 - p1_ * z * z);
    case PsiFamily::cissoid:
      return z / ((1.0 - z) * (1.0 + p1_ * z));
    case PsiFamily::s_gamma: {
      const Complex d = 1.0 + p2_ * z;
      return p1_ * z / (d * d);
    }
    case PsiFamily::janowski:
      return (p1_ - p2_) * z / (1.0 + p2_ * z);
    case PsiFamily::concave:
      return (std::pow((1.0 + z) / (1.0 - z), p1_) - 1.0) / (2.0 * p1_);
  }
  throw BadInputError("unknown psi family");
}

Complex PsiSpec::psi_over_z(Complex z) const {
  if (std::abs(z) < 1e-7) {
    const auto a = a123();
    return a[0] + a[1] * z + a[2] * z * z;
  }
  return eval(z) / z;
}

Complex PsiSpec::convexity_kernel(Complex z) const {
  // For the rational families, with L = psi'/psi (log-derivative) the kernel
  // is 1 + z (L^2 + L') / L, since psi'' = psi (L^2 + L').
  const Complex inv_z = 1.0 / z;
  const Complex inv_z2 = inv_z * inv_z;
  Complex L, Lp;
  switch (family_) {
    case PsiFamily::identity:
      return 1.0;
    case PsiFamily::booth: {
      const Complex d = 1.0 - p1_ * z * z;
      L = inv_z + 2.0 * p1_ * z / d;
      Lp = -inv_z2 + 2.0 * p1_ * (1.0 + p1_ * z * z) / (d * d);
      break;
    }
    case PsiFamily::cissoid: {
      const Complex u = 1.0 - z, v = 1.0 + p1_ * z;
      L = inv_z + 1.0 / u - p1_ / v;
      Lp = -inv_z2 + 1.0 / (u * u) + p1_ * p1_ / (v * v);
      break;
    }
    case PsiFamily::s_gamma: {
      const Complex v = 1.0 + p2_ * z;
      L = inv_z - 2.0 * p2_ / v;
      Lp = -inv_z2 + 2.0 * p2_ * p2_ / (v * v);
      break;
    }
    case PsiFamily::janowski: {
      const Complex v = 1.0 + p2_ * z;
      L = inv_z - p2_ / v;
      Lp = -inv_z2 + p2_ * p2_ / (v * v);
      break;
    }
    case PsiFamily::concave:
      // psi''/psi' collapses to 2(beta-1)/(1-z^2) + 2/(1-z) directly.
      return 1.0 + z * (2.0 * (p1_ - 1.0) / (1.0 - z * z) + 2.0 / (1.0 - z));
  }
  return 1.0 + z * (L * L + Lp) / L;
}

std::array<double, 3> PsiSpec::a123() const {
  switch (family_) {
    case PsiFamily::identity: return {1.0, 0.0, 0.0};
    case PsiFamily::booth: return {1.0, 0.0, p1_};
    case PsiFamily::cissoid: return {1.0, 1.0 - p1_, 1.0 - p1_ + p1_ * p1_};
    case PsiFamily::s_gamma: return {p1_, -2.0 * p1_ * p2_, 3.0 * p1_ * p2_ * p2_};
    case PsiFamily::janowski: {
      const double w = p1_ - p2_;
      return {w, -w * p2_, w * p2_ * p2_};
    }
    case PsiFamily::concave: return {1.0, p1_, (1.0 + 2.0 * p1_ * p1_) / 3.0};
  }
  throw BadInputError("unknown psi family");
}

Series PsiSpec::taylor(int order) const {
  std::vector<Complex> params;
  switch (family_) {
    case PsiFamily::identity: break;
    case PsiFamily::booth:
    case PsiFamily::cissoid:
    case PsiFamily::concave: params = {Complex(p1_, 0.0)}; break;
    case PsiFamily::s_gamma:
    case PsiFamily::janowski: params = {Complex(p1_, 0.0), Complex(p2_, 0.0)}; break;
  }
  return psi_taylor_series<Complex>(family_, params, order);
}

PsiSpec PsiSpec::with_convex_image(Tri t) const {
  PsiSpec s = *this;
  s.convex_image_ = t;
  return s;
}

PsiSpec PsiSpec::with_axis_extrema(Tri t) const {
  PsiSpec s = *this;
  s.axis_extrema_ = t;
  return s;
}

PsiSpec PsiSpec::with_checked_convexity(int grid) const {
  if (convex_image_ != Tri::unknown) return *this;
  return with_convex_image(psi_convexity_check(*this, grid));
}

PsiSpec PsiSpec::with_checked_axis_extrema(int grid) const {
  if (axis_extrema_ != Tri::unknown) return *this;
  Tri verdict = Tri::yes;
  for (double r : {0.25, 0.5, 0.75, 0.9}) {
    if (!psi_real_extrema_on_circle(*this, r, grid).attained_at_axis) {
      verdict = Tri::no;
      break;
    }
  }
  return with_axis_extrema(verdict);
}

std::string PsiSpec::describe() const {
  switch (family_) {
    case PsiFamily::identity: return "identity";
    case PsiFamily::booth: return "booth(beta=" + fmt_param(p1_) + ")";
    case PsiFamily::cissoid: return "cissoid(beta=" + fmt_param(p1_) + ")";
    case PsiFamily::s_gamma:
      return "s_gamma(gamma=" + fmt_param(p1_) + ";eta=" + fmt_param(p2_) + ")";
    case PsiFamily::janowski:
      return "janowski(D=" + fmt_param(p1_) + ";E=" + fmt_param(p2_) + ")";
    case PsiFamily::concave: return "concave(beta=" + fmt_param(p1_) + ")";
  }
  return "?";
}

CircleExtrema psi_real_extrema_on_circle(const PsiSpec& spec, double r, int grid) {
  if (!(r > 0.0 && r < 1.0)) throw ParamOutOfRange("circle radius must lie in (0,1)");
  if (grid < 1) throw ParamOutOfRange("grid must be positive");

  const auto re_at = [&](double theta) {
    return spec.eval(Complex(r * std::cos(theta), r * std::sin(theta))).real();
  };

  CircleExtrema out;
  if (grid == 1) {
    const double v = re_at(0.0);
    out.min_re = out.max_re = v;
  } else {
    const double step = 2.0 * std::numbers::pi / grid;
    double best_max = -1e300, best_min = 1e300, arg_max = 0.0, arg_min = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double v = re_at(j * step);
      if (v > best_max) { best_max = v; arg_max = j * step; }
      if (v < best_min) { best_min = v; arg_min = j * step; }
    }
    double th;
    out.max_re = golden_extremum(re_at, arg_max - step, arg_max + step, +1, &th);
    out.theta_max = th;
    out.min_re = golden_extremum(re_at, arg_min - step, arg_min + step, -1, &th);
    out.theta_min = th;
  }
  const double at_plus = spec.eval(Complex(r, 0.0)).real();
  const double at_minus = spec.eval(Complex(-r, 0.0)).real();
  out.attained_at_axis =
      std::abs(out.max_re - at_plus) <= 1e-9 && std::abs(out.min_re - at_minus) <= 1e-9;
  return out;
}

Tri psi_convexity_check(const PsiSpec& spec, int grid) {
  if (grid < 8) throw ParamOutOfRange("convexity grid too small");
  double margin = 1e300;
  for (double r : {0.9, 0.95, 0.99, 0.995}) {
    const auto re_at = [&](double theta) {
      return spec.convexity_kernel(Complex(r * std::cos(theta), r * std::sin(theta))).real();
    };
    const double step = 2.0 * std::numbers::pi / grid;
    double best = 1e300, arg = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double v = re_at(j * step);
      if (v < best) { best = v; arg = j * step; }
    }
    best = golden_extremum(re_at, arg - step, arg + step, -1, nullptr);
    margin = std::min(margin, best);
  }
  if (margin > 1e-6) return Tri::yes;
  if (margin < -1e-6) return Tri::no;
  return Tri::unknown;
}

}  // namespace gft
