#include "gft/extremal.hpp"

#include <cmath>

#include "gft/errors.hpp"
#include "gft/quadrature.hpp"

namespace gft {
namespace {

std::vector<Complex> family_params(const PsiSpec& spec) {
  switch (spec.family()) {
    case PsiFamily::identity: return {};
    case PsiFamily::booth:
    case PsiFamily::cissoid:
    case PsiFamily::concave: return {Complex(spec.beta(), 0.0)};
    case PsiFamily::s_gamma: return {Complex(spec.gamma(), 0.0), Complex(spec.eta(), 0.0)};
    case PsiFamily::janowski: return {Complex(spec.jan_d(), 0.0), Complex(spec.jan_e(), 0.0)};
  }
  throw BadInputError("unknown psi family");
}

Series shifted_up(const Series& g, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
  for (int k = 1; k <= order && k - 1 <= g.order(); ++k) c[k] = g[k - 1];
  return Series(std::move(c));
}

double log_lower_integral(const PsiSpec& spec, double r) {
  // integral of psi(-t)/t = -psi_over_z(-t) on [0, r]
  return integrate([&](double t) { return -spec.psi_over_z(Complex(-t, 0.0)).real(); }, 0.0, r);
}

double log_upper_integral(const PsiSpec& spec, double r) {
  return integrate([&](double t) { return spec.psi_over_z(Complex(t, 0.0)).real(); }, 0.0, r);
}

PsiSpec require_axis_extrema(const PsiSpec& spec) {
  PsiSpec checked = spec.axis_extrema() == Tri::unknown ? spec.with_checked_axis_extrema() : spec;
  if (checked.axis_extrema() != Tri::yes)
    throw HypothesisUnverified("real extrema of " + spec.describe() + " not attained on the axis");
  return checked;
}

}  // namespace

const char* origin_name(MemberOrigin o) {
  switch (o) {
    case MemberOrigin::extremal: return "extremal";
    case MemberOrigin::schwarz_generated: return "schwarz_generated";
    case MemberOrigin::transformed: return "transformed";
  }
  return "?";
}

MemberFn extremal_function(const PsiSpec& spec, int order) {
  if (order < 1) throw BadRange("extremal order must be >= 1");
  return MemberFn{extremal_series<Complex>(spec.family(), family_params(spec), order),
                  MemberOrigin::extremal, std::nullopt};
}

MemberFn member_from_schwarz(const PsiSpec& spec, const Series& omega, int order) {
  if (order < 1) throw BadRange("member order must be >= 1");
  if (std::abs(omega[0]) > kTauZero) throw InvalidSchwarz("omega(0) != 0");
  if (omega.order() >= 1 && std::abs(omega[1]) > 1.0 + 1e-12)
    throw InvalidSchwarz("|omega'(0)| > 1");

  const Series omega_pad = omega.truncated(order);
  const Series psi_of_omega = compose(spec.taylor(order), omega_pad);
  const Series g = exp(integrate_div_t(psi_of_omega));
  return MemberFn{shifted_up(g, order), MemberOrigin::schwarz_generated, omega_pad};
}

GrowthBounds growth_bounds(const PsiSpec& spec, double r) {
  if (!(r > 0.0 && r < 1.0)) throw ParamOutOfRange("growth radius must lie in (0,1)");
  require_axis_extrema(spec);
  return GrowthBounds{r * std::exp(log_lower_integral(spec, r)),
                      r * std::exp(log_upper_integral(spec, r))};
}

double koebe_radius(const PsiSpec& spec) {
  require_axis_extrema(spec);
  return std::exp(log_lower_integral(spec, 1.0));
}

UpperGrowth general_growth_upper(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ParamOutOfRange("radius must lie in [0,1)");
  const double e = std::exp(r / (1.0 - r));
  return UpperGrowth{r * e, (1.0 - r + r * r) / ((1.0 - r) * (1.0 - r)) * e};
}

MemberFn transform_member(const MemberFn& f, const MemberTransform& t) {
  const int order = f.series.order();
  Series out = f.series;
  if (const auto* rot = std::get_if<Rotation>(&t)) {
    std::vector<Complex> c(f.series.coeffs());
    for (int n = 1; n <= order; ++n)
      c[n] *= std::exp(Complex(0.0, (n - 1) * rot->alpha));
    out = Series(std::move(c));
  } else if (const auto* dil = std::get_if<Dilation>(&t)) {
    if (!(dil->t > 0.0 && dil->t <= 1.0)) throw ParamOutOfRange("dilation factor must lie in (0,1]");
    std::vector<Complex> c(f.series.coeffs());
    double scale = 1.0;
    for (int n = 1; n <= order; ++n, scale *= dil->t) c[n] *= scale;
    out = Series(std::move(c));
  } else if (const auto* root = std::get_if<KthRoot>(&t)) {
    const int k = root->k;
    if (k < 1) throw ParamOutOfRange("root index must be >= 1");
    if (k > 1) {
      // (f(z^k))^{1/k} = z (1 + sum a_n z^{k(n-1)})^{1/k}
      std::vector<Complex> h(static_cast<std::size_t>(order), Complex{});
      h[0] = 1.0;
      for (int n = 2; n <= order; ++n) {
        const long long deg = static_cast<long long>(k) * (n - 1);
        if (deg >= static_cast<long long>(h.size())) break;
        h[static_cast<std::size_t>(deg)] = f.series[n];
      }
      out = shifted_up(pow(Series(std::move(h)), 1.0 / k), order);
    }
  }
  return MemberFn{std::move(out), MemberOrigin::transformed, std::nullopt};
}

}  // namespace gft
