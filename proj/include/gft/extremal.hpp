#pragma once

#include <optional>
#include <variant>

#include "gft/psi.hpp"
#include "gft/series.hpp"

namespace gft {

enum class MemberOrigin { extremal, schwarz_generated, transformed };

const char* origin_name(MemberOrigin o);

// A member of the class attached to some generator: normalized series
// z + a_2 z^2 + ..., plus how it was produced.  Schwarz-generated members
// keep the omega that produced them so verification can replay it.
struct MemberFn {
  Series series;
  MemberOrigin origin = MemberOrigin::extremal;
  std::optional<Series> schwarz_witness;
};

struct GrowthBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct UpperGrowth {
  double f_bound = 0.0;
  double fprime_bound = 0.0;
};

// z exp(integral of psi(t)/t), the function maximizing every coefficient
// functional along the omega(z) = z direction.
MemberFn extremal_function(const PsiSpec& spec, int order);

// Exact-arithmetic kernel behind extremal_function; shared with the test
// path so rational parameters produce rational coefficients.
template <class K>
SeriesT<K> extremal_series(PsiFamily family, const std::vector<K>& params, int order);

// z exp(integral of psi(omega(t))/t): membership by construction, since the
// log-derivative lands in psi(image of omega) pointwise.
MemberFn member_from_schwarz(const PsiSpec& spec, const Series& omega, int order);

// Sharp modulus envelope r exp(integral psi(-t)/t) <= |f| <= r exp(integral psi(t)/t)
// on |z| = r.  Requires real extrema of psi on circles to sit on the real
// axis (declared or certified; unknown flags trigger the certificate).
GrowthBounds growth_bounds(const PsiSpec& spec, double r);

// Limit of the lower envelope divided by r as r -> 1: no member omits a
// value of smaller modulus.
double koebe_radius(const PsiSpec& spec);

// Class-independent envelope |f| <= r e^{r/(1-r)}, |f'| <= (1-r+r^2)/(1-r)^2 e^{r/(1-r)};
// equality direction z exp(z/(1-z)).
UpperGrowth general_growth_upper(double r);

struct Rotation {
  double alpha = 0.0;  // a_n -> a_n e^{i(n-1) alpha}
};
struct Dilation {
  double t = 1.0;  // f(tz)/t, 0 < t <= 1
};
struct KthRoot {
  int k = 1;  // (f(z^k))^{1/k}, k >= 1
};
using MemberTransform = std::variant<Rotation, Dilation, KthRoot>;

// Class-preserving transforms; the witness does not survive (re-derive it by
// verification if needed).
MemberFn transform_member(const MemberFn& f, const MemberTransform& t);

template <class K>
SeriesT<K> extremal_series(PsiFamily family, const std::vector<K>& params, int order) {
  SeriesT<K> psi = psi_taylor_series<K>(family, params, order);
  SeriesT<K> g = exp(integrate_div_t(psi));
  std::vector<K> c(static_cast<std::size_t>(order) + 1, K{});
  for (int k = 1; k <= order; ++k) c[k] = g[k - 1];
  return SeriesT<K>(std::move(c));
}

}  // namespace gft
