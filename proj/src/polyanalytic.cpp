#include "gft/polyanalytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gft/errors.hpp"

namespace gft {

namespace {

int min_order(const PolyFn& F) {
  int cap = F.components.front().order();
  for (const Series& f : F.components) cap = std::min(cap, f.order());
  return cap;
}

}  // namespace

PolyFn make_polyfn(std::vector<Series> components) {
  if (components.size() < 2) throw TooFewComponents();
  PolyFn F;
  F.alpha = static_cast<int>(components.size());
  F.vanishes_at_zero.reserve(components.size());
  for (const Series& f : components) F.vanishes_at_zero.push_back(std::abs(f[0]) < kTauZero);
  F.components = std::move(components);
  return F;
}

Complex eval_polyfn(const PolyFn& F, Complex z) {
  const Complex zb = std::conj(z);
  Complex acc = 0.0;
  Complex pw = 1.0;
  for (const Series& f : F.components) {
    acc += pw * evaluate(f, z).value;
    pw *= zb;
  }
  return acc;
}

double majorant_sum(const PolyFn& F, int N, int m, double r) {
  if (N < 1 || N > m) throw BadRange("majorant_sum indices");
  if (!(r >= 0.0 && r < 1.0)) throw BadRange("majorant_sum radius");
  const int hi = std::min(m, min_order(F));
  double acc = 0.0;
  for (int n = N; n <= hi; ++n) {
    double rk = std::pow(r, n);
    for (const Series& f : F.components) {
      acc += std::abs(f[n]) * rk;
      rk *= r;
    }
  }
  return acc;
}

PolyFn construct_sense_preserving(const Series& f0, const std::vector<Series>& dilatations) {
  if (std::abs(f0[0]) > kTauZero || std::abs(f0[1] - 1.0) > kTauZero)
    throw BadInputError("sense-preserving base must be normalized: f0(0)=0, f0'(0)=1");

  constexpr int kBoundaryGrid = 512;
  for (std::size_t k = 0; k < dilatations.size(); ++k) {
    double worst = 0.0;
    for (int j = 0; j < kBoundaryGrid; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi_v<double> * j / kBoundaryGrid);
      worst = std::max(worst, std::abs(evaluate(dilatations[k], z).value));
    }
    if (worst > 1.0 + kTauSeries)
      throw DilatationExceedsOne("component " + std::to_string(k + 1) + " boundary max " +
                                 std::to_string(worst));
  }

  const int order = f0.order();
  const Series df0 = derivative(f0);
  std::vector<Series> components;
  components.reserve(dilatations.size() + 1);
  components.push_back(f0);
  for (const Series& omega : dilatations) {
    const Series g = omega * df0;  // f_k' before integration
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
    const int hi = std::min(order - 1, g.order());
    for (int n = 0; n <= hi; ++n) c[static_cast<std::size_t>(n + 1)] = g[n] / static_cast<double>(n + 1);
    components.emplace_back(std::move(c));
  }
  return make_polyfn(std::move(components));
}

bool verify_majorant_factorization(const PolyFn& F, int N, int m, double r) {
  if (!(r >= 0.0 && r <= 1.0 / 3.0 + kTauZero)) throw BadRange("factorization check radius");
  const double lhs = majorant_sum(F, N, m, r);
  const Series& f0 = F.components.front();
  const int hi = std::min(m, min_order(F));
  const double base = majorant_partial(f0, N, hi, r);
  const double rhs = base * (1.0 - std::pow(r, F.alpha)) / (1.0 - r);
  return lhs <= rhs + kTauSeries;
}

}  // namespace gft
