#include "gft/radius.hpp"

#include <cmath>
#include <string>

#include "gft/errors.hpp"

namespace gft {
namespace {

constexpr double kTailTol = 1e-10;
constexpr double kSeriesHi = 0.99;   // scan ceiling for series-backed equations
constexpr double kPolyHi = 1.0 - 1e-6;
constexpr double kLo = 1e-9;

PsiSpec require_convex(const PsiSpec& spec) {
  switch (spec.convex_image()) {
    case Tri::yes: return spec;
    case Tri::no:
      throw HypothesisUnverified(spec.describe() + " does not have a convex image");
    case Tri::unknown:
      throw HypothesisUnverified("convex image of " + spec.describe() +
                                 " unknown; run psi_convexity_check first");
  }
  throw BadInputError("bad tri state");
}

// Hatted extremal series with the tail at r_hi certified below kTailTol;
// doubles the truncation order until the estimate converges.
Series certified_hat(const std::function<Series(int)>& gen, double r_hi, int min_order,
                     int& order_used) {
  int start = 64;
  while (start < min_order) start *= 2;
  for (int t = start; t <= 4096; t *= 2) {
    Series hat = abs_series(gen(t));
    const EvalResult e = evaluate(hat, Complex(r_hi, 0.0));
    if (e.tail_certified && e.tail_bound < kTailTol) {
      order_used = t;
      return hat;
    }
  }
  throw TailNotCertified("hatted series tail at r=" + std::to_string(r_hi));
}

double hat_partial(const Series& hat, int N, MCount m, double r) {
  const int hi = m.is_infinite() ? hat.order() : std::min(m.value(), hat.order());
  if (N > hi) return 0.0;
  return majorant_partial(hat, N, hi, r);
}

double hat_eval(const Series& hat, double r) { return evaluate(hat, Complex(r, 0.0)).value.real(); }

RadiusResult clamp_third(RadiusResult r) {
  if (r.root > 1.0 / 3.0) {
    r.clamped_at_third = true;
    r.radius = 1.0 / 3.0;
  }
  return r;
}

Series janowski_hat(double D, double E, int t) {
  std::vector<Complex> c(static_cast<std::size_t>(t) + 1, Complex{});
  if (t >= 1) c[1] = 1.0;
  double prod = 1.0;
  for (int n = 2; n <= t; ++n) {
    prod *= std::abs(E - D + E * (n - 2)) / (n - 1);
    c[n] = prod;
  }
  return Series(std::move(c));
}

}  // namespace

MCount MCount::finite(int m) {
  if (m < 1) throw ParamOutOfRange("truncation count m must be >= 1");
  return MCount(m);
}

int MCount::value() const {
  if (is_infinite()) throw BadInputError("m is infinite");
  return m_;
}

RadiusResult solve_bracketed(const std::function<double(double)>& G, double lo, double hi,
                             int scan_points) {
  if (!(lo < hi)) throw BadRange("solver bracket");
  double prev_x = lo, prev_v = G(lo);
  double a = 0.0, b = 0.0;
  bool found = false;
  for (int i = 1; i <= scan_points; ++i) {
    const double x = lo + (hi - lo) * i / scan_points;
    const double v = G(x);
    if (prev_v == 0.0) {
      a = b = prev_x;
      found = true;
      break;
    }
    if ((prev_v < 0.0 && v >= 0.0) || (prev_v > 0.0 && v <= 0.0)) {
      a = prev_x;
      b = x;
      found = true;
      break;
    }
    prev_x = x;
    prev_v = v;
  }
  if (!found)
    throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  RadiusResult res;
  res.bracket_lo = a;
  res.bracket_hi = b;
  double fa = G(a);
  double x = a;
  int iters = 0;
  if (a != b) {
    double left = a, right = b;
    while (right - left > 1e-13 && iters < 100) {
      const double mid = 0.5 * (left + right);
      const double fm = G(mid);
      ++iters;
      if (fm == 0.0) {
        left = right = mid;
        break;
      }
      if ((fa < 0.0) == (fm < 0.0)) {
        left = mid;
        fa = fm;
      } else {
        right = mid;
      }
    }
    x = 0.5 * (left + right);
  }
  res.root = x;
  res.radius = x;
  res.residual = std::abs(G(x));
  res.iterations = iters;
  return res;
}

RadiusResult bohr_radius(const PsiSpec& spec) {
  const PsiSpec s = require_convex(spec);
  const double kr = koebe_radius(s);
  int order = 0;
  const Series hat = certified_hat(
      [&](int t) { return extremal_function(s, t).series; }, kSeriesHi, 0, order);
  RadiusResult res = solve_bracketed([&](double r) { return hat_eval(hat, r) - kr; }, kLo, kSeriesHi);
  res.truncation_order = order;
  return clamp_third(res);
}

RadiusResult bohr_rogosinski_radius(const PsiSpec& spec, MCount m, int N) {
  if (N < 1) throw ParamOutOfRange("N must be >= 1");
  const PsiSpec s = require_convex(spec);
  const double kr = koebe_radius(s);
  int order = 0;
  const Series hat = certified_hat(
      [&](int t) { return extremal_function(s, t).series; }, kSeriesHi, N + 8, order);
  const auto G = [&](double r) {
    double v = -kr;
    if (!m.is_infinite()) v += hat_eval(hat, std::pow(r, m.value()));
    v += hat_partial(hat, N, MCount::infinite(), r);
    return v;
  };
  RadiusResult res = solve_bracketed(G, kLo, kSeriesHi);
  res.truncation_order = order;
  return clamp_third(res);
}

RadiusResult bohr_rogosinski_radius_weighted(const PsiSpec& spec, MCount m, const WeightFn& nu,
                                             int truncation_order) {
  if (truncation_order < 1) throw ParamOutOfRange("weighted truncation order must be >= 1");
  const PsiSpec s = require_convex(spec);
  const double kr = koebe_radius(s);
  int order = 0;
  const Series hat = certified_hat([&](int t) { return extremal_function(s, t).series; },
                                   kSeriesHi, truncation_order + 8, order);
  const auto G = [&](double r) {
    double v = -kr;
    if (!m.is_infinite()) v += hat_eval(hat, std::pow(r, m.value()));
    for (int n = 1; n <= truncation_order; ++n) v += std::abs(hat[n]) * nu(n, r);
    return v;
  };
  RadiusResult res = solve_bracketed(G, kLo, kSeriesHi);
  res.truncation_order = order;
  return clamp_third(res);
}

RadiusResult booth_br_radius(double beta, MCount m, int N) {
  const double limit = 3.0 - 2.0 * std::sqrt(2.0);
  if (!(beta > 0.0 && beta <= limit + 1e-12))
    throw ParamOutOfRange("booth partial-sum radius needs 0 < beta <= 3-2sqrt(2)");
  if (N < 1) throw ParamOutOfRange("N must be >= 1");
  const double sq = std::sqrt(beta);
  const double kr = std::pow((1.0 - sq) / (1.0 + sq), 1.0 / (2.0 * sq));
  const PsiSpec s = PsiSpec::booth(beta);
  int order = 0;
  const Series hat = certified_hat(
      [&](int t) { return extremal_function(s, t).series; }, kSeriesHi, N + 8, order);
  const Series head = partial_sum(hat, N - 1);
  const auto G = [&](double r) {
    double v = hat_eval(hat, r) - hat_eval(head, r) - kr;
    if (!m.is_infinite()) v += hat_eval(hat, std::pow(r, m.value()));
    return v;
  };
  RadiusResult res = solve_bracketed(G, kLo, kSeriesHi);
  res.truncation_order = order;
  return clamp_third(res);
}

RadiusResult polyanalytic_radius(PolyEquation eq, const PolyParams& p) {
  if (p.alpha < 2) throw ParamOutOfRange("alpha must be >= 2");
  if (p.N < 1) throw ParamOutOfRange("N must be >= 1");
  if (!p.m.is_infinite() && p.m.value() < p.N) throw ParamOutOfRange("m must be >= N");
  const double alpha = p.alpha;

  switch (eq) {
    case PolyEquation::generic: {
      if (!p.psi) throw ParamOutOfRange("generic equation needs a psi spec");
      PsiSpec s = *p.psi;
      if (p.part == GenericPart::extremal) s = require_convex(s);
      int order = 0;
      const int min_order = p.m.is_infinite() ? 0 : p.m.value() + 8;
      const Series hat = certified_hat(
          [&](int t) {
            Series f = extremal_function(s, t).series;
            if (p.part == GenericPart::convex) {
              // Alexander transform: coefficients a_n / n.
              std::vector<Complex> c(f.coeffs());
              for (int n = 1; n <= f.order(); ++n) c[n] /= static_cast<double>(n);
              f = Series(std::move(c));
            }
            return f;
          },
          kSeriesHi, min_order, order);
      RadiusResult res = solve_bracketed(
          [&](double r) {
            return hat_partial(hat, p.N, p.m, r) * (1.0 - std::pow(r, alpha)) + r - 1.0;
          },
          kLo, kSeriesHi);
      res.truncation_order = order;
      return clamp_third(res);
    }
    case PolyEquation::convex_part: {
      const auto G = [&](double r) {
        const double rm = p.m.is_infinite() ? 0.0 : std::pow(r, p.m.value());
        return (r / (1.0 - r)) * (std::pow(r, p.N) - rm) * (1.0 - std::pow(r, alpha)) + r - 1.0;
      };
      return clamp_third(solve_bracketed(G, kLo, kPolyHi));
    }
    case PolyEquation::starlike_part: {
      const auto G = [&](double r) {
        const double rN = std::pow(r, p.N);
        double bracket = (p.N - 1) * rN;
        if (p.m.is_infinite()) {
          bracket += rN / (r * (1.0 - r));
        } else {
          const double rm = std::pow(r, p.m.value());
          bracket += (rN - rm) / (r * (1.0 - r)) - (p.m.value() - 1) * rm;
        }
        return (r / (1.0 - r)) * bracket * (1.0 - std::pow(r, alpha)) + r - 1.0;
      };
      return clamp_third(solve_bracketed(G, kLo, kPolyHi));
    }
    case PolyEquation::janowski: {
      if (!(p.E >= -1.0 && p.E < p.D && p.D <= 1.0))
        throw ParamOutOfRange("janowski needs -1 <= E < D <= 1");
      int order = 0;
      const int min_order = p.m.is_infinite() ? 0 : p.m.value() + 8;
      const Series hat =
          certified_hat([&](int t) { return janowski_hat(p.D, p.E, t); }, kSeriesHi, min_order, order);
      RadiusResult res = solve_bracketed(
          [&](double r) {
            return hat_partial(hat, p.N, p.m, r) * (1.0 - std::pow(r, alpha)) + r - 1.0;
          },
          kLo, kSeriesHi);
      res.truncation_order = order;
      return res;  // reported unclamped
    }
    case PolyEquation::rogosinski_convex: {
      const auto G = [&](double r) {
        return r * (1.0 - std::pow(r, alpha)) - (1.0 - r) * (1.0 - r);
      };
      return solve_bracketed(G, kLo, kPolyHi);  // root exceeds 1/3; reported as-is
    }
    case PolyEquation::n1_convex: {
      const auto G = [&](double r) {
        return (1.0 - r) * (1.0 - r) - r * r + std::pow(r, alpha + 2.0);
      };
      return clamp_third(solve_bracketed(G, kLo, kPolyHi));
    }
    case PolyEquation::n1_starlike: {
      const auto G = [&](double r) {
        const double u = 1.0 - r;
        return u * u * u - r + std::pow(r, alpha + 1.0);
      };
      return clamp_third(solve_bracketed(G, kLo, kPolyHi));
    }
    case PolyEquation::concave: {
      if (!(p.beta >= 1.0 && p.beta <= 2.0)) throw ParamOutOfRange("concave beta must lie in [1,2]");
      const PsiSpec s = PsiSpec::concave(p.beta);
      int order = 0;
      const int min_order = p.m.is_infinite() ? 0 : p.m.value() + 8;
      const Series hat =
          certified_hat([&](int t) { return s.taylor(t); }, kSeriesHi, min_order, order);
      RadiusResult res = solve_bracketed(
          [&](double r) {
            return (1.0 - std::pow(r, alpha)) * hat_partial(hat, p.N, p.m, r) + r - 1.0;
          },
          kLo, kSeriesHi);
      res.truncation_order = order;
      return res;  // reported unclamped
    }
    case PolyEquation::ff1: {
      const auto G = [&](double r) {
        return (1.0 - std::pow(r, alpha)) * (r + std::pow(r, p.N)) - (1.0 - r) * (1.0 - r);
      };
      return clamp_third(solve_bracketed(G, kLo, kPolyHi));
    }
  }
  throw BadInputError("unknown polyanalytic equation");
}

LandauResult landau_radius(int alpha, double M) {
  if (alpha < 2) throw ParamOutOfRange("alpha must be >= 2");
  if (!(M > 1.0)) throw ParamOutOfRange("bound M must be > 1");
  const auto G = [&](double rho) {
    double acc = rho * (2.0 - rho) / ((1.0 - rho) * (1.0 - rho));
    for (int k = 1; k <= alpha - 1; ++k) {
      const double d = 1.0 - k * rho;
      acc += std::pow(rho, k) * (1.0 + k + k * rho) / (d * d);
    }
    return 1.0 - M * acc;
  };
  const double hi = 1.0 / (alpha - 1) - 1e-9;
  const RadiusResult root = solve_bracketed(G, 1e-12, hi);

  const double rho1 = root.root;
  double tail = 0.0;
  for (int k = 0; k <= alpha - 1; ++k) tail += std::pow(rho1, k + 2) / (1.0 - rho1);
  const double R1 =
      rho1 - rho1 * rho1 * (1.0 - std::pow(rho1, alpha - 1)) / (1.0 - rho1) - M * tail;
  return LandauResult{rho1, R1, root.residual, root.bracket_lo, root.bracket_hi, root.iterations};
}

const std::array<std::string_view, 13>& radius_equation_names() {
  static const std::array<std::string_view, 13> names = {
      "bohr",         "bohr-rogosinski",        "booth-br",        "poly-generic",
      "poly-convex",  "poly-starlike",          "poly-janowski",   "poly-rogosinski-convex",
      "poly-n1-convex", "poly-n1-starlike",     "poly-concave",    "poly-ff1",
      "landau"};
  return names;
}

}  // namespace gft
