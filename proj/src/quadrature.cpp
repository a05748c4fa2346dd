#include "gft/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gft/errors.hpp"

namespace gft {
namespace {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n with the Chebyshev-like initial guess;
// standard construction, good to machine precision for the sizes used here.
Rule make_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

double apply(const Rule& rule, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  static const Rule gl32 = make_rule(32);
  static const Rule gl64 = make_rule(64);

  struct Panel {
    double a, b, tol;
    int depth;
  };
  std::vector<Panel> stack{{a, b, tol, 0}};
  double total = 0.0;
  int panels = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    if (++panels > 100000 || p.depth > 48)
      throw IntegralDivergent("panel budget exhausted");
    const double coarse = apply(gl32, f, p.a, p.b);
    const double fine = apply(gl64, f, p.a, p.b);
    if (std::abs(fine - coarse) <= p.tol || (p.b - p.a) < 1e-14) {
      total += fine;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({p.a, mid, 0.5 * p.tol, p.depth + 1});
    stack.push_back({mid, p.b, 0.5 * p.tol, p.depth + 1});
  }
  return total;
}

}  // namespace gft
