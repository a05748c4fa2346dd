#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "gft/extremal.hpp"
#include "gft/psi.hpp"

namespace gft {

// Truncation count for the hatted partial sums B_N^m.  The full-series limit
// is an explicit state, not a large sentinel integer.
class MCount {
 public:
  static MCount infinite() { return MCount(-1); }
  static MCount finite(int m);
  bool is_infinite() const { return m_ < 0; }
  int value() const;

 private:
  explicit MCount(int m) : m_(m) {}
  int m_ = -1;
};

struct RadiusResult {
  double radius = 0.0;   // reported radius, after min{1/3, r0} where the statement clamps
  double root = 0.0;     // smallest positive root of the equation
  bool clamped_at_third = false;
  double bracket_lo = 0.0;  // scan bracket certifying the sign change
  double bracket_hi = 0.0;
  double residual = 0.0;    // |G(root)|
  int iterations = 0;
  int truncation_order = 0;  // certified series truncation (0 when equation is closed-form)
};

// Scans [lo, hi] on a uniform grid for the first sign change (which also
// certifies minimality of the root against the grid), then bisects.
RadiusResult solve_bracketed(const std::function<double(double)>& G, double lo, double hi,
                             int scan_points = 10000);

// Power-majorant radius: smallest r with hat f_psi(r) = koebe radius,
// reported as min{1/3, r0}.  Needs the convex-image certificate.
RadiusResult bohr_radius(const PsiSpec& spec);

// hat f_psi(r^m) + sum_{n=N}^infty |a_n| r^n = koebe radius; m infinite drops
// the first term.  Clamped at 1/3.
RadiusResult bohr_rogosinski_radius(const PsiSpec& spec, MCount m, int N);

// Same equation with caller-supplied weights nu_n(r) replacing r^n; the
// caller owns the truncation order for the weighted sum.
using WeightFn = std::function<double(int n, double r)>;
RadiusResult bohr_rogosinski_radius_weighted(const PsiSpec& spec, MCount m, const WeightFn& nu,
                                             int truncation_order);

// Booth variant with the closed-form koebe radius and partial-sum window:
// hat f(r^m) - S_{N-1}(hat f)(r) + hat f(r) = r*.  Valid for 0 < beta <= 3-2sqrt(2).
RadiusResult booth_br_radius(double beta, MCount m, int N);

enum class PolyEquation {
  generic,            // L(r)(1 - r^alpha) + r - 1 = 0
  convex_part,        // (r/(1-r)) (r^N - r^m) (1-r^alpha) + r - 1 = 0
  starlike_part,      // (r/(1-r)) [ (r^N-r^m)/(r(1-r)) - (m-1) r^m + (N-1) r^N ] (1-r^alpha) + r - 1 = 0
  janowski,           // B_N^m(hat f_j)(1-r^alpha) + r - 1 = 0            (unclamped)
  rogosinski_convex,  // r (1-r^alpha) - (1-r)^2 = 0                      (unclamped)
  n1_convex,          // (1-r)^2 - r^2 + r^{alpha+2} = 0
  n1_starlike,        // (1-r)^3 - r + r^{alpha+1} = 0
  concave,            // (1-r^alpha) B_N^m(hat f_beta) + r - 1 = 0        (unclamped)
  ff1,                // (1-r^alpha)(r + r^N) - (1-r)^2 = 0
};

// Which majorant feeds the generic equation's L(r): the class extremal (used
// by both the subordination-class and starlike statements) or its Alexander
// transform (convex statement).
enum class GenericPart { extremal, starlike, convex };

struct PolyParams {
  int alpha = 2;
  int N = 1;
  MCount m = MCount::infinite();
  std::optional<PsiSpec> psi;  // generic
  GenericPart part = GenericPart::extremal;
  double beta = 1.0;           // concave
  double D = 1.0, E = -1.0;    // janowski
};

RadiusResult polyanalytic_radius(PolyEquation eq, const PolyParams& p);

struct LandauResult {
  double rho1 = 0.0;
  double R1 = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

// Landau-type schlicht disk for bounded poly-analytic functions: rho1 solves
// 1 = M (rho(2-rho)/(1-rho)^2 + sum_{k=1}^{alpha-1} rho^k (1+k+k rho)/(1-k rho)^2)
// on (0, 1/(alpha-1)), and R1 is the covered-disk radius at rho1.
LandauResult landau_radius(int alpha, double M);

// Stable equation names accepted by the CLI's radius command.
const std::array<std::string_view, 13>& radius_equation_names();

}  // namespace gft
