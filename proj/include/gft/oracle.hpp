#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gft/extremal.hpp"
#include "gft/functionals.hpp"
#include "gft/psi.hpp"
#include "gft/series.hpp"

namespace gft {

enum class Membership { inside, outside, indeterminate };

const char* membership_name(Membership m);

// Value-space margin around a boundary curve; winding is ill-conditioned
// closer than this, so verdicts degrade to indeterminate.
inline constexpr double kEpsBoundary = 1e-6;
// A rounded winding count is only accepted when the fractional part of the
// total turn is below this.
inline constexpr double kWindingResidual = 0.05;

struct MembershipVerdict {
  Membership status = Membership::indeterminate;
  int winding = 0;
  double min_boundary_distance = 0.0;
};

struct WindingResult {
  int winding = 0;
  double residual = 0.0;      // |total/2pi - winding|
  double min_distance = 0.0;  // over evaluated curve samples
  bool certified = false;
};

// Total argument change of theta -> curve(theta) - v over one period, on a
// dyadic grid refined until each step turns by at most pi/2.  Uncertified
// when a step cannot settle or the residual stays above kWindingResidual.
WindingResult winding_number(const std::function<Complex(double)>& curve, Complex v);

// Boundary curve psi(rho e^{i theta}) with memoized samples, so repeated
// membership queries against the same circle share evaluations.
class RegionProbe {
 public:
  RegionProbe(const PsiSpec& spec, double rho);

  MembershipVerdict classify(Complex v);
  double rho() const { return rho_; }

 private:
  Complex at(std::uint64_t k);

  PsiSpec spec_;
  double rho_;
  std::unordered_map<std::uint64_t, Complex> memo_;
};

// Winding-number test of v against psi(rho Delta); univalence of psi keeps
// the count in {0, 1}.
MembershipVerdict region_membership(const PsiSpec& spec, Complex v, double rho);

// One verdict record: a sampled point, the value tested against the region,
// and the outcome at the last probe radius tried.
struct OracleRecord {
  Complex where;
  Complex value;
  Membership status = Membership::indeterminate;
  int winding = 0;
  double min_distance = 0.0;
  double rho = 0.0;
};

struct OracleReport {
  int samples_checked = 0;
  std::vector<OracleRecord> violations;
  std::vector<OracleRecord> indeterminates;
  bool clean() const { return violations.empty() && indeterminates.empty(); }
};

// Pointwise necessary condition for membership: z f'/f - 1 lands in
// psi(Delta) at every sample z.  The probe radius escalates through
// {0.9, 0.99, 0.999} until the value certifies as inside; only the last
// rung produces a violation or indeterminate record.
OracleReport check_subordination(const PsiSpec& spec, const MemberFn& f,
                                 const std::vector<double>& radii, int angles);

// First three Schwarz coefficients in body parametrization: c1 = t,
// c2 = (1-t^2) x, c3 = (1-t^2)((1-|x|^2) y - t x^2) with t in [0,1] and
// x, y in the closed unit disk.
struct SchwarzSample {
  Complex c1, c2, c3;
  double t = 0.0;
  Complex x, y;
};

SchwarzSample schwarz_from_params(double t, Complex x, Complex y);

// Uniform (t, x, y) over the body; deterministic for a fixed seed.
SchwarzSample sample_schwarz(std::uint64_t seed);

// Schur continuation of (c1, c2, c3) to a genuine Schwarz function (a
// rational of Blaschke type), expanded to the given order.  Truncating the
// cubic c1 z + c2 z^2 + c3 z^3 would not stay bounded by 1.
Series schwarz_padding(const SchwarzSample& s, int order);

MemberFn member_from_sample(const PsiSpec& spec, const SchwarzSample& s, int order);

struct BruteForceMax {
  double value = 0.0;
  SchwarzSample witness;
};

// Grid over (t, x) with the y phase resolved analytically (every functional
// is affine in c3), then simplex refinement.  Deterministic argmax: ties on
// the grid resolve to the lexicographically smallest index.
BruteForceMax maximize_functional_bruteforce(const PsiSpec& spec, Functional which,
                                             int grid_density, double nu = 0.0);

struct BoothHatTarget {
  double beta = 0.0;
};
struct KappaTarget {
  double eta = 0.0;
};
using SignGridTarget = std::variant<BoothHatTarget, KappaTarget, MemberFn>;

enum class SignPredicate { re_f_over_z_positive };

struct SignGridResult {
  bool holds_everywhere = true;
  std::optional<Complex> counterexample;  // lexicographically smallest (r, theta) index
  double min_value = 0.0;                 // smallest Re(target(z)/z) on the grid
};

// Polar grid r_i = i (1-1e-3)/(resolution-1), theta_j = 2 pi j/resolution.
// booth_fhat and kappa evaluate in closed form; a member target evaluates
// its series.  resolution >= 64.
SignGridResult sign_grid(const SignGridTarget& target, SignPredicate predicate, int resolution);

struct CoveringReport {
  int samples_checked = 0;
  double radius_tested = 0.0;  // koebe radius shrunk by the boundary margin
  std::vector<OracleRecord> violations;
  std::vector<OracleRecord> indeterminates;
  bool clean() const { return violations.empty() && indeterminates.empty(); }
};

// Every w with |w| < koebe(spec) (1-1e-3) must be covered: the winding of
// f(rho e^{i theta}) around w reaches 1 for some rho in {0.9, 0.99, 0.999}.
// Curve accuracy depends on the tail of f at those radii; rungs whose tail
// does not certify below kEpsBoundary are skipped.
CoveringReport covering_check(const PsiSpec& spec, const MemberFn& f, int samples);

}  // namespace gft
