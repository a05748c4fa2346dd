#pragma once

#include <array>
#include <optional>
#include <string>

#include "gft/extremal.hpp"
#include "gft/psi.hpp"

namespace gft {

enum class ProkhorovMode { closed_form, oracle };

// Sharp maximum of |c3 + q1 c1 c2 + q2 c1^3| over Schwarz functions.
// closed_form evaluates the piecewise solution over the (q1,q2) plane;
// oracle maximizes over the coefficient body directly (grid + refinement).
double prokhorov_h(double q1, double q2, ProkhorovMode mode = ProkhorovMode::closed_form);

struct FunctionalBound {
  double value = 0.0;
  std::string branch;             // which case of the statement fired
  std::string witness;            // extremal description, e.g. "omega(z)=z^2"
  std::array<double, 3> inputs{}; // (A1, A2, A3) as used, after normalization
  double mprime = 0.0;            // hankel2 case discriminant |A1^4-4A1A3+3A2^2+6A1^2A2|
  std::optional<double> cross_check;  // hankel2: independent max of the quartic profile
  bool cross_check_agrees = true;     // false when the two sides differ by > 2%
};

struct InitialBounds {
  FunctionalBound b2, b3, b4;
};

InitialBounds initial_bounds(const PsiSpec& spec, ProkhorovMode mode = ProkhorovMode::closed_form);

// |a3 - nu a2^2| for real nu; three branches with continuity at both knees.
FunctionalBound fekete_szego_bound(const PsiSpec& spec, double nu);

// |a2 a3 - a4| via the same Schwarz-cubic maximum.
FunctionalBound zalcman_bound(const PsiSpec& spec, ProkhorovMode mode = ProkhorovMode::closed_form);

// |a2 a4 - a3^2| with three parameter cases; the quartic-profile maximum is
// recomputed numerically as a cross-check and both values are reported when
// they disagree beyond 2%.
FunctionalBound hankel2_bound(const PsiSpec& spec);

enum class Functional { a2, a3, a4, fekete, zalcman, hankel2 };

std::string_view functional_name(Functional f);
Functional functional_from_name(std::string_view name);

// Signed (complex) value of the functional on a member's series.
Complex functional_expression(const Series& s, Functional which, double nu = 0.0);

// Absolute value of the functional; series must carry order >= 4.
double evaluate_functional(const MemberFn& f, Functional which, double nu = 0.0);

}  // namespace gft
