#pragma once

#include <stdexcept>
#include <string>

namespace gft {

// Two families, matching the CLI exit-code contract: bad inputs exit 2,
// numeric failures exit 3.
struct BadInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series_core
struct DivisionByZeroConstantTerm final : BadInputError {
  DivisionByZeroConstantTerm() : BadInputError("series division: constant term of divisor is zero") {}
};
struct NotNormalized final : BadInputError {
  explicit NotNormalized(const std::string& what) : BadInputError("series log/pow: " + what) {}
};
struct InnerNotVanishing final : BadInputError {
  InnerNotVanishing() : BadInputError("series compose: inner series has non-zero constant term") {}
};
struct ConstantTermNotZero final : BadInputError {
  ConstantTermNotZero() : BadInputError("integrate_div_t: constant term must vanish") {}
};
struct BadRange final : BadInputError {
  explicit BadRange(const std::string& what) : BadInputError("bad index range: " + what) {}
};

// psi_catalog / radius_solvers
struct ParamOutOfRange final : BadInputError {
  explicit ParamOutOfRange(const std::string& what) : BadInputError("parameter out of range: " + what) {}
};
struct HypothesisUnverified final : BadInputError {
  explicit HypothesisUnverified(const std::string& what) : BadInputError("hypothesis unverified: " + what) {}
};

// extremal_growth
struct InvalidSchwarz final : BadInputError {
  explicit InvalidSchwarz(const std::string& what) : BadInputError("invalid Schwarz series: " + what) {}
};
struct IntegralDivergent final : NumericError {
  explicit IntegralDivergent(const std::string& what) : NumericError("quadrature did not converge: " + what) {}
};

// radius_solvers
struct NoSignChange final : NumericError {
  explicit NoSignChange(const std::string& what) : NumericError("no sign change located: " + what) {}
};
struct TailNotCertified final : NumericError {
  explicit TailNotCertified(const std::string& what) : NumericError("series tail not certified: " + what) {}
};

// coeff_functionals
struct OrderTooLow final : BadInputError {
  explicit OrderTooLow(const std::string& what) : BadInputError("series order too low: " + what) {}
};
struct AmbiguousCase final : NumericError {
  explicit AmbiguousCase(const std::string& what) : NumericError("no theorem case applies: " + what) {}
};

// polyanalytic
struct TooFewComponents final : BadInputError {
  TooFewComponents() : BadInputError("poly-analytic function needs at least 2 components") {}
};
struct DilatationExceedsOne final : BadInputError {
  explicit DilatationExceedsOne(const std::string& what) : BadInputError("dilatation not bounded by 1: " + what) {}
};

}  // namespace gft
