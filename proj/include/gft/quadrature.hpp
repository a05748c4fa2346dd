#pragma once

#include <functional>

namespace gft {

// Adaptive Gauss-Legendre integration of a real integrand on [a, b].
// Each panel is estimated with 32- and 64-point rules; panels disagreeing by
// more than the local tolerance split until the budget runs out, at which
// point IntegralDivergent is thrown.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}  // namespace gft
