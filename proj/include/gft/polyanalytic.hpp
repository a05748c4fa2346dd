#pragma once

#include <vector>

#include "gft/series.hpp"

namespace gft {

// F(z) = sum_{k=0}^{alpha-1} conj(z)^k f_k(z).  The coefficient grid a_{n,k}
// is read column-per-component from the series; majorant sums truncate at
// the smallest component order.
struct PolyFn {
  int alpha = 0;
  std::vector<Series> components;
  std::vector<bool> vanishes_at_zero;  // f_k(0) = 0, required by the Bohr theorems
};

// alpha = number of components; at least 2.
PolyFn make_polyfn(std::vector<Series> components);

Complex eval_polyfn(const PolyFn& F, Complex z);

// sum_{n=N}^{m} sum_{k<alpha} |a_{n,k}| r^{k+n}, with m capped at the
// smallest component order.  N >= 1, N <= m, 0 <= r < 1.
double majorant_sum(const PolyFn& F, int N, int m, double r);

// Components f_k with f_k' = omega_k f_0' and f_k(0) = 0; each dilatation
// must stay bounded by 1 on a 512-point boundary grid (polynomials, so the
// grid max is an honest proxy for the disk sup).
PolyFn construct_sense_preserving(const Series& f0, const std::vector<Series>& dilatations);

// B_N^m(F, r) <= B_N^m(f_0, r) (1 - r^alpha)/(1 - r), valid for the
// sense-preserving construction at r <= 1/3.
bool verify_majorant_factorization(const PolyFn& F, int N, int m, double r);

}  // namespace gft
