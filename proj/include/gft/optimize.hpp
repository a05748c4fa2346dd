#pragma once

#include <array>
#include <functional>
#include <vector>

namespace gft {

// Nelder-Mead minimizer on R^n; box handling is the caller's job (clamp or
// penalize inside fn).  Deterministic for fixed inputs.
template <int N>
std::array<double, N> nelder_mead(const std::function<double(const std::array<double, N>&)>& fn,
                                  std::array<double, N> start, double step, int iters) {
  constexpr int M = N + 1;
  std::array<std::array<double, N>, M> pts;
  std::array<double, M> val;
  pts[0] = start;
  for (int i = 1; i < M; ++i) {
    pts[i] = start;
    pts[i][i - 1] += step;
  }
  for (int i = 0; i < M; ++i) val[i] = fn(pts[i]);

  auto order = [&] {
    for (int i = 1; i < M; ++i)
      for (int j = i; j > 0 && val[j] < val[j - 1]; --j) {
        std::swap(val[j], val[j - 1]);
        std::swap(pts[j], pts[j - 1]);
      }
  };
  order();

  for (int it = 0; it < iters; ++it) {
    std::array<double, N> centroid{};
    for (int i = 0; i < M - 1; ++i)
      for (int d = 0; d < N; ++d) centroid[d] += pts[i][d] / (M - 1);

    auto blend = [&](double c) {
      std::array<double, N> p;
      for (int d = 0; d < N; ++d) p[d] = centroid[d] + c * (centroid[d] - pts[M - 1][d]);
      return p;
    };

    auto refl = blend(1.0);
    double fr = fn(refl);
    if (fr < val[0]) {
      auto exp_p = blend(2.0);
      double fe = fn(exp_p);
      if (fe < fr) {
        pts[M - 1] = exp_p;
        val[M - 1] = fe;
      } else {
        pts[M - 1] = refl;
        val[M - 1] = fr;
      }
    } else if (fr < val[M - 2]) {
      pts[M - 1] = refl;
      val[M - 1] = fr;
    } else {
      auto con = blend(fr < val[M - 1] ? 0.5 : -0.5);
      double fc = fn(con);
      if (fc < std::min(fr, val[M - 1])) {
        pts[M - 1] = con;
        val[M - 1] = fc;
      } else {
        for (int i = 1; i < M; ++i) {
          for (int d = 0; d < N; ++d) pts[i][d] = 0.5 * (pts[i][d] + pts[0][d]);
          val[i] = fn(pts[i]);
        }
      }
    }
    order();
  }
  return pts[0];
}

}  // namespace gft
