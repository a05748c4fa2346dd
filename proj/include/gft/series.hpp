#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "gft/errors.hpp"
#include "gft/rational.hpp"

namespace gft {

using Complex = std::complex<double>;

inline constexpr double kTauZero = 1e-14;    // scalar zero and normalization checks
inline constexpr double kTauSeries = 1e-12;  // series-level coefficient comparisons

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Complex> {
  static bool is_zero(const Complex& x) { return std::abs(x) < kTauZero; }
  static bool is_one(const Complex& x) { return std::abs(x - 1.0) < kTauZero; }
  static bool is_finite(const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  }
  static Complex from_int(long long n) { return {static_cast<double>(n), 0.0}; }
  // Presence of exp_scalar lets exp() handle a non-vanishing constant term.
  static Complex exp_scalar(const Complex& x) { return std::exp(x); }
};

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == Rational(0); }
  static bool is_one(const Rational& x) { return x == Rational(1); }
  static bool is_finite(const Rational&) { return true; }
  static Rational from_int(long long n) { return Rational(n); }
};

// Truncated power series sum_{k=0}^{T} c_k z^k over a coefficient field K.
// Arithmetic never extends the truncation order: every binary op returns
// min(order of operands) and asserts as much in the op itself.  Coefficients
// are validated finite on construction.
template <class K>
class SeriesT {
 public:
  using Traits = FieldTraits<K>;

  SeriesT() : c_(1, K{}) {}
  explicit SeriesT(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, K{});
    for (const K& x : c_)
      if (!Traits::is_finite(x)) throw BadInputError("series coefficient not finite");
  }

  static SeriesT zero(int order) { return SeriesT(std::vector<K>(order + 1, K{})); }
  static SeriesT constant(const K& v, int order) {
    std::vector<K> c(order + 1, K{});
    c[0] = v;
    return SeriesT(std::move(c));
  }
  static SeriesT one(int order) { return constant(Traits::from_int(1), order); }
  // The identity map z as a series.
  static SeriesT identity(int order) { return monomial(1, order); }
  static SeriesT monomial(int degree, int order, const K& v = FieldTraits<K>::from_int(1)) {
    if (degree < 0 || degree > order) throw BadRange("monomial degree vs order");
    std::vector<K> c(order + 1, K{});
    c[degree] = v;
    return SeriesT(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const K& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<K>& coeffs() const { return c_; }

  SeriesT truncated(int new_order) const {
    if (new_order < 0) throw BadRange("negative truncation order");
    std::vector<K> c(new_order + 1, K{});
    for (int k = 0; k <= std::min(new_order, order()); ++k) c[k] = c_[k];
    return SeriesT(std::move(c));
  }

 private:
  std::vector<K> c_;
};

using Series = SeriesT<Complex>;
using RationalSeries = SeriesT<Rational>;

namespace detail {
inline int common_order(int a, int b) { return std::min(a, b); }
}  // namespace detail

template <class K>
SeriesT<K> operator+(const SeriesT<K>& a, const SeriesT<K>& b) {
  const int t = detail::common_order(a.order(), b.order());
  std::vector<K> c(t + 1);
  for (int k = 0; k <= t; ++k) c[k] = a[k] + b[k];
  return SeriesT<K>(std::move(c));
}

template <class K>
SeriesT<K> operator-(const SeriesT<K>& a, const SeriesT<K>& b) {
  const int t = detail::common_order(a.order(), b.order());
  std::vector<K> c(t + 1);
  for (int k = 0; k <= t; ++k) c[k] = a[k] - b[k];
  return SeriesT<K>(std::move(c));
}

template <class K>
SeriesT<K> operator-(const SeriesT<K>& a) {
  std::vector<K> c(a.coeffs());
  for (K& x : c) x = -x;
  return SeriesT<K>(std::move(c));
}

template <class K>
SeriesT<K> operator*(const SeriesT<K>& a, const SeriesT<K>& b) {
  const int t = detail::common_order(a.order(), b.order());
  std::vector<K> c(t + 1, K{});
  for (int i = 0; i <= std::min(t, a.order()); ++i) {
    if (FieldTraits<K>::is_zero(a[i]) && i > 0) continue;
    for (int j = 0; i + j <= t && j <= b.order(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return SeriesT<K>(std::move(c));
}

template <class K>
SeriesT<K> operator*(const K& s, const SeriesT<K>& a) {
  std::vector<K> c(a.coeffs());
  for (K& x : c) x = s * x;
  return SeriesT<K>(std::move(c));
}

// Long division: q_n = (a_n - sum_{k=1..n} b_k q_{n-k}) / b_0.
template <class K>
SeriesT<K> operator/(const SeriesT<K>& a, const SeriesT<K>& b) {
  if (FieldTraits<K>::is_zero(b[0])) throw DivisionByZeroConstantTerm();
  const int t = detail::common_order(a.order(), b.order());
  std::vector<K> q(t + 1, K{});
  for (int n = 0; n <= t; ++n) {
    K acc = a[n];
    for (int k = 1; k <= n && k <= b.order(); ++k) acc = acc - b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return SeriesT<K>(std::move(q));
}

// exp of a series.  With c_0 = 0 this is the plain recurrence
//   g_0 = 1,  g_n = (1/n) sum_{k=1..n} k u_k g_{n-k};
// a non-zero constant term is peeled off as a scalar factor, which is only
// available over fields that can exponentiate scalars (not the rational path).
template <class K>
SeriesT<K> exp(const SeriesT<K>& u) {
  using Traits = FieldTraits<K>;
  K scale = Traits::from_int(1);
  if (!Traits::is_zero(u[0])) {
    if constexpr (requires(K x) { Traits::exp_scalar(x); }) {
      scale = Traits::exp_scalar(u[0]);
    } else {
      throw NotNormalized("exp over exact field requires zero constant term");
    }
  }
  const int t = u.order();
  std::vector<K> g(t + 1, K{});
  g[0] = Traits::from_int(1);
  for (int n = 1; n <= t; ++n) {
    K acc{};
    for (int k = 1; k <= n; ++k) acc = acc + Traits::from_int(k) * u[k] * g[n - k];
    g[n] = acc / Traits::from_int(n);
  }
  SeriesT<K> r{std::move(g)};
  return scale * r;
}

// log of a series with constant term 1:
//   u_n = a_n - (1/n) sum_{k=1..n-1} k u_k a_{n-k}.
template <class K>
SeriesT<K> log(const SeriesT<K>& a) {
  using Traits = FieldTraits<K>;
  if (!Traits::is_one(a[0])) throw NotNormalized("log requires constant term 1");
  const int t = a.order();
  std::vector<K> u(t + 1, K{});
  for (int n = 1; n <= t; ++n) {
    K acc = a[n];
    for (int k = 1; k < n; ++k) acc = acc - (Traits::from_int(k) * u[k] * a[n - k]) / Traits::from_int(n);
    u[n] = acc;
  }
  return SeriesT<K>(std::move(u));
}

template <class K>
SeriesT<K> pow(const SeriesT<K>& a, const K& exponent) {
  return exp(exponent * log(a));
}

inline Series pow(const Series& a, double exponent) { return pow(a, Complex(exponent, 0.0)); }

// outer(inner(z)) truncated at min order; the inner constant term must vanish
// or the truncated composition would not be well defined.
template <class K>
SeriesT<K> compose(const SeriesT<K>& outer, const SeriesT<K>& inner) {
  if (!FieldTraits<K>::is_zero(inner[0])) throw InnerNotVanishing();
  const int t = detail::common_order(outer.order(), inner.order());
  SeriesT<K> in = inner.truncated(t);
  SeriesT<K> r = SeriesT<K>::constant(outer[std::min(outer.order(), t)], t);
  for (int k = std::min(outer.order(), t) - 1; k >= 0; --k)
    r = r * in + SeriesT<K>::constant(outer[k], t);
  return r;
}

// Integral of a(t)/t from 0 to z, the log-potential feeding the exponential
// representation of extremal members.  Demands a_0 = 0.
template <class K>
SeriesT<K> integrate_div_t(const SeriesT<K>& a) {
  if (!FieldTraits<K>::is_zero(a[0])) throw ConstantTermNotZero();
  const int t = a.order();
  std::vector<K> c(t + 1, K{});
  for (int n = 1; n <= t; ++n) c[n] = a[n] / FieldTraits<K>::from_int(n);
  return SeriesT<K>(std::move(c));
}

// Term-wise derivative; order drops by one.
template <class K>
SeriesT<K> derivative(const SeriesT<K>& a) {
  const int t = std::max(a.order() - 1, 0);
  std::vector<K> c(t + 1, K{});
  for (int n = 0; n <= t; ++n)
    if (n + 1 <= a.order()) c[n] = FieldTraits<K>::from_int(n + 1) * a[n + 1];
  return SeriesT<K>(std::move(c));
}

// z d/dz, the order-preserving Euler operator; inverse of integrate_div_t.
template <class K>
SeriesT<K> z_derivative(const SeriesT<K>& a) {
  std::vector<K> c(a.coeffs());
  for (int n = 0; n <= a.order(); ++n) c[n] = FieldTraits<K>::from_int(n) * c[n];
  return SeriesT<K>(std::move(c));
}

// Partial sum S_K: coefficients above degree K zeroed.  S_0 is the zero
// series by convention (the 'empty sum' in the truncated-sum radius
// statements), so the constant term is dropped there as well.
template <class K>
SeriesT<K> partial_sum(const SeriesT<K>& a, int K_) {
  if (K_ < 0 || K_ > a.order()) throw BadRange("partial_sum degree");
  std::vector<K> c(a.coeffs());
  if (K_ == 0) c.assign(c.size(), K{});
  for (int n = K_ + 1; n <= a.order(); ++n) c[n] = K{};
  return SeriesT<K>(std::move(c));
}

struct EvalResult {
  Complex value;
  double tail_bound = 0.0;   // valid only when tail_certified
  bool tail_certified = false;
};

// Horner evaluation with a tail estimate from the root test on a trailing
// coefficient window.  The window-based radius estimate handles series with
// interleaved zero coefficients (odd series etc.) where a naive ratio test
// stalls.  If every trailing coefficient vanishes the series is treated as a
// polynomial with zero tail.
inline EvalResult evaluate(const Series& a, Complex z) {
  const int t = a.order();
  Complex v = a[t];
  for (int k = t - 1; k >= 0; --k) v = v * z + a[k];

  EvalResult res;
  res.value = v;

  const int window = std::min(16, t);
  double rho_hat = 0.0;
  bool any_nonzero = false;
  for (int k = t - window + 1; k <= t; ++k) {
    if (k < 1) continue;
    const double m = std::abs(a[k]);
    if (m < kTauZero) continue;
    any_nonzero = true;
    rho_hat = std::max(rho_hat, std::pow(m, 1.0 / k));
  }
  if (!any_nonzero) {
    res.tail_bound = 0.0;
    res.tail_certified = true;
    return res;
  }
  const double q = rho_hat * std::abs(z);
  if (q < 1.0 - 1e-9) {
    res.tail_bound = std::pow(q, t + 1) / (1.0 - q);
    res.tail_certified = true;
  }
  return res;
}

// Majorant partial sum sum_{n=N}^{m} |c_n| r^n.
inline double majorant_partial(const Series& a, int N, int m, double r) {
  if (N < 0 || N > m || m > a.order()) throw BadRange("majorant_partial indices");
  if (r < 0.0 || r >= 1.0) throw BadRange("majorant_partial radius");
  double acc = 0.0;
  for (int n = m; n >= N; --n) acc = acc * r + std::abs(a[n]);
  return acc * std::pow(r, N);
}

// Series of absolute values; the 'hatted' series of the radius equations.
inline Series abs_series(const Series& a) {
  std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) c[k] = Complex(std::abs(a[k]), 0.0);
  return Series(std::move(c));
}

}  // namespace gft
