#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/series.hpp"

namespace gft {

enum class PsiFamily { identity, booth, cissoid, s_gamma, janowski, concave };

// Three-valued capability flag: declared facts stay declared, everything
// else starts unknown until a numeric certificate upgrades it.
enum class Tri { yes, no, unknown };

const char* family_name(PsiFamily f);
std::optional<PsiFamily> family_from_name(std::string_view name);
const char* tri_name(Tri t);

// Generator of the subordination class: psi analytic on the unit disk with
// psi(0) = 0, psi'(0) != 0, univalent, image starlike with respect to 0.
// Members f satisfy z f'(z)/f(z) - 1 = psi(omega(z)) for a Schwarz omega and
// need not be univalent themselves.  Specs are immutable values; the
// with_* helpers return updated copies.
class PsiSpec {
 public:
  static PsiSpec identity();
  static PsiSpec booth(double beta);      // z / (1 - beta z^2),      0 <= beta < 1
  static PsiSpec cissoid(double beta);    // z / ((1-z)(1+beta z)),   0 <= beta < 1
  static PsiSpec s_gamma(double gamma, double eta);  // gamma z / (1+eta z)^2, gamma > 0, 0 <= eta < 1
  static PsiSpec janowski(double D, double E);       // (D-E) z / (1+E z),  -1 <= E < D <= 1
  static PsiSpec concave(double beta);    // (((1+z)/(1-z))^beta - 1) / (2 beta), 1 <= beta <= 2

  PsiFamily family() const { return family_; }
  double beta() const { return p1_; }     // booth / cissoid / concave
  double gamma() const { return p1_; }    // s_gamma
  double eta() const { return p2_; }      // s_gamma
  double jan_d() const { return p1_; }    // janowski
  double jan_e() const { return p2_; }    // janowski

  Complex eval(Complex z) const;
  Complex psi_over_z(Complex z) const;           // removable singularity at 0
  Complex convexity_kernel(Complex z) const;     // 1 + z psi''/psi'
  std::array<double, 3> a123() const;            // A1, A2, A3
  double a1() const { return a123()[0]; }

  Series taylor(int order) const;

  Tri convex_image() const { return convex_image_; }
  Tri axis_extrema() const { return axis_extrema_; }
  PsiSpec with_convex_image(Tri t) const;
  PsiSpec with_axis_extrema(Tri t) const;
  PsiSpec with_checked_convexity(int grid = 720) const;
  PsiSpec with_checked_axis_extrema(int grid = 720) const;

  // e.g. "booth(beta=0.5)"; used for CSV parameter columns and messages.
  std::string describe() const;

 private:
  PsiSpec(PsiFamily f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}

  PsiFamily family_;
  double p1_ = 0.0;
  double p2_ = 0.0;
  Tri convex_image_ = Tri::unknown;
  Tri axis_extrema_ = Tri::unknown;
};

// Taylor kernel shared by the floating and exact test paths.  params carries
// the family parameters in declaration order (booth/cissoid/concave: beta;
// s_gamma: gamma, eta; janowski: D, E).
template <class K>
SeriesT<K> psi_taylor_series(PsiFamily family, const std::vector<K>& params, int order);

struct CircleExtrema {
  double min_re = 0.0;
  double max_re = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  bool attained_at_axis = false;
};

// Extrema of Re psi on |z| = r from a theta grid plus golden-section
// refinement.  attained_at_axis compares against psi(r) and psi(-r).
CircleExtrema psi_real_extrema_on_circle(const PsiSpec& spec, double r, int grid = 720);

// Samples Re(1 + z psi''/psi') on circles approaching the boundary; margins
// below 1e-6 in absolute value are inconclusive and stay unknown.
Tri psi_convexity_check(const PsiSpec& spec, int grid = 720);

template <class K>
SeriesT<K> psi_taylor_series(PsiFamily family, const std::vector<K>& params, int order) {
  using S = SeriesT<K>;
  const K one = FieldTraits<K>::from_int(1);
  const K two = FieldTraits<K>::from_int(2);
  switch (family) {
    case PsiFamily::identity:
      return S::identity(order);
    case PsiFamily::booth: {
      const K& b = params.at(0);
      S den = S::one(order) - S::monomial(2, order, b);
      return S::identity(order) / den;
    }
    case PsiFamily::cissoid: {
      const K& b = params.at(0);
      S den = (S::one(order) - S::identity(order)) * (S::one(order) + S::monomial(1, order, b));
      return S::identity(order) / den;
    }
    case PsiFamily::s_gamma: {
      const K& g = params.at(0);
      const K& e = params.at(1);
      S lin = S::one(order) + S::monomial(1, order, e);
      return (g * S::identity(order)) / (lin * lin);
    }
    case PsiFamily::janowski: {
      const K d = params.at(0);
      const K e = params.at(1);
      S den = S::one(order) + S::monomial(1, order, e);
      return ((d - e) * S::identity(order)) / den;
    }
    case PsiFamily::concave: {
      const K& b = params.at(0);
      // artanh z = z + z^3/3 + z^5/5 + ...
      std::vector<K> at(static_cast<std::size_t>(order) + 1, K{});
      for (int k = 1; k <= order; k += 2) at[k] = one / FieldTraits<K>::from_int(k);
      S w = exp((two * b) * S(std::move(at)));
      return (one / (two * b)) * (w - S::one(order));
    }
  }
  throw BadInputError("unknown psi family");
}

}  // namespace gft
