#include "gft/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "gft/errors.hpp"
#include "gft/optimize.hpp"
#include "gft/parallel.hpp"

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Dyadic theta grid: indices live in [0, 2^kMaxBits], the walk starts from
// 2^kBaseBits uniform segments and bisects until each step turns <= pi/2.
constexpr int kBaseBits = 8;
constexpr int kMaxBits = 26;
constexpr std::uint64_t kFull = std::uint64_t{1} << kMaxBits;
constexpr std::size_t kSegmentBudget = std::size_t{1} << 20;

double theta_of(std::uint64_t k) {
  return kTwoPi * (static_cast<double>(k) / static_cast<double>(kFull));
}

WindingResult wind_core(const std::function<Complex(std::uint64_t)>& point_at, Complex v) {
  constexpr double kHalfPi = std::numbers::pi_v<double> / 2.0 + 1e-12;
  constexpr std::uint64_t kStep = kFull >> kBaseBits;
  constexpr int kBase = 1 << kBaseBits;

  WindingResult out;
  out.min_distance = std::numeric_limits<double>::infinity();
  bool ok = true;
  double total = 0.0;

  std::array<Complex, kBase + 1> w;
  for (int i = 0; i < kBase; ++i) {
    w[static_cast<std::size_t>(i)] = point_at(static_cast<std::uint64_t>(i) * kStep) - v;
    out.min_distance = std::min(out.min_distance, std::abs(w[static_cast<std::size_t>(i)]));
  }
  w[kBase] = w[0];

  struct Seg {
    std::uint64_t k0, k1;
    Complex w0, w1;
  };
  std::vector<Seg> stack;
  stack.reserve(2 * kBase);
  for (int i = kBase - 1; i >= 0; --i) {
    stack.push_back({static_cast<std::uint64_t>(i) * kStep, static_cast<std::uint64_t>(i + 1) * kStep,
                     w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)]});
  }

  std::size_t processed = 0;
  while (!stack.empty()) {
    if (++processed > kSegmentBudget) {
      ok = false;
      break;
    }
    Seg s = stack.back();
    stack.pop_back();
    const double m0 = std::abs(s.w0), m1 = std::abs(s.w1);
    if (m0 < 1e-300 || m1 < 1e-300) {
      ok = false;
      continue;
    }
    const double delta = std::arg(s.w1 * std::conj(s.w0));
    if (std::abs(delta) <= kHalfPi) {
      total += delta;
      continue;
    }
    if (s.k1 - s.k0 <= 1) {
      ok = false;
      continue;
    }
    const std::uint64_t mid = s.k0 + (s.k1 - s.k0) / 2;
    const Complex wm = point_at(mid) - v;
    out.min_distance = std::min(out.min_distance, std::abs(wm));
    stack.push_back({mid, s.k1, wm, s.w1});
    stack.push_back({s.k0, mid, s.w0, wm});
  }

  const double turns = total / kTwoPi;
  const long long n = std::llround(turns);
  out.winding = static_cast<int>(n);
  out.residual = std::abs(turns - static_cast<double>(n));
  out.certified = ok && out.residual < kWindingResidual;
  return out;
}

MembershipVerdict verdict_from(const WindingResult& res) {
  MembershipVerdict out;
  out.winding = res.winding;
  out.min_boundary_distance = res.min_distance;
  if (!res.certified || res.min_distance < kEpsBoundary) {
    out.status = Membership::indeterminate;
  } else {
    out.status = res.winding != 0 ? Membership::inside : Membership::outside;
  }
  return out;
}

constexpr std::array<double, 3> kProbeLadder = {0.9, 0.99, 1.0 - 1e-3};

}  // namespace

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::indeterminate: return "indeterminate";
  }
  return "?";
}

WindingResult winding_number(const std::function<Complex(double)>& curve, Complex v) {
  return wind_core([&curve](std::uint64_t k) { return curve(theta_of(k)); }, v);
}

RegionProbe::RegionProbe(const PsiSpec& spec, double rho) : spec_(spec), rho_(rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ParamOutOfRange("probe radius must lie in (0,1)");
}

Complex RegionProbe::at(std::uint64_t k) {
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  const Complex val = spec_.eval(std::polar(rho_, theta_of(k)));
  memo_.emplace(k, val);
  return val;
}

MembershipVerdict RegionProbe::classify(Complex v) {
  return verdict_from(wind_core([this](std::uint64_t k) { return at(k); }, v));
}

MembershipVerdict region_membership(const PsiSpec& spec, Complex v, double rho) {
  RegionProbe probe(spec, rho);
  return probe.classify(v);
}

OracleReport check_subordination(const PsiSpec& spec, const MemberFn& f,
                                 const std::vector<double>& radii, int angles) {
  if (angles < 1) throw ParamOutOfRange("subordination check needs angles >= 1");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw ParamOutOfRange("sample radius must lie in (0,1)");
  }

  std::vector<RegionProbe> probes;
  probes.reserve(kProbeLadder.size());
  for (double rho : kProbeLadder) probes.emplace_back(spec, rho);

  const Series zfp = z_derivative(f.series);
  OracleReport rep;
  for (double r : radii) {
    for (int j = 0; j < angles; ++j) {
      const Complex z = std::polar(r, kTwoPi * j / angles);
      ++rep.samples_checked;
      const Complex fv = evaluate(f.series, z).value;
      if (std::abs(fv) < 1e-300) {
        rep.indeterminates.push_back({z, Complex{}, Membership::indeterminate, 0, 0.0, 0.0});
        continue;
      }
      const Complex w = evaluate(zfp, z).value / fv - 1.0;
      MembershipVerdict last;
      double used = 0.0;
      bool covered = false;
      for (auto& probe : probes) {
        last = probe.classify(w);
        used = probe.rho();
        if (last.status == Membership::inside) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      OracleRecord rec{z, w, last.status, last.winding, last.min_boundary_distance, used};
      (last.status == Membership::outside ? rep.violations : rep.indeterminates).push_back(rec);
    }
  }
  return rep;
}

SchwarzSample schwarz_from_params(double t, Complex x, Complex y) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParamOutOfRange("schwarz body t must lie in [0,1]");
  if (std::abs(x) > 1.0 + 1e-9 || std::abs(y) > 1.0 + 1e-9)
    throw ParamOutOfRange("schwarz body x, y must lie in the closed unit disk");
  if (std::abs(x) > 1.0) x /= std::abs(x);
  if (std::abs(y) > 1.0) y /= std::abs(y);

  SchwarzSample s;
  s.t = t;
  s.x = x;
  s.y = y;
  const double u = 1.0 - t * t;
  s.c1 = t;
  s.c2 = u * x;
  s.c3 = u * ((1.0 - std::norm(x)) * y - t * x * x);
  return s;
}

SchwarzSample sample_schwarz(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto disk = [&u01] {
    for (;;) {
      const double re = 2.0 * u01() - 1.0;
      const double im = 2.0 * u01() - 1.0;
      if (re * re + im * im <= 1.0) return Complex(re, im);
    }
  };
  const double t = u01();
  const Complex x = disk();
  const Complex y = disk();
  return schwarz_from_params(t, x, y);
}

Series schwarz_padding(const SchwarzSample& s, int order) {
  if (order < 3) throw OrderTooLow("schwarz padding needs order >= 3");
  const Complex g0 = s.t;
  const Complex g1 = s.x;
  const Complex g2 = s.y;
  const Series z = Series::identity(order);
  const Series one = Series::one(order);
  // Schur recursion with parameter tail (t, x, y, 0, 0, ...); each level is
  // bounded by 1 on the disk, so the result is a genuine Schwarz function
  // whose first three coefficients are exactly (c1, c2, c3).
  const Series zf2 = Series::monomial(1, order, g2);
  const Series f1 = (Series::constant(g1, order) + zf2) / (one + std::conj(g1) * zf2);
  const Series zf1 = z * f1;
  const Series f0 = (Series::constant(g0, order) + zf1) / (one + std::conj(g0) * zf1);
  return z * f0;
}

MemberFn member_from_sample(const PsiSpec& spec, const SchwarzSample& s, int order) {
  return member_from_schwarz(spec, schwarz_padding(s, order), order);
}

namespace {

Complex functional_of_coeffs(const std::array<double, 3>& A, Functional which, double nu,
                             Complex c1, Complex c2, Complex c3) {
  const double A1 = A[0], A2 = A[1], A3 = A[2];
  const Complex a2 = A1 * c1;
  const Complex a3 = 0.5 * (A1 * c2 + (A2 + A1 * A1) * c1 * c1);
  const Complex a4 = (A1 * c3 + 0.5 * (4.0 * A2 + 3.0 * A1 * A1) * c1 * c2 +
                      0.5 * (2.0 * A3 + 3.0 * A1 * A2 + A1 * A1 * A1) * c1 * c1 * c1) /
                     3.0;
  switch (which) {
    case Functional::a2: return a2;
    case Functional::a3: return a3;
    case Functional::a4: return a4;
    case Functional::fekete: return a3 - nu * a2 * a2;
    case Functional::zalcman: return a2 * a3 - a4;
    case Functional::hankel2: return a2 * a4 - a3 * a3;
  }
  throw BadInputError("unknown functional");
}

struct NodeEval {
  double value = 0.0;
  Complex f0, f1;  // functional = f0 + y f1 over the free phase y
};

NodeEval node_eval(const std::array<double, 3>& A, Functional which, double nu, double t,
                   Complex x) {
  const double u = 1.0 - t * t;
  const Complex c1 = t;
  const Complex c2 = u * x;
  const Complex base = -u * t * x * x;
  const double slope = u * (1.0 - std::norm(x));
  NodeEval out;
  out.f0 = functional_of_coeffs(A, which, nu, c1, c2, base);
  out.f1 = functional_of_coeffs(A, which, nu, c1, c2, base + slope) - out.f0;
  out.value = std::abs(out.f0) + std::abs(out.f1);
  return out;
}

}  // namespace

BruteForceMax maximize_functional_bruteforce(const PsiSpec& spec, Functional which,
                                             int grid_density, double nu) {
  if (grid_density < 2) throw ParamOutOfRange("grid density must be >= 2");
  const std::array<double, 3> A = spec.a123();
  const int nt = grid_density;
  const int nr = std::max(2, grid_density / 2);
  const int nth = 36;

  struct Best {
    double value = -1.0;
    std::size_t idx = 0;
  };
  const std::size_t total = static_cast<std::size_t>(nt) * static_cast<std::size_t>(nr) *
                            static_cast<std::size_t>(nth);
  std::vector<Best> slots(static_cast<std::size_t>(chunk_count(total)));
  parallel_chunks(total, [&](int chunk, std::size_t begin, std::size_t end) {
    Best best;
    for (std::size_t i = begin; i < end; ++i) {
      const int k = static_cast<int>(i % nth);
      const int j = static_cast<int>((i / nth) % nr);
      const int it = static_cast<int>(i / (static_cast<std::size_t>(nth) * nr));
      const double t = static_cast<double>(it) / (nt - 1);
      const double rho = static_cast<double>(j) / (nr - 1);
      const Complex x = std::polar(rho, kTwoPi * k / nth);
      const double v = node_eval(A, which, nu, t, x).value;
      if (v > best.value) {
        best.value = v;
        best.idx = i;
      }
    }
    slots[static_cast<std::size_t>(chunk)] = best;
  });

  Best gbest;
  for (const Best& b : slots) {
    if (b.value > gbest.value) gbest = b;
  }
  const int k0 = static_cast<int>(gbest.idx % nth);
  const int j0 = static_cast<int>((gbest.idx / nth) % nr);
  const int i0 = static_cast<int>(gbest.idx / (static_cast<std::size_t>(nth) * nr));
  double t_best = static_cast<double>(i0) / (nt - 1);
  Complex x_best = std::polar(static_cast<double>(j0) / (nr - 1), kTwoPi * k0 / nth);

  auto project = [](const std::array<double, 3>& p, double& t, Complex& x) {
    t = std::clamp(p[0], 0.0, 1.0);
    x = Complex(p[1], p[2]);
    const double m = std::abs(x);
    if (m > 1.0) x /= m;
  };
  auto objective = [&](const std::array<double, 3>& p) {
    double t;
    Complex x;
    project(p, t, x);
    return -node_eval(A, which, nu, t, x).value;
  };
  const std::array<double, 3> start = {t_best, x_best.real(), x_best.imag()};
  const std::array<double, 3> refined = nelder_mead<3>(objective, start, 0.02, 300);
  double t_ref;
  Complex x_ref;
  project(refined, t_ref, x_ref);
  if (node_eval(A, which, nu, t_ref, x_ref).value > node_eval(A, which, nu, t_best, x_best).value) {
    t_best = t_ref;
    x_best = x_ref;
  }

  const NodeEval fin = node_eval(A, which, nu, t_best, x_best);
  Complex y = 0.0;
  if (std::abs(fin.f1) > 1e-15) {
    y = std::abs(fin.f0) > 1e-15
            ? (fin.f0 / std::abs(fin.f0)) * (std::conj(fin.f1) / std::abs(fin.f1))
            : Complex(1.0);
  }
  BruteForceMax out;
  out.value = fin.value;
  out.witness = schwarz_from_params(t_best, x_best, y);
  return out;
}

SignGridResult sign_grid(const SignGridTarget& target, SignPredicate /*predicate*/,
                         int resolution) {
  if (resolution < 64) throw ParamOutOfRange("sign grid resolution must be >= 64");

  std::function<Complex(Complex)> ratio;  // target(z) / z
  if (const auto* b = std::get_if<BoothHatTarget>(&target)) {
    const double beta = b->beta;
    if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("booth beta must lie in [0,1)");
    if (beta < 1e-12) {
      ratio = [](Complex z) { return std::exp(z); };
    } else {
      const double sb = std::sqrt(beta);
      const double ex = 1.0 / (2.0 * sb);
      ratio = [sb, ex](Complex z) { return std::pow((1.0 + sb * z) / (1.0 - sb * z), ex); };
    }
  } else if (const auto* kp = std::get_if<KappaTarget>(&target)) {
    const double eta = kp->eta;
    if (!(eta >= 0.0 && eta < 1.0)) throw ParamOutOfRange("kappa eta must lie in [0,1)");
    ratio = [eta](Complex z) {
      const Complex d = 1.0 + eta * z;
      return std::exp(z / (d * d));
    };
  } else {
    const MemberFn& f = std::get<MemberFn>(target);
    std::vector<Complex> c(static_cast<std::size_t>(f.series.order()), Complex{});
    for (int k = 1; k <= f.series.order(); ++k) c[static_cast<std::size_t>(k - 1)] = f.series[k];
    Series g(std::move(c));
    ratio = [g = std::move(g)](Complex z) { return evaluate(g, z).value; };
  }

  const double rmax = 1.0 - 1e-3;
  const int n = resolution;
  struct ChunkScan {
    bool found = false;
    std::size_t idx = 0;
    Complex z;
    double min_re = std::numeric_limits<double>::infinity();
  };
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<ChunkScan> scans(static_cast<std::size_t>(chunk_count(total)));
  parallel_chunks(total, [&](int chunk, std::size_t begin, std::size_t end) {
    ChunkScan sc;
    for (std::size_t i = begin; i < end; ++i) {
      const int ir = static_cast<int>(i / static_cast<std::size_t>(n));
      const int jt = static_cast<int>(i % static_cast<std::size_t>(n));
      const double r = rmax * static_cast<double>(ir) / (n - 1);
      const Complex z = std::polar(r, kTwoPi * jt / n);
      const double re = ratio(z).real();
      sc.min_re = std::min(sc.min_re, re);
      if (!sc.found && re <= 0.0) {
        sc.found = true;
        sc.idx = i;
        sc.z = z;
      }
    }
    scans[static_cast<std::size_t>(chunk)] = sc;
  });

  SignGridResult out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (const ChunkScan& sc : scans) {
    out.min_value = std::min(out.min_value, sc.min_re);
    if (sc.found && out.holds_everywhere) {
      out.holds_everywhere = false;
      out.counterexample = sc.z;
    }
  }
  return out;
}

CoveringReport covering_check(const PsiSpec& spec, const MemberFn& f, int samples) {
  if (samples < 1) throw ParamOutOfRange("covering check needs samples >= 1");

  CoveringReport rep;
  rep.radius_tested = koebe_radius(spec) * (1.0 - 1e-3);

  struct Rung {
    double rho = 0.0;
    std::unordered_map<std::uint64_t, Complex> memo;
    bool usable = true;
  };
  std::array<Rung, 3> rungs{Rung{kProbeLadder[0]}, Rung{kProbeLadder[1]}, Rung{kProbeLadder[2]}};
  auto point_at = [&f](Rung& rg, std::uint64_t k) {
    auto it = rg.memo.find(k);
    if (it != rg.memo.end()) return it->second;
    const EvalResult ev = evaluate(f.series, std::polar(rg.rho, theta_of(k)));
    if (!ev.tail_certified || ev.tail_bound > kEpsBoundary) rg.usable = false;
    rg.memo.emplace(k, ev.value);
    return ev.value;
  };

  const double golden = 0.6180339887498949;
  for (int k = 0; k < samples; ++k) {
    const double r = k == 0 ? 0.0 : rep.radius_tested * std::sqrt(static_cast<double>(k) / samples);
    const Complex w = std::polar(r, kTwoPi * std::fmod(golden * k, 1.0));
    ++rep.samples_checked;

    bool covered = false;
    bool any_usable = false;
    WindingResult last;
    double used = 0.0;
    for (Rung& rg : rungs) {
      const WindingResult res =
          wind_core([&](std::uint64_t kk) { return point_at(rg, kk); }, w);
      if (!rg.usable) continue;
      any_usable = true;
      last = res;
      used = rg.rho;
      if (res.certified && res.winding >= 1) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    OracleRecord rec{w, w, Membership::indeterminate, last.winding, last.min_distance, used};
    if (any_usable && last.certified && last.winding == 0) {
      rec.status = Membership::outside;
      rep.violations.push_back(rec);
    } else {
      rep.indeterminates.push_back(rec);
    }
  }
  return rep;
}

}  // namespace gft
