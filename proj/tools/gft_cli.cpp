#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gft/errors.hpp"
#include "gft/extremal.hpp"
#include "gft/functionals.hpp"
#include "gft/json_io.hpp"
#include "gft/oracle.hpp"
#include "gft/polyanalytic.hpp"
#include "gft/psi.hpp"
#include "gft/radius.hpp"

using nlohmann::json;
using namespace gft;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json cnum(Complex z) { return json::array({z.real(), z.imag()}); }

// Everything a command might consume; flags stay unset unless given, so a
// --config file can fill the gaps and explicit flags win.
struct Params {
  std::optional<std::string> psi, equation, suite, target, part, m, format, output;
  std::optional<double> beta, eta, gamma, D, E, M, nu, r;
  std::optional<int> alpha, N, order, resolution, seed, samples;
};

json g_config;  // parsed --config file, or empty object

template <class T>
std::optional<T> cfg_get(const char* key) {
  if (!g_config.contains(key)) return std::nullopt;
  try {
    return g_config.at(key).get<T>();
  } catch (const json::exception&) {
    throw BadInputError(std::string("config: bad value for \"") + key + "\"");
  }
}

template <class T>
T pick(const std::optional<T>& flag, const char* key, T fallback) {
  if (flag) return *flag;
  if (auto c = cfg_get<T>(key)) return *c;
  return fallback;
}

template <class T>
T require(const std::optional<T>& flag, const char* key) {
  if (flag) return *flag;
  if (auto c = cfg_get<T>(key)) return *c;
  throw BadInputError(std::string("missing required parameter: ") + key);
}

PsiSpec resolve_psi(const Params& p) {
  std::optional<std::string> fam = p.psi;
  if (!fam && g_config.contains("psi")) {
    const json& pj = g_config.at("psi");
    if (pj.is_object()) {
      json merged = pj;  // flags override config parameters
      if (p.beta) merged["beta"] = *p.beta;
      if (p.eta) merged["eta"] = *p.eta;
      if (p.gamma) merged["gamma"] = *p.gamma;
      if (p.D) merged["D"] = *p.D;
      if (p.E) merged["E"] = *p.E;
      return psi_from_json(merged);
    }
    fam = pj.get<std::string>();
  }
  if (!fam) throw BadInputError("missing required parameter: psi");
  auto family = family_from_name(*fam);
  if (!family) throw BadInputError("unknown psi family: " + *fam);
  switch (*family) {
    case PsiFamily::identity: return PsiSpec::identity();
    case PsiFamily::booth: return PsiSpec::booth(require(p.beta, "beta"));
    case PsiFamily::cissoid: return PsiSpec::cissoid(require(p.beta, "beta"));
    case PsiFamily::s_gamma:
      return PsiSpec::s_gamma(require(p.gamma, "gamma"), require(p.eta, "eta"));
    case PsiFamily::janowski: return PsiSpec::janowski(require(p.D, "D"), require(p.E, "E"));
    case PsiFamily::concave: return PsiSpec::concave(require(p.beta, "beta"));
  }
  throw BadInputError("unknown psi family");
}

MCount resolve_m(const Params& p, int fallback_finite, bool fallback_infinite) {
  std::string s = pick<std::string>(p.m, "m", fallback_infinite ? "inf" : std::to_string(fallback_finite));
  if (s == "inf" || s == "infinity") return MCount::infinite();
  try {
    return MCount::finite(std::stoi(s));
  } catch (const std::exception&) {
    throw BadInputError("m must be a positive integer or \"inf\", got: " + s);
  }
}

void emit(const Params& p, const std::string& text) {
  const std::string path = pick<std::string>(p.output, "output", "");
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInputError("cannot open output file: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

// ---- radius ----

int cmd_radius(const Params& p) {
  const std::string eq = require(p.equation, "equation");
  bool known = false;
  for (auto name : radius_equation_names()) known = known || eq == name;
  if (!known) throw BadInputError("unknown equation: " + eq);

  RadiusResult rr;
  std::optional<double> landau_r1;
  std::string params;
  auto add = [&params](const std::string& kv) {
    if (!params.empty()) params += ";";
    params += kv;
  };

  if (eq == "bohr") {
    PsiSpec spec = resolve_psi(p).with_checked_convexity();
    add("psi=" + spec.describe());
    rr = bohr_radius(spec);
  } else if (eq == "bohr-rogosinski") {
    PsiSpec spec = resolve_psi(p).with_checked_convexity();
    const int N = pick(p.N, "N", 1);
    const MCount m = resolve_m(p, 1, false);
    add("psi=" + spec.describe());
    add("N=" + std::to_string(N));
    add("m=" + std::string(m.is_infinite() ? "inf" : std::to_string(m.value())));
    rr = bohr_rogosinski_radius(spec, m, N);
  } else if (eq == "booth-br") {
    const double beta = require(p.beta, "beta");
    const int N = pick(p.N, "N", 1);
    const MCount m = resolve_m(p, 1, false);
    add("beta=" + fmt(beta));
    add("N=" + std::to_string(N));
    add("m=" + std::string(m.is_infinite() ? "inf" : std::to_string(m.value())));
    rr = booth_br_radius(beta, m, N);
  } else if (eq == "landau") {
    const int alpha = pick(p.alpha, "alpha", 2);
    const double M = require(p.M, "M");
    add("alpha=" + std::to_string(alpha));
    add("M=" + fmt(M));
    LandauResult lr = landau_radius(alpha, M);
    rr.radius = lr.rho1;
    rr.root = lr.rho1;
    rr.clamped_at_third = false;
    rr.residual = lr.residual;
    rr.bracket_lo = lr.bracket_lo;
    rr.bracket_hi = lr.bracket_hi;
    landau_r1 = lr.R1;
  } else {
    PolyParams pp;
    pp.alpha = pick(p.alpha, "alpha", 2);
    pp.N = pick(p.N, "N", 1);
    pp.m = resolve_m(p, 0, true);
    add("alpha=" + std::to_string(pp.alpha));
    PolyEquation which;
    if (eq == "poly-generic") {
      which = PolyEquation::generic;
      const std::string part = pick<std::string>(p.part, "part", "extremal");
      if (part == "extremal") pp.part = GenericPart::extremal;
      else if (part == "starlike") pp.part = GenericPart::starlike;
      else if (part == "convex") pp.part = GenericPart::convex;
      else throw BadInputError("part must be extremal, starlike, or convex");
      PsiSpec spec = resolve_psi(p);
      if (pp.part == GenericPart::extremal) spec = spec.with_checked_convexity();
      pp.psi = spec;
      add("psi=" + spec.describe());
      add("part=" + part);
    } else if (eq == "poly-convex") {
      which = PolyEquation::convex_part;
    } else if (eq == "poly-starlike") {
      which = PolyEquation::starlike_part;
    } else if (eq == "poly-janowski") {
      which = PolyEquation::janowski;
      pp.D = require(p.D, "D");
      pp.E = require(p.E, "E");
      add("D=" + fmt(pp.D));
      add("E=" + fmt(pp.E));
    } else if (eq == "poly-rogosinski-convex") {
      which = PolyEquation::rogosinski_convex;
    } else if (eq == "poly-n1-convex") {
      which = PolyEquation::n1_convex;
    } else if (eq == "poly-n1-starlike") {
      which = PolyEquation::n1_starlike;
    } else if (eq == "poly-concave") {
      which = PolyEquation::concave;
      pp.beta = require(p.beta, "beta");
      add("beta=" + fmt(pp.beta));
    } else {
      which = PolyEquation::ff1;
    }
    const bool uses_window = eq == "poly-generic" || eq == "poly-convex" || eq == "poly-starlike" ||
                             eq == "poly-janowski" || eq == "poly-concave" || eq == "poly-ff1";
    if (uses_window) {
      add("N=" + std::to_string(pp.N));
      if (eq != "poly-ff1")
        add("m=" + std::string(pp.m.is_infinite() ? "inf" : std::to_string(pp.m.value())));
    }
    rr = polyanalytic_radius(which, pp);
  }

  const std::string format = pick<std::string>(p.format, "format", "csv");
  std::string out;
  if (format == "json") {
    json row{{"equation", eq},          {"params", params},
             {"radius", rr.radius},     {"clamped_at_third", rr.clamped_at_third},
             {"residual", rr.residual}, {"bracket_lo", rr.bracket_lo},
             {"bracket_hi", rr.bracket_hi}};
    if (landau_r1) row["R1"] = *landau_r1;
    out = row.dump() + "\n";
  } else if (format == "csv") {
    out = "equation,params,radius,clamped_at_third,residual,bracket_lo,bracket_hi,R1\n";
    out += eq + "," + params + "," + fmt(rr.radius) + "," + (rr.clamped_at_third ? "true" : "false") +
           "," + fmt(rr.residual) + "," + fmt(rr.bracket_lo) + "," + fmt(rr.bracket_hi) + "," +
           (landau_r1 ? fmt(*landau_r1) : "") + "\n";
  } else {
    throw BadInputError("format must be csv or json");
  }
  emit(p, out);
  return 0;
}

// ---- bounds ----

int cmd_bounds(const Params& p) {
  PsiSpec spec = resolve_psi(p);
  InitialBounds ib = initial_bounds(spec);
  std::vector<double> nu_grid;
  if (auto nu = p.nu ? p.nu : cfg_get<double>("nu")) {
    nu_grid.push_back(*nu);
  } else {
    nu_grid = {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  }

  struct Row {
    std::string functional, nu, branch, witness;
    double value;
    std::optional<double> mprime, cross;
  };
  std::vector<Row> rows;
  rows.push_back({"a2", "", ib.b2.branch, ib.b2.witness, ib.b2.value, {}, {}});
  rows.push_back({"a3", "", ib.b3.branch, ib.b3.witness, ib.b3.value, {}, {}});
  rows.push_back({"a4", "", ib.b4.branch, ib.b4.witness, ib.b4.value, {}, {}});
  for (double nu : nu_grid) {
    FunctionalBound fb = fekete_szego_bound(spec, nu);
    rows.push_back({"fekete", fmt(nu), fb.branch, fb.witness, fb.value, {}, {}});
  }
  FunctionalBound zb = zalcman_bound(spec);
  rows.push_back({"zalcman", "", zb.branch, zb.witness, zb.value, {}, {}});
  FunctionalBound hb = hankel2_bound(spec);
  rows.push_back({"hankel2", "", hb.branch, hb.witness, hb.value, hb.mprime, hb.cross_check});

  const std::string format = pick<std::string>(p.format, "format", "csv");
  std::string out;
  if (format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      json j{{"functional", r.functional}, {"value", r.value}, {"branch", r.branch},
             {"witness", r.witness},       {"psi", spec.describe()}};
      if (!r.nu.empty()) j["nu"] = std::stod(r.nu);
      if (r.mprime) j["mprime"] = *r.mprime;
      if (r.cross) j["cross_check"] = *r.cross;
      arr.push_back(std::move(j));
    }
    out = arr.dump() + "\n";
  } else if (format == "csv") {
    out = "psi,functional,nu,value,branch,witness,mprime,cross_check\n";
    for (const Row& r : rows) {
      out += spec.describe() + "," + r.functional + "," + r.nu + "," + fmt(r.value) + "," + r.branch +
             "," + r.witness + "," + (r.mprime ? fmt(*r.mprime) : "") + "," +
             (r.cross ? fmt(*r.cross) : "") + "\n";
    }
  } else {
    throw BadInputError("format must be csv or json");
  }
  emit(p, out);
  return 0;
}

// ---- grid ----

int cmd_grid(const Params& p) {
  const std::string target = require(p.target, "target");
  std::function<Complex(Complex)> ratio;
  if (target == "booth_fhat") {
    const double beta = require(p.beta, "beta");
    if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("booth beta must lie in [0,1)");
    if (beta < 1e-12) {
      ratio = [](Complex z) { return std::exp(z); };
    } else {
      const double sb = std::sqrt(beta), ex = 1.0 / (2.0 * sb);
      ratio = [sb, ex](Complex z) { return std::pow((1.0 + sb * z) / (1.0 - sb * z), ex); };
    }
  } else if (target == "kappa") {
    const double eta = require(p.eta, "eta");
    if (!(eta >= 0.0 && eta < 1.0)) throw ParamOutOfRange("kappa eta must lie in [0,1)");
    ratio = [eta](Complex z) {
      const Complex d = 1.0 + eta * z;
      return std::exp(z / (d * d));
    };
  } else if (target == "extremal") {
    PsiSpec spec = resolve_psi(p);
    MemberFn f = extremal_function(spec, pick(p.order, "order", 64));
    std::vector<Complex> c(static_cast<std::size_t>(f.series.order()), Complex{});
    for (int k = 1; k <= f.series.order(); ++k) c[static_cast<std::size_t>(k - 1)] = f.series[k];
    Series g(std::move(c));
    ratio = [g = std::move(g)](Complex z) { return evaluate(g, z).value; };
  } else {
    throw BadInputError("target must be booth_fhat, kappa, or extremal");
  }

  const int res = pick(p.resolution, "resolution", 256);
  if (res < 1) throw BadInputError("resolution must be >= 1");
  const double rmax = 1.0 - 1e-3;
  std::string out = "x,y,re,im\n";
  for (int i = 0; i < res; ++i) {
    const double r = rmax * static_cast<double>(i) / std::max(res - 1, 1);
    for (int j = 0; j < res; ++j) {
      const double th = 2.0 * 3.14159265358979323846 * j / res;
      const Complex z = std::polar(r, th);
      const Complex v = ratio(z);
      out += fmt(z.real()) + "," + fmt(z.imag()) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
    }
  }
  emit(p, out);
  return 0;
}

// ---- extremal ----

int cmd_extremal(const Params& p) {
  PsiSpec spec = resolve_psi(p);
  const int order = pick(p.order, "order", 10);
  MemberFn f = extremal_function(spec, order);
  const std::string format = pick<std::string>(p.format, "format", "csv");
  std::string out;
  if (format == "json") {
    json arr = json::array();
    for (int n = 1; n <= order; ++n) arr.push_back(cnum(f.series[n]));
    out = json{{"psi", spec.describe()}, {"koebe", koebe_radius(spec)}, {"coefficients", arr}}.dump() +
          "\n";
  } else if (format == "csv") {
    out = "n,re,im\n";
    for (int n = 1; n <= order; ++n)
      out += std::to_string(n) + "," + fmt(f.series[n].real()) + "," + fmt(f.series[n].imag()) + "\n";
  } else {
    throw BadInputError("format must be csv or json");
  }
  emit(p, out);
  return 0;
}

// ---- verify ----

struct SuiteOutcome {
  int checked = 0;
  int violations = 0;
  int indeterminates = 0;
  std::string lines;
  void record(const json& j) { lines += j.dump() + "\n"; }
};

void record_report(SuiteOutcome& so, const std::string& member, const OracleReport& rep) {
  so.checked += rep.samples_checked;
  so.violations += static_cast<int>(rep.violations.size());
  so.indeterminates += static_cast<int>(rep.indeterminates.size());
  for (const OracleRecord& r : rep.violations)
    so.record(json{{"member", member}, {"z", cnum(r.where)}, {"value", cnum(r.value)},
                   {"verdict", membership_name(r.status)}, {"rho", r.rho}});
  for (const OracleRecord& r : rep.indeterminates)
    so.record(json{{"member", member}, {"z", cnum(r.where)}, {"value", cnum(r.value)},
                   {"verdict", membership_name(r.status)}, {"rho", r.rho}});
}

int cmd_verify(const Params& p) {
  const std::string suite = require(p.suite, "suite");
  const int samples = pick(p.samples, "samples", 20);
  const int seed = pick(p.seed, "seed", 1);
  const int order = pick(p.order, "order", 128);
  SuiteOutcome so;

  if (suite == "subordination") {
    PsiSpec spec = resolve_psi(p);
    const int angles = pick(p.resolution, "resolution", 64);
    const std::vector<double> radii{0.3, 0.6, 0.9};
    record_report(so, "extremal", check_subordination(spec, extremal_function(spec, order), radii, angles));
    for (int i = 0; i < samples; ++i) {
      SchwarzSample s = sample_schwarz(static_cast<std::uint64_t>(seed) + i);
      MemberFn f = member_from_sample(spec, s, order);
      record_report(so, "seed:" + std::to_string(seed + i), check_subordination(spec, f, radii, angles));
    }
  } else if (suite == "growth") {
    PsiSpec spec = resolve_psi(p);
    const int angles = pick(p.resolution, "resolution", 64);
    const std::vector<double> radii{0.2, 0.5, 0.8};
    std::vector<std::pair<std::string, MemberFn>> members;
    members.emplace_back("extremal", extremal_function(spec, order));
    for (int i = 0; i < samples; ++i) {
      SchwarzSample s = sample_schwarz(static_cast<std::uint64_t>(seed) + i);
      members.emplace_back("seed:" + std::to_string(seed + i), member_from_sample(spec, s, order));
    }
    for (const auto& [name, f] : members) {
      for (double r : radii) {
        GrowthBounds gb = growth_bounds(spec, r);
        const double tol = 1e-9 * (1.0 + gb.upper);
        for (int j = 0; j < angles; ++j) {
          const Complex z = std::polar(r, 2.0 * 3.14159265358979323846 * j / angles);
          const double mod = std::abs(evaluate(f.series, z).value);
          ++so.checked;
          if (mod < gb.lower - tol || mod > gb.upper + tol) {
            ++so.violations;
            so.record(json{{"member", name}, {"z", cnum(z)}, {"value", mod},
                           {"verdict", mod < gb.lower ? "below_lower" : "above_upper"},
                           {"lower", gb.lower}, {"upper", gb.upper}});
          }
        }
      }
    }
  } else if (suite == "functional-dominance") {
    PsiSpec spec = resolve_psi(p);
    struct Case {
      Functional which;
      double nu;
      double bound;
      std::string label;
    };
    std::vector<Case> cases;
    InitialBounds ib = initial_bounds(spec);
    cases.push_back({Functional::a2, 0.0, ib.b2.value, "a2"});
    cases.push_back({Functional::a3, 0.0, ib.b3.value, "a3"});
    cases.push_back({Functional::a4, 0.0, ib.b4.value, "a4"});
    for (double nu : {-1.0, 0.0, 0.5, 1.0, 2.0})
      cases.push_back({Functional::fekete, nu, fekete_szego_bound(spec, nu).value,
                       "fekete(nu=" + fmt(nu) + ")"});
    cases.push_back({Functional::zalcman, 0.0, zalcman_bound(spec).value, "zalcman"});
    cases.push_back({Functional::hankel2, 0.0, hankel2_bound(spec).value, "hankel2"});
    for (int i = 0; i < samples; ++i) {
      SchwarzSample s = sample_schwarz(static_cast<std::uint64_t>(seed) + i);
      MemberFn f = member_from_sample(spec, s, 8);
      for (const Case& c : cases) {
        const double v = evaluate_functional(f, c.which, c.nu);
        ++so.checked;
        if (v > c.bound + 1e-8) {
          ++so.violations;
          so.record(json{{"functional", c.label}, {"seed", seed + i}, {"value", v},
                         {"bound", c.bound}, {"verdict", "violation"}});
        }
      }
    }
  } else if (suite == "majorant-factorization") {
    PsiSpec spec = resolve_psi(p);
    const Series f0 = extremal_function(spec, 16).series;
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int trial = 0; trial < samples; ++trial) {
      const int alpha = 2 + static_cast<int>(u() * 3);
      std::vector<Series> oms;
      for (int k = 1; k < alpha; ++k) {
        std::vector<Complex> c(9, Complex{});
        double l1 = 0.0;
        for (auto& v : c) {
          v = Complex(2.0 * u() - 1.0, 2.0 * u() - 1.0);
          l1 += std::abs(v);
        }
        for (auto& v : c) v /= (l1 + 1e-12);
        oms.emplace_back(std::move(c));
      }
      PolyFn F = construct_sense_preserving(f0, oms);
      for (double r : {0.1, 0.2, 1.0 / 3.0}) {
        ++so.checked;
        if (!verify_majorant_factorization(F, 1, 16, r)) {
          ++so.violations;
          so.record(json{{"trial", trial}, {"alpha", alpha}, {"r", r}, {"verdict", "violation"},
                         {"lhs", majorant_sum(F, 1, 16, r)},
                         {"rhs", majorant_partial(f0, 1, 16, r) * (1.0 - std::pow(r, alpha)) / (1.0 - r)}});
        }
      }
    }
  } else if (suite == "hankel-oracle") {
    PsiSpec spec = resolve_psi(p);
    FunctionalBound hb = hankel2_bound(spec);
    BruteForceMax bf =
        maximize_functional_bruteforce(spec, Functional::hankel2, pick(p.resolution, "resolution", 120));
    ++so.checked;
    const bool bad = bf.value > hb.value + 1e-8;
    if (bad) ++so.violations;
    so.record(json{{"closed", hb.value}, {"oracle", bf.value}, {"branch", hb.branch},
                   {"gap", hb.value - bf.value}, {"witness_t", bf.witness.t},
                   {"witness_x", cnum(bf.witness.x)}, {"witness_y", cnum(bf.witness.y)},
                   {"verdict", bad ? "violation" : "dominated"}});
  } else {
    throw BadInputError("unknown suite: " + suite +
                        " (use subordination, growth, functional-dominance, majorant-factorization, "
                        "or hankel-oracle)");
  }

  so.record(json{{"suite", suite}, {"checked", so.checked}, {"violations", so.violations},
                 {"indeterminates", so.indeterminates}, {"ok", so.violations == 0}});
  emit(p, so.lines);
  return so.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radius, coefficient-bound, and verification toolkit for the subordination class"};
  app.require_subcommand(0, 1);

  Params p;
  std::string config_path;
  auto wire = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file; explicit flags override its values");
    cmd->add_option("--psi", p.psi, "generator family: identity, booth, cissoid, s_gamma, janowski, concave");
    cmd->add_option("--beta", p.beta, "booth/cissoid/concave parameter");
    cmd->add_option("--eta", p.eta, "s_gamma / kappa parameter");
    cmd->add_option("--gamma", p.gamma, "s_gamma scale");
    cmd->add_option("--D", p.D, "janowski D");
    cmd->add_option("--E", p.E, "janowski E");
    cmd->add_option("--equation", p.equation, "radius equation name");
    cmd->add_option("--alpha", p.alpha, "poly-analytic order / landau branch count");
    cmd->add_option("--N", p.N, "truncation start index");
    cmd->add_option("--m", p.m, "window end: positive integer or inf");
    cmd->add_option("--M", p.M, "landau bound M > 1");
    cmd->add_option("--nu", p.nu, "fekete-szego weight");
    cmd->add_option("--part", p.part, "poly-generic part: extremal, starlike, convex");
    cmd->add_option("--target", p.target, "grid target: booth_fhat, kappa, extremal");
    cmd->add_option("--suite", p.suite,
                    "verify suite: subordination, growth, functional-dominance, "
                    "majorant-factorization, hankel-oracle");
    cmd->add_option("--order", p.order, "series truncation order");
    cmd->add_option("--resolution", p.resolution, "grid resolution / angle count");
    cmd->add_option("--seed", p.seed, "base RNG seed");
    cmd->add_option("--samples", p.samples, "number of random members or constructions");
    cmd->add_option("--r", p.r, "evaluation radius");
    cmd->add_option("--output", p.output, "output file (default stdout)");
    cmd->add_option("--format", p.format, "csv or json");
  };
  wire(&app);
  CLI::App* c_radius = app.add_subcommand("radius", "solve a radius equation");
  CLI::App* c_extremal = app.add_subcommand("extremal", "coefficients of the extremal function");
  CLI::App* c_bounds = app.add_subcommand("bounds", "coefficient-functional bound table");
  CLI::App* c_verify = app.add_subcommand("verify", "run an invariant suite");
  CLI::App* c_grid = app.add_subcommand("grid", "polar grid of target(z)/z as CSV");
  for (CLI::App* c : {c_radius, c_extremal, c_bounds, c_verify, c_grid}) wire(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw BadInputError("cannot open config file: " + config_path);
      try {
        in >> g_config;
      } catch (const json::exception& e) {
        throw BadInputError(std::string("config parse error: ") + e.what());
      }
      if (!g_config.is_object()) throw BadInputError("config must be a JSON object");
    } else {
      g_config = json::object();
    }

    std::string command;
    if (c_radius->parsed()) command = "radius";
    else if (c_extremal->parsed()) command = "extremal";
    else if (c_bounds->parsed()) command = "bounds";
    else if (c_verify->parsed()) command = "verify";
    else if (c_grid->parsed()) command = "grid";
    else if (auto c = cfg_get<std::string>("command")) command = *c;
    else throw BadInputError("no command given (radius, extremal, bounds, verify, grid)");

    if (command == "radius") return cmd_radius(p);
    if (command == "extremal") return cmd_extremal(p);
    if (command == "bounds") return cmd_bounds(p);
    if (command == "verify") return cmd_verify(p);
    if (command == "grid") return cmd_grid(p);
    throw BadInputError("unknown command: " + command);
  } catch (const BadInputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
