// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hconv/bounds.hpp"
#include "hconv/cli.hpp"
#include "hconv/closed_form.hpp"
#include "hconv/corpus.hpp"
#include "hconv/errors.hpp"
#include "hconv/means.hpp"
#include "hconv/moments.hpp"
#include "hconv/oracle.hpp"
#include "hconv/quadrature.hpp"
#include "hconv/random.hpp"

using namespace hconv;

namespace {

// Pinned tolerances.
constexpr double kIdentityTol = 1e-9;
constexpr double kMomentTol = 1e-12;
constexpr Tolerance kReferenceQuad{1e-13, 1e-13};
constexpr double kSoundSlack = 1e-9;
constexpr double kReductionRel = 1e-12;
constexpr double kCollapseAbs = 1e-14;
constexpr double kCrossCheckRel = 1e-12;
constexpr double kDominanceRel = 1e-12;

constexpr int kIdentityCases = 200;
constexpr int kGrid = 101;
constexpr int kSoundTuples = 10000;
constexpr int kHadamardCases = 500;
constexpr int kPropositionTuples = 10000;
constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double rel(double x, double y) {
  return std::abs(x - y) / std::max({1e-300, std::abs(x), std::abs(y)});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------- 1

Verdict kernel_identity() {
  Rng rng(kSeed);
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < kIdentityCases; ++i) {
    const corpus::SmoothCase c = corpus::random_smooth(rng);
    const double alpha = uniform01(rng);
    const double lambda = uniform01(rng);
    const IdentitySides s =
        lemma_identity_sides(c.f, c.f_prime, c.a, c.b, RuleParams::make(alpha, lambda, 1.0));
    worst = std::max(worst, s.residual);
    failures += !(s.residual <= kIdentityTol);
  }
  return {failures == 0, std::to_string(kIdentityCases) + " cases, max residual " + fmt(worst)};
}

// ---------------------------------------------------------------- 2

double reference(const RealFn& g, double lo, double hi, double kink) {
  if (!(hi > lo)) return 0.0;
  const double cut[] = {kink};
  return integrate_split(g, lo, hi, cut, kReferenceQuad).value;
}

Verdict moment_tables() {
  const std::array<double, 3> s_samples = {0.1, 0.5, 1.0};
  const std::array<double, 3> p_samples = {1.5, 2.0, 4.0};
  double worst = 0.0;
  long checks = 0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double alpha = i / double(kGrid - 1);
      const double lambda = j / double(kGrid - 1);
      const RuleParams rp = RuleParams::make(alpha, lambda, 1.0);
      const double al = rp.left_node();
      const double om = rp.split();
      const double c = rp.right_node();
      const CaseBranch br = branch_select(rp);
      const auto left = [al](double t) { return std::abs(t - al); };
      const auto right = [c](double t) { return std::abs(t - c); };
      const auto note = [&](double got, double want) {
        worst = std::max(worst, std::abs(got - want));
        ++checks;
      };

      const GammaCoeffs g = gamma_coeffs(rp);
      const UpsilonCoeffs u = upsilon_coeffs(rp);
      note(br == CaseBranch::LeftOfLower ? g.gamma1 : g.gamma2, reference(left, 0.0, om, al));
      note(br == CaseBranch::RightOfUpper ? u.upsilon1 : u.upsilon2,
           reference(right, om, 1.0, c));

      for (double s : s_samples) {
        const StarCoeffs st = mu_eta_star(rp, s);
        std::array<double, 4> w{};
        switch (br) {
          case CaseBranch::MidOrder:
            w = {st.mu[0], st.mu[1], st.eta[2], st.eta[3]};
            break;
          case CaseBranch::RightOfUpper:
            w = {st.mu[0], st.mu[1], st.eta[0], st.eta[1]};
            break;
          case CaseBranch::LeftOfLower:
            w = {st.mu[2], st.mu[3], st.eta[2], st.eta[3]};
            break;
        }
        note(w[0], reference([&](double t) { return left(t) * std::pow(t, s); }, 0.0, om, al));
        note(w[1], reference([&](double t) { return left(t) * std::pow(1.0 - t, s); }, 0.0, om,
                             al));
        note(w[2], reference([&](double t) { return right(t) * std::pow(t, s); }, om, 1.0, c));
        note(w[3], reference([&](double t) { return right(t) * std::pow(1.0 - t, s); }, om, 1.0,
                             c));
      }

      for (double p : p_samples) {
        const EpsilonCoeffs e = epsilon_coeffs(RuleParams::make(alpha, lambda, p / (p - 1.0), p));
        const double eps_left = br == CaseBranch::LeftOfLower ? e.eps2 : e.eps1;
        const double eps_right = br == CaseBranch::RightOfUpper ? e.eps4 : e.eps3;
        note(eps_left,
             (p + 1.0) * reference([&](double t) { return std::pow(left(t), p); }, 0.0, om, al));
        note(eps_right, (p + 1.0) * reference([&](double t) { return std::pow(right(t), p); }, om,
                                              1.0, c));
      }
    }
  }
  return {worst <= kMomentTol,
          std::to_string(checks) + " moments, max abs deviation " + fmt(worst)};
}

// ---------------------------------------------------------------- 3

Verdict soundness() {
  using corpus::WitnessClass;
  const std::array<WitnessClass, 5> classes = {WitnessClass::Convex, WitnessClass::SConvex,
                                               WitnessClass::PFunction, WitnessClass::Concave,
                                               WitnessClass::ConcaveSquared};
  Rng rng(kSeed + 3);
  int evaluations = 0;
  int violations = 0;
  int uncertified = 0;
  double worst = -1e300;  // largest lhs - rhs seen
  for (int i = 0; i < kSoundTuples; ++i) {
    const WitnessClass cls = classes[static_cast<std::size_t>(i) % classes.size()];
    const double q = uniform(rng, 1.05, 3.0);
    const double s = uniform(rng, 0.05, 1.0);
    const double alpha = uniform01(rng);
    const double lambda = uniform01(rng);
    const TestFunction tf = corpus::random_witness(rng, cls, q, s);
    if (!certify_membership(tf, 500).holds) {
      ++uncertified;
      continue;
    }
    const RuleParams rp = RuleParams::conjugate(alpha, lambda, q);
    const double lhs = lhs_error(tf, rp);
    const auto judge = [&](double rhs) {
      ++evaluations;
      worst = std::max(worst, lhs - rhs);
      violations += !(lhs <= rhs + kSoundSlack);
    };
    if (tf.certificate().convexity == Convexity::HConvex) {
      judge(bound_power_mean(tf, RuleParams::make(alpha, lambda, q)).value);
      judge(bound_holder_hconvex(tf, rp).value);
    } else {
      judge(bound_holder_hconcave(tf, rp).value);
    }
  }
  return {violations == 0 && uncertified == 0,
          std::to_string(kSoundTuples) + " tuples, " + std::to_string(evaluations) +
              " bound evaluations, " + std::to_string(violations) + " violations, " +
              std::to_string(uncertified) + " uncertified, max lhs-rhs " + fmt(worst)};
}

// ---------------------------------------------------------------- 4

Verdict reductions() {
  double identity_path = 0.0;
  double simpson_pm = 0.0;
  double simpson_holder = 0.0;
  double collapse = 0.0;
  Rng rng(kSeed + 4);
  const std::array<double, 4> qs = {1.0, 1.5, 2.0, 4.0};
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double alpha = i / 40.0;
      const double lambda = j / 40.0;
      const StarCoeffs a = mu_eta_star(RuleParams::make(alpha, lambda, 1.0), 1.0);
      const StarCoeffs b = convex_mu_eta(RuleParams::make(alpha, lambda, 1.0));
      for (int k = 0; k < 4; ++k) {
        collapse = std::max({collapse, std::abs(a.mu[k] - b.mu[k]), std::abs(a.eta[k] - b.eta[k])});
      }
      for (double q : qs) {
        const double lo = uniform(rng, -1.0, 1.0);
        const TestFunction tf = TestFunction::create(
            [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, lo,
            lo + uniform(rng, 0.1, 2.0),
            ClassCertificate::make(Convexity::HConvex, HModulus::identity(), q));
        const RuleParams rp = RuleParams::make(alpha, lambda, q);
        identity_path = std::max(identity_path, rel(bound_power_mean(tf, rp).value,
                                                    bound_prior(tf, rp, BoundKind::Iscan13).value));
      }
    }
  }
  for (int i = 0; i < 2000; ++i) {
    const double s = uniform(rng, 0.05, 1.0);
    const double q = uniform(rng, 1.05, 4.0);
    const double lo = uniform(rng, -2.0, 2.0);
    const TestFunction tf = TestFunction::create(
        [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, lo,
        lo + uniform(rng, 0.1, 2.0),
        ClassCertificate::make(Convexity::HConvex, HModulus::power(s), q));
    const DerivativeSamples d = DerivativeSamples::from(tf);
    const RuleParams simpson = RuleParams::conjugate(0.5, 1.0 / 3.0, q);
    simpson_pm = std::max(simpson_pm, rel(bound_sconvex_powermean(tf, simpson, s).value,
                                          closed_form::simpson_powermean_sconvex(d, s, q)));
    simpson_pm = std::max(simpson_pm, rel(bound_power_mean(tf, simpson).value,
                                          closed_form::simpson_powermean_sconvex(d, s, q)));
    simpson_holder = std::max(simpson_holder, rel(bound_holder_hconvex(tf, simpson).value,
                                                  closed_form::sarikaya15(d, s, q)));
  }
  const bool pass = identity_path <= kReductionRel && simpson_pm <= kReductionRel &&
                    simpson_holder <= kReductionRel && collapse <= kCollapseAbs;
  return {pass, "identity path vs cubic table " + fmt(identity_path) +
                    ", Simpson power-mean " + fmt(simpson_pm) + ", Simpson Hölder vs " +
                    "earlier Simpson bound " + fmt(simpson_holder) + ", s=1 collapse " +
                    fmt(collapse)};
}

// ---------------------------------------------------------------- 5

Verdict dominance() {
  const std::array<double, 6> mags = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0};
  const std::array<double, 4> qs = {1.0, 1.5, 2.0, 4.0};
  int points = 0;
  int failures = 0;
  double worst_mid = 0.0;
  double worst_trap = 0.0;
  for (int si = 1; si <= 10; ++si) {
    const double s = si / 10.0;
    for (double q : qs) {
      for (double fa : mags) {
        for (double fb : mags) {
          for (double fm : mags) {
            DerivativeSamples d;
            d.width = 1.0;
            d.at_a = fa;
            d.at_b = fb;
            d.at_mid = fm;
            const double mid = closed_form::midpoint_powermean_sconvex(d, s, q);
            const double prior_mid = closed_form::alomari14(d, s, q);
            ++points;
            failures += !(mid <= prior_mid * (1.0 + kDominanceRel));
            if (prior_mid > 0.0) worst_mid = std::max(worst_mid, mid / prior_mid);
            if (q > 1.0) {
              const double trap = closed_form::half_holder_sconvex(d, s, q);
              const double prior_trap = closed_form::kirmaci16(d, s, q);
              ++points;
              failures += !(trap <= prior_trap * (1.0 + kDominanceRel));
              if (prior_trap > 0.0) worst_trap = std::max(worst_trap, trap / prior_trap);
            }
          }
        }
      }
    }
  }
  return {failures == 0 && points >= 1000,
          std::to_string(points) + " points, " + std::to_string(failures) +
              " failures, max ratio midpoint " + fmt(worst_mid) + ", trapezoid " +
              fmt(worst_trap)};
}

// ---------------------------------------------------------------- 6

Verdict hadamard() {
  Rng rng(kSeed + 6);
  int cases = 0;
  int failures = 0;
  int termwise = 0;
  const auto run = [&](HadamardVariant v, double s) {
    for (int i = 0; i < kHadamardCases; ++i) {
      const corpus::HadamardCase c = corpus::random_hadamard(rng, v, s);
      const HadamardReport r = hadamard_check(c.f, c.a, c.b, v, c.h);
      ++cases;
      failures += !r.holds;
      if (v == HadamardVariant::Classical) {
        const HadamardReport g =
            hadamard_check(c.f, c.a, c.b, HadamardVariant::HConvex, HModulus::identity());
        const bool same = g.left == r.left && g.middle == r.middle && g.right && r.right &&
                          *g.right == *r.right && g.holds == r.holds;
        termwise += !same;
      }
    }
  };
  run(HadamardVariant::Classical, 1.0);
  for (double s : {0.25, 0.5, 0.75, 1.0}) run(HadamardVariant::SConvex, s);
  run(HadamardVariant::GodunovaLevin, 1.0);
  run(HadamardVariant::PFunction, 1.0);
  for (double s : {0.25, 0.5, 0.75}) run(HadamardVariant::HConvex, s);
  return {failures == 0 && termwise == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, " +
              std::to_string(termwise) + " identity/classical mismatches"};
}

// ---------------------------------------------------------------- 7

Verdict propositions() {
  Rng rng(kSeed + 7);
  int failures = 0;
  int naive_failures = 0;
  double cross = 0.0;
  for (int i = 0; i < kPropositionTuples; ++i) {
    const double a = uniform(rng, 0.01, 3.0);
    const double b = a + uniform(rng, 0.01, 3.0);
    const double alpha = uniform01(rng);
    const double lambda = uniform01(rng);
    const double q = uniform(rng, 1.05, 4.0);
    const double p = q / (q - 1.0);
    const double s = uniform(rng, 0.01, 0.99) / q;
    const MeanInequality m1 = proposition1_check(a, b, alpha, lambda, q, s);
    const MeanInequality m2 = proposition2_check(a, b, alpha, lambda, p, q, s);
    failures += !m1.holds + !m2.holds;
    naive_failures += !proposition2_naive_check(a, b, alpha, lambda, p, q, s).holds;
    const double direct =
        bound_power_mean(power_test_function(a, b, q, s), RuleParams::make(alpha, lambda, q))
            .value;
    cross = std::max(cross, rel(m1.rhs, direct));
  }
  return {failures == 0 && cross <= kCrossCheckRel,
          std::to_string(kPropositionTuples) + " tuples, " + std::to_string(failures) +
              " failures, power-mean cross-check " + fmt(cross) +
              " (naive Hölder shape fails on " + std::to_string(naive_failures) + ")"};
}

// ---------------------------------------------------------------- 8

Verdict cli_contract() {
  const auto call = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
  };
  const std::vector<std::string> sweep = {
      "sweep",   "--alpha-grid", "0,1/4,1/2,3/4,1", "--lambda-grid", "0,1/3,2/3,1",
      "--q-grid", "1,2",         "--function",      "exp:1.5,2",     "--interval",
      "-1",       "1",           "--seed",          "99"};
  std::string first;
  std::string second;
  const int c1 = call(sweep, first);
  const int c2 = call(sweep, second);
  const bool identical = c1 == cli::kExitSound && c2 == c1 && first == second && !first.empty();

  std::string ignored;
  // 1.5 sqrt(x) is concave, so the convex certificate is false
  const int falsified = call({"verify", "--function", "pow:1,1.5", "--interval", "0", "1",
                              "--class", "convex"},
                             ignored);
  const int sound = call({"verify", "--function", "poly:0,0,1", "--interval", "0", "1"}, ignored);
  const int config = call({"verify", "--alpha-grid", ""}, ignored);
  const bool codes = falsified == cli::kExitViolation && sound == cli::kExitSound &&
                     config == cli::kExitConfig;
  return {identical && codes, std::string("byte-identical reruns ") +
                                  (identical ? "yes" : "no") + ", exit codes falsified=" +
                                  std::to_string(falsified) + " sound=" + std::to_string(sound) +
                                  " config=" + std::to_string(config)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {1, "kernel identity", kernel_identity},
      {2, "moment closed forms", moment_tables},
      {3, "soundness sweep", soundness},
      {4, "reductions", reductions},
      {5, "dominance", dominance},
      {6, "Hadamard chains", hadamard},
      {7, "mean inequalities", propositions},
      {8, "CLI determinism and exit codes", cli_contract},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.name
              << "  (" << v.detail << "; " << fmt(secs) << " s)\n";
  }
  return all ? 0 : 1;
}
