// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each check either reproduces a frozen reference number,
// cross-checks two independent computation routes, or sweeps a property over
// a seeded random population.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "irrat/hall.hpp"
#include "irrat/legendre.hpp"
#include "irrat/parse.hpp"
#include "irrat/surd.hpp"

using namespace irrat;

namespace {

constexpr double kFourOverSqrt5 = 1.7888543819998317;
constexpr double kSqrt5 = 2.23606797749979;
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kFourOverSqrt17 = 0.9701425001453319;
constexpr double kInvSqrt8 = 0.35355339059327373;

int g_failures = 0;

void report(int idx, bool pass, const std::string& what,
            const std::string& detail) {
  std::printf("[%2d] %s  %s (%s)\n", idx, pass ? "PASS" : "FAIL",
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

Rat goal_digits(int k) {
  Int d(1);
  for (int i = 0; i < k; ++i) d *= 10;
  return Rat(Int(1), d);
}

std::vector<AlphaSpec> named_specs() {
  return {AlphaSpec::golden(), sqrt_spec(2), quad_to_cf(1, 1, 17, 2),
          AlphaSpec::euler(), AlphaSpec::periodic(0, {}, {3})};
}

std::vector<AlphaSpec> random_specs(int count, int ndigits, int lo, int hi,
                                    unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<AlphaSpec> out;
  for (int i = 0; i < count; ++i) {
    std::vector<long long> digits;
    digits.reserve(ndigits);
    for (int k = 0; k < ndigits; ++k) digits.push_back(d(rng));
    out.push_back(AlphaSpec::prefix(0, std::move(digits)));
  }
  return out;
}

/// Exact (q, p) list of a jump source, restricted to q >= threshold.
std::vector<std::pair<Int, Int>> qp_list(const std::vector<JumpPoint>& pts,
                                         int threshold) {
  std::vector<std::pair<Int, Int>> out;
  for (const JumpPoint& pt : pts)
    if (pt.q >= threshold) out.push_back({pt.q, pt.p});
  return out;
}

bool rules_agree(AlphaEngine& eng, long long T, PsiVariant v) {
  int t = t_threshold(eng);
  Rat goal = goal_digits(9);
  auto scan = qp_list(jump_scan(eng, T, v, goal), t);
  JumpSequence seq = v == PsiVariant::SecondPair ? build_Q(eng, to_int(T), goal)
                                                 : build_X(eng, to_int(T), goal);
  return scan == qp_list(seq.points, t);
}

// --------------------------------------------------------- criteria 1 and 2

void crit_rules(int idx, PsiVariant v, const char* what) {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0, total = 0;
  std::vector<AlphaSpec> specs = named_specs();
  std::vector<AlphaSpec> rnd = random_specs(300, 400, 1, 9, 20240824);
  specs.insert(specs.end(), rnd.begin(), rnd.end());
  for (const AlphaSpec& spec : specs) {
    AlphaEngine eng(spec);
    ++total;
    if (!rules_agree(eng, 100000, v)) ++bad;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d numbers, q <= 1e5, %.1f s", total, secs);
  report(idx, bad == 0 && secs <= 60.0, what, buf);
}

// --------------------------------------------------------------- criterion 3

bool near(const Enclosure& e, double c, double tol) {
  return std::abs(e.midpoint_double() - c) <= tol &&
         e.width().get_d() <= tol;
}

void crit_constants(int idx) {
  Rat goal = goal_digits(14);
  AlphaEngine golden(AlphaSpec::golden());
  SpectrumReport g = spectrum_estimates(golden, 150, goal);
  AlphaEngine s17(quad_to_cf(1, 1, 17, 2));
  SpectrumReport h = spectrum_estimates(s17, 150, goal);
  AlphaEngine r2(sqrt_spec(2));
  SpectrumReport s = spectrum_estimates(r2, 150, goal);
  bool ok = near(g.k, kFourOverSqrt5, 1e-8) && near(g.k_star, kSqrt5, 1e-8) &&
            near(h.k, kFourOverSqrt17, 1e-8) && near(s.k, kInvSqrt2, 1e-8) &&
            near(s.k_star, kInvSqrt2, 1e-8) &&
            near(s.lambda, kInvSqrt8, 1e-10);
  report(idx, ok, "named liminf constants from periodic tails",
         "5 constants at 1e-8, Lagrange constant of sqrt(2) at 1e-10");
}

// --------------------------------------------------------------- criterion 4

void crit_e_limit(int idx) {
  AlphaEngine e(AlphaSpec::euler());
  double d100 = std::abs(
      spectrum_estimates(e, 100, goal_digits(12)).k_star.midpoint_double() -
      1.5);
  double d200 = std::abs(
      spectrum_estimates(e, 200, goal_digits(12)).k_star.midpoint_double() -
      1.5);
  double d400 = std::abs(
      spectrum_estimates(e, 400, goal_digits(12)).k_star.midpoint_double() -
      1.5);
  bool ok = d200 <= 0.02 && d400 <= d200 && d200 <= d100;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "|k*-3/2| = %.5f / %.5f / %.5f at horizons 100/200/400", d100,
                d200, d400);
  report(idx, ok, "k* of e approaches 3/2 along growing digits", buf);
}

// --------------------------------------------------------------- criterion 5

void crit_inf_audit(int idx) {
  AlphaEngine tau(AlphaSpec::golden());
  int t = t_threshold(tau);
  Rat goal = goal_digits(12);
  long long T = 1000000;

  auto min_product = [&](const std::vector<JumpPoint>& pts) {
    bool have = false;
    Enclosure best;
    for (const JumpPoint& pt : pts) {
      if (pt.q < t) continue;
      best = have ? Enclosure::min(best, pt.product) : pt.product;
      have = true;
    }
    return best;
  };
  Enclosure viaScan = min_product(jump_scan(tau, T, PsiVariant::SecondPair,
                                            goal));
  Enclosure viaRules = min_product(build_Q(tau, to_int(T), goal).points);
  // Boundary candidate: the left endpoint t of the admissible range also
  // competes when it is not itself a jump denominator.
  LinearForm at_t = psi_second(tau, Rat(t), PsiVariant::SecondPair, goal);
  Enclosure boundary = Rat(to_int(t)) * at_t.value;
  Enclosure a = Enclosure::min(viaScan, boundary);
  Enclosure b = Enclosure::min(viaRules, boundary);

  double diff = std::abs(a.midpoint_double() - b.midpoint_double());
  bool ok = diff <= 1e-9;
  double inf = a.midpoint_double();
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "routes differ by %.2e; inf = %.9f vs candidates "
                "42-18*sqrt(5) = %.9f and 8*(sqrt(5)-2) = %.9f",
                diff, inf, 42 - 18 * std::sqrt(5.0),
                8 * (std::sqrt(5.0) - 2));
  report(idx, ok, "infimum of t*psi2(t) for the golden ratio, two routes",
         buf);
}

// --------------------------------------------------------------- criterion 6

void crit_invariants(int idx) {
  bool ok = true;
  std::string fail;
  long long done = 0;
  auto expect = [&](bool cond, const char* what) {
    ++done;
    if (!cond && ok) {
      ok = false;
      fail = what;
    }
  };

  // Convergent determinants and the unit identity (10^4 instances).
  {
    std::mt19937 rng(101);
    Rat g12 = goal_digits(12);
    std::vector<AlphaSpec> specs = random_specs(420, 160, 1, 9, 103);
    for (AlphaSpec& spec : specs) {
      AlphaEngine eng(spec);
      for (long long n = 1; n <= 12; ++n) {
        Int det = eng.convergent(n).p * eng.convergent(n - 1).q -
                  eng.convergent(n - 1).p * eng.convergent(n).q;
        expect(det == 1 || det == -1, "determinant");
        Enclosure unit = Rat(eng.convergent(n + 1).q) * eng.xi(n, g12) +
                         Rat(eng.convergent(n).q) * eng.xi(n + 1, g12);
        expect(unit.contains(Rat(1)), "unit identity");
      }
    }
  }

  // Dual-route agreement plus the range and digit bounds (10^4 kappa
  // instances: both routes at width <= 1e-12 must intersect; kappa^3 lies in
  // (1, 6); for digits >= 2 kappa^1 and kappa^2 respect the digit window).
  {
    Rat g12 = goal_digits(12);
    std::vector<AlphaSpec> specs = random_specs(125, 160, 1, 12, 211);
    for (AlphaSpec& spec : specs) {
      AlphaEngine eng(spec);
      for (long long n = 2; n <= 21; ++n) {
        long long a = eng.digit(n);
        for (int j = 1; j <= 4; ++j) {
          KappaSample s = kappa(eng, n, j, g12);
          expect(s.viaProducts.intersects(s.viaTails) &&
                     s.viaProducts.width() <= g12 &&
                     s.viaTails.width() <= g12,
                 "dual-route kappa");
          if (j == 3)
            expect(s.viaTails.lo.get_d() > 1.0 - 1e-9 &&
                       s.viaTails.hi.get_d() < 6.0 + 1e-9,
                   "kappa3 range");
          if ((j == 1 || j == 2) && a >= 2) {
            double lo = double(a - 1) / double(a);
            double hi = 2.0 * double(a) / double(a + 2);
            expect(s.viaTails.hi.get_d() >= lo - 1e-9 &&
                       s.viaTails.lo.get_d() <= hi + 1e-9,
                   "digit bounds");
          }
        }
      }
    }
  }

  // Tail-swap symmetry of the first two functionals (10^4 exact instances).
  {
    std::mt19937 rng(307);
    std::uniform_int_distribution<int> num(1, 500);
    for (int rep = 0; rep < 10000; ++rep) {
      Rat x = Rat(num(rng)) / Rat(num(rng)) + 1;
      Rat y = Rat(1) / (Rat(num(rng)) / Rat(num(rng)) + 1);
      Rat f1 =
          (1 + Rat(1) / x) * (Rat(1) / y - 1) / (Rat(1) / y + Rat(1) / x);
      Rat f2 = (1 - y) * (x + 1) / (x + y);
      expect(f1 == f2, "tail-swap symmetry");
    }
  }

  // Integer identities behind the rewrite rules (10^4 instances).
  {
    std::vector<AlphaSpec> specs = random_specs(280, 40, 1, 2, 401);
    for (AlphaSpec& spec : specs) {
      AlphaEngine eng(spec);
      for (long long n = 1; n <= 36; ++n) {
        Int qm2 = eng.convergent(n - 2).q, qm1 = eng.convergent(n - 1).q,
            qn = eng.convergent(n).q;
        if (eng.digit(n) == 1)
          expect(2 * qm2 + qm1 == qm2 + qn, "digit-1 identity");
        else
          expect(qn - qm1 == qm1 + qm2, "digit-2 identity");
      }
    }
  }

  // Local implication checks between neighboring functionals (10^4 indices).
  {
    std::vector<AlphaSpec> specs = random_specs(100, 320, 1, 9, 503);
    for (AlphaSpec& spec : specs) {
      AlphaEngine eng(spec);
      expect(lemma13_implications(eng, 100).empty(), "local implications");
      done += 99;
    }
  }

  // Interval ordering k* >= k >= 2*lambda with enclosure slack.  The
  // Lagrange window is widened by two indices on the left: a window-edge
  // jump product is controlled by the sample of the preceding index.
  {
    std::vector<AlphaSpec> specs = random_specs(400, 160, 1, 7, 601);
    for (AlphaSpec& spec : specs) {
      AlphaEngine eng(spec);
      long long N = 24;
      SpectrumReport r = spectrum_estimates(eng, N, goal_digits(10));
      Enclosure lam = lagrange_sample(eng, N, goal_digits(10));
      for (long long n = N - (N + 9) / 10 - 2; n < N; ++n)
        if (n >= 1)
          lam = Enclosure::min(lam, lagrange_sample(eng, n, goal_digits(10)));
      double slack =
          Rat(r.k.width() + r.k_star.width() + lam.width()).get_d() + 1e-10;
      expect(r.k_star.hi.get_d() >= r.k.lo.get_d() - slack, "k* >= k");
      expect(r.k.hi.get_d() >= 2 * lam.lo.get_d() - slack, "k >= 2 lambda");
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%lld instances%s%s", done,
                ok ? "" : ", first failure: ", ok ? "" : fail.c_str());
  report(idx, ok, "property-based invariant suites", buf);
}

// --------------------------------------------------------------- criterion 7

void crit_legendre(int idx) {
  auto t0 = std::chrono::steady_clock::now();
  long long bad = 0, checked = 0;
  Rat goal = goal_digits(9);
  for (const AlphaSpec& spec : named_specs()) {
    AlphaEngine eng(spec);
    std::vector<std::pair<Int, Int>> conv;
    for (long long n = 0;; ++n) {
      const Convergent& cv = eng.convergent(n);
      if (cv.q > 10000) break;
      conv.push_back({cv.p, cv.q});
    }
    for (long long q = 1; q <= 10000; ++q) {
      Int pn = eng.nearest_p(to_int(q));
      for (long long dp = -1; dp <= 1; ++dp) {
        Int p = pn + to_int(dp);
        Int g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), to_int(q).get_mpz_t());
        if (g != 1) continue;
        LegendreCertificate cert =
            legendre_test(eng, p, to_int(q), ParityConvention::Swapped, goal);
        bool listed = false;
        for (const auto& [cp, cq] : conv)
          if (cp == p && cq == to_int(q)) listed = true;
        if (cert.verdict != cert.canonicalVerdict ||
            cert.canonicalVerdict != listed)
          ++bad;
        ++checked;
      }
    }
    // The companion inequality holds along every consecutive-convergent
    // pair and certifies convergent membership of the later fraction.
    for (long long n = 1; n <= 200; ++n) {
      const Convergent c1 = eng.convergent(n - 1);
      const Convergent c0 = eng.convergent(n);
      if (c1.q < 1) continue;
      if (!lucas_test(eng, c1.p, c1.q, c0.p, c0.q, goal)) ++bad;
      ++checked;
    }
  }
  // Differential parity check: exactly one convention survives.
  long long swapped_bad = 0, printed_bad = 0;
  {
    AlphaEngine eng(sqrt_spec(2));
    for (long long q = 1; q <= 300; ++q) {
      Int pn = eng.nearest_p(to_int(q));
      for (long long dp = -1; dp <= 1; ++dp) {
        Int p = pn + to_int(dp);
        Int g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), to_int(q).get_mpz_t());
        if (g != 1) continue;
        LegendreCertificate cs =
            legendre_test(eng, p, to_int(q), ParityConvention::Swapped, goal);
        LegendreCertificate cp = legendre_test(
            eng, p, to_int(q), ParityConvention::AsPrinted, goal);
        if (cs.verdict != cs.canonicalVerdict) ++swapped_bad;
        if (cp.verdict != cp.canonicalVerdict) ++printed_bad;
      }
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  bool ok = bad == 0 && swapped_bad == 0 && printed_bad > 0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%lld fractions, %lld disagreements, parity differential "
                "%lld/%lld, %.1f s",
                checked, bad, swapped_bad, printed_bad, secs);
  report(idx, ok, "convergent criteria equal list membership to q = 1e4",
         buf);
}

// --------------------------------------------------------------- criterion 8

// Tail-route-only envelope evaluation.  The product route's precision
// demand grows with the convergent size, so at index 500 it would need
// prefixes of several thousand digits; the two routes are cross-checked at
// small indices in criterion 6.
Enclosure kappa_via_tails(AlphaEngine& eng, long long n, int j,
                          const Rat& goal) {
  Rat g = goal;
  Enclosure e = detail::kappa_tails(eng, n, j, g);
  while (e.width() > goal) {
    g /= 1024;
    e = detail::kappa_tails(eng, n, j, g);
  }
  return e;
}

void crit_gap_evidence(int idx) {
  Rat goal = goal_digits(10);
  int bad_ell = 0, bad_quad = 0;
  std::vector<AlphaSpec> specs = random_specs(100, 720, 1, 4, 777);
  for (AlphaSpec& spec : specs) {
    AlphaEngine eng(spec);
    double min_ell = 1e9, min_quad = 1e9;
    for (long long n = 1; n <= 500; ++n) {
      double e =
          eng.digit(n) == 1
              ? kappa_via_tails(eng, n, 3, goal).midpoint_double()
              : Enclosure::min(kappa_via_tails(eng, n, 1, goal),
                               kappa_via_tails(eng, n, 2, goal))
                    .midpoint_double();
      min_ell = std::min(min_ell, e);
      if (eng.digit(n) >= 2) {
        double v = e;  // already the smaller of the two applicable values
        v = std::min(v, kappa_via_tails(eng, n, 4, goal).midpoint_double());
        min_quad = std::min(min_quad, v);
      }
    }
    if (!(min_ell <= 1.5 + 1e-9)) ++bad_ell;
    if (!(min_quad <= kFourOverSqrt17 + 1e-9)) ++bad_quad;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "100 words, horizon 500, violations %d/%d", bad_ell,
                bad_quad);
  report(idx, bad_ell == 0 && bad_quad == 0,
         "envelope minima stay under 3/2 and 4/sqrt(17)", buf);
}

// --------------------------------------------------------------- criterion 9

void crit_constructions(int idx) {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;
  };

  // Mean-value construction: exact targets and realized envelope values.
  std::vector<Rat> targets{Rat(1, 2), Rat(11, 20), Rat(3, 5), Rat(13, 20),
                           Rat(2, 3)};
  for (const Rat& k : targets) {
    HallPoint hp = hall_construct(k, 34);
    Rat dist = hp.H.lo > k ? hp.H.lo - k : (hp.H.hi < k ? k - hp.H.hi
                                                        : Rat(0));
    if (dist.get_d() > 1e-9) fail("target distance " + k.get_str());
    AlphaEngine eng(hp.combined);
    std::vector<long long> seps;
    for (long long n = 1; seps.size() < 21; ++n)
      if (eng.digit(n) == 2) seps.push_back(n);
    double best = 1e9;
    for (long long n : {seps[18], seps[19], seps[20]})
      best = std::min(best,
                      std::abs(ell_star(eng, n).midpoint_double() -
                               k.get_d()));
    if (best > 5e-3) fail("separator envelope " + k.get_str());
  }

  // Envelope-minimum witness: within 1e-3 of 1/2 by the 500th separator.
  {
    AlphaEngine eng(witness_L2star_min());
    if (eng.digit(1000) != 2) fail("witness word shape");
    if (std::abs(ell_star(eng, 1000).midpoint_double() - 0.5) > 1e-3)
      fail("envelope witness limit");
  }

  // Lagrange witness: k = 4*lambda0 for an in-range target; the target 3/10
  // lies outside the attainable segment (any word whose Lagrange liminf is
  // 3/10 has digits <= 3 at the attaining indices, where the first two
  // functionals drop to ~0.8 < 1.2), so the documented domain error is the
  // correct outcome there.
  {
    AlphaSpec w = witness_L2(Rat(1, 10));
    AlphaEngine eng(w);
    long long L =
        static_cast<long long>(std::get<PeriodicCF>(w.tail).period.size());
    if (std::abs(lagrange_constant(eng, 10 * L).midpoint_double() - 0.1) >
        1e-3)
      fail("witness lambda");
    if (std::abs(lemma13_filter(eng, 10 * L).midpoint_double() - 0.4) > 1e-3)
      fail("witness k = 4 lambda");
    bool threw = false;
    try {
      witness_L2(Rat(3, 10));
    } catch (const RangeViolation&) {
      threw = true;
    }
    if (!threw) fail("out-of-range target not rejected");
  }

  report(idx, ok, "constructive witnesses",
         ok ? "5 mean-value targets, envelope witness, Lagrange witness "
              "(3/10 rejected as out of range)"
            : detail);
}

// -------------------------------------------------------------- criterion 10

void crit_performance(int idx) {
  AlphaEngine r2(sqrt_spec(2));
  auto t0 = std::chrono::steady_clock::now();
  std::vector<JumpPoint> pts =
      jump_scan(r2, 1000000, PsiVariant::SecondPair, goal_digits(12));
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu jumps, %.2f s, %.0f forms/s",
                pts.size(), secs, secs > 0 ? 1000000 / secs : 0);
  report(idx, secs <= 30.0, "exact scan to q = 1e6", buf);
}

}  // namespace

int main() {
  crit_rules(1, PsiVariant::SecondPair,
             "pair-variant rules equal the lattice oracle");
  crit_rules(2, PsiVariant::SecondFraction,
             "fraction-variant rules equal the lattice oracle");
  crit_constants(3);
  crit_e_limit(4);
  crit_inf_audit(5);
  crit_invariants(6);
  crit_legendre(7);
  crit_gap_evidence(8);
  crit_constructions(9);
  crit_performance(10);
  std::printf(
      "note: infinite-limit claims (full gap intervals, isolated points, "
      "accumulation at 3/2) are checked as finite-horizon evidence only and "
      "are not asserted as theorems by this suite.\n");
  return g_failures == 0 ? 0 : 1;
}
