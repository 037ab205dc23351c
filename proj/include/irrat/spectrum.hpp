#pragma once

#include <string>
#include <utility>
#include <vector>

#include "irrat/jump_rules.hpp"
#include "irrat/kappa.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// Finite-horizon estimation of the five spectrum quantities:
//   lambda  liminf of the Lagrange samples q_n |q_n alpha - p_n|
//   j / k   inf / liminf of the jump products of the pair-exclusion function
//   j*/ k*  the same for the fraction-exclusion function
// inf-type quantities are running infima over every admissible jump; liminf-
// type quantities are minima over the last ceil(N/10) digit indices.
// ---------------------------------------------------------------------------

struct SpectrumWitness {
  std::string which;  // "j", "k", "j_star", "k_star", "lambda"
  Int q;              // jump denominator (0 when index-based)
  long long n = -1;   // digit index
};

struct SpectrumReport {
  long long horizon = 0;
  Enclosure lambda, j, k, j_star, k_star;
  std::vector<SpectrumWitness> witnesses;
  std::string method;
  Enclosure boundary_term;      // t * (second-best value at the threshold t)
  bool boundary_differs = false;
  int threshold = 2;
};

namespace detail {

inline long long tail_window(long long N) { return (N + 9) / 10; }

}  // namespace detail

inline SpectrumReport spectrum_estimates(
    AlphaEngine& eng, long long N,
    const Rat& goal = detail::default_goal()) {
  if (N < 4) throw DomainViolation("horizon must be >= 4");
  SpectrumReport rep;
  rep.horizon = N;
  rep.method = "JumpProducts";
  Int T = eng.convergent(N).q;
  rep.threshold = t_threshold(eng);
  long long w0 = N - detail::tail_window(N);

  // Pair-exclusion side from the constructive rules.
  JumpSequence Q = build_Q(eng, T, goal);
  bool have_j = false, have_k = false;
  size_t j_arg = 0, k_arg = 0;
  for (size_t i = 0; i < Q.points.size(); ++i) {
    const JumpPoint& pt = Q.points[i];
    if (pt.q < rep.threshold) continue;
    if (!have_j || pt.product.lo < rep.j.lo) j_arg = i;
    rep.j = have_j ? Enclosure::min(rep.j, pt.product) : pt.product;
    have_j = true;
    if (Q.cases[i].pos >= w0) {
      if (!have_k || pt.product.lo < rep.k.lo) k_arg = i;
      rep.k = have_k ? Enclosure::min(rep.k, pt.product) : pt.product;
      have_k = true;
    }
  }
  if (!have_j || !have_k) throw InsufficientHorizon();
  rep.witnesses.push_back({"j", Q.points[j_arg].q, Q.cases[j_arg].n});
  rep.witnesses.push_back({"k", Q.points[k_arg].q, Q.cases[k_arg].n});

  // Fraction-exclusion side: block endpoints suffice for the infimum.
  bool have_js = false;
  Int js_q;
  long long js_n = -1;
  for (const RuleEmission& em : emissions_X(eng, T, true)) {
    if (em.q < rep.threshold) continue;
    LinearForm f = eng.form(em.q, em.p, goal / Rat(em.q));
    Enclosure prod = Rat(em.q) * f.value;
    if (!have_js || prod.lo < rep.j_star.lo) {
      js_q = em.q;
      js_n = em.rc.n;
    }
    rep.j_star = have_js ? Enclosure::min(rep.j_star, prod) : prod;
    have_js = true;
  }
  if (!have_js) throw InsufficientHorizon();
  rep.witnesses.push_back({"j_star", js_q, js_n});

  bool have_ks = false;
  long long ks_n = -1;
  for (long long n = std::max(1LL, w0); n <= N; ++n) {
    Enclosure es = ell_star(eng, n, goal);
    if (!have_ks || es.lo < rep.k_star.lo) ks_n = n;
    rep.k_star = have_ks ? Enclosure::min(rep.k_star, es) : es;
    have_ks = true;
  }
  rep.witnesses.push_back({"k_star", Int(0), ks_n});

  rep.lambda = lagrange_constant(eng, N, goal);

  // Left-boundary term of the infimum over real t >= threshold: the
  // second-best value still active at t itself.
  LinearForm bf = psi_second(eng, Rat(rep.threshold),
                             PsiVariant::SecondPair, goal);
  rep.boundary_term = Rat(rep.threshold) * bf.value;
  rep.boundary_differs = rep.boundary_term.hi < rep.j.lo;
  return rep;
}

/// Tail-window estimate of k restricted to digits >= 2 (valid whenever the
/// digit tail is not eventually all ones).
inline Enclosure lemma13_filter(AlphaEngine& eng, long long N,
                                const Rat& goal = detail::default_goal()) {
  if (const auto* p = std::get_if<PeriodicCF>(&eng.spec().tail)) {
    bool allones = true;
    for (long long d : p->period)
      if (d != 1) allones = false;
    if (allones) throw GoldenEquivalent();
  }
  auto window_min = [&](long long from) -> std::pair<bool, Enclosure> {
    bool have = false;
    Enclosure best;
    for (long long n = std::max(1LL, from); n <= N; ++n) {
      if (eng.digit(n) < 2) continue;
      Enclosure v = Enclosure::min(kappa(eng, n, 1, goal).viaTails,
                                   kappa(eng, n, 2, goal).viaTails);
      v = Enclosure::min(v, kappa(eng, n, 4, goal).viaTails);
      best = have ? Enclosure::min(best, v) : v;
      have = true;
    }
    return {have, best};
  };
  auto [have, best] = window_min(N - detail::tail_window(N));
  if (!have) std::tie(have, best) = window_min(1);
  if (!have) throw InsufficientHorizon("no digit >= 2 up to horizon");
  return best;
}

/// Check the local implications between neighboring kappa values; returns
/// the indices (expected none) where a certainly-decided premise leads to a
/// certainly-violated conclusion.
inline std::vector<long long> lemma13_implications(
    AlphaEngine& eng, long long N,
    const Rat& goal = detail::default_goal()) {
  std::vector<long long> violations;
  // Decide e1 < e2 with refinement; 0 = undecided.
  auto cmp = [&](long long n1, int j1, long long n2, int j2) -> int {
    Rat g = goal;
    for (int round = 0; round < 3; ++round) {
      Enclosure a = kappa(eng, n1, j1, g).viaTails;
      Enclosure b = kappa(eng, n2, j2, g).viaTails;
      if (a.strictly_below(b)) return -1;
      if (b.strictly_below(a)) return 1;
      g /= Rat(to_int(1000000LL));
    }
    return 0;
  };
  for (long long n = 2; n + 1 <= N; ++n) {
    long long a = eng.digit(n);
    if (a == 1) {
      // digit-1 position against its right neighbor...
      if (eng.digit(n + 1) >= 2 && cmp(n, 3, n + 1, 1) == -1) {
        if (eng.digit(n + 1) < 4 || cmp(n + 1, 4, n, 3) != -1)
          violations.push_back(n);
      }
      // ...and against its left neighbor.
      if (eng.digit(n - 1) >= 2 && cmp(n, 3, n - 1, 2) == -1) {
        if (eng.digit(n - 1) < 4 || cmp(n - 1, 4, n, 3) != -1)
          violations.push_back(n);
      }
    }
    if (a >= 8) {
      // kappa^4 is the smallest of the four on large digits.
      for (int j = 1; j <= 3; ++j)
        if (cmp(n, 4, n, j) == 1) violations.push_back(n);
    }
  }
  return violations;
}

/// Identify which kappa^j_m a given jump product realizes, and return that
/// sample after verifying the two agree.  Considers every producer of the
/// point (including deduplicated coincidences).
inline KappaSample match_kappa(AlphaEngine& eng, const JumpSequence& seq,
                               size_t idx,
                               const Rat& goal = detail::default_goal()) {
  const JumpPoint& pt = seq.points.at(idx);
  std::vector<RuleCase> producers{seq.cases.at(idx)};
  for (const auto& d : seq.dedup_log)
    if (d.q == pt.q) producers.push_back(d.dropped);

  auto q_of = [&](long long m) { return eng.convergent(m).q; };
  std::vector<std::pair<int, long long>> cands;
  for (const RuleCase& rc : producers) {
    long long n = rc.n;
    switch (rc.tag) {
      case RuleTag::Q1_geq3:
      case RuleTag::X1_geq2:
        if (pt.q == q_of(n - 2) + q_of(n - 1)) cands.push_back({1, n});
        if (pt.q == 2 * q_of(n - 1)) cands.push_back({4, n});
        if (pt.q == q_of(n) - q_of(n - 1)) cands.push_back({2, n});
        break;
      case RuleTag::Q2_eq2:
        cands.push_back({2, n});
        cands.push_back({1, n});
        break;
      case RuleTag::Q3_isolated1:
      case RuleTag::X2_eq1:
        cands.push_back({3, n});
        break;
      case RuleTag::Q4_run1:
      case RuleTag::Q5_infinite1: {
        if (pt.q == 2 * q_of(n - 2) + q_of(n - 1)) cands.push_back({3, n});
        if (rc.tag == RuleTag::Q4_run1 && rc.r >= 2 &&
            pt.q == 2 * q_of(n + rc.r - 3) + q_of(n + rc.r - 2))
          cands.push_back({3, n + rc.r - 2});
        for (long long m = n - 1; q_of(m) * 2 <= pt.q; ++m)
          if (2 * q_of(m) == pt.q) cands.push_back({4, m + 1});
        break;
      }
      case RuleTag::Seed:
        break;
    }
  }
  for (auto [j, m] : cands) {
    if (m < 1) continue;
    KappaSample s = kappa(eng, m, j, goal);
    if (s.viaTails.intersects(pt.product)) return s;
  }
  throw NotAJumpPoint("no kappa functional matches jump at q = " +
                      pt.q.get_str());
}

}  // namespace irrat
