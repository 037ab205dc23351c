#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "irrat/psi.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// Constructive generation of the jump denominators of the two second-best
// approximation functions, directly from the digit stream, linear in the
// number of digits.  Values are emitted as exact lattice points (q, p), then
// merged, deduplicated (coincidences logged) and seeded with q = 1.
// ---------------------------------------------------------------------------

enum class RuleTag {
  Seed,
  Q1_geq3,       // a_n >= 3: q_{n-2}+q_{n-1}, 2q_{n-1}, q_n - q_{n-1}
  Q2_eq2,        // a_n = 2:  q_n - q_{n-1}
  Q3_isolated1,  // isolated a_n = 1: 2q_{n-2}+q_{n-1}
  Q4_run1,       // finite run of r >= 2 ones
  Q5_infinite1,  // infinite run of ones
  X1_geq2,       // a_n >= 2: q_{n-2} + j q_{n-1}, 1 <= j <= a_n - 1
  X2_eq1         // a_n = 1:  2q_{n-2}+q_{n-1}
};

inline const char* rule_tag_name(RuleTag t) {
  switch (t) {
    case RuleTag::Seed: return "seed";
    case RuleTag::Q1_geq3: return "Q1_geq3";
    case RuleTag::Q2_eq2: return "Q2_eq2";
    case RuleTag::Q3_isolated1: return "Q3_isolated1";
    case RuleTag::Q4_run1: return "Q4_run1";
    case RuleTag::Q5_infinite1: return "Q5_infinite1";
    case RuleTag::X1_geq2: return "X1_geq2";
    case RuleTag::X2_eq1: return "X2_eq1";
  }
  return "?";
}

struct RuleCase {
  RuleTag tag = RuleTag::Seed;
  long long n = 0;    // digit index the rule fired at (run start for runs)
  long long r = 0;    // run length (Q4)
  long long j = 0;    // block position (X1)
  long long pos = 0;  // digit index the individual element belongs to
};

struct RuleEmission {
  Int q;
  Int p;
  RuleCase rc;
};

struct DedupEntry {
  Int q;
  RuleCase kept;
  RuleCase dropped;
};

struct JumpSequence {
  PsiVariant variant = PsiVariant::SecondPair;
  int threshold = 2;
  std::vector<JumpPoint> points;
  std::vector<RuleCase> cases;  // parallel to points
  std::vector<DedupEntry> dedup_log;
};

namespace detail {

/// Is the digit tail all ones from position n on?  Decidable only for
/// periodic specs; everything else is treated as finite-by-inspection.
inline bool all_ones_from(AlphaEngine& eng, long long n) {
  const auto* p = std::get_if<PeriodicCF>(&eng.spec().tail);
  if (!p) return false;
  for (long long d : p->period)
    if (d != 1) return false;
  for (size_t i = static_cast<size_t>(n - 1); i < p->preperiod.size(); ++i)
    if (p->preperiod[i] != 1) return false;
  return true;
}

/// The admissible minimizer at q = 1 (for the seed point).
inline Int seed_numerator(AlphaEngine& eng, PsiVariant variant) {
  JumpScanner sc(eng, 1, variant);
  auto js = sc.run();
  return js.at(0).p;
}

struct Emitter {
  AlphaEngine& eng;
  const Int& T;
  std::vector<RuleEmission> out;

  Int q(long long n) { return eng.convergent(n).q; }
  Int p(long long n) { return eng.convergent(n).p; }

  void emit(Int qv, Int pv, RuleTag tag, long long n, long long r = 0,
            long long j = 0, long long pos = -1) {
    if (qv < 1 || qv > T) return;
    out.push_back(
        {std::move(qv), std::move(pv), {tag, n, r, j, pos < 0 ? n : pos}});
  }
};

}  // namespace detail

/// Raw rule emissions for the pair-exclusion jump sequence.
inline std::vector<RuleEmission> emissions_Q(AlphaEngine& eng, const Int& T) {
  detail::Emitter em{eng, T, {}};
  long long n = 1;
  while (true) {
    if (em.q(n - 2) + em.q(n - 1) > T) break;
    long long a = eng.digit(n);
    if (a >= 3) {
      em.emit(em.q(n - 2) + em.q(n - 1), em.p(n - 2) + em.p(n - 1),
              RuleTag::Q1_geq3, n);
      em.emit(2 * em.q(n - 1), 2 * em.p(n - 1), RuleTag::Q1_geq3, n);
      em.emit(em.q(n) - em.q(n - 1), em.p(n) - em.p(n - 1), RuleTag::Q1_geq3,
              n);
      ++n;
      continue;
    }
    if (a == 2) {
      em.emit(em.q(n) - em.q(n - 1), em.p(n) - em.p(n - 1), RuleTag::Q2_eq2,
              n);
      ++n;
      continue;
    }
    // Run of ones starting at n.
    if (detail::all_ones_from(eng, n)) {
      em.emit(2 * em.q(n - 2) + em.q(n - 1), 2 * em.p(n - 2) + em.p(n - 1),
              RuleTag::Q5_infinite1, n);
      for (long long m = n - 1;; ++m) {
        if (2 * em.q(m) > T) break;
        em.emit(2 * em.q(m), 2 * em.p(m), RuleTag::Q5_infinite1, n, 0, 0,
                m + 1);
      }
      break;
    }
    // Scan the run; it may be cut short once every further value
    // exceeds T (the tail of the emission list only moves up).
    long long r = 1;
    bool capped = false;
    while (true) {
      if (2 * em.q(n + r - 2) > T &&
          2 * em.q(n + r - 2) + em.q(n + r - 1) > T) {
        capped = true;
        break;
      }
      if (eng.digit(n + r) != 1) break;
      ++r;
    }
    if (r == 1 && !capped) {
      em.emit(2 * em.q(n - 2) + em.q(n - 1), 2 * em.p(n - 2) + em.p(n - 1),
              RuleTag::Q3_isolated1, n);
      ++n;
      continue;
    }
    // r >= 2 (or a capped longer run): the r+2 block values.
    em.emit(2 * em.q(n - 2) + em.q(n - 1), 2 * em.p(n - 2) + em.p(n - 1),
            RuleTag::Q4_run1, n, r);
    for (long long m = n - 1; m <= n + r - 2; ++m)
      em.emit(2 * em.q(m), 2 * em.p(m), RuleTag::Q4_run1, n, r, 0, m + 1);
    if (!capped)
      em.emit(2 * em.q(n + r - 3) + em.q(n + r - 2),
              2 * em.p(n + r - 3) + em.p(n + r - 2), RuleTag::Q4_run1, n, r,
              0, n + r - 2);
    n += r;
    if (capped) break;
  }
  return em.out;
}

/// Raw rule emissions for the fraction-exclusion jump sequence.  When
/// extremal_only is set, only j = 1 and j = a_n - 1 of each block are
/// emitted for digits above 10 (the interior products are never minimal);
/// index_cap limits the digit index instead of the value when >= 0.
inline std::vector<RuleEmission> emissions_X(AlphaEngine& eng, const Int& T,
                                             bool extremal_only = false,
                                             long long index_cap = -1) {
  detail::Emitter em{eng, T, {}};
  for (long long n = 1;; ++n) {
    if (index_cap >= 0 && n > index_cap) break;
    if (em.q(n - 2) + em.q(n - 1) > T) break;
    long long a = eng.digit(n);
    if (a == 1) {
      em.emit(2 * em.q(n - 2) + em.q(n - 1), 2 * em.p(n - 2) + em.p(n - 1),
              RuleTag::X2_eq1, n);
      continue;
    }
    if (extremal_only && a > 10) {
      for (long long j : {1LL, a - 1}) {
        em.emit(em.q(n - 2) + to_int(j) * em.q(n - 1),
                em.p(n - 2) + to_int(j) * em.p(n - 1), RuleTag::X1_geq2, n, 0,
                j);
      }
      continue;
    }
    for (long long j = 1; j <= a - 1; ++j) {
      Int qv = em.q(n - 2) + to_int(j) * em.q(n - 1);
      if (qv > T) break;
      em.emit(std::move(qv), em.p(n - 2) + to_int(j) * em.p(n - 1),
              RuleTag::X1_geq2, n, 0, j);
    }
  }
  return em.out;
}

namespace detail {

inline JumpSequence assemble(AlphaEngine& eng, PsiVariant variant,
                             std::vector<RuleEmission> ems,
                             const Rat& goal) {
  JumpSequence seq;
  seq.variant = variant;
  seq.threshold = t_threshold(eng);
  // Seed point q = 1 first so it wins dedup ties.
  ems.insert(ems.begin(),
             {Int(1), seed_numerator(eng, variant),
              {RuleTag::Seed, 0, 0, 0, 0}});
  std::stable_sort(ems.begin(), ems.end(),
                   [](const RuleEmission& a, const RuleEmission& b) {
                     return a.q < b.q;
                   });
  for (size_t i = 0; i < ems.size(); ++i) {
    if (!seq.points.empty() && ems[i].q == seq.points.back().q) {
      // Coincidence: keep the earliest producer as provenance, but make
      // sure the numerator is the true minimizer among the producers.
      JumpPoint& kept = seq.points.back();
      if (ems[i].p != kept.p) {
        LinearForm f1 = eng.form(kept.q, kept.p);
        LinearForm f2 = eng.form(ems[i].q, ems[i].p);
        if (eng.compare_forms(f2, f1) == Order::Less) kept.p = ems[i].p;
      }
      seq.dedup_log.push_back({ems[i].q, seq.cases.back(), ems[i].rc});
      continue;
    }
    JumpPoint j;
    j.q = ems[i].q;
    j.p = ems[i].p;
    j.provenance = rule_tag_name(ems[i].rc.tag);
    j.source_index = ems[i].rc.pos;
    j.pre_threshold = j.q < seq.threshold;
    seq.points.push_back(std::move(j));
    seq.cases.push_back(ems[i].rc);
  }
  for (JumpPoint& j : seq.points) {
    LinearForm f = eng.form(j.q, j.p, goal / Rat(j.q));
    j.value = f.value;
    j.product = Rat(j.q) * j.value;
  }
  return seq;
}

}  // namespace detail

inline JumpSequence build_Q(AlphaEngine& eng, const Int& T,
                            const Rat& goal = Rat(Int(1),
                                                  to_int(1000000000000LL))) {
  return detail::assemble(eng, PsiVariant::SecondPair, emissions_Q(eng, T),
                          goal);
}

inline JumpSequence build_X(AlphaEngine& eng, const Int& T,
                            const Rat& goal = Rat(Int(1),
                                                  to_int(1000000000000LL))) {
  return detail::assemble(eng, PsiVariant::SecondFraction,
                          emissions_X(eng, T), goal);
}

/// Which rule produced q (after dedup, the kept producer).
inline RuleCase rule_provenance(const JumpSequence& seq, const Int& q) {
  for (size_t i = 0; i < seq.points.size(); ++i)
    if (seq.points[i].q == q) return seq.cases[i];
  throw NotAJumpPoint("q = " + q.get_str());
}

}  // namespace irrat
