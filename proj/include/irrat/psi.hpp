#pragma once

#include <gmpxx.h>

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "irrat/engine.hpp"

namespace irrat {

enum class PsiVariant { Best, SecondPair, SecondFraction };

inline const char* variant_name(PsiVariant v) {
  switch (v) {
    case PsiVariant::Best: return "best";
    case PsiVariant::SecondPair: return "pair";
    case PsiVariant::SecondFraction: return "fraction";
  }
  return "?";
}

/// A denominator where the running minimum of the chosen approximation
/// function strictly drops, together with the new minimizing form.
struct JumpPoint {
  Int q;
  Int p;
  Enclosure value;    // |q*alpha - p|
  Enclosure product;  // q * value
  std::string provenance;       // "scan" or a rule tag
  long long source_index = -1;  // digit index for rule provenance
  bool pre_threshold = false;   // q < threshold t
};

/// Threshold t in {2,3,4} from the first three fractional-part digits.
inline int t_threshold(AlphaEngine& eng) {
  long long a1 = eng.digit(1), a2 = eng.digit(2), a3 = eng.digit(3);
  if ((a1 == 1 && a2 >= 2) || a1 >= 3) return 2;
  if ((a1 == 1 && a2 == 1 && a3 >= 2) || (a1 == 2 && a2 >= 2)) return 3;
  return 4;  // a1=a2=a3=1 or (a1=2, a2=1)
}

/// Best approximation: the convergent form with q_n <= t < q_{n+1}.
inline LinearForm psi(AlphaEngine& eng, const Rat& t,
                      const Rat& goal = Rat(Int(1), to_int(1000000000000LL))) {
  if (t < 1) throw DomainViolation("t must be >= 1");
  Int bound(t.get_num() / t.get_den());
  long long n = eng.index_below(bound);
  // q_0 = q_1 is possible (a_1 = 1); the later row is the best form.
  return eng.form(eng.convergent(n).q, eng.convergent(n).p, goal);
}

// ---------------------------------------------------------------------------
// Exact brute-force scan.
//
// alpha is bracketed as A <= alpha * 2^B < A + 1 with certified integer A;
// then q*alpha*2^B lies in [A*q, A*q + q], and all nearest-integer and
// running-minimum decisions are made on integer intervals, refining B on the
// (measure-zero rare) ambiguous cases.  Exclusion sets are precomputed maps
// from q to the excluded numerators near q*alpha.
// ---------------------------------------------------------------------------

class JumpScanner {
 public:
  JumpScanner(AlphaEngine& eng, long long T, PsiVariant variant)
      : eng_(eng), T_(T), variant_(variant) {
    if (T < 1) throw DomainViolation("T must be >= 1");
    build_exclusions();
    long tb = 2 * static_cast<long>(64 - __builtin_clzll(
                      static_cast<unsigned long long>(T)));
    set_precision(tb + 48);
  }

  /// All jump points q <= T of the variant function, ascending.
  std::vector<JumpPoint> run() {
    std::vector<JumpPoint> out;
    Int num = 0;  // A * q, maintained incrementally
    bool have_best = false;
    Int best_lo, best_hi;  // scaled value interval of the running minimum
    long long best_q = 0;
    for (long long q = 1; q <= T_; ++q) {
      num += A_;
      Cand c;
      while (!pick_minimizer(q, num, c)) {
        bump_precision();
        num = A_ * to_int(q);
        if (have_best) rescale_best(best_q, out.back().p, best_lo, best_hi);
      }
      if (!have_best || c.hi < best_lo) {
        // certainly a strict drop
        out.push_back(make_jump(q, c.p));
        have_best = true;
        best_lo = c.lo;
        best_hi = c.hi;
        best_q = q;
        continue;
      }
      if (c.lo > best_hi) continue;  // certainly not
      // Ambiguous against the running minimum: refine until resolved.
      while (true) {
        bump_precision();
        num = A_ * to_int(q);
        rescale_best(best_q, out.back().p, best_lo, best_hi);
        if (!pick_minimizer(q, num, c)) continue;
        if (c.hi < best_lo) {
          out.push_back(make_jump(q, c.p));
          best_lo = c.lo;
          best_hi = c.hi;
          best_q = q;
          break;
        }
        if (c.lo > best_hi) break;
      }
    }
    return out;
  }

  double throughput_hint() const { return static_cast<double>(T_); }

 private:
  struct Cand {
    Int p;
    Int lo, hi;  // scaled enclosure of |q*alpha - p| at scale 2^B
  };

  void set_precision(long B) {
    B_ = B;
    A_ = eng_.floor_scaled(B_);
    pow_ = Int(1) << B_;
  }

  void bump_precision() { set_precision(B_ + 128); }

  void rescale_best(long long q, const Int& p, Int& lo, Int& hi) {
    Int qz = to_int(q);
    Int num = A_ * qz;
    value_interval(qz, num, p, lo, hi);
  }

  /// Scaled enclosure of |q*alpha - p| from the bracket of q*alpha.
  void value_interval(const Int& q, const Int& num, const Int& p, Int& lo,
                      Int& hi) {
    Int e = num - (p << static_cast<mp_bitcnt_t>(B_));
    if (e >= 0) {
      lo = e;
      hi = e + q;
    } else if (e + q <= 0) {
      lo = -(e + q);
      hi = -e;
    } else {
      lo = 0;
      hi = std::max(Int(e + q), Int(-e));
    }
  }

  bool excluded(long long q, const Int& p) const {
    auto it = excl_.find(q);
    if (it == excl_.end()) return false;
    for (const auto& ep : it->second)
      if (p == ep) return true;
    return false;
  }

  /// Find the admissible p minimizing |q*alpha - p|.  Returns false when the
  /// current precision cannot certify the choice.
  bool pick_minimizer(long long ql, const Int& num, Cand& c) {
    Int q = to_int(ql);
    Int u;
    mpz_fdiv_r_2exp(u.get_mpz_t(), num.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(B_));
    Int f = (num - u) >> static_cast<mp_bitcnt_t>(B_);
    bool has_excl = excl_.find(ql) != excl_.end();
    if (!has_excl) {
      // Fast path: nearest of f, f+1 decided by 2u + q vs 2^B.
      Int two_u = u << 1;
      if (two_u + q < pow_) {
        c.p = f;
        c.lo = u;
        c.hi = u + q;
        return true;
      }
      if (two_u > pow_ + q) {
        c.p = f + 1;
        c.lo = pow_ - u - q;
        c.hi = pow_ - u;
        return true;
      }
      return false;  // straddles the midpoint at this precision
    }
    // Slow path: enumerate a window of candidates, drop excluded ones,
    // certify the minimum by interval comparison.
    constexpr int kWin = 8;
    std::vector<Cand> cands;
    for (long long off = -kWin; off <= kWin + 1; ++off) {
      Cand x;
      x.p = f + to_int(off);
      if (excluded(ql, x.p)) continue;
      value_interval(q, num, x.p, x.lo, x.hi);
      cands.push_back(std::move(x));
    }
    if (cands.empty()) throw EmptyAdmissibleSet();
    size_t mi = 0;
    for (size_t i = 1; i < cands.size(); ++i)
      if (cands[i].hi < cands[mi].hi) mi = i;
    for (size_t i = 0; i < cands.size(); ++i)
      if (i != mi && cands[i].lo < cands[mi].hi) return false;
    c = cands[mi];
    return true;
  }

  JumpPoint make_jump(long long q, Int p) {
    JumpPoint j;
    j.q = to_int(q);
    j.p = std::move(p);
    j.provenance = "scan";
    return j;
  }

  /// Exclusions near q*alpha: convergent pairs (SecondPair) or all integer
  /// multiples of convergent pairs (SecondFraction).  For the fraction
  /// variant, multiples with |q*alpha - p| > kWin + 2 can never enter a
  /// candidate window and are skipped, keeping the map small.
  void build_exclusions() {
    if (variant_ == PsiVariant::Best) return;
    for (long long n = 0;; ++n) {
      const Convergent c = eng_.convergent(n);
      if (c.q > to_int(T_)) break;
      long long qn = c.q.get_si();
      if (variant_ == PsiVariant::SecondPair) {
        excl_[qn].push_back(c.p);
        continue;
      }
      Enclosure xin = eng_.xi(n, Rat(1, 1024));
      long long kmax = T_ / qn;
      if (xin.lo > 0) {
        Rat lim = Rat(10) / xin.lo;
        Int li(lim.get_num() / lim.get_den() + 1);
        if (li.fits_slong_p() && li.get_si() < kmax) kmax = li.get_si();
      }
      for (long long k = 1; k <= kmax; ++k)
        excl_[k * qn].push_back(to_int(k) * c.p);
    }
  }

  AlphaEngine& eng_;
  long long T_;
  PsiVariant variant_;
  long B_ = 0;
  Int A_;
  Int pow_;
  std::unordered_map<long long, std::vector<Int>> excl_;
};

/// All jumps of the variant function on q in [1, T], with exact value and
/// product enclosures of width <= goal attached.
inline std::vector<JumpPoint> jump_scan(
    AlphaEngine& eng, long long T, PsiVariant variant,
    const Rat& goal = Rat(Int(1), to_int(1000000000000LL))) {
  JumpScanner sc(eng, T, variant);
  std::vector<JumpPoint> jumps = sc.run();
  int t = t_threshold(eng);
  for (JumpPoint& j : jumps) {
    Rat vgoal = goal / Rat(j.q);
    LinearForm f = eng.form(j.q, j.p, vgoal);
    j.value = f.value;
    j.product = Rat(j.q) * j.value;
    j.pre_threshold = j.q < t;
  }
  return jumps;
}

/// The variant minimum over 1 <= q <= t, by scan.
inline LinearForm psi_second(
    AlphaEngine& eng, const Rat& t, PsiVariant variant,
    const Rat& goal = Rat(Int(1), to_int(1000000000000LL))) {
  if (t < 1) throw DomainViolation("t must be >= 1");
  if (variant == PsiVariant::Best) return psi(eng, t, goal);
  Int bound(t.get_num() / t.get_den());
  if (!bound.fits_slong_p()) throw DomainViolation("t too large for scan");
  std::vector<JumpPoint> jumps =
      jump_scan(eng, bound.get_si(), variant, goal);
  if (jumps.empty()) throw EmptyAdmissibleSet();
  const JumpPoint& last = jumps.back();
  return eng.form(last.q, last.p, goal / Rat(last.q));
}

}  // namespace irrat
