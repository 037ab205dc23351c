#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "irrat/engine.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// Constructive witnesses:
//   hall_construct     a pair x, y with digits in {1,3,4,5,...} and values in
//                      [0,1/3] with H(x,y) = k, plus a block-word digit rule
//                      interleaving the two around separator digits 2.
//   witness_L2         a periodic alpha with digits >= 8 infinitely often
//                      whose Lagrange liminf hits a prescribed target.
//   witness_L2star_min a digit rule whose lower-envelope liminf is 1/2.
// All searches work on exact rational Moebius hulls: a digit prefix plus the
// interval of all admissible continuations is mapped to an exact value
// interval, and digits are chosen so the target stays inside the reachable
// sum/H interval.
// ---------------------------------------------------------------------------

/// H(x,y) = (1+x)(1+y)/(2+x+y), increasing in both arguments on [0,1/3]^2.
inline Enclosure hall_H(const Enclosure& x, const Enclosure& y) {
  if (x.lo < 0 || y.lo < 0 || x.hi > Rat(1, 3) || y.hi > Rat(1, 3))
    throw DomainViolation("hall_H arguments must lie in [0, 1/3]");
  Rat lo = (1 + x.lo) * (1 + y.lo) / (2 + x.lo + y.lo);
  Rat hi = (1 + x.hi) * (1 + y.hi) / (2 + x.hi + y.hi);
  return {lo, hi};
}

struct HallPoint {
  AlphaSpec x, y;        // the two coordinate words, completed periodically
  AlphaSpec combined;    // block-word digit rule around separator 2s
  Rat k;
  Enclosure H;           // exact hull of H over the chosen prefixes
  std::vector<long long> block_schedule;
};

namespace detail {

/// Digit prefix of a [0; d1, d2, ...] value as an exact Moebius form:
/// value(tail t) = (p1 + p0 t) / (q1 + q0 t), t = next complete tail.
struct MoebiusWord {
  Int p1 = 0, p0 = 1, q1 = 1, q0 = 0;
  std::vector<long long> digits;
  Rat t_lo, t_hi;  // outer bounds of admissible continuation values

  void push(long long d) {
    digits.push_back(d);
    Int np1 = p0 + to_int(d) * p1;
    Int nq1 = q0 + to_int(d) * q1;
    p0 = p1;
    q0 = q1;
    p1 = np1;
    q1 = nq1;
  }

  Rat value(const Rat& t) const {
    return (Rat(p1) + Rat(p0) * t) / (Rat(q1) + Rat(q0) * t);
  }

  Enclosure hull() const {
    Rat a = value(t_lo), b = value(t_hi);
    return a <= b ? Enclosure{a, b} : Enclosure{b, a};
  }

  /// Continuation value t that would make the word evaluate to x (unclamped).
  Rat t_for(const Rat& x) const {
    Rat den = x * Rat(q0) - Rat(p0);
    if (den == 0) return t_hi;
    return (Rat(p1) - x * Rat(q1)) / den;
  }
};

inline Enclosure hall_H_raw(const Enclosure& x, const Enclosure& y) {
  Rat lo = (1 + x.lo) * (1 + y.lo) / (2 + x.lo + y.lo);
  Rat hi = (1 + x.hi) * (1 + y.hi) / (2 + x.hi + y.hi);
  return {lo, hi};
}

inline Rat interval_dist(const Rat& k, const Enclosure& e) {
  if (k < e.lo) return e.lo - k;
  if (k > e.hi) return k - e.hi;
  return Rat(0);
}

}  // namespace detail

inline HallPoint hall_construct(const Rat& k, int depth = 32) {
  if (k < Rat(1, 2) || k > Rat(2, 3))
    throw RangeViolation("hall_construct target must lie in [1/2, 2/3]");
  Rat tol = Rat(Int(1), Int(1) << depth);

  // A digit 1 may be followed by arbitrarily large digits, so admissible
  // continuations are dense up to 1; [0, 1] is the exact outer interval.
  const Rat cont_hi(1);
  detail::MoebiusWord w[2];
  for (auto& m : w) {
    m.t_lo = Rat(0);
    m.t_hi = Rat(1, 3);  // first digit >= 3 keeps the value in [0, 1/3]
  }
  const long long digit_cap = 4000000000000LL;

  // Best next digit on one side: (digit, distance from k to the reachable
  // H interval).  Digit estimates come from inverting H at both endpoints
  // and the midpoint of the other hull; among the feasible candidates the
  // smallest digit wins, which keeps the two hull widths comparable so that
  // each side retains enough slack to absorb the other's digit-2 gaps.
  auto best_digit = [&](int side) -> std::pair<long long, Rat> {
    const detail::MoebiusWord& me = w[side];
    const detail::MoebiusWord& other = w[1 - side];
    long long dmin = me.digits.empty() ? 3 : 1;
    auto estimate = [&](const Rat& y) -> long long {
      Rat target = (k * (2 + y) - (1 + y)) / (1 + y - k);
      Enclosure mh = me.hull();
      if (target < mh.lo) target = mh.lo;
      if (target > mh.hi) target = mh.hi;
      Rat t = me.t_for(target);
      if (t <= 0) return digit_cap;
      Rat inv = Rat(1) / t;
      Int fl(inv.get_num() / inv.get_den());
      long long d = fl.fits_slong_p() ? fl.get_si() : digit_cap;
      return std::clamp(d, dmin, digit_cap);
    };
    Enclosure oh = other.hull();
    std::vector<long long> cands;
    for (long long est : {estimate(oh.lo), estimate((oh.lo + oh.hi) / 2),
                          estimate(oh.hi)})
      for (long long d = std::max(dmin, est - 3); d <= est + 3; ++d)
        if (d != 2) cands.push_back(d);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    long long best_d = -1;
    Rat best_dist;
    for (long long d : cands) {
      detail::MoebiusWord child = me;
      child.t_lo = Rat(0);
      child.t_hi = cont_hi;
      child.push(d);
      Enclosure h = side == 0 ? detail::hall_H_raw(child.hull(), oh)
                              : detail::hall_H_raw(oh, child.hull());
      Rat dist = detail::interval_dist(k, h);
      if (dist == 0) return {d, dist};  // smallest feasible digit
      if (best_d < 0 || dist < best_dist) {
        best_d = d;
        best_dist = dist;
      }
    }
    return {best_d, best_dist};
  };

  for (int round = 0; round < 400; ++round) {
    Enclosure h = detail::hall_H_raw(w[0].hull(), w[1].hull());
    if (h.width() <= tol && detail::interval_dist(k, h) <= tol) break;
    int side = w[0].hull().width() >= w[1].hull().width() ? 0 : 1;
    auto [d, dist] = best_digit(side);
    if (dist > 0) {
      // The wider coordinate cannot keep k reachable; let the other one
      // compensate first when it can do so exactly.
      auto [d2, dist2] = best_digit(1 - side);
      if (dist2 == 0) {
        side = 1 - side;
        d = d2;
      }
    }
    w[side].t_lo = Rat(0);
    w[side].t_hi = cont_hi;
    w[side].push(d);
  }

  HallPoint hp;
  hp.k = k;
  hp.H = detail::hall_H_raw(w[0].hull(), w[1].hull());
  if (detail::interval_dist(k, hp.H) > tol || hp.H.width() > 2 * tol)
    throw PrecisionCapExceeded("hall_construct did not converge");
  // Complete both words inside the admissible digit set.
  std::vector<long long> xd = w[0].digits, yd = w[1].digits;
  hp.x = AlphaSpec::periodic(0, xd, {3});
  hp.y = AlphaSpec::periodic(0, yd, {3});
  auto pad = [](std::vector<long long> v) {
    while (v.size() < 40) v.push_back(3);
    return v;
  };
  auto join = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  hp.combined =
      AlphaSpec::rule("blocks", {{"x", join(pad(xd))}, {"y", join(pad(yd))}});
  for (long long b = 1; b <= 25; ++b)
    hp.block_schedule.push_back(std::min<long long>(b, 40));
  return hp;
}

/// Periodic alpha whose Lagrange liminf equals lambda0, attained at digits
/// b >= 8: period (b, w, reverse(u)) with [0;u...] + [0;w...] = 1/lambda0-b.
inline AlphaSpec witness_L2(const Rat& lambda0) {
  // Admissible range (0, 3/(21+sqrt(15))]; the right endpoint is the root of
  // 426 z^2 - 126 z + 9 near 0.12061.
  if (lambda0 <= 0 || lambda0 > Rat(126, 852) ||
      426 * lambda0 * lambda0 - 126 * lambda0 + 9 < 0)
    throw RangeViolation("lambda target outside (0, 3/(21+sqrt(15))]");

  // Filler digits 1..6; their complete tails range over
  // [(sqrt(15)-3)/6, 6/(3+sqrt(15))] ~ [0.14549, 0.87298].
  const Rat band_lo(14549, 100000), band_hi(87299, 100000);
  Rat inv = Rat(1) / lambda0;
  // b with s = 1/lambda0 - b inside twice the filler band, and b >= 8.
  Rat want = inv - 2 * band_lo;
  Int fl(want.get_num() / want.get_den());
  long long b = fl.get_si();
  if (Rat(to_int(b)) > inv - 2 * band_lo) --b;
  if (b < 8) b = 8;
  Rat s = inv - Rat(to_int(b));

  detail::MoebiusWord w[2];
  for (auto& m : w) {
    m.t_lo = band_lo;
    m.t_hi = band_hi;
  }
  auto sum_hull = [&]() {
    return Enclosure{w[0].hull().lo + w[1].hull().lo,
                     w[0].hull().hi + w[1].hull().hi};
  };
  for (int round = 0; round < 120; ++round) {
    Enclosure sh = sum_hull();
    if (sh.width() < Rat(Int(1), to_int(1000000000000LL))) break;
    int side = w[0].hull().width() >= w[1].hull().width() ? 0 : 1;
    detail::MoebiusWord& me = w[side];
    long long best_d = -1;
    Rat best_dist;
    for (long long d = 1; d <= 6; ++d) {
      detail::MoebiusWord child = me;
      child.push(d);
      Enclosure ch = child.hull();
      Enclosure oh = w[1 - side].hull();
      Rat dist = detail::interval_dist(
          s, Enclosure{ch.lo + oh.lo, ch.hi + oh.hi});
      if (best_d < 0 || dist < best_dist) {
        best_d = d;
        best_dist = dist;
      }
    }
    if (best_dist > 0)
      throw PrecisionCapExceeded("witness_L2 greedy left the target");
    me.push(best_d);
  }

  std::vector<long long> period{b};
  for (long long d : w[1].digits) period.push_back(d);
  for (auto it = w[0].digits.rbegin(); it != w[0].digits.rend(); ++it)
    period.push_back(*it);
  return AlphaSpec::periodic(0, {}, period);
}

/// Digit rule b_1, 2, b_2, 2, ... with b_j = j + 2: the lower envelope at
/// the 2-positions tends to 1/2 from above.
inline AlphaSpec witness_L2star_min() {
  return AlphaSpec::rule("alt2", {{"start", "2"}});
}

}  // namespace irrat
