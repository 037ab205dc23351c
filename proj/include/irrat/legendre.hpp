#pragma once

#include <array>
#include <utility>
#include <vector>

#include "irrat/psi.hpp"
#include "irrat/spectrum.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// Convergent-membership criteria for a reduced fraction p/q:
//   farey_neighbors          the two Farey-adjacent fractions of order q,
//                            computed from the two CF representations of p/q
//   is_convergent_canonical  membership via the open mediant interval --
//                            the unambiguous reference procedure
//   legendre_test            the inequality |q(q*alpha - p)| < q/(q+q'),
//                            with q' selected by a parity convention
//   lucas_test               |alpha - p/q| < 1/(q(q+qPrev)) for a
//                            unimodular pair
//   predicate_suite          the six spectrum-threshold predicates, each
//                            cross-checked against the convergent list
// ---------------------------------------------------------------------------

struct FareyNeighbors {
  Int pMinus, qMinus;  // left neighbor (qMinus may be 0 only for pPlus side)
  Int pPlus, qPlus;    // right neighbor; (1, 0) plays the role of infinity
  Rat lo, hi;          // open mediant interval around p/q
};

/// Which parity of the CF length goes with a positive theta = q(q*alpha-p).
/// For a true convergent p_t/q_t the sign of alpha - p_t/q_t is (-1)^t, so
/// theta > 0 matches even t; Swapped encodes that pairing, AsPrinted the
/// opposite one.  Both remain callable; tests resolve which one agrees with
/// the canonical procedure.
enum class ParityConvention { AsPrinted, Swapped };

struct LegendreCertificate {
  Int p, q;
  Enclosure theta;  // q(q*alpha - p), signed
  std::vector<long long> cfEven, cfOdd;  // the two CF forms of p/q
  Int qPrime;       // denominator of the parity-selected previous convergent
  Rat bound;        // q/(q + qPrime)
  bool verdict = false;
  bool canonicalVerdict = false;
};

namespace detail {

/// Continued-fraction digits of p/q (exact, floor convention, last digit
/// >= 2 unless the expansion is just [a0]).
inline std::vector<long long> cf_of_fraction(Int p, Int q) {
  std::vector<long long> out;
  while (q != 0) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a.get_si());
    p = q;
    q = r;
  }
  return out;
}

/// Numerator/denominator of [d0; d1, ..., d_last].
inline std::pair<Int, Int> cf_value(const std::vector<long long>& d) {
  Int p2 = 1, q2 = 0, p1 = to_int(d[0]), q1 = 1;
  for (size_t i = 1; i < d.size(); ++i) {
    Int a = to_int(d[i]);
    Int p0 = a * p1 + p2, q0 = a * q1 + q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = std::move(p0);
    q1 = std::move(q0);
  }
  return {p1, q1};
}

inline void require_reduced(const Int& p, const Int& q) {
  if (q < 1) throw DomainViolation("denominator must be >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw NotReduced("gcd(" + p.get_str() + "," + q.get_str() +
                               ") != 1");
}

/// The representation with the last digit split off as a trailing 1 (the
/// Euclid form never ends in 1, so this is always the other parity).
inline std::vector<long long> split_last(std::vector<long long> d) {
  d.back() -= 1;
  d.push_back(1);
  return d;
}

}  // namespace detail

inline FareyNeighbors farey_neighbors(const Int& p, const Int& q) {
  detail::require_reduced(p, q);
  std::vector<long long> d = detail::cf_of_fraction(p, q);
  std::vector<long long> other = detail::split_last(d);
  // Previous convergent of each representation.
  auto prev_of = [](const std::vector<long long>& v) -> std::pair<Int, Int> {
    if (v.size() == 1) return {Int(1), Int(0)};
    std::vector<long long> head(v.begin(), v.end() - 1);
    return detail::cf_value(head);
  };
  auto [pa, qa] = prev_of(d);
  auto [pb, qb] = prev_of(other);

  FareyNeighbors fn;
  // Assign sides by comparing with p/q; a zero denominator means +infinity.
  auto is_left = [&](const Int& pn, const Int& qn) {
    if (qn == 0) return false;
    return Rat(pn) * Rat(q) < Rat(p) * Rat(qn);
  };
  if (is_left(pa, qa)) {
    fn.pMinus = pa;
    fn.qMinus = qa;
    fn.pPlus = pb;
    fn.qPlus = qb;
  } else {
    fn.pMinus = pb;
    fn.qMinus = qb;
    fn.pPlus = pa;
    fn.qPlus = qa;
  }
  fn.lo = Rat(p + fn.pMinus, q + fn.qMinus);
  fn.hi = Rat(p + fn.pPlus, q + fn.qPlus);
  fn.lo.canonicalize();
  fn.hi.canonicalize();
  return fn;
}

inline bool is_convergent_canonical(AlphaEngine& eng, const Int& p,
                                    const Int& q) {
  FareyNeighbors fn = farey_neighbors(p, q);
  return eng.compare_to(fn.lo) == Order::Greater &&
         eng.compare_to(fn.hi) == Order::Less;
}

inline LegendreCertificate legendre_test(
    AlphaEngine& eng, const Int& p, const Int& q, ParityConvention conv,
    const Rat& goal = detail::default_goal()) {
  detail::require_reduced(p, q);
  LegendreCertificate cert;
  cert.p = p;
  cert.q = q;

  // Signed theta = q^2 alpha - q p, refined until its sign is certain.
  Rat qq(q * q), qp(q * p);
  Rat g = goal / (qq + 1);
  while (true) {
    Enclosure a = eng.alpha(g);
    cert.theta = (qq * a) - qp;
    if ((cert.theta.lo > 0 || cert.theta.hi < 0) &&
        cert.theta.width() <= goal)
      break;
    g /= 1024;
  }
  bool theta_positive = cert.theta.lo > 0;

  std::vector<long long> d = detail::cf_of_fraction(p, q);
  std::vector<long long> other = detail::split_last(d);
  // Representation index t counts from a0, so parity = (length - 1) mod 2.
  std::vector<long long>& evenRep = (d.size() % 2 == 1) ? d : other;
  std::vector<long long>& oddRep = (d.size() % 2 == 1) ? other : d;
  cert.cfEven = evenRep;
  cert.cfOdd = oddRep;

  bool want_even = conv == ParityConvention::Swapped ? theta_positive
                                                     : !theta_positive;
  const std::vector<long long>& sel = want_even ? evenRep : oddRep;
  if (sel.size() == 1) {
    cert.qPrime = 0;
  } else {
    std::vector<long long> head(sel.begin(), sel.end() - 1);
    cert.qPrime = detail::cf_value(head).second;
  }
  cert.bound = Rat(q, q + cert.qPrime);
  cert.bound.canonicalize();

  // |theta| vs the rational bound; theta is irrational, so this resolves.
  Enclosure at = cert.theta.abs();
  while (!(at.hi < cert.bound) && !(at.lo > cert.bound)) {
    g /= 1024;
    Enclosure a = eng.alpha(g);
    cert.theta = (qq * a) - qp;
    at = cert.theta.abs();
  }
  cert.verdict = at.hi < cert.bound;
  cert.canonicalVerdict = is_convergent_canonical(eng, p, q);
  return cert;
}

inline bool lucas_test(AlphaEngine& eng, const Int& pPrev, const Int& qPrev,
                       const Int& p, const Int& q,
                       const Rat& goal = detail::default_goal()) {
  Int det = pPrev * q - p * qPrev;
  if (det != 1 && det != -1)
    throw NotUnimodular("det = " + det.get_str());
  if (qPrev < 1 || q < qPrev)
    throw DomainViolation("need 1 <= qPrev <= q");
  // |q alpha - p| < 1/(q + qPrev), exactly.
  Rat bound(Int(1), q + qPrev);
  Rat g = goal;
  while (true) {
    LinearForm f = eng.form(q, p, g);
    if (f.value.hi < bound) return true;
    if (f.value.lo > bound) return false;
    g /= 1024;
  }
}

// ---------------------------------------------------------------------------
// The six spectrum predicates.  Each entry records whether the premise
// certainly fires at (p, q) and, when it does, whether the promised
// conclusion (q is a convergent denominator / p/q is a convergent) holds.
// ---------------------------------------------------------------------------

struct PredicateEntry {
  bool fired = false;
  bool conclusionHolds = false;
};

struct PredicateVerdicts {
  // 1: ||q a|| < psi2(q)      2: |q a - p| < psi2*(q)
  // 3: q||q a|| < j           4: q >= T and q||q a|| <= k - eps
  // 5: q|q a - p| < j*        6: q >= T and q|q a - p| <= k* - eps
  std::array<PredicateEntry, 6> statements;
};

inline PredicateVerdicts predicate_suite(
    AlphaEngine& eng, const Int& p, const Int& q, const SpectrumReport& report,
    const Rat& eps = Rat(1, 100), const Int& T = Int(1),
    const Rat& goal = detail::default_goal()) {
  detail::require_reduced(p, q);
  if (q > eng.convergent(report.horizon).q)
    throw InsufficientHorizon("q beyond the report's convergent coverage");
  PredicateVerdicts out;

  bool q_is_denom = false;
  for (long long n = 0; n <= report.horizon; ++n)
    if (eng.convergent(n).q == q) q_is_denom = true;
  bool pq_is_convergent = is_convergent_canonical(eng, p, q);

  LinearForm best = eng.form(q, goal);          // nearest numerator
  LinearForm given = eng.form(q, p, goal);      // caller's numerator
  Enclosure bestProd = Rat(q) * best.value;
  Enclosure givenProd = Rat(q) * given.value;

  // 1 and 2: beat the second-best value at t = q.
  for (int idx : {0, 1}) {
    PsiVariant v =
        idx == 0 ? PsiVariant::SecondPair : PsiVariant::SecondFraction;
    LinearForm s = psi_second(eng, Rat(q), v, goal);
    LinearForm& f = idx == 0 ? best : given;
    bool fires = false;
    if (!f.same_point(s)) fires = eng.compare_forms(f, s) == Order::Less;
    out.statements[idx].fired = fires;
    if (fires)
      out.statements[idx].conclusionHolds =
          idx == 0 ? q_is_denom : pq_is_convergent;
  }

  // 3 and 5: products certainly below the running-infimum estimates.  The
  // infima run over jumps at q >= threshold, so the inference starts there
  // (below it, e.g. 2/1 for [1;(2)], the premise can hold spuriously).
  bool past_threshold = q >= t_threshold(eng);
  out.statements[2].fired = past_threshold && bestProd.hi < report.j.lo;
  if (out.statements[2].fired) out.statements[2].conclusionHolds = q_is_denom;
  out.statements[4].fired = past_threshold && givenProd.hi < report.j_star.lo;
  if (out.statements[4].fired)
    out.statements[4].conclusionHolds = pq_is_convergent;

  // 4 and 6: products at most the liminf estimates minus eps, beyond T.
  out.statements[3].fired = q >= T && bestProd.hi <= report.k.lo - eps;
  if (out.statements[3].fired) out.statements[3].conclusionHolds = q_is_denom;
  out.statements[5].fired = q >= T && givenProd.hi <= report.k_star.lo - eps;
  if (out.statements[5].fired)
    out.statements[5].conclusionHolds = pq_is_convergent;
  return out;
}

/// The liminf statements (4 and 6) hold only beyond some T(alpha, eps)
/// which is asserted to exist, not given by a formula.  This reports the
/// smallest T that leaves no false-conclusion firing for denominators up
/// to q_cap: the sweep runs with T = 1 and T is one past the largest
/// offending q.  statement is the 1-based statement number (4 or 6).
inline Int smallest_reliable_T(AlphaEngine& eng, const SpectrumReport& report,
                               int statement, const Int& q_cap,
                               const Rat& eps = Rat(1, 100),
                               const Rat& goal = detail::default_goal()) {
  if (statement != 4 && statement != 6)
    throw DomainViolation("only statements 4 and 6 depend on T");
  Int T(1);
  for (Int q(1); q <= q_cap; ++q) {
    Int pn = eng.nearest_p(q);
    for (int dp = -1; dp <= 1; ++dp) {
      Int p = pn + dp;
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      PredicateVerdicts v =
          predicate_suite(eng, p, q, report, eps, Int(1), goal);
      const PredicateEntry& e = v.statements[statement - 1];
      if (e.fired && !e.conclusionHolds && T <= q) T = q + 1;
    }
  }
  return T;
}

}  // namespace irrat
