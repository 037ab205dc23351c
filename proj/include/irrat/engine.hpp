#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "irrat/alpha.hpp"
#include "irrat/enclosure.hpp"
#include "irrat/errors.hpp"

namespace irrat {

/// Row n of the convergent table.  Seeds: p_{-1}=1, q_{-1}=0, p_0=a0, q_0=1;
/// then p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
/// sign = sign of q_n*alpha - p_n, i.e. +1 for even n, -1 for odd n.
struct Convergent {
  long long n;
  Int p;
  Int q;
  int sign;
};

enum class Order { Less, Greater };

class AlphaEngine;

/// The linear form |q*alpha - p| for a fixed lattice point (q,p), q >= 1.
struct LinearForm {
  Int q;
  Int p;
  Enclosure value;  // last computed enclosure of |q*alpha - p|

  bool same_point(const LinearForm& o) const { return q == o.q && p == o.p; }
};

/// Exact continued-fraction engine for one irrational alpha.  Memoizes the
/// digit prefix and convergent table; all public results are exact rational
/// enclosures.  Instances are cheap to copy; concurrent callers should each
/// hold their own copy (memoization is not internally synchronized).
class AlphaEngine {
 public:
  explicit AlphaEngine(AlphaSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    conv_.push_back({-1, Int(1), Int(0), -1});
    conv_.push_back({0, to_int(spec_.a0), Int(1), +1});
  }

  const AlphaSpec& spec() const { return spec_; }

  /// Partial quotient a_n, n >= 1.
  long long digit(long long n) {
    ensure_digits(n);
    return digits_[static_cast<size_t>(n - 1)];
  }

  std::vector<long long> digits(long long count) {
    ensure_digits(count);
    return {digits_.begin(), digits_.begin() + count};
  }

  /// True when a_n can be produced without error.
  bool has_digit(long long n) {
    try {
      ensure_digits(n);
      return true;
    } catch (const PrefixExhausted&) {
      return false;
    }
  }

  /// Convergent row n, n >= -1.
  const Convergent& convergent(long long n) {
    ensure_convergents(n);
    return conv_[static_cast<size_t>(n + 1)];
  }

  /// Largest index n with q_n <= bound (n >= 0).  Digits must suffice.
  long long index_below(const Int& bound) {
    if (bound < 1) throw DomainViolation("bound < 1");
    long long n = 0;
    while (true) {
      ensure_convergents(n + 1);
      if (conv_[static_cast<size_t>(n + 2)].q > bound) return n;
      ++n;
    }
  }

  /// Enclosure of alpha itself with width <= goal.
  Enclosure alpha(const Rat& goal) {
    long long m = bracket_depth(goal);
    return bracket_at(m);
  }

  /// Decide alpha vs an exact rational r (alpha must be irrational, so the
  /// comparison always resolves).
  Order compare_to(const Rat& r) {
    long long m = 0;
    while (true) {
      Enclosure e = bracket_at(m);
      if (e.hi < r) return Order::Less;
      if (e.lo > r) return Order::Greater;
      // A convergent may equal r exactly only on its boundary; deepen.
      m += 2;
      check_depth(m);
    }
  }

  /// Enclosure of the tail alpha_n = [a_n; a_{n+1}, ...], n >= 1.
  Enclosure tail(long long n, const Rat& goal) {
    Int h2 = 1, k2 = 0;  // index -1 of the shifted expansion
    Int h1 = to_int(digit(n)), k1 = 1;
    long long j = n + 1;
    Rat inv_goal = 1 / goal;
    while (k1 * k2 < inv_goal || k2 == 0) {
      Int a = to_int(digit(j++));
      Int h0 = a * h1 + h2;
      Int k0 = a * k1 + k2;
      h2 = std::move(h1);
      k2 = std::move(k1);
      h1 = std::move(h0);
      k1 = std::move(k0);
    }
    Rat r1(h1, k1), r2(h2, k2);
    r1.canonicalize();
    r2.canonicalize();
    return r1 < r2 ? Enclosure{r1, r2} : Enclosure{r2, r1};
  }

  /// Dual tail alpha*_n = q_{n-1}/q_n = [0; a_n, ..., a_1], exact.
  Rat dual_tail(long long n) {
    if (n < 0) throw DomainViolation("dual_tail needs n >= 0");
    Rat r(convergent(n - 1).q, convergent(n).q);
    r.canonicalize();
    return r;
  }

  /// Enclosure of xi_n = |q_n alpha - p_n| = 1/(alpha_{n+1} q_n + q_{n-1}),
  /// n >= -1 (xi_{-1} = 1 exactly).
  Enclosure xi(long long n, const Rat& goal) {
    if (n == -1) return Enclosure(Rat(1));
    Enclosure t = tail(n + 1, goal);
    const Int& qn = convergent(n).q;
    const Int& qp = convergent(n - 1).q;
    Rat lo = 1 / (t.hi * qn + qp);
    Rat hi = 1 / (t.lo * qn + qp);
    return {lo, hi};
  }

  /// floor(alpha * 2^B), certified by convergent brackets.
  Int floor_scaled(long B) {
    long long m = bracket_depth(Rat(Int(1), Int(1) << B));
    while (true) {
      const Convergent& c1 = conv_[static_cast<size_t>(m + 1)];
      const Convergent& c2 = conv_[static_cast<size_t>(m + 2)];
      Int f1, f2;
      mpz_fdiv_q(f1.get_mpz_t(), Int(c1.p << B).get_mpz_t(),
                 c1.q.get_mpz_t());
      mpz_fdiv_q(f2.get_mpz_t(), Int(c2.p << B).get_mpz_t(),
                 c2.q.get_mpz_t());
      if (f1 == f2) return f1;
      ++m;
      ensure_convergents(m + 1);
      check_depth(m);
    }
  }

  /// The integer p minimizing |q*alpha - p| (unique for irrational alpha).
  Int nearest_p(const Int& q) {
    if (q < 1) throw DomainViolation("q must be >= 1");
    for (long B = 64;; B *= 2) {
      Int A = floor_scaled(B);
      Int num = A * q;
      Int half = Int(1) << (B - 1);
      Int r1, r2;
      mpz_fdiv_q_2exp(r1.get_mpz_t(), Int(num + half).get_mpz_t(),
                      static_cast<mp_bitcnt_t>(B));
      mpz_fdiv_q_2exp(r2.get_mpz_t(), Int(num + q + half).get_mpz_t(),
                      static_cast<mp_bitcnt_t>(B));
      if (r1 == r2) return r1;
      check_depth(B);
    }
  }

  /// Linear form with caller-chosen p.
  LinearForm form(Int q, Int p, const Rat& goal = Rat(1, 1000000)) {
    LinearForm f{std::move(q), std::move(p), {}};
    refine_form(f, goal);
    return f;
  }

  /// Linear form at the nearest p, i.e. value = ||q*alpha||.
  LinearForm form(Int q, const Rat& goal = Rat(1, 1000000)) {
    Int p = nearest_p(q);
    return form(std::move(q), std::move(p), goal);
  }

  /// Tighten f.value to width <= goal.
  void refine_form(LinearForm& f, const Rat& goal) {
    Rat agoal = goal / Rat(f.q);
    Enclosure a = alpha(agoal);
    f.value = (Rat(f.q) * a - Rat(f.p)).abs();
  }

  /// Exact order of |q1 a - p1| vs |q2 a - p2| (distinct lattice points).
  Order compare_forms(LinearForm& f1, LinearForm& f2) {
    if (f1.same_point(f2)) throw IdenticalForms();
    Rat goal(1, 1024);
    while (true) {
      refine_form(f1, goal);
      refine_form(f2, goal);
      if (f1.value.strictly_below(f2.value)) return Order::Less;
      if (f2.value.strictly_below(f1.value)) return Order::Greater;
      goal /= 1 << 10;
      check_depth(mpz_sizeinbase(goal.get_den().get_mpz_t(), 2));
    }
  }

 private:
  void ensure_digits(long long n) {
    while (static_cast<long long>(digits_.size()) < n) {
      long long k = static_cast<long long>(digits_.size()) + 1;
      digits_.push_back(produce_digit(k));
    }
  }

  long long produce_digit(long long k) {
    if (auto* p = std::get_if<PeriodicCF>(&spec_.tail)) {
      size_t i = static_cast<size_t>(k - 1);
      if (i < p->preperiod.size()) return p->preperiod[i];
      return p->period[(i - p->preperiod.size()) % p->period.size()];
    }
    if (std::holds_alternative<NamedE>(spec_.tail)) {
      return (k % 3 == 2) ? 2 * ((k + 1) / 3) : 1;
    }
    if (auto* e = std::get_if<ExplicitPrefix>(&spec_.tail)) {
      size_t i = static_cast<size_t>(k - 1);
      if (i >= e->digits.size()) throw PrefixExhausted();
      return e->digits[i];
    }
    return rule_digit(std::get<GeneratorRule>(spec_.tail), k);
  }

  void ensure_convergents(long long n) {
    while (static_cast<long long>(conv_.size()) < n + 2) {
      long long k = static_cast<long long>(conv_.size()) - 1;
      Int a = to_int(digit(k));
      const Convergent& c1 = conv_[conv_.size() - 1];
      const Convergent& c2 = conv_[conv_.size() - 2];
      conv_.push_back({k, a * c1.p + c2.p, a * c1.q + c2.q,
                       k % 2 == 0 ? +1 : -1});
    }
  }

  /// Smallest depth m with bracket width 1/(q_m q_{m+1}) <= goal.
  long long bracket_depth(const Rat& goal) {
    Rat inv = 1 / goal;
    long long m = 0;
    while (true) {
      ensure_convergents(m + 1);
      const Int& q1 = conv_[static_cast<size_t>(m + 1)].q;
      const Int& q2 = conv_[static_cast<size_t>(m + 2)].q;
      if (q1 > 0 && Rat(q1 * q2) >= inv) return m;
      ++m;
      check_depth(m);
    }
  }

  Enclosure bracket_at(long long m) {
    ensure_convergents(m + 1);
    const Convergent& c1 = conv_[static_cast<size_t>(m + 1)];
    const Convergent& c2 = conv_[static_cast<size_t>(m + 2)];
    Rat r1(c1.p, c1.q), r2(c2.p, c2.q);
    r1.canonicalize();
    r2.canonicalize();
    return r1 < r2 ? Enclosure{r1, r2} : Enclosure{r2, r1};
  }

  static void check_depth(long long d) {
    if (d > kDepthCap) throw PrecisionCapExceeded();
  }

  static constexpr long long kDepthCap = 4'000'000;

  AlphaSpec spec_;
  std::vector<long long> digits_;
  std::vector<Convergent> conv_;
};

}  // namespace irrat
