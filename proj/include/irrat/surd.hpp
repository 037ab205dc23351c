#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "irrat/alpha.hpp"
#include "irrat/enclosure.hpp"
#include "irrat/errors.hpp"

namespace irrat {

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Expand the quadratic surd (a + b*sqrt(d))/c into its eventually periodic
/// continued fraction via the standard (P + sqrt(D))/Q reduction cycle.
inline AlphaSpec quad_to_cf(long long a, long long b, long long d,
                            long long c) {
  if (c == 0) throw DomainViolation("zero denominator");
  if (d <= 0) throw DomainViolation("d must be positive");
  Int dd = to_int(d);
  if (isqrt(dd) * isqrt(dd) == dd || b == 0)
    throw NotIrrational("(a+b*sqrt(d))/c is rational");

  // Normalize to (P + sqrt(D))/Q with b folded into D and b, c made to
  // satisfy the sign convention (coefficient of the root positive).
  Int P = to_int(a), Q = to_int(c), D = to_int(b) * to_int(b) * dd;
  if (b < 0) {
    P = -P;
    Q = -Q;
  }
  // Ensure Q divides D - P^2 (scale the representation if needed).
  if (!mpz_divisible_p(Int(D - P * P).get_mpz_t(), Q.get_mpz_t())) {
    Int aq = Q < 0 ? Int(-Q) : Q;
    P *= aq;
    D *= aq * aq;
    Q *= aq;
  }

  Int s = isqrt(D);
  auto floor_step = [&](const Int& Pk, const Int& Qk) -> Int {
    // floor((Pk + sqrt(D))/Qk); sqrt(D) is irrational.
    Int num = Pk + s;
    Int f;
    if (Qk > 0) {
      mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), Qk.get_mpz_t());
    } else {
      Int aq = -Qk;
      mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
      f = -f - 1;
    }
    return f;
  };

  Int a0 = floor_step(P, Q);
  // State after removing a_k: P' = a*Q - P, Q' = (D - P'^2)/Q.
  auto advance = [&](Int& Pk, Int& Qk, const Int& ak) {
    Pk = ak * Qk - Pk;
    Qk = (D - Pk * Pk) / Qk;
  };
  advance(P, Q, a0);

  std::vector<long long> digits;
  std::map<std::pair<Int, Int>, size_t> seen;
  size_t cycle_start = 0;
  while (true) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(key, digits.size());
    Int ak = floor_step(P, Q);
    if (!ak.fits_slong_p())
      throw DomainViolation("partial quotient exceeds machine range");
    digits.push_back(ak.get_si());
    advance(P, Q, ak);
  }

  std::vector<long long> pre(digits.begin(),
                             digits.begin() + static_cast<long>(cycle_start));
  std::vector<long long> period(
      digits.begin() + static_cast<long>(cycle_start), digits.end());
  if (!a0.fits_slong_p())
    throw DomainViolation("integer part exceeds machine range");
  return AlphaSpec::periodic(a0.get_si(), std::move(pre), std::move(period));
}

inline AlphaSpec sqrt_spec(long long d) { return quad_to_cf(0, 1, d, 1); }

}  // namespace irrat
