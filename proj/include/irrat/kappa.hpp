#pragma once

#include "irrat/engine.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// The four approximation functionals kappa^1..kappa^4 at index n, each
// computed along two independent routes:
//   viaProducts:  integer-combination products q * |q alpha - p|
//   viaTails:     closed forms in the tail alpha_n and the dual tail
//                 alpha*_{n-1} = q_{n-2}/q_{n-1}
// Both routes enclose the same real number; tests require the enclosures to
// intersect at high precision.
// ---------------------------------------------------------------------------

struct KappaSample {
  long long n = 0;
  int j = 0;
  Enclosure viaProducts;
  Enclosure viaTails;
  long long digit = 0;
};

namespace detail {

inline Rat default_goal() { return Rat(Int(1), to_int(1000000000000LL)); }

/// Product-route evaluation with xi precision scaled to the q factor.
inline Enclosure kappa_products(AlphaEngine& eng, long long n, int j,
                                const Rat& goal) {
  Convergent c2 = eng.convergent(n - 2);
  Convergent c1 = eng.convergent(n - 1);
  Convergent c0 = eng.convergent(n);
  Rat qf;  // the q factor in front, for xi precision budgeting
  switch (j) {
    case 1: qf = Rat(Int(c2.q + c1.q)); break;
    case 2: qf = Rat(Int(c0.q - c1.q)); break;
    case 3: qf = Rat(Int(2 * c2.q + c1.q)); break;
    case 4: qf = Rat(Int(4 * c1.q)); break;
    default: throw DomainViolation("kappa index must be 1..4");
  }
  Rat xg = goal / (4 * (qf + 1));
  Enclosure x2 = eng.xi(n - 2, xg);
  Enclosure x1 = eng.xi(n - 1, xg);
  switch (j) {
    case 1: return Enclosure(qf) * (x2 - x1);
    case 2: return Enclosure(qf) * (x1 + eng.xi(n, xg));
    case 3: return Enclosure(qf) * (Enclosure(Rat(2)) * x2 - x1);
    case 4: return Enclosure(qf) * x1;
  }
  return Enclosure(Rat(0));
}

/// Tail-route evaluation.
inline Enclosure kappa_tails(AlphaEngine& eng, long long n, int j,
                             const Rat& goal) {
  Rat tg = goal / 64;
  Enclosure one{Rat(1), Rat(1)}, two{Rat(2), Rat(2)}, four{Rat(4), Rat(4)};
  if (j == 2) {
    Enclosure an1 = eng.tail(n + 1, tg);
    Enclosure ds{eng.dual_tail(n), eng.dual_tail(n)};
    return (one - ds) * (an1 + one) / (an1 + ds);
  }
  Enclosure an = eng.tail(n, tg);
  Enclosure ds{eng.dual_tail(n - 1), eng.dual_tail(n - 1)};
  switch (j) {
    case 1: return (one + ds) * (an - one) / (an + ds);
    case 3: return (two * ds + one) * (two * an - one) / (an + ds);
    case 4: return four / (an + ds);
    default: throw DomainViolation("kappa index must be 1..4");
  }
}

}  // namespace detail

inline KappaSample kappa(AlphaEngine& eng, long long n, int j,
                         const Rat& goal = detail::default_goal()) {
  if (n < 1) throw DomainViolation("kappa needs n >= 1");
  KappaSample s;
  s.n = n;
  s.j = j;
  s.digit = eng.digit(n);
  Rat g = goal;
  s.viaProducts = detail::kappa_products(eng, n, j, g);
  while (s.viaProducts.width() > goal) {
    g /= 1024;
    s.viaProducts = detail::kappa_products(eng, n, j, g);
  }
  g = goal;
  s.viaTails = detail::kappa_tails(eng, n, j, g);
  while (s.viaTails.width() > goal) {
    g /= 1024;
    s.viaTails = detail::kappa_tails(eng, n, j, g);
  }
  return s;
}

/// The per-index lower envelope: kappa^3 on digit-1 positions, else the
/// smaller of kappa^1 and kappa^2.
inline Enclosure ell_star(AlphaEngine& eng, long long n,
                          const Rat& goal = detail::default_goal()) {
  if (eng.digit(n) == 1) return kappa(eng, n, 3, goal).viaTails;
  return Enclosure::min(kappa(eng, n, 1, goal).viaTails,
                        kappa(eng, n, 2, goal).viaTails);
}

/// One Lagrange-type sample q_n |q_n alpha - p_n| = 1/(alpha_{n+1} +
/// alpha*_n).
inline Enclosure lagrange_sample(AlphaEngine& eng, long long n,
                                 const Rat& goal = detail::default_goal()) {
  Rat tg = goal / 32;
  Enclosure four{Rat(4), Rat(4)};
  Enclosure s;
  while (true) {
    Enclosure an1 = eng.tail(n + 1, tg);
    Enclosure ds{eng.dual_tail(n), eng.dual_tail(n)};
    s = Enclosure{Rat(1), Rat(1)} / (an1 + ds);
    if (s.width() <= goal) return s;
    tg /= 1024;
  }
}

/// Finite-horizon estimate of the liminf of the Lagrange samples: minimum
/// over the last ceil(N/10) indices.
inline Enclosure lagrange_constant(AlphaEngine& eng, long long N,
                                   const Rat& goal = detail::default_goal()) {
  if (N < 2) throw DomainViolation("horizon must be >= 2");
  long long w = (N + 9) / 10;
  Enclosure best = lagrange_sample(eng, N, goal);
  for (long long n = N - w; n < N; ++n) {
    if (n < 1) continue;
    best = Enclosure::min(best, lagrange_sample(eng, n, goal));
  }
  return best;
}

}  // namespace irrat
