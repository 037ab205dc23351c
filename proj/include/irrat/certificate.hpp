#pragma once

#include <string>
#include <utility>
#include <vector>

#include "irrat/psi.hpp"

namespace irrat {

/// One lattice point found inside the parallelogram, with its role.
struct InventoryItem {
  Int x;
  Int y;
  std::string role;  // "w1", "w2", "convergent", "convergent-multiple",
                     // "violation"
};

/// Successive-minimizer certificate for a pair of lattice points w1, w2:
/// w2 improves on w1, both parallelograms have convergent interior
/// witnesses, and the only lattice points inside
/// Pi = { 0 <= x <= q(w2), |alpha*x - y| <= |q1*alpha - p1| }
/// are w1, w2 and excluded (convergent) points.
struct Certificate {
  LinearForm w1, w2;
  PsiVariant variant = PsiVariant::SecondPair;
  bool pass = false;
  long long interior1 = -1;  // convergent index strictly inside Omega[w1]
  long long interior2 = -1;  // convergent index strictly inside Omega[w2]
  std::vector<InventoryItem> inventory;
  std::string failure;
};

namespace detail {

/// Is (x,y) an excluded lattice point for the variant?
inline bool excluded_point(AlphaEngine& eng, const Int& x, const Int& y,
                           PsiVariant variant) {
  for (long long n = 0;; ++n) {
    const Convergent c = eng.convergent(n);
    if (c.q > x) return false;
    if (variant == PsiVariant::SecondPair) {
      if (c.q == x && c.p == y) return true;
    } else {
      if (mpz_divisible_p(x.get_mpz_t(), c.q.get_mpz_t()) &&
          y * c.q == x * c.p)
        return true;
    }
  }
}

}  // namespace detail

inline Certificate certify_successive(AlphaEngine& eng,
                                      std::pair<Int, Int> w1qp,
                                      std::pair<Int, Int> w2qp,
                                      PsiVariant variant) {
  Certificate cert;
  cert.variant = variant;
  cert.w1 = eng.form(w1qp.first, w1qp.second);
  cert.w2 = eng.form(w2qp.first, w2qp.second);
  if (cert.w1.q >= cert.w2.q) {
    cert.failure = "q(w1) must be < q(w2)";
    return cert;
  }

  // 1. w2 strictly improves on w1.
  if (eng.compare_forms(cert.w2, cert.w1) != Order::Less) {
    cert.failure = "w2 does not improve on w1";
    return cert;
  }

  // 2./3. Convergent witnesses strictly inside Omega[w1] and Omega[w2].
  auto interior_witness = [&](LinearForm& w) -> long long {
    for (long long n = 0;; ++n) {
      const Convergent c = eng.convergent(n);
      if (c.q >= w.q) return -1;
      if (c.q == 0) continue;
      LinearForm zf = eng.form(c.q, c.p);
      if (eng.compare_forms(zf, w) == Order::Less) return n;
    }
  };
  cert.interior1 = interior_witness(cert.w1);
  cert.interior2 = interior_witness(cert.w2);
  if (cert.interior1 < 0 || cert.interior2 < 0) {
    cert.failure = "missing interior convergent witness";
    return cert;
  }

  // 4. Full lattice inventory of Pi.
  bool ok = true;
  Int x2 = cert.w2.q;
  for (Int x = 1; x <= x2; ++x) {
    // y candidates near alpha*x; the band half-height is < 2 whenever
    // |q1*alpha - p1| < 2, but stay general.
    Int yc = eng.nearest_p(x);
    long long reach =
        2 + static_cast<long long>(cert.w1.value.hi.get_d()) ;
    for (long long off = -reach; off <= reach; ++off) {
      Int y = yc + to_int(off);
      if (x == cert.w1.q && y == cert.w1.p) {
        cert.inventory.push_back({x, y, "w1"});
        continue;
      }
      LinearForm f = eng.form(x, y);
      // strictly outside the band?  (equality happens only at w1 itself)
      if (eng.compare_forms(f, cert.w1) == Order::Greater) continue;
      if (x == cert.w2.q && y == cert.w2.p) {
        cert.inventory.push_back({x, y, "w2"});
        continue;
      }
      if (detail::excluded_point(eng, x, y, variant)) {
        cert.inventory.push_back(
            {x, y,
             variant == PsiVariant::SecondPair ? "convergent"
                                               : "convergent-multiple"});
        continue;
      }
      cert.inventory.push_back({x, y, "violation"});
      cert.failure = "admissible lattice point inside Pi: (" + x.get_str() +
                     "," + y.get_str() + ")";
      ok = false;
    }
  }
  cert.pass = ok;
  return cert;
}

}  // namespace irrat
