#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>

#include "irrat/errors.hpp"

namespace irrat {

using Int = mpz_class;
using Rat = mpq_class;

/// mpz from long long (gmpxx predates long long constructors on this
/// platform; long is 64-bit here).
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

/// Closed rational interval [lo, hi] guaranteed to contain an exact
/// (usually irrational) value.  All arithmetic is outward-exact: the
/// result interval contains every value reachable from points of the
/// operand intervals, with rational endpoints (no rounding happens,
/// so "outward" is in fact exact).
struct Enclosure {
  Rat lo;
  Rat hi;

  Enclosure() : lo(0), hi(0) {}
  Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit Enclosure(const Rat& point) : lo(point), hi(point) {}

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool intersects(const Enclosure& o) const {
    return !(hi < o.lo || o.hi < lo);
  }
  /// True when every point of *this is strictly below every point of o.
  bool strictly_below(const Enclosure& o) const { return hi < o.lo; }

  Enclosure operator+(const Enclosure& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  Enclosure operator-(const Enclosure& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  Enclosure operator*(const Enclosure& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }
  /// Division; the divisor interval must not straddle zero.
  Enclosure operator/(const Enclosure& o) const {
    if (o.lo <= 0 && o.hi >= 0)
      throw DomainViolation("interval division by interval containing 0");
    Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }

  Enclosure operator+(const Rat& r) const { return {lo + r, hi + r}; }
  Enclosure operator-(const Rat& r) const { return {lo - r, hi - r}; }

  friend Enclosure operator+(const Rat& r, const Enclosure& e) {
    return e + r;
  }
  friend Enclosure operator-(const Rat& r, const Enclosure& e) {
    return {r - e.hi, r - e.lo};
  }
  friend Enclosure operator*(const Rat& r, const Enclosure& e) {
    Rat a = r * e.lo, b = r * e.hi;
    return a <= b ? Enclosure{a, b} : Enclosure{b, a};
  }

  /// Absolute value of the enclosed value.
  Enclosure abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return {-hi, -lo};
    Rat m = std::max(Rat(-lo), hi);
    return {Rat(0), m};
  }

  /// Enclosure of min(a, b) as values: endpoint-wise minimum.
  static Enclosure min(const Enclosure& a, const Enclosure& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
  }
  static Enclosure max(const Enclosure& a, const Enclosure& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
  }

  double midpoint_double() const {
    return (lo.get_d() + hi.get_d()) / 2.0;
  }

  std::string str() const {
    return lo.get_str() + ".." + hi.get_str();
  }
};

/// Parse "n" or "n/d" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw UsageError("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace irrat
