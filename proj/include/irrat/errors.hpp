#pragma once

#include <stdexcept>
#include <string>

namespace irrat {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A digit source backed by a finite prefix was asked for digits beyond
// its length.  Finite prefixes never fabricate a tail.
struct PrefixExhausted : Error {
  explicit PrefixExhausted(const std::string& what = "digit prefix exhausted")
      : Error(what) {}
};

// A surd argument turned out to be rational (d a perfect square, etc.).
struct NotIrrational : Error {
  explicit NotIrrational(const std::string& what = "value is rational")
      : Error(what) {}
};

// The restricted minimum was taken over an empty candidate set.
struct EmptyAdmissibleSet : Error {
  explicit EmptyAdmissibleSet(const std::string& what = "no admissible form")
      : Error(what) {}
};

// Comparison of a lattice point with itself: order undefined.
struct IdenticalForms : Error {
  explicit IdenticalForms(const std::string& what = "identical linear forms")
      : Error(what) {}
};

// gcd(p,q) != 1 where a reduced fraction is required.
struct NotReduced : Error {
  explicit NotReduced(const std::string& what = "fraction is not reduced")
      : Error(what) {}
};

// |pPrev*q - p*qPrev| != 1 where consecutive convergents are required.
struct NotUnimodular : Error {
  explicit NotUnimodular(const std::string& what = "pair is not unimodular")
      : Error(what) {}
};

// A target value lies outside the attainable range of a construction.
struct RangeViolation : Error {
  explicit RangeViolation(const std::string& what = "target out of range")
      : Error(what) {}
};

// An interval argument escapes the domain of a formula.
struct DomainViolation : Error {
  explicit DomainViolation(const std::string& what = "argument out of domain")
      : Error(what) {}
};

// An estimator that is undefined for tails equivalent to [1,1,1,...].
struct GoldenEquivalent : Error {
  explicit GoldenEquivalent(const std::string& what =
                                "tail is eventually all ones")
      : Error(what) {}
};

// Provenance lookup for a value that is not in the jump sequence.
struct NotAJumpPoint : Error {
  explicit NotAJumpPoint(const std::string& what = "not a jump point")
      : Error(what) {}
};

// A predicate was queried beyond the horizon its report covers.
struct InsufficientHorizon : Error {
  explicit InsufficientHorizon(const std::string& what =
                                   "query exceeds report horizon")
      : Error(what) {}
};

// Refinement hit the safety depth cap without resolving a comparison.
struct PrecisionCapExceeded : Error {
  explicit PrecisionCapExceeded(const std::string& what =
                                    "refinement depth cap exceeded")
      : Error(what) {}
};

// Malformed CLI input.
struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace irrat
