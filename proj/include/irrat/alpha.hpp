#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "irrat/errors.hpp"

namespace irrat {

// ---------------------------------------------------------------------------
// Digit sources.  An AlphaSpec describes an irrational number by its integer
// part a0 and the source of its partial quotients a1, a2, ...  Partial
// quotients are always >= 1.
// ---------------------------------------------------------------------------

/// Eventually periodic digit tail: preperiod then period repeated forever.
struct PeriodicCF {
  std::vector<long long> preperiod;
  std::vector<long long> period;  // nonempty
};

/// Euler's number e = [2; 1,2,1,1,4,1,1,6,...]: a_n = 2(n+1)/3 when
/// n = 2 (mod 3), otherwise 1.
struct NamedE {};

/// A finite digit prefix.  Queries beyond the prefix throw PrefixExhausted;
/// no tail is ever fabricated.
struct ExplicitPrefix {
  std::vector<long long> digits;
};

/// A named digit-generation rule with string parameters.  The rule body is
/// resolved by the digit engine; see rule_digit() below for the registry.
struct GeneratorRule {
  std::string id;
  std::map<std::string, std::string> params;
};

struct AlphaSpec {
  long long a0 = 0;
  std::variant<PeriodicCF, NamedE, ExplicitPrefix, GeneratorRule> tail;

  static AlphaSpec periodic(long long a0, std::vector<long long> preperiod,
                            std::vector<long long> period) {
    AlphaSpec s;
    s.a0 = a0;
    s.tail = PeriodicCF{std::move(preperiod), std::move(period)};
    s.validate();
    return s;
  }
  static AlphaSpec golden() { return periodic(0, {}, {1}); }
  static AlphaSpec euler() {
    AlphaSpec s;
    s.a0 = 2;
    s.tail = NamedE{};
    return s;
  }
  static AlphaSpec prefix(long long a0, std::vector<long long> digits) {
    AlphaSpec s;
    s.a0 = a0;
    s.tail = ExplicitPrefix{std::move(digits)};
    s.validate();
    return s;
  }
  static AlphaSpec rule(std::string id,
                        std::map<std::string, std::string> params = {}) {
    AlphaSpec s;
    s.a0 = 0;
    s.tail = GeneratorRule{std::move(id), std::move(params)};
    return s;
  }

  void validate() const {
    auto check = [](const std::vector<long long>& v) {
      for (long long d : v)
        if (d < 1) throw DomainViolation("partial quotient < 1");
    };
    if (auto* p = std::get_if<PeriodicCF>(&tail)) {
      if (p->period.empty())
        throw DomainViolation("empty period");
      check(p->preperiod);
      check(p->period);
    } else if (auto* e = std::get_if<ExplicitPrefix>(&tail)) {
      check(e->digits);
    }
  }

  bool is_periodic() const { return std::holds_alternative<PeriodicCF>(tail); }

  /// True when the digit tail is eventually 1,1,1,... (decidable here only
  /// for periodic specs).
  bool golden_equivalent() const {
    if (auto* p = std::get_if<PeriodicCF>(&tail)) {
      for (long long d : p->period)
        if (d != 1) return false;
      return true;
    }
    return false;
  }

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Generator-rule registry.
//
//   alt2   : a_{2j-1} = j + start, a_{2j} = 2   (growing digits split by 2s)
//   blocks : word built from digit lists x, y as growing symmetric blocks
//            x_k ... x_1 2 y_1 ... y_k, block length capped at the stored
//            list length once exceeded.
// ---------------------------------------------------------------------------

inline std::vector<long long> parse_digit_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

/// Evaluate digit a_n (n >= 1) of a generator rule.
inline long long rule_digit(const GeneratorRule& r, long long n) {
  if (r.id == "alt2") {
    long long start = 2;
    if (auto it = r.params.find("start"); it != r.params.end())
      start = std::stoll(it->second);
    if (n % 2 == 1) return (n + 1) / 2 + start;  // b_j at odd positions
    return 2;
  }
  if (r.id == "blocks") {
    auto xit = r.params.find("x");
    auto yit = r.params.find("y");
    if (xit == r.params.end() || yit == r.params.end())
      throw UsageError("rule blocks requires x= and y= digit lists");
    std::vector<long long> x = parse_digit_list(xit->second);
    std::vector<long long> y = parse_digit_list(yit->second);
    if (x.empty() || y.empty())
      throw UsageError("rule blocks: empty digit list");
    long long cap = static_cast<long long>(std::min(x.size(), y.size()));
    // Block k occupies 2*min(k,cap)+1 digits: x-part, the 2, y-part.
    long long pos = n;
    for (long long k = 1;; ++k) {
      long long half = std::min(k, cap);
      long long len = 2 * half + 1;
      if (pos <= len) {
        if (pos <= half) return x[half - pos];        // x_half ... x_1
        if (pos == half + 1) return 2;                // separator
        return y[pos - half - 2];                     // y_1 ... y_half
      }
      pos -= len;
    }
  }
  throw UsageError("unknown generator rule: " + r.id);
}

inline std::string AlphaSpec::str() const {
  std::ostringstream os;
  if (std::holds_alternative<NamedE>(tail)) return "e";
  if (auto* p = std::get_if<PeriodicCF>(&tail)) {
    os << "cf:[" << a0 << ";";
    for (size_t i = 0; i < p->preperiod.size(); ++i) {
      if (i) os << ",";
      os << p->preperiod[i];
    }
    if (!p->preperiod.empty()) os << ",";
    os << "(";
    for (size_t i = 0; i < p->period.size(); ++i) {
      if (i) os << ",";
      os << p->period[i];
    }
    os << ")]";
    return os.str();
  }
  if (auto* e = std::get_if<ExplicitPrefix>(&tail)) {
    os << "cf:[" << a0 << ";";
    for (size_t i = 0; i < e->digits.size(); ++i) {
      if (i) os << ",";
      os << e->digits[i];
    }
    os << "]";
    return os.str();
  }
  const auto& r = std::get<GeneratorRule>(tail);
  os << "rule:" << r.id;
  char sep = '?';
  for (const auto& [k, v] : r.params) {
    os << sep << k << "=" << v;
    sep = '&';
  }
  return os.str();
}

}  // namespace irrat
