#pragma once

#include <string>
#include <vector>

#include "irrat/alpha.hpp"
#include "irrat/errors.hpp"
#include "irrat/surd.hpp"

namespace irrat {

/// Parse the alpha-spec grammar:
///   golden | e | sqrt:D | quad:a,b,d,c | cf:[a0;a1,a2,...] |
///   cf:[a0;a1,(p1,p2,...)] | rule:<id>?k=v&k2=v2
inline AlphaSpec parse_alpha(const std::string& s) {
  auto fail = [&](const std::string& why) -> AlphaSpec {
    throw UsageError("bad alpha spec '" + s + "': " + why);
  };
  if (s == "golden") return AlphaSpec::golden();
  if (s == "e") return AlphaSpec::euler();
  if (s.rfind("sqrt:", 0) == 0) {
    long long d = std::stoll(s.substr(5));
    return sqrt_spec(d);
  }
  if (s.rfind("quad:", 0) == 0) {
    auto v = parse_digit_list(s.substr(5));
    if (v.size() != 4) return fail("quad needs a,b,d,c");
    return quad_to_cf(v[0], v[1], v[2], v[3]);
  }
  if (s.rfind("cf:", 0) == 0) {
    std::string body = s.substr(3);
    if (body.size() < 4 || body.front() != '[' || body.back() != ']')
      return fail("cf needs [a0;...]");
    body = body.substr(1, body.size() - 2);
    size_t semi = body.find(';');
    if (semi == std::string::npos) return fail("missing ';'");
    long long a0 = std::stoll(body.substr(0, semi));
    std::string rest = body.substr(semi + 1);
    size_t paren = rest.find('(');
    if (paren == std::string::npos) {
      return AlphaSpec::prefix(a0, parse_digit_list(rest));
    }
    size_t close = rest.find(')');
    if (close == std::string::npos || close < paren)
      return fail("unbalanced parentheses");
    std::string pre = rest.substr(0, paren);
    if (!pre.empty() && pre.back() == ',') pre.pop_back();
    std::string per = rest.substr(paren + 1, close - paren - 1);
    return AlphaSpec::periodic(a0, parse_digit_list(pre),
                               parse_digit_list(per));
  }
  if (s.rfind("rule:", 0) == 0) {
    std::string body = s.substr(5);
    size_t qm = body.find('?');
    GeneratorRule r;
    r.id = body.substr(0, qm == std::string::npos ? body.size() : qm);
    if (qm != std::string::npos) {
      std::string rest = body.substr(qm + 1);
      size_t pos = 0;
      while (pos < rest.size()) {
        size_t amp = rest.find('&', pos);
        if (amp == std::string::npos) amp = rest.size();
        std::string kv = rest.substr(pos, amp - pos);
        size_t eq = kv.find('=');
        if (eq == std::string::npos) return fail("rule param needs k=v");
        r.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        pos = amp + 1;
      }
    }
    AlphaSpec spec;
    spec.a0 = 0;
    spec.tail = std::move(r);
    return spec;
  }
  return fail("unknown form");
}

}  // namespace irrat
