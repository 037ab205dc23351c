#pragma once

#include <json.hpp>

#include <string>

#include "irrat/jump_rules.hpp"
#include "irrat/legendre.hpp"
#include "irrat/spectrum.hpp"

namespace irrat {

using Json = nlohmann::ordered_json;

/// Decimal rendering of an exact rational, truncated toward zero.
inline std::string dec_str(const Rat& r, int digits = 12) {
  Int scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int num = r.get_num() * scale;
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  bool neg = q < 0;
  if (neg) q = -q;
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s = std::string(digits + 1 - s.size(), '0') + s;
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

/// "lo..hi" with decimal endpoints (human format); exact form via
/// Enclosure::str().
inline std::string enc_dec(const Enclosure& e, int digits = 12) {
  return dec_str(e.lo, digits) + ".." + dec_str(e.hi, digits);
}

inline Json enc_json(const Enclosure& e) {
  return Json::array({e.lo.get_str(), e.hi.get_str()});
}

/// One scan/rule row: {"q","p","value_lo","value_hi","product_lo",
/// "product_hi","provenance"}.
inline Json jump_json(const JumpPoint& pt) {
  Json o;
  o["q"] = pt.q.get_str();
  o["p"] = pt.p.get_str();
  o["value_lo"] = pt.value.lo.get_str();
  o["value_hi"] = pt.value.hi.get_str();
  o["product_lo"] = pt.product.lo.get_str();
  o["product_hi"] = pt.product.hi.get_str();
  o["provenance"] = pt.provenance;
  return o;
}

inline std::string jump_tsv_header() {
  return "q\tp\tvalue\tproduct\tprovenance";
}

inline std::string jump_tsv(const JumpPoint& pt, int digits = 12) {
  return pt.q.get_str() + "\t" + pt.p.get_str() + "\t" +
         enc_dec(pt.value, digits) + "\t" + enc_dec(pt.product, digits) +
         "\t" + pt.provenance;
}

inline Json spectrum_json(const SpectrumReport& r) {
  Json o;
  o["schema"] = 1;
  o["horizon"] = r.horizon;
  o["lambda"] = enc_json(r.lambda);
  o["j"] = enc_json(r.j);
  o["k"] = enc_json(r.k);
  o["j_star"] = enc_json(r.j_star);
  o["k_star"] = enc_json(r.k_star);
  Json w = Json::object();
  for (const SpectrumWitness& sw : r.witnesses)
    w[sw.which] = Json{{"q", sw.q.get_str()}, {"n", sw.n}};
  o["witnesses"] = w;
  o["method"] = r.method;
  return o;
}

/// One verdict row: {"p","q","theta":[lo,hi],"bound":"rat","legendre",
/// "canonical","lucas"} with lucas null when no companion pair applies.
inline Json legendre_json(const LegendreCertificate& c, const Json& lucas) {
  Json o;
  o["p"] = c.p.get_str();
  o["q"] = c.q.get_str();
  o["theta"] = enc_json(c.theta);
  o["bound"] = c.bound.get_str();
  o["legendre"] = c.verdict;
  o["canonical"] = c.canonicalVerdict;
  o["lucas"] = lucas;
  return o;
}

}  // namespace irrat
