// Command-line front end for the continued-fraction approximation library:
// digit/convergent dumps, second-best approximation scans, jump-rule
// generation, spectrum estimation, convergent criteria and the constructive
// witnesses, with JSONL/TSV/human output and self-verification sweeps.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "irrat/certificate.hpp"
#include "irrat/hall.hpp"
#include "irrat/io.hpp"
#include "irrat/parse.hpp"

namespace {

using namespace irrat;

struct Common {
  std::string alpha;
  std::string format = "human";
  std::string output;
  std::string config;
  int precision = 12;
  long long seed = 0;
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"human", "jsonl", "tsv"}));
  sub->add_option("--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--precision", c.precision,
                  "Decimal digits for rendered values and enclosure goals")
      ->check(CLI::Range(1, 60));
  sub->add_option("--config", c.config,
                  "key=value file with defaults for horizon/precision/format");
}

void add_alpha(CLI::App* sub, Common& c) {
  sub->add_option("--alpha", c.alpha,
                  "Number spec: golden | e | sqrt:D | quad:a,b,d,c | "
                  "cf:[a0;...] | cf:[a0;a1,(p1,...)] | rule:id?k=v")
      ->required();
}

/// Apply config-file defaults for options the command line left untouched.
void apply_config(CLI::App* sub, Common& c, long long* horizon) {
  if (c.config.empty()) return;
  std::ifstream in(c.config);
  if (!in) throw UsageError("cannot read config file " + c.config);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line without '=': " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const auto& [k, v] : kv) {
    if (k == "precision" && sub->count("--precision") == 0)
      c.precision = std::stoi(v);
    else if (k == "format" && sub->count("--format") == 0)
      c.format = v;
    else if (k == "horizon" && horizon && sub->count("--horizon") == 0)
      *horizon = std::stoll(v);
    else if (k != "precision" && k != "format" && k != "horizon")
      throw UsageError("unknown config key " + k);
  }
}

Rat goal_of(const Common& c) {
  Int d(1);
  for (int i = 0; i < c.precision; ++i) d *= 10;
  return Rat(Int(1), d);
}

/// Stream selection: stdout or --output file.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const Common& c) {
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw UsageError("cannot open output file " + c.output);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

PsiVariant variant_of(const std::string& s) {
  if (s == "pair") return PsiVariant::SecondPair;
  if (s == "fraction") return PsiVariant::SecondFraction;
  return PsiVariant::Best;
}

Json meta_line(const std::string& verb, const Common& c) {
  Json m;
  m["schema"] = 1;
  m["verb"] = verb;
  if (!c.alpha.empty()) m["alpha"] = c.alpha;
  return m;
}

// ---------------------------------------------------------------------- digits

int run_digits(const Common& c, long long count) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Sink sink(c);
  std::ostream& out = sink.out();
  if (c.format == "jsonl") {
    out << meta_line("digits", c).dump() << "\n";
    for (long long n = 1; n <= count; ++n)
      out << Json{{"n", n}, {"a", eng.digit(n)}}.dump() << "\n";
  } else if (c.format == "tsv") {
    out << "n\ta\n";
    for (long long n = 1; n <= count; ++n)
      out << n << "\t" << eng.digit(n) << "\n";
  } else {
    out << "[" << eng.spec().a0 << ";";
    for (long long n = 1; n <= count; ++n)
      out << (n > 1 ? "," : "") << eng.digit(n);
    out << ",...]\n";
  }
  return 0;
}

// ----------------------------------------------------------------- convergents

int run_convergents(const Common& c, long long count) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Sink sink(c);
  std::ostream& out = sink.out();
  if (c.format == "jsonl") {
    out << meta_line("convergents", c).dump() << "\n";
    for (long long n = 0; n <= count; ++n) {
      const Convergent& cv = eng.convergent(n);
      out << Json{{"n", n},
                  {"p", cv.p.get_str()},
                  {"q", cv.q.get_str()},
                  {"sign", cv.sign}}
                 .dump()
          << "\n";
    }
  } else {
    out << "n\tp\tq\tsign\n";
    for (long long n = 0; n <= count; ++n) {
      const Convergent& cv = eng.convergent(n);
      out << n << "\t" << cv.p.get_str() << "\t" << cv.q.get_str() << "\t"
          << cv.sign << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------------- psi

int run_psi(const Common& c, const std::string& t_str,
            const std::string& variant) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Rat t = parse_rat(t_str);
  Rat goal = goal_of(c);
  PsiVariant v = variant_of(variant);
  LinearForm f = v == PsiVariant::Best ? psi(eng, t, goal)
                                       : psi_second(eng, t, v, goal);
  Sink sink(c);
  std::ostream& out = sink.out();
  if (c.format == "jsonl") {
    out << meta_line("psi", c).dump() << "\n";
    Json o;
    o["q"] = f.q.get_str();
    o["p"] = f.p.get_str();
    o["value_lo"] = f.value.lo.get_str();
    o["value_hi"] = f.value.hi.get_str();
    out << o.dump() << "\n";
  } else {
    out << "q=" << f.q.get_str() << " p=" << f.p.get_str()
        << " value=" << enc_dec(f.value, c.precision) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------- jumps

int run_jumps(const Common& c, long long maxq, const std::string& variant,
              const std::string& source, bool diff, bool profile) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Rat goal = goal_of(c);
  PsiVariant v = variant_of(variant);
  if (v == PsiVariant::Best)
    throw UsageError("jumps needs --variant pair or fraction");

  auto scan_points = [&]() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<JumpPoint> pts = jump_scan(eng, maxq, v, goal);
    auto t1 = std::chrono::steady_clock::now();
    if (profile) {
      double secs = std::chrono::duration<double>(t1 - t0).count();
      std::cerr << "profile: scanned q <= " << maxq << " in " << secs
                << " s (" << (secs > 0 ? maxq / secs : 0) << " forms/s)\n";
    }
    return pts;
  };
  auto rule_points = [&]() {
    JumpSequence seq = v == PsiVariant::SecondPair
                           ? build_Q(eng, to_int(maxq), goal)
                           : build_X(eng, to_int(maxq), goal);
    return seq.points;
  };

  Sink sink(c);
  std::ostream& out = sink.out();
  if (diff) {
    std::vector<JumpPoint> a = scan_points(), b = rule_points();
    size_t i = 0, j = 0;
    int mismatches = 0;
    out << "scan\trules\n";
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a[i].q < b[j].q)) {
        out << a[i].q.get_str() << "\t-\n";
        ++i;
        ++mismatches;
      } else if (i >= a.size() || b[j].q < a[i].q) {
        out << "-\t" << b[j].q.get_str() << "\n";
        ++j;
        ++mismatches;
      } else {
        out << a[i].q.get_str() << "\t" << b[j].q.get_str() << "\n";
        ++i;
        ++j;
      }
    }
    return mismatches == 0 ? 0 : 1;
  }

  std::vector<JumpPoint> pts =
      source == "rules" ? rule_points() : scan_points();
  if (c.format == "jsonl") {
    Json m = meta_line("jumps", c);
    m["variant"] = variant;
    m["max_q"] = maxq;
    m["threshold"] = t_threshold(eng);
    out << m.dump() << "\n";
    for (const JumpPoint& pt : pts) out << jump_json(pt).dump() << "\n";
  } else if (c.format == "tsv") {
    out << jump_tsv_header() << "\n";
    for (const JumpPoint& pt : pts) out << jump_tsv(pt, c.precision) << "\n";
  } else {
    for (const JumpPoint& pt : pts)
      out << "q=" << pt.q.get_str() << " p=" << pt.p.get_str()
          << " product=" << enc_dec(pt.product, c.precision) << " ["
          << pt.provenance << "]\n";
  }
  return 0;
}

// ----------------------------------------------------------------------- kappa

int run_kappa(const Common& c, long long from, long long to) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Rat goal = goal_of(c);
  Sink sink(c);
  std::ostream& out = sink.out();
  out << "n\ta\tkappa1\tkappa2\tkappa3\tkappa4\tell_star\n";
  for (long long n = from; n <= to; ++n) {
    out << n << "\t" << eng.digit(n);
    for (int j = 1; j <= 4; ++j)
      out << "\t" << enc_dec(kappa(eng, n, j, goal).viaTails, c.precision);
    out << "\t" << enc_dec(ell_star(eng, n, goal), c.precision) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- spectrum

int run_spectrum(const Common& c, long long horizon) {
  AlphaEngine eng(parse_alpha(c.alpha));
  SpectrumReport rep = spectrum_estimates(eng, horizon, goal_of(c));
  Sink sink(c);
  if (c.format == "human") {
    std::ostream& out = sink.out();
    out << "horizon=" << rep.horizon << "\n";
    out << "lambda=" << enc_dec(rep.lambda, c.precision) << "\n";
    out << "j=" << enc_dec(rep.j, c.precision) << "\n";
    out << "k=" << enc_dec(rep.k, c.precision) << "\n";
    out << "j_star=" << enc_dec(rep.j_star, c.precision) << "\n";
    out << "k_star=" << enc_dec(rep.k_star, c.precision) << "\n";
  } else {
    sink.out() << spectrum_json(rep).dump() << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- legendre

int run_legendre(const Common& c, const std::vector<std::string>& fracs,
                 const std::string& convention) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Rat goal = goal_of(c);
  ParityConvention pc = convention == "printed" ? ParityConvention::AsPrinted
                                                : ParityConvention::Swapped;
  Sink sink(c);
  std::ostream& out = sink.out();
  for (const std::string& fs : fracs) {
    size_t slash = fs.find('/');
    if (slash == std::string::npos)
      throw UsageError("fraction must be p/q: " + fs);
    Int p(fs.substr(0, slash)), q(fs.substr(slash + 1));
    LegendreCertificate cert = legendre_test(eng, p, q, pc, goal);
    // Companion inequality: pair p/q with its closer Farey neighbor when
    // that neighbor has a positive denominator.
    Json lucas;  // null
    FareyNeighbors fn = farey_neighbors(p, q);
    Int pPrev = fn.qMinus >= fn.qPlus ? fn.pMinus : fn.pPlus;
    Int qPrev = fn.qMinus >= fn.qPlus ? fn.qMinus : fn.qPlus;
    if (qPrev >= 1 && qPrev <= q && !(qPrev == q))
      lucas = lucas_test(eng, pPrev, qPrev, p, q, goal);
    if (c.format == "human") {
      out << fs << ": legendre=" << (cert.verdict ? "true" : "false")
          << " canonical=" << (cert.canonicalVerdict ? "true" : "false")
          << " theta=" << enc_dec(cert.theta, c.precision) << "\n";
    } else {
      out << legendre_json(cert, lucas).dump() << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------------- lucas

int run_lucas(const Common& c, const std::string& prev,
              const std::string& cur) {
  AlphaEngine eng(parse_alpha(c.alpha));
  auto split = [](const std::string& fs) -> std::pair<Int, Int> {
    size_t slash = fs.find('/');
    if (slash == std::string::npos)
      throw UsageError("fraction must be p/q: " + fs);
    return {Int(fs.substr(0, slash)), Int(fs.substr(slash + 1))};
  };
  auto [pPrev, qPrev] = split(prev);
  auto [p, q] = split(cur);
  bool ok = lucas_test(eng, pPrev, qPrev, p, q, goal_of(c));
  Sink sink(c);
  sink.out() << (ok ? "true" : "false") << "\n";
  return 0;
}

// ------------------------------------------------------------------------ hall

int run_hall(const Common& c, const std::string& k_str, int depth) {
  Rat k = parse_rat(k_str);
  HallPoint hp = hall_construct(k, depth);
  Sink sink(c);
  std::ostream& out = sink.out();
  if (c.format == "human") {
    out << "k=" << k.get_str() << "\n";
    out << "x=" << hp.x.str() << "\n";
    out << "y=" << hp.y.str() << "\n";
    out << "H=" << enc_dec(hp.H, c.precision) << "\n";
    out << "combined=" << hp.combined.str() << "\n";
  } else {
    Json o;
    o["schema"] = 1;
    o["k"] = k.get_str();
    o["x"] = hp.x.str();
    o["y"] = hp.y.str();
    o["H"] = enc_json(hp.H);
    o["combined"] = hp.combined.str();
    out << o.dump() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------- witness

int run_witness(const Common& c, const std::string& kind,
                const std::string& lambda0) {
  AlphaSpec spec = kind == "envelope" ? witness_L2star_min()
                                      : witness_L2(parse_rat(lambda0));
  Sink sink(c);
  sink.out() << spec.str() << "\n";
  return 0;
}

// ---------------------------------------------------------------------- verify

int verify_rules(AlphaEngine& eng, long long maxq, const Rat& goal,
                 std::ostream& out) {
  int bad = 0;
  int t = t_threshold(eng);
  for (PsiVariant v : {PsiVariant::SecondPair, PsiVariant::SecondFraction}) {
    std::vector<JumpPoint> scan = jump_scan(eng, maxq, v, goal);
    JumpSequence seq = v == PsiVariant::SecondPair
                           ? build_Q(eng, to_int(maxq), goal)
                           : build_X(eng, to_int(maxq), goal);
    auto keep = [&](const std::vector<JumpPoint>& pts) {
      std::vector<std::pair<std::string, std::string>> r;
      for (const JumpPoint& pt : pts)
        if (pt.q >= t) r.push_back({pt.q.get_str(), pt.p.get_str()});
      return r;
    };
    auto a = keep(scan), b = keep(seq.points);
    if (a != b) {
      ++bad;
      out << "mismatch variant=" << variant_name(v) << " scan=" << a.size()
          << " rules=" << b.size() << "\n";
      size_t m = std::min(a.size(), b.size());
      for (size_t i = 0; i < m; ++i)
        if (a[i] != b[i]) {
          out << "  first divergence at index " << i << ": scan " << a[i].first
              << "/" << a[i].second << " rules " << b[i].first << "/"
              << b[i].second << "\n";
          break;
        }
    }
  }
  out << (bad == 0 ? "rules: OK" : "rules: MISMATCH") << " (q <= " << maxq
      << ")\n";
  return bad == 0 ? 0 : 1;
}

int verify_legendre(AlphaEngine& eng, long long maxq, const Rat& goal,
                    std::ostream& out) {
  long long bad = 0;
  // Convergent fractions with q <= maxq.
  std::vector<std::pair<Int, Int>> conv;
  for (long long n = 0;; ++n) {
    const Convergent& cv = eng.convergent(n);
    if (cv.q > to_int(maxq)) break;
    conv.push_back({cv.p, cv.q});
  }
  for (long long q = 1; q <= maxq; ++q) {
    Int pn = eng.nearest_p(to_int(q));
    for (long long dp = -1; dp <= 1; ++dp) {
      Int p = pn + to_int(dp);
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), to_int(q).get_mpz_t());
      if (g != 1) continue;
      LegendreCertificate cert =
          legendre_test(eng, p, to_int(q), ParityConvention::Swapped, goal);
      bool listed = false;
      for (const auto& [cp, cq] : conv)
        if (cp == p && cq == to_int(q)) listed = true;
      if (cert.verdict != cert.canonicalVerdict ||
          cert.canonicalVerdict != listed) {
        ++bad;
        out << "mismatch at " << p.get_str() << "/" << q << "\n";
      }
    }
  }
  // Companion inequality along consecutive convergents.
  for (size_t n = 1; n < conv.size(); ++n)
    if (!lucas_test(eng, conv[n - 1].first, conv[n - 1].second, conv[n].first,
                    conv[n].second, goal)) {
      ++bad;
      out << "companion inequality failed at index " << n << "\n";
    }
  out << (bad == 0 ? "legendre: OK" : "legendre: MISMATCH") << " (q <= "
      << maxq << ")\n";
  return bad == 0 ? 0 : 1;
}

int run_verify(const Common& c, const std::string& what, long long maxq) {
  AlphaEngine eng(parse_alpha(c.alpha));
  Rat goal = goal_of(c);
  Sink sink(c);
  if (what == "rules") return verify_rules(eng, maxq, goal, sink.out());
  if (what == "legendre") return verify_legendre(eng, maxq, goal, sink.out());
  throw UsageError("verify target must be rules or legendre");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact continued-fraction approximation toolkit"};
  app.require_subcommand(1);

  Common c;
  long long count = 30, maxq = 1000, horizon = 40;
  long long from = 1, to = 20;
  std::string t_str = "1", variant = "best", source = "scan";
  std::string convention = "swapped", kind = "lagrange", lambda0 = "1/10";
  std::string what;
  std::vector<std::string> fracs;
  std::string prev, cur, k_str = "3/5";
  int depth = 34;
  bool diff = false, profile = false;

  CLI::App* sd = app.add_subcommand("digits", "Partial quotients a_1..a_N");
  add_alpha(sd, c);
  add_format(sd, c);
  sd->add_option("--count", count, "How many digits");

  CLI::App* sc = app.add_subcommand("convergents", "Convergent table rows");
  add_alpha(sc, c);
  add_format(sc, c);
  sc->add_option("--count", count, "Last convergent index");

  CLI::App* sp = app.add_subcommand(
      "psi", "Best or second-best approximation at a point");
  add_alpha(sp, c);
  add_format(sp, c);
  sp->add_option("--t", t_str, "Evaluation point (rational)")->required();
  sp->add_option("--variant", variant, "best | pair | fraction")
      ->check(CLI::IsMember({"best", "pair", "fraction"}));

  CLI::App* sj = app.add_subcommand(
      "jumps", "Jump points of a second-best approximation function");
  add_alpha(sj, c);
  add_format(sj, c);
  sj->add_option("--max-q", maxq, "Scan denominators up to this bound");
  sj->add_option("--variant", variant, "pair | fraction")
      ->check(CLI::IsMember({"pair", "fraction"}))
      ->required();
  sj->add_option("--source", source, "scan (lattice oracle) | rules")
      ->check(CLI::IsMember({"scan", "rules"}));
  sj->add_flag("--diff", diff, "Two-column scan-vs-rules denominator diff");
  sj->add_flag("--profile", profile, "Report scan throughput on stderr");

  CLI::App* sk = app.add_subcommand(
      "kappa", "Per-index functional table (n, a_n, four routes, envelope)");
  add_alpha(sk, c);
  add_format(sk, c);
  sk->add_option("--from", from, "First digit index");
  sk->add_option("--to", to, "Last digit index");

  CLI::App* ss = app.add_subcommand(
      "spectrum", "Finite-horizon estimates of the five spectrum quantities");
  add_alpha(ss, c);
  add_format(ss, c);
  ss->add_option("--horizon", horizon, "Digit horizon N");

  CLI::App* sl = app.add_subcommand(
      "legendre", "Convergent criterion certificates for fractions");
  add_alpha(sl, c);
  add_format(sl, c);
  sl->add_option("fractions", fracs, "Fractions p/q to test")->required();
  sl->add_option("--convention", convention, "swapped | printed")
      ->check(CLI::IsMember({"swapped", "printed"}));

  CLI::App* su = app.add_subcommand(
      "lucas", "Companion inequality for a unimodular pair");
  add_alpha(su, c);
  add_format(su, c);
  su->add_option("--prev", prev, "Earlier fraction p/q")->required();
  su->add_option("--cur", cur, "Later fraction p/q")->required();

  CLI::App* sh = app.add_subcommand(
      "hall", "Two restricted-digit words whose mean-value hits a target");
  add_format(sh, c);
  sh->add_option("--k", k_str, "Target in [1/2, 2/3] (rational)")->required();
  sh->add_option("--depth", depth, "Bits of tolerance (2^-depth)");

  CLI::App* sw = app.add_subcommand(
      "witness", "Constructive witness words for spectrum values");
  add_format(sw, c);
  sw->add_option("--kind", kind, "lagrange | envelope")
      ->check(CLI::IsMember({"lagrange", "envelope"}));
  sw->add_option("--lambda0", lambda0, "Lagrange target (rational)");

  CLI::App* sv = app.add_subcommand(
      "verify", "Cross-check constructive rules against independent oracles");
  add_alpha(sv, c);
  add_format(sv, c);
  sv->add_option("what", what, "rules | legendre")->required();
  sv->add_option("--max-q", maxq, "Denominator bound for the sweep");
  sv->add_option("--seed", c.seed, "Seed for any randomized sweep order");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
    CLI::App* sub = app.get_subcommands().front();
    apply_config(sub, c, &horizon);
    if (sub == sd) return run_digits(c, count);
    if (sub == sc) return run_convergents(c, count);
    if (sub == sp) return run_psi(c, t_str, variant);
    if (sub == sj) return run_jumps(c, maxq, variant, source, diff, profile);
    if (sub == sk) return run_kappa(c, from, to);
    if (sub == ss) return run_spectrum(c, horizon);
    if (sub == sl) return run_legendre(c, fracs, convention);
    if (sub == su) return run_lucas(c, prev, cur);
    if (sub == sh) return run_hall(c, k_str, depth);
    if (sub == sw) return run_witness(c, kind, lambda0);
    if (sub == sv) return run_verify(c, what, maxq);
    return 2;
  } catch (const irrat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const irrat::PrefixExhausted& e) {
    std::cerr << "digit prefix exhausted: " << e.what() << "\n";
    return 3;
  } catch (const irrat::PrecisionCapExceeded& e) {
    std::cerr << "precision cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const irrat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
