#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
};

/// Run the CLI binary with the given arguments, capturing stdout.
RunResult run(const std::string& args) {
  std::string cmd = std::string(IRRAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("digits and convergents render in all formats") {
  RunResult human = run("digits --alpha e --count 8");
  REQUIRE(human.exit_code == 0);
  REQUIRE(human.out == "[2;1,2,1,1,4,1,1,6,...]\n");

  RunResult tsv = run("digits --alpha e --count 8 --format tsv");
  REQUIRE(lines_of(tsv.out) ==
          std::vector<std::string>{"n\ta", "1\t1", "2\t2", "3\t1", "4\t1",
                                   "5\t4", "6\t1", "7\t1", "8\t6"});

  RunResult jl = run("digits --alpha e --count 3 --format jsonl");
  auto jlines = lines_of(jl.out);
  REQUIRE(jlines.size() == 4);
  Json meta = Json::parse(jlines[0]);
  REQUIRE(meta["schema"] == 1);
  REQUIRE(meta["verb"] == "digits");
  REQUIRE(Json::parse(jlines[2])["a"] == 2);

  RunResult conv = run("convergents --alpha sqrt:2 --count 3 --format jsonl");
  auto clines = lines_of(conv.out);
  Json c3 = Json::parse(clines.back());
  REQUIRE(c3["p"] == "17");
  REQUIRE(c3["q"] == "12");
  REQUIRE(c3["sign"] == -1);
}

TEST_CASE("jumps verb matches the known fraction-variant denominators") {
  RunResult r =
      run("jumps --alpha golden --variant fraction --max-q 30 --format jsonl");
  REQUIRE(r.exit_code == 0);
  auto jlines = lines_of(r.out);
  Json meta = Json::parse(jlines[0]);
  REQUIRE(meta["schema"] == 1);
  REQUIRE(meta["max_q"] == 30);
  std::vector<std::string> qs;
  for (size_t i = 1; i < jlines.size(); ++i)
    qs.push_back(Json::parse(jlines[i])["q"]);
  REQUIRE(qs == std::vector<std::string>{"1", "3", "4", "7", "11", "18",
                                         "29"});

  // Rule-generated rows agree with the scan rows on q and p.
  RunResult rules = run(
      "jumps --alpha golden --variant fraction --max-q 30 --source rules "
      "--format jsonl");
  auto rl = lines_of(rules.out);
  REQUIRE(rl.size() == jlines.size());
  for (size_t i = 1; i < rl.size(); ++i) {
    Json a = Json::parse(jlines[i]), b = Json::parse(rl[i]);
    REQUIRE(a["q"] == b["q"]);
    REQUIRE(a["p"] == b["p"]);
  }

  // The diff view finds nothing to report for a matching pair of sources.
  RunResult diff =
      run("jumps --alpha sqrt:2 --variant pair --max-q 500 --diff");
  REQUIRE(diff.exit_code == 0);
}

TEST_CASE("spectrum verb emits the versioned report") {
  RunResult r = run("spectrum --alpha quad:1,1,17,2 --horizon 120 "
                    "--format jsonl");
  REQUIRE(r.exit_code == 0);
  Json o = Json::parse(r.out);
  REQUIRE(o["schema"] == 1);
  REQUIRE(o["horizon"] == 120);
  // k encloses 4/sqrt(17) = 0.9701425...
  auto rat = [](const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  };
  REQUIRE(rat(o["k"][0]) <= 0.970142500146);
  REQUIRE(rat(o["k"][1]) >= 0.970142500145);
  REQUIRE(rat(o["k"][1]) - rat(o["k"][0]) < 1e-6);
  REQUIRE(o["witnesses"].contains("k_star"));
  REQUIRE(o["method"] == "JumpProducts");
}

TEST_CASE("legendre and lucas verbs emit certificates") {
  RunResult r = run("legendre --alpha sqrt:2 4/3 7/5 --format jsonl");
  REQUIRE(r.exit_code == 0);
  auto l = lines_of(r.out);
  REQUIRE(l.size() == 2);
  Json a = Json::parse(l[0]), b = Json::parse(l[1]);
  REQUIRE(a["p"] == "4");
  REQUIRE(a["q"] == "3");
  REQUIRE(a["bound"] == "3/5");
  REQUIRE(a["legendre"] == false);
  REQUIRE(a["canonical"] == false);
  REQUIRE(b["legendre"] == true);
  REQUIRE(b["canonical"] == true);
  REQUIRE(b["lucas"] == true);

  RunResult lu = run("lucas --alpha sqrt:2 --prev 3/2 --cur 7/5");
  REQUIRE(lu.exit_code == 0);
  REQUIRE(lu.out == "true\n");
  RunResult lu2 = run("lucas --alpha sqrt:2 --prev 4/3 --cur 11/8");
  REQUIRE(lu2.out == "false\n");
}

TEST_CASE("hall and witness verbs round-trip through the alpha grammar") {
  RunResult h = run("hall --k 123457/200000 --format jsonl");
  REQUIRE(h.exit_code == 0);
  Json o = Json::parse(h.out);
  REQUIRE(o["k"] == "123457/200000");
  std::string x = o["x"];
  REQUIRE(x.rfind("cf:[0;", 0) == 0);
  // The emitted words parse back and re-verify through the digits verb.
  RunResult back = run("digits --alpha '" + x + "' --count 4 --format tsv");
  REQUIRE(back.exit_code == 0);

  RunResult w = run("witness --kind lagrange --lambda0 1/10");
  REQUIRE(w.exit_code == 0);
  REQUIRE(w.out.rfind("cf:[0;(", 0) == 0);
  RunResult we = run("witness --kind envelope");
  REQUIRE(we.out == "rule:alt2?start=2\n");
}

TEST_CASE("verify verbs exit zero on the reference numbers") {
  RunResult r = run("verify rules --alpha 'cf:[0;1,(1)]' --max-q 100000");
  REQUIRE(r.exit_code == 0);
  REQUIRE(lines_of(r.out).back() == "rules: OK (q <= 100000)");

  RunResult l = run("verify legendre --alpha sqrt:2 --max-q 10000");
  REQUIRE(l.exit_code == 0);
  REQUIRE(lines_of(l.out).back() == "legendre: OK (q <= 10000)");
}

TEST_CASE("exit codes: usage 2, prefix 3; determinism; config defaults") {
  REQUIRE(run("nonsense").exit_code == 2);
  REQUIRE(run("jumps --alpha golden --max-q 10").exit_code == 2);  // no variant
  REQUIRE(run("jumps --alpha golden --variant pair --bogus 1").exit_code == 2);
  REQUIRE(run("digits --alpha 'cf:[1;1,2,3]' --count 10").exit_code == 3);

  RunResult a = run("spectrum --alpha golden --horizon 50 --format jsonl");
  RunResult b = run("spectrum --alpha golden --horizon 50 --format jsonl");
  REQUIRE(a.out == b.out);  // byte-identical across runs

  std::ofstream f("/tmp/irrat_cli_cfg");
  f << "format=tsv\nprecision=5\n";
  f.close();
  RunResult c = run("digits --alpha golden --count 2 --config /tmp/irrat_cli_cfg");
  REQUIRE(lines_of(c.out) ==
          std::vector<std::string>{"n\ta", "1\t1", "2\t1"});
  // Explicit flags win over config values.
  RunResult d = run(
      "digits --alpha golden --count 2 --config /tmp/irrat_cli_cfg "
      "--format human");
  REQUIRE(d.out == "[0;1,1,...]\n");
}
