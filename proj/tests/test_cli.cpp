#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "schemoid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = schemoid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SCHEMOID_DATA_DIR) + "/" + name; }

// Runs a shell pipeline with the built binary substituted for $S.
Result shell(const std::string& script) {
  const std::string cmd = "S='" SCHEMOID_CLI_PATH "'; " + script;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST_CASE("construct piped into validate") {
  const auto r = shell("\"$S\" construct hamming 2 | \"$S\" validate");
  CHECK(r.code == 0);
  CHECK(r.out == "valid: 4 objects, 16 morphisms, 3 blocks\n");
  CHECK(shell("\"$S\" construct groupoid --group S3 | \"$S\" tame >/dev/null").code == 0);
}

TEST_CASE("H(2,2) constants table") {
  const auto r = cli({"constants", data("h22.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "sigma     tau       mu        p\n"
        "T0        T0        T0        1\n"
        "T0        T1        T1        1\n"
        "T0        T2        T2        1\n"
        "T1        T0        T1        1\n"
        "T1        T1        T0        2\n"
        "T1        T1        T2        2\n"
        "T1        T2        T1        1\n"
        "T2        T0        T2        1\n"
        "T2        T1        T1        1\n"
        "T2        T2        T0        1\n");
}

TEST_CASE("tameness of P(two points)") {
  const auto r = cli({"tame", data("p_two_points.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("T(iii) fails for ({1}~, {2}~)") != std::string::npos);
  const auto j = cli({"--json", "tame", data("p_two_points.json")});
  CHECK(j.code == 1);
  CHECK(j.out.find("\"tame\": false") != std::string::npos);
}

TEST_CASE("cohomology of Z/2") {
  const auto r = cli({"rep", "cohomology", "--id", "--schemoid", data("sZ2.json"), "--field", "F2", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "H^0..H^3 = [1,1,1,1]\n");
  const auto q = cli({"rep", "cohomology", "--id", "--schemoid", data("sZ2.json"), "--max", "3"});
  CHECK(q.out == "H^0..H^3 = [1,0,0,0]\n");
}

TEST_CASE("Bose-Mesner ranks of P(K)") {
  CHECK(cli({"algebra", "sr-compare", data("edge.json")}).out ==
        "SR dim 4, Bose-Mesner dim 4, alpha is an isomorphism\n");
  CHECK(cli({"algebra", "sr-compare", data("two_points.json")}).out ==
        "SR dim 3, Bose-Mesner dim 3, alpha is an isomorphism\n");
}

TEST_CASE("other commands") {
  CHECK(cli({"algebra", "center", data("h22.json")}).out == "center of the bose-mesner algebra: dimension 3\n");
  CHECK(cli({"iso", data("sZ2.json"), data("sZ2.json")}).code == 0);
  CHECK(cli({"iso", data("sZ2.json"), data("h22.json")}).code == 1);
  CHECK(cli({"quotient", data("sZ2.json")}).code == 0);
  CHECK(cli({"quotient", data("h22.json")}).code == 1);
  CHECK(cli({"rep", "validate", "--schemoid", data("sZ2.json"), "--rep", data("sign_sZ2.json")}).code == 0);
  CHECK(cli({"rep", "validate", "--schemoid", data("sZ2.json"), "--rep", data("sign_sZ2.json"), "--field", "F3"})
            .code == 0);
  const auto hom = cli({"--json", "rep", "hom", "--schemoid", data("sZ2.json"), "--rep", data("sign_sZ2.json"),
                        "--rep2", data("sign_sZ2.json")});
  CHECK(hom.code == 0);
  CHECK(cli({"rep", "enumerate", "--schemoid", data("h22.json"), "--field", "F2", "--bound", "1"}).out ==
        "2 reps\n  dims [0,0,0,0]\n  dims [1,1,1,1]\n");
  CHECK(cli({"rep", "morita-check", "--hamming", "2", "--field", "F2", "--bound", "2"}).code == 0);
  const auto bad = cli({"rep", "morita-check", "--hamming", "2", "--field", "F2", "--bound", "2", "--perturb"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("clause 1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"validate", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"validate", data("h22.json"), "--no-such-flag"}).code == 2);
  CHECK(cli({"algebra", "center", data("h22.json"), "--field", "F4"}).code == 2);
  CHECK(cli({"rep", "enumerate", "--schemoid", data("h22.json"), "--field", "F5", "--bound", "1"}).code == 1);
  // A merged-block file fails the axiom.
  const auto r = shell("\"$S\" construct hamming 2 | python3 -c \""
                       "import json,sys; d=json.load(sys.stdin); b=d['blocks']; "
                       "d['blocks']=[sorted(b[0]+b[1]), b[2]]; d.pop('block_labels', None); print(json.dumps(d))\""
                       " | \"$S\" validate");
  CHECK(r.code == 1);
  CHECK(r.out.find("invalid: blocks") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "constants", data("h22.json")},
      {"--json", "tame", data("p_two_points.json")},
      {"--json", "rep", "cohomology", "--id", "--schemoid", data("sZ2.json"), "--field", "F2", "--max", "5"},
      {"--json", "rep", "enumerate", "--schemoid", data("sZ2.json"), "--field", "F2", "--bound", "2"},
      {"--json", "rep", "morita-check", "--hamming", "3", "--field", "F2", "--bound", "2"},
      {"construct", "powerset", "--ground", "3"},
  };
  for (const auto& c : commands) {
    const auto a = cli(c), b = cli(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
