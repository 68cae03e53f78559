#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("mwcpower_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  static int counter = 0;
  const fs::path base = scratch_dir() / ("run" + std::to_string(counter++));
  const fs::path in = base.string() + ".in";
  const fs::path out = base.string() + ".out";
  const fs::path err = base.string() + ".err";
  {
    std::ofstream f(in);
    f << stdin_data;
  }
  const std::string cmd = std::string(MWCPOWER_CLI_PATH) + " " + args + " < " + in.string() +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{exit_code, slurp(out), slurp(err)};
}

const char* kEecWeighted = R"({
  "voters": ["F", "G", "I", "B", "N", "L"],
  "weights": [4, 4, 4, 2, 2, 1],
  "quota": 12
})";

const char* kEecMwc = R"({
  "voters": ["F", "G", "I", "B", "N", "L"],
  "mwc": [["F","G","I"], ["F","G","B","N"], ["F","I","B","N"], ["G","I","B","N"]]
})";

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze renders the EEC table from the weighted description") {
  const CliResult r = run_cli("analyze -", kEecWeighted);
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "5/21"));
  CHECK(contains(r.out, "7/30"));
  CHECK(contains(r.out, "3/20"));
  CHECK(contains(r.out, "5/16"));
  CHECK(contains(r.out, "0.238095"));
}

TEST_CASE("analyze from a file, dictator document") {
  const fs::path doc = scratch_dir() / "dictator.json";
  {
    std::ofstream f(doc);
    f << R"({"voters": ["A", "B"], "mwc": [["A"]]})";
  }
  const CliResult r = run_cli("analyze " + doc.string());
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "1/1"));
}

TEST_CASE("analyze rejects nested coalitions with exit 2") {
  const CliResult r =
      run_cli("analyze -", R"({"voters": ["A","B"], "mwc": [["A"], ["A","B"]]})");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "incomparable"));
}

TEST_CASE("analyze rejects float weights with exit 2") {
  const CliResult r =
      run_cli("analyze -", R"({"voters": ["A","B"], "weights": [0.5, 1], "quota": 1})");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "float"));
}

TEST_CASE("analyze honors the term budget with exit 3") {
  const CliResult r = run_cli("analyze --budget 3 -", kEecMwc);
  CHECK(r.exit_code == 3);
}

TEST_CASE("analyze --json round-trips to identical exact values") {
  const CliResult first = run_cli("analyze --json -", kEecWeighted);
  REQUIRE(first.exit_code == 0);
  const json parsed = json::parse(first.out);
  CHECK(parsed["bs"] == json::array({"10", "10", "10", "6", "6", "0"}));
  CHECK(parsed["pbi"][0] == "5/21");
  CHECK(parsed["ssi"][0] == "7/30");
  CHECK(parsed["ssi"][3] == "3/20");
  CHECK(parsed["dp"][0] == "5/24");
  CHECK(parsed["hp"][0] == "1/5");
  CHECK(parsed["mwc"][0] == json::array({"F", "G", "I"}));

  // the emitted document is itself a system document
  const CliResult second = run_cli("analyze --json -", first.out);
  REQUIRE(second.exit_code == 0);
  const json reparsed = json::parse(second.out);
  CHECK(reparsed["bs"] == parsed["bs"]);
  CHECK(reparsed["pbp"] == parsed["pbp"]);
  CHECK(reparsed["pbi"] == parsed["pbi"]);
  CHECK(reparsed["ssi"] == parsed["ssi"]);
  CHECK(reparsed["dp"] == parsed["dp"]);
  CHECK(reparsed["hp"] == parsed["hp"]);
}

TEST_CASE("derive prints the EEC coalitions in canonical order") {
  const CliResult r = run_cli("derive -", kEecWeighted);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "{F,G,I}\n{F,G,B,N}\n{F,I,B,N}\n{G,I,B,N}\n");
}

TEST_CASE("derive rejects a zero quota with exit 2") {
  const CliResult r =
      run_cli("derive -", R"({"voters": ["A","B"], "weights": [1, 1], "quota": 0})");
  CHECK(r.exit_code == 2);
}

TEST_CASE("derive needs a weighted document") {
  const CliResult r = run_cli("derive -", kEecMwc);
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify agrees with the oracle on the EEC") {
  const CliResult r = run_cli("verify -", kEecMwc);
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "BS   PASS"));
  CHECK(contains(r.out, "SSI  PASS"));
}

TEST_CASE("verify --atlas sweeps every small system") {
  const CliResult r = run_cli("verify --atlas 2");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "4 systems checked: BS PASS, SSI PASS"));
}

TEST_CASE("verify beyond the oracle cap exits 3") {
  std::vector<std::string> names;
  json mwc_members = json::array();
  for (int i = 0; i < 30; ++i) {
    names.push_back("v" + std::to_string(i));
    mwc_members.push_back(names.back());
  }
  const json doc = {{"voters", names}, {"mwc", json::array({mwc_members})}};
  const CliResult r = run_cli("verify -", doc.dump());
  CHECK(r.exit_code == 3);
}

TEST_CASE("trace walks the stepwise sums") {
  const CliResult bs = run_cli("trace --voter F --kind bs -", kEecMwc);
  REQUIRE(bs.exit_code == 0);
  CHECK(contains(bs.out, "16"));
  CHECK(contains(bs.out, "12"));
  CHECK(contains(bs.out, "10"));

  const CliResult ssi = run_cli("trace --voter F --kind ssi --json -", kEecMwc);
  REQUIRE(ssi.exit_code == 0);
  const json parsed = json::parse(ssi.out);
  CHECK(parsed["steps"] == json::array({"5/6", "-11/30", "13/30", "7/30"}));

  const CliResult bs_json = run_cli("trace --voter F --kind bs --json -", kEecMwc);
  REQUIRE(bs_json.exit_code == 0);
  CHECK(json::parse(bs_json.out)["steps"] == json::array({"16", "4", "12", "10"}));
}

TEST_CASE("trace rejects unknown voters with exit 2") {
  const CliResult r = run_cli("trace --voter X --kind bs -", kEecMwc);
  CHECK(r.exit_code == 2);
}

TEST_CASE("atlas counts and profiles") {
  const CliResult four = run_cli("atlas 4");
  REQUIRE(four.exit_code == 0);
  CHECK(contains(four.out, "166 systems"));

  const CliResult two = run_cli("atlas 2 --profiles pbi");
  REQUIRE(two.exit_code == 0);
  CHECK(contains(two.out, "4 systems"));
  CHECK(contains(two.out, "2 distinct unordered profiles"));
  CHECK(contains(two.out, "3 distinct ordered profiles"));

  const CliResult over = run_cli("atlas 7");
  CHECK(over.exit_code == 3);
}

TEST_CASE("atlas --dump writes one record per system") {
  const fs::path dump = scratch_dir() / "atlas3.jsonl";
  const CliResult r = run_cli("atlas 3 --dump " + dump.string());
  REQUIRE(r.exit_code == 0);

  std::ifstream in(dump);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const json record = json::parse(line);
    CHECK(record.contains("mwc"));
    CHECK(record.contains("bs"));
    CHECK(record.contains("pbi"));
    CHECK(record.contains("ssi"));
    CHECK(record["mwc"].is_array());
  }
  CHECK(lines == 18);
}
