// Integration tests for the argstr binary: exit codes, report content, and
// byte-stable machine output.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ARGSTR_BIN
#error "ARGSTR_BIN must point at the built CLI"
#endif
#ifndef SAMPLES_DIR
#error "SAMPLES_DIR must point at the sample .arg files"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("argstr_test_out_" + std::to_string(++counter));
  const auto err = dir / ("argstr_test_err_" + std::to_string(counter));
  const std::string cmd = std::string(ARGSTR_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

std::string sample(const std::string& name) {
  return std::string(SAMPLES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("check: coherent file exits 0") {
  const RunResult r = run("check " + sample("ellsberg_a2.arg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("coherent") != std::string::npos);
}

TEST_CASE("check: incoherent file exits 2") {
  const RunResult r = run("check " + sample("incoherent.arg"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("incoherent") != std::string::npos);
}

TEST_CASE("check: missing file exits 1") {
  const RunResult r = run("check /nonexistent/nowhere.arg");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("parse errors exit 1 with a located message") {
  const auto bad = std::filesystem::temp_directory_path() / "argstr_bad.arg";
  {
    std::ofstream f(bad);
    f << "atoms: R\npremise: P(R) = 1.2\nconclusion: P(R)\n";
  }
  const RunResult r = run("check " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("2:17") != std::string::npos);
  CHECK(r.err.find("bound out of [0,1]") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").exit_code == 1);
  CHECK(run("frobnicate x.arg").exit_code == 1);
  const RunResult help = run("--help");
  CHECK(help.exit_code == 0);
}

TEST_CASE("check reports zero layers") {
  const RunResult r = run("check --json " + sample("zero_layer.arg"));
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["records"].size() == 1);
  CHECK(doc["records"][0]["zero_layers"] == nlohmann::json::array({"T"}));
}

TEST_CASE("bounds: modus ponens interval is exact") {
  const RunResult r = run("bounds --json " + sample("modus_ponens.arg"));
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& record = doc["records"][0];
  CHECK(record["interval"]["lower"]["exact"] == "18/25");
  CHECK(record["interval"]["upper"]["exact"] == "23/25");
  CHECK(record["interval"]["lower"]["decimal"] == "0.7200");
  CHECK(record["interval"]["upper"]["decimal"] == "0.9200");
}

TEST_CASE("strength: single modus ponens file scores 0.656") {
  const RunResult r = run("strength --json " + sample("modus_ponens.arg"));
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& record = doc["records"][0];
  CHECK(record["strength"]["value"]["exact"] == "82/125");
  CHECK(record["strength"]["value"]["decimal"] == "0.6560");
  CHECK_FALSE(doc.contains("order"));
}

TEST_CASE("strength: the four urn files rank A4 > A1 > A3 > A2") {
  const std::string files = sample("ellsberg_a1.arg") + " " + sample("ellsberg_a2.arg") +
                            " " + sample("ellsberg_a3.arg") + " " +
                            sample("ellsberg_a4.arg");
  const RunResult human = run("strength " + files);
  REQUIRE(human.exit_code == 0);
  CHECK(human.out.find("A4 > A1 > A3 > A2") != std::string::npos);

  const RunResult json = run("strength --json --places 2 " + files);
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc["records"].size() == 4);
  CHECK(doc["records"][0]["strength"]["value"]["decimal"] == "0.33");
  CHECK(doc["records"][1]["strength"]["value"]["decimal"] == "0.11");
  CHECK(doc["records"][2]["strength"]["value"]["decimal"] == "0.22");
  CHECK(doc["records"][3]["strength"]["value"]["decimal"] == "0.67");
  const nlohmann::json expected_order = {{"A4"}, {"A1"}, {"A3"}, {"A2"}};
  CHECK(doc["order"] == expected_order);
}

TEST_CASE("strength: an incoherent input aborts with its verdict") {
  const RunResult r =
      run("strength " + sample("ellsberg_a1.arg") + " " + sample("incoherent.arg"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("strength: vacuous conclusion surfaces its reason and scores zero") {
  const RunResult r = run("strength --json " + sample("vacuous_conclusion.arg"));
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& record = doc["records"][0];
  CHECK(record["vacuous_reason"] == "conditioning event forced to zero");
  CHECK(record["strength"]["value"]["exact"] == "0");
}

TEST_CASE("rank prints the preference order") {
  const RunResult r = run("rank " + sample("ellsberg_a2.arg") + " " +
                          sample("ellsberg_a4.arg"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("preference order: A4 > A2") != std::string::npos);
}

TEST_CASE("ellsberg subcommand reproduces both variants") {
  const RunResult decimal = run("ellsberg --variant decimal --places 2");
  REQUIRE(decimal.exit_code == 0);
  CHECK(decimal.out.find("0.33") != std::string::npos);
  CHECK(decimal.out.find("0.11") != std::string::npos);
  CHECK(decimal.out.find("0.22") != std::string::npos);
  CHECK(decimal.out.find("0.67") != std::string::npos);
  CHECK(decimal.out.find("strategy: E") != std::string::npos);

  const RunResult exact = run("ellsberg --json --variant exact");
  REQUIRE(exact.exit_code == 0);
  const auto doc = nlohmann::json::parse(exact.out);
  CHECK(doc["strategy"] == "E");
  CHECK(doc["choices"]["bet1_vs_bet2"] == "Bet1");
  CHECK(doc["choices"]["bet3_vs_bet4"] == "Bet4");
  CHECK(doc["records"][0]["strength"]["value"]["exact"] == "1/3");
  CHECK(doc["records"][1]["strength"]["value"]["exact"] == "1/9");
  CHECK(doc["records"][2]["strength"]["value"]["exact"] == "2/9");
  CHECK(doc["records"][3]["strength"]["value"]["exact"] == "2/3");
  const nlohmann::json expected_order = {{"A4"}, {"A1"}, {"A3"}, {"A2"}};
  CHECK(doc["order"] == expected_order);
}

TEST_CASE("machine output is byte-identical across runs") {
  const std::string invocations[] = {
      "ellsberg --json --variant exact",
      "strength --json " + sample("ellsberg_a1.arg") + " " + sample("ellsberg_a2.arg"),
      "bounds --json --witness " + sample("modus_ponens.arg"),
      "check --json " + sample("zero_layer.arg"),
  };
  for (const std::string& inv : invocations) {
    const RunResult a = run(inv);
    const RunResult b = run(inv);
    REQUIRE(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("witness flag includes attaining distributions") {
  const RunResult r = run("bounds --json --witness " + sample("ellsberg_a2.arg"));
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& record = doc["records"][0];
  REQUIRE(record.contains("witnesses"));
  CHECK(record["witnesses"]["lower"].size() == 3);
  CHECK(record["witnesses"]["upper"].size() == 3);
}

TEST_CASE("interval premises flow through the pipeline") {
  const RunResult r = run("bounds --json " + sample("interval_premise.arg"));
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& record = doc["records"][0];
  // p(A) in [1/5, 2/5], p(B|A) = 1/2: p(A and B) in [1/10, 1/5].
  CHECK(record["interval"]["lower"]["exact"] == "1/10");
  CHECK(record["interval"]["upper"]["exact"] == "1/5");
}
