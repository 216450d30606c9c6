#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run(const std::string& args) {
  std::string cmd = std::string(EXCY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("generate emits the frozen dimension-3 document") {
  CommandResult r = run("generate --family esser-mld --dim 3 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("hypersurface").at("degree").get<std::string>() == "191");
  CHECK(j.at("hypersurface").at("weights") ==
        nlohmann::json::array({"95", "61", "26", "8", "1"}));
  CHECK(j.at("invariants").at("m").get<std::string>() == "311");
}

TEST_CASE("generate text format includes exact and approximate volume") {
  CommandResult r = run("generate --family small-volume --dim 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("X_42 in P(21,14,6,11)") != std::string::npos);
  CHECK(r.output.find("1/462") != std::string::npos);
  CHECK(r.output.find("2.2e-3") != std::string::npos);
}

TEST_CASE("generate reports the conditional index") {
  CommandResult r = run("generate --family large-index --dim 4 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("invariants").at("index_conditional").get<std::string>() == "1201495");
  CHECK(j.at("invariants").at("gcd_check").get<std::string>() == "1");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("generate --family no-such-family --dim 3").exit_code == 2);
  CHECK(run("generate --family esser-mld --dim 1").exit_code == 2);
  CHECK(run("scan-gcd --max-dim 1").exit_code == 2);
  CHECK(run("verify --suite no-such-suite").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify suites pass at desk scale") {
  CommandResult r = run("verify --suite product --max-r 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CommandResult qk = run("verify --suite qk --max-r 3");
  CHECK(qk.exit_code == 0);
  CommandResult neg = run("verify --suite negative");
  CHECK(neg.exit_code == 0);
}

TEST_CASE("scan-gcd streams one line per dimension") {
  CommandResult r = run("scan-gcd --max-dim 6");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output == "2, 1, PASS\n3, 1, PASS\n4, 1, PASS\n5, 1, PASS\n6, 1, PASS\n");
}

TEST_CASE("scan-gcd persists the full table") {
  std::string path = "/tmp/excy_scan_table_test.json";
  CommandResult r = run("scan-gcd --max-dim 4 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("entries").size() == 3);
  CHECK(j.at("entries")[2].at("m_prime").get<std::string>() == "1201495");
  CHECK(j.at("entries")[2].at("E").get<std::string>() == "691");
  std::remove(path.c_str());
}

TEST_CASE("generate refuses dimensions beyond the cap") {
  CHECK(run("generate --family esser-mld --dim 41").exit_code == 2);
}

TEST_CASE("alpha prints certified digits") {
  CommandResult r = run("alpha --digits 6");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("5.522868\n") != std::string::npos);
  CommandResult one = run("alpha --digits 1");
  REQUIRE(one.exit_code == 0);
  CHECK(one.output.find("5.5\n") != std::string::npos);
}
