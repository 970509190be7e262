// Drives the built binary through the exit-code regression matrix and
// checks the JSON envelope round-trips.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RESFORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run(args + " --json");
  REQUIRE(r.exit_code == expect_code);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("residues json payload") {
  nlohmann::json j = run_json("residues -p 13");
  CHECK(j["schema"] == "resform-cli/1");
  CHECK(j["command"] == "residues");
  CHECK(j["params"]["p"] == 13);
  CHECK(j["result"]["R"] == nlohmann::json::array({1, 3, 4, 9, 10, 12}));
}

TEST_CASE("exit code regression matrix") {
  // pass
  CHECK(run("residues -p 7").exit_code == 0);
  CHECK(run("legendre -p 13 10").exit_code == 0);
  CHECK(run("gauss -p 13").exit_code == 0);
  CHECK(run("jacobi -p 13").exit_code == 0);
  CHECK(run("weil -p 13 --shifts 1,2,3").exit_code == 0);
  CHECK(run("sigma -p 7 --set-a 1,2,4 --set-b 1,2,4").exit_code == 0);
  CHECK(run("energy --mod 13 --set 0,1,3,9").exit_code == 0);
  CHECK(run("pds --mod 13 --set 0,1,3,9").exit_code == 0);
  CHECK(run("multipliers --mod 7 --set 3,5,6").exit_code == 0);
  CHECK(run("singer -q 3").exit_code == 0);
  CHECK(run("sumset --mod 7 --set-a 3,5,6 --mode restricted").exit_code == 0);
  CHECK(run("diagnostics -p 13 --set 0,1,3,9").exit_code == 0);
  CHECK(run("clique -p 13").exit_code == 0);
  CHECK(run("tilde-check -p 13 --seed 7").exit_code == 0);
  CHECK(run("efun -p 13 --set 0,1,3,9").exit_code == 0);
  CHECK(run("uncertainty -p 13 --trials 20").exit_code == 0);
  CHECK(run("classify -p 7 --mode restricted").exit_code == 0);
  CHECK(run("verify --p-min 3 --p-max 13 --mode restricted").exit_code == 0);
  CHECK(run("identities -p 13 --seed 1").exit_code == 0);

  // usage errors
  CHECK(run("gauss -p 2").exit_code == 2);          // not an odd prime
  CHECK(run("nonsense -p 13").exit_code == 2);      // unknown subcommand
  CHECK(run("residues").exit_code == 2);            // missing required flag
  CHECK(run("residues -p 13 --bogus").exit_code == 2);
  CHECK(run("classify -p 7 --mode sideways").exit_code == 2);
  CHECK(run("weil -p 13 --shifts 0").exit_code == 2);
  CHECK(run("singer -q 4").exit_code == 2);
  CHECK(run("sumset --mod 7 --set-a 1 --set-b 2 --mode restricted").exit_code == 2);

  // assertion failure: budget too small to finish
  CHECK(run("classify -p 89 --mode restricted --budget 10").exit_code == 1);
  CHECK(run("verify --p-min 89 --p-max 97 --budget 10").exit_code == 1);
}

TEST_CASE("classify output matches the known lists") {
  nlohmann::json j = run_json("classify -p 13 --mode restricted");
  CHECK(j["result"]["solutions"] ==
        nlohmann::json::array({{0, 1, 3, 9}, {0, 4, 10, 12}}));
  j = run_json("classify -p 3 --mode standard");
  CHECK(j["result"]["solutions"] == nlohmann::json::array({{2}}));
  j = run_json("classify -p 11 --mode restricted");
  CHECK(j["result"]["solutions"].empty());
}

TEST_CASE("verify writes a certificate file") {
  std::string path = "cli_cert_test.json";
  nlohmann::json j = run_json("verify --p-min 3 --p-max 13 --mode restricted --out " + path);
  CHECK(j["result"]["schema"] == "resform-cert/1");
  CHECK(j["result"]["theorem_holds"] == true);

  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
  fclose(f);
  std::remove(path.c_str());
  nlohmann::json file_json = nlohmann::json::parse(content);
  CHECK(file_json == j["result"]);
}

TEST_CASE("json round trips for representative payloads") {
  for (const char* args : {"residues -p 13", "gauss -p 7",
                           "diagnostics -p 13 --set 0,1,3,9",
                           "clique -p 13", "efun -p 13 --set 0,1,3,9",
                           "classify -p 7 --mode restricted"}) {
    nlohmann::json j = run_json(args);
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
}

TEST_CASE("identities subcommand reports per-identity flags") {
  nlohmann::json j = run_json("identities -p 13 --seed 3");
  const auto& flags = j["result"]["per_prime"]["13"];
  for (const char* name : {"parseval", "convolution_fourier", "energy_correlation",
                           "chi_convolution", "r_circ_r", "rho_convolution",
                           "cs_chi", "div_c", "tilde_suite"})
    CHECK(flags[name] == true);
}

TEST_CASE("seeded runs are reproducible") {
  CHECK(run("tilde-check -p 13 --seed 9 --json").out ==
        run("tilde-check -p 13 --seed 9 --json").out);
}
