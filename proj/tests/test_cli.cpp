#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_cli_path;

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  if (exit_code) *exit_code = WEXITSTATUS(rc);
  return out;
}

}  // namespace

TEST_CASE("volumes command reports consistent products") {
  std::string out = run_cli("volumes");
  CHECK(out.find("\"command\":\"volumes\"") != std::string::npos);
  CHECK(out.find("vol_G_kp") != std::string::npos);
  CHECK(out.find("content_hash") != std::string::npos);
}

TEST_CASE("limit-spectrum lists c0 then c1 for SU(2) at L = pi/2") {
  std::string out = run_cli("limit-spectrum --space su2 --L 1.5708 --top 5");
  CHECK(out.find("\"multiplicity\":1") != std::string::npos);
  CHECK(out.find("\"multiplicity\":4") != std::string::npos);
  size_t p1 = out.find("\"multiplicity\":1");
  size_t p4 = out.find("\"multiplicity\":4");
  CHECK(p1 < p4);
}

TEST_CASE("circuit-table emits the s = 6 fixture") {
  std::string out = run_cli("circuit-table --s 6");
  CHECK(out.find("\"multiplicity\":9") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  for (const char* cmd :
       {"limit-spectrum --space su2 --L 1.0 --top 8", "circuit-table --s 5",
        "simulate-poisson --space su2 --N 150 --ell 40 --trials 60 --seed 5",
        "rankone-table --space projc2 --L 0.7 --k 6"}) {
    std::string a = run_cli(cmd), b = run_cli(cmd);
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("simulate-gaussian smoke run") {
  std::string out = run_cli("simulate-gaussian --space su2 --N 60 --L 1.2 --trials 2 --seed 3");
  CHECK(out.find("\"gk_delta\":") != std::string::npos);
  CHECK(out.find("\"top\":") != std::string::npos);
}

TEST_CASE("moments command emits provenance") {
  std::string out = run_cli("moments --ell 1.0 --s 4");
  CHECK(out.find("\"provenance\":\"quadrature\"") != std::string::npos);
}

TEST_CASE("lr command emits the csv table") {
  int rc = 0;
  std::string out = run_cli("lr --family A --lambda \"1 1\" --mu \"1 1\" --format csv", &rc);
  CHECK(rc == 0);
  CHECK(out.find("lambda,mu,nu,c") != std::string::npos);
}

TEST_CASE("summaries carry the schema-required fields") {
  // mirrors docs/summary_schema.json: required keys, hash shape, seed type
  for (const char* cmd : {"volumes", "circuit-table --s 4",
                          "limit-spectrum --space su2 --L 1.0 --top 3"}) {
    nlohmann::json j = nlohmann::json::parse(run_cli(cmd));
    for (const char* key : {"command", "seed", "config", "outputs", "content_hash"})
      REQUIRE(j.contains(key));
    CHECK(j["seed"].is_number_integer());
    CHECK(j["config"].is_object());
    std::string hash = j["content_hash"].get<std::string>();
    CHECK(hash.size() == 40);
    for (char c : hash) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
  }
}

TEST_CASE("invalid flags produce actionable errors") {
  int rc = 0;
  std::string out = run_cli("limit-spectrum --space banana", &rc);
  CHECK(rc != 0);
  CHECK(out.find("--space") != std::string::npos);
  out = run_cli("rankone-table --space su2 --L 0.5", &rc);
  CHECK(rc != 0);
}

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
