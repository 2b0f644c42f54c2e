/*
  Copyright 2026 The Butson Library Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// Spawns the installed CLI binary (path in BUTSON_CLI) and checks exit codes
// and output files.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* p = std::getenv("BUTSON_CLI");
  REQUIRE_MESSAGE(p != nullptr, "BUTSON_CLI not set");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  auto out_file = fs::temp_directory_path() / "butson_cli_out.txt";
  std::string cmd = "\"" + cli_path() + "\" " + args + " > " +
                    out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("construct golden row to stdout") {
  auto r = run("construct --group \"3^2\" --h 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[0,0,0,0,1,2,0,2,1]") != std::string::npos);
}

TEST_CASE("construct with default h") {
  auto r = run("construct --group \"3 x 2 x 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"h\":6") != std::string::npos);
}

TEST_CASE("refused constructions exit 1, bad input exits 2") {
  auto refused = run("construct --group \"2\" --h 2");
  CHECK(refused.exit_code == 1);
  CHECK(!refused.output.empty());

  CHECK(run("construct --group \"4\" --h 2").exit_code == 2);
  CHECK(run("construct").exit_code == 2);
  CHECK(run("verify /nonexistent/row.json").exit_code == 2);
}

TEST_CASE("construct then verify round trip") {
  auto path = temp_path("butson_row.json");
  auto c = run("construct --group \"2^2 x 3\" --out " + path);
  REQUIRE(c.exit_code == 0);
  auto v = run("verify " + path);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("\"verified\":true") != std::string::npos);
}

TEST_CASE("verify rejects a non-matrix row") {
  auto path = temp_path("butson_bad_row.json");
  std::ofstream(path)
      << "{\"group\":[[2,2]],\"l_rank\":0,\"h\":2,\"row\":[0,0,0,0]}";
  auto v = run("verify " + path);
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("\"verified\":false") != std::string::npos);
}

TEST_CASE("exists prints verdict and provenance") {
  auto r = run("exists --group \"2^3\" --h 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("NOT_EXISTS") != std::string::npos);
  CHECK(r.output.find("Theorem 3.6") != std::string::npos);

  auto witness = temp_path("butson_witness.json");
  auto w = run("exists --group \"3^2\" --h 3 --witness-out " + witness);
  CHECK(w.exit_code == 0);
  CHECK(w.output.find("EXISTS") != std::string::npos);
  CHECK(fs::exists(witness));
}

TEST_CASE("search prints outcome") {
  auto found = run("search --v 4 --h 2");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("\"outcome\":\"FOUND\"") != std::string::npos);

  auto not_found = run("search --v 2 --h 2");
  CHECK(not_found.exit_code == 0);
  CHECK(not_found.output.find("\"outcome\":\"NOT_FOUND\"") !=
        std::string::npos);
}

TEST_CASE("table csv to file, byte identical across runs") {
  auto a_path = temp_path("butson_table_a.csv");
  auto b_path = temp_path("butson_table_b.csv");
  REQUIRE(run("table --order-max 12 --h-max 6 --out " + a_path).exit_code == 0);
  REQUIRE(run("table --order-max 12 --h-max 6 --out " + b_path).exit_code == 0);
  std::stringstream a, b;
  a << std::ifstream(a_path).rdbuf();
  b << std::ifstream(b_path).rdbuf();
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("group,order,h,status,provenance", 0) == 0);
}

TEST_CASE("csv format output") {
  auto r = run("construct --group \"2^2\" --h 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0,0,1,0") != std::string::npos);
}
