// Copyright 2026 The quasialg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli_app.hpp"

using namespace quasialg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quasialg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("quasialg_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, PropsExpectationsDriveExitCode) {
  EXPECT_EQ(run_cli({"props", "--algebra", "octonion", "--expect", "alternative", "--expect", "not_assoc"}).code, 0);
  auto r = run_cli({"props", "--algebra", "sedenion", "--expect", "alternative"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("alternative"), std::string::npos);
  EXPECT_EQ(run_cli({"props", "--algebra", "octonion", "--expect", "simple"}).code, 0);
  EXPECT_EQ(run_cli({"props", "--h4sym", "--expect", "not_simple"}).code, 0);
  EXPECT_EQ(run_cli({"props", "--algebra", "octonion", "--expect", "flying"}).code, 2);
}

TEST(Cli, PropsJsonShape) {
  auto r = run_cli({"props", "--algebra", "quaternion"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["algebra"], "quaternion");
  EXPECT_EQ(j["flags"]["assoc"], true);
  EXPECT_EQ(j["flags"]["comm"], false);
  EXPECT_EQ(j["flags"]["simple"], "certified");
  EXPECT_TRUE(j["witnesses"].contains("comm"));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"props"}).code, 2);
  EXPECT_EQ(run_cli({"props", "--algebra", "octonion", "--h4sym"}).code, 2);
  EXPECT_EQ(run_cli({"props", "--algebra", "banana"}).code, 2);
  EXPECT_EQ(run_cli({"props", "--paley", "5"}).code, 2);
  EXPECT_EQ(run_cli({"props", "--cochain", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"relations", "--algebra", "complex", "--variant", "M7"}).code, 2);
  EXPECT_EQ(run_cli({"bench", "--level", "20"}).code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char* name : {"octonion", "z3-table-ii", "delta:5"}) {
    auto a = run_cli({"props", "--algebra", name});
    auto b = run_cli({"props", "--algebra", name});
    EXPECT_EQ(a.out, b.out) << name;
  }
  auto r1 = run_cli({"relations", "--algebra", "quaternion", "--variant", "M0", "--quasicommutative"});
  auto r2 = run_cli({"relations", "--algebra", "quaternion", "--variant", "M0", "--quasicommutative"});
  EXPECT_EQ(r1.out, r2.out);
}

TEST(Cli, CochainRoundTrip) {
  auto built = run_cli({"build", "--algebra", "octonion"});
  ASSERT_EQ(built.code, 0);
  std::string path = temp_file("oct.json", built.out);
  auto a = run_cli({"table", "--cochain", path, "--format", "text"});
  auto b = run_cli({"table", "--algebra", "octonion", "--format", "text"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(cochain_from_json(json::parse(built.out)), cd_cochain(3));
}

TEST(Cli, CochainValidation) {
  std::string bad_unit = temp_file("bad_unit.json", R"({"orders":[2],"entries":[[0,1,"-1"]]})");
  EXPECT_EQ(run_cli({"props", "--cochain", bad_unit}).code, 2);
  std::string zero = temp_file("zero.json", R"({"orders":[2],"entries":[[1,1,"0/1"]]})");
  EXPECT_EQ(run_cli({"props", "--cochain", zero}).code, 2);
  std::string both = temp_file("both.json", R"({"orders":[2],"entries":[],"sign_exponents":[]})");
  EXPECT_EQ(run_cli({"props", "--cochain", both}).code, 2);
  std::string junk = temp_file("junk.json", "{not json");
  EXPECT_EQ(run_cli({"props", "--cochain", junk}).code, 2);
  std::string half = temp_file("half.json", R"({"orders":[2],"entries":[[1,1,"2/4"]]})");
  auto r = run_cli({"build", "--cochain", half});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"1/2\""), std::string::npos);
  std::string signs = temp_file("signs.json", R"({"orders":[2],"sign_exponents":[[1,1,1]]})");
  EXPECT_EQ(run_cli({"props", "--cochain", signs, "--expect", "simple"}).code, 1);
  EXPECT_EQ(run_cli({"table", "--cochain", signs, "--format", "text"}).out, "e x\nx -e\n");
}

TEST(Cli, TablesAndPhi) {
  EXPECT_EQ(run_cli({"table", "--algebra", "z3-table-i", "--format", "text"}).out, "e x y\nx -y e\ny e x\n");
  auto phi = run_cli({"phi", "--algebra", "quaternion"});
  ASSERT_EQ(phi.code, 0);
  EXPECT_NO_THROW(json::parse(phi.out));
}

TEST(Cli, RelationsCount) {
  auto r = run_cli({"relations", "--algebra", "complex"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 8);
}

TEST(Cli, RepCheck) {
  EXPECT_EQ(run_cli({"rep-check", "--algebra", "octonion", "--expect", "algebra_map", "--expect",
                     "not_algebra_map_ordinary", "--expect", "mnphi_quasiassociative"})
                .code,
            0);
  Quasialgebra O = cd_algebra(3);
  ActionTable act = regular_action(O);
  act.at(3, 5, 6) *= -1;
  std::string path = temp_file("act.json", action_table_to_json(act).dump());
  EXPECT_EQ(run_cli({"rep-check", "--algebra", "octonion", "--action", path, "--expect", "action"}).code, 1);
  std::string good = temp_file("good.json", action_table_to_json(regular_action(O)).dump());
  EXPECT_EQ(run_cli({"rep-check", "--algebra", "octonion", "--action", good, "--expect", "round_trip"}).code, 0);
}

TEST(Cli, BenchChecksumIsReproducible) {
  auto a = run_cli({"bench", "--level", "6", "--seed", "5"});
  auto b = run_cli({"bench", "--level", "6", "--seed", "5", "--workers", "2"});
  ASSERT_EQ(a.code, 0);
  auto tail = [](const std::string& s) { return s.substr(s.find("checksum")); };
  EXPECT_EQ(tail(a.out), tail(b.out));
}

TEST(Cli, OutputFile) {
  auto path = (std::filesystem::temp_directory_path() / "quasialg_test_out.txt").string();
  ASSERT_EQ(run_cli({"table", "--algebra", "complex", "--format", "text", "--out", path}).code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "e x\nx -e\n");
}
