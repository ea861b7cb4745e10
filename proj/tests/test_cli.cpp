// Copyright 2026 The permclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "permclone/error.hpp"
#include "permclone/json_io.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

CliResult cli(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = PERMCLONE_CLI;
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

const std::string kZero = R"j({"q":2,"k":1,"tuples":[[0]]})j";

}  // namespace

TEST(Cli, RespectsFredkinConservative) {
  const CliResult r = cli({"check", "respects", "--gate", R"j({"q":2,"n":3,"cycles":"(5 6)"})j", "--weight",
                     R"j({"q":2,"k":1,"monoid":"nat_add","values":[0,1]})j"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["respects"], true);
  const CliResult no = cli({"check", "respects", "--gate", R"j({"q":2,"n":1,"map":[1,0]})j", "--relation", kZero});
  EXPECT_EQ(no.code, 1);
}

TEST(Cli, AutOfSquare) {
  const CliResult r = cli({"aut", "--relation", "square_relation", "--arity", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], "8");
  EXPECT_EQ(j["degree"], 4);
  const CliResult brute = cli({"aut", "--relation", "hamming_relation(2)", "--arity", "2", "--engine", "brute"});
  EXPECT_EQ(nlohmann::json::parse(brute.out)["order"], "8");
}

TEST(Cli, Census) {
  const auto dir = std::filesystem::temp_directory_path() / "permclone_cli_test";
  std::filesystem::create_directories(dir);
  const auto json = (dir / "census.json").string(), dot = (dir / "census.dot").string();
  const CliResult r = cli({"census2", "--max-arity", "3", "--out", json, "--dot", dot});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(json);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["entries"].size(), 13u);
  EXPECT_EQ(j["distinct"], true);
  EXPECT_EQ(j["edges"].size(), 21u);
  EXPECT_TRUE(std::filesystem::file_size(dot) > 0);
  // output is deterministic apart from timing
  const CliResult a = cli({"census2", "--max-arity", "2"}), b = cli({"census2", "--max-arity", "2"});
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  ja.erase("seconds");
  jb.erase("seconds");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, GateCommands) {
  const CliResult c = cli({"gate", "compose", "--first", R"j({"q":2,"n":1,"map":[1,0]})j", "--second", R"j({"q":2,"n":2,"cycles":"(2 3)"})j"});
  ASSERT_EQ(c.code, 0);
  // NOT on wire 1 then CNOT: 00 -> 10 -> 11
  EXPECT_EQ(nlohmann::json::parse(c.out)["map"][0], 3);
  const CliResult inv = cli({"gate", "invert", "--gate", R"j({"q":3,"n":1,"map":[1,2,0]})j"});
  EXPECT_EQ(nlohmann::json::parse(inv.out)["map"], nlohmann::json::parse("[2,0,1]"));
  const CliResult show = cli({"gate", "show", "--gate", R"j({"q":2,"n":2,"cycles":"(2 3)"})j"});
  const auto j = nlohmann::json::parse(show.out);
  EXPECT_EQ(j["affine"], true);
  EXPECT_EQ(j["degenerate"], false);
  const CliResult q = cli({"quotient", "--gate", R"j({"q":4,"n":1,"cycles":"(0 2)(1 3)"})j", "--partition", "01|23"});
  EXPECT_EQ(nlohmann::json::parse(q.out)["map"], nlohmann::json::parse("[1,0]"));
}

TEST(Cli, CloneCommands) {
  const std::string p0 = R"j({"q":2,"name":"P0","relations":[)j" + kZero + "]}";
  const CliResult anc = cli({"clone", "ancilla-check", "--spec", p0, "--bound", "2"});
  EXPECT_EQ(anc.code, 1);
  const auto j = nlohmann::json::parse(anc.out);
  EXPECT_EQ(j["regime"], "exact");
  EXPECT_TRUE(j["levels"][0].contains("witness"));
  EXPECT_EQ(cli({"clone", "borrow-check", "--spec", p0, "--bound", "3"}).code, 0);
  const CliResult slice = cli({"clone", "slice", "--spec", R"j({"q":2,"relations":["affine_relation(2)"]})j", "--arity", "3"});
  EXPECT_EQ(nlohmann::json::parse(slice.out)["order"], "1344");
  const CliResult cmp = cli({"clone", "compare", "--spec", p0, "--other", R"j({"q":2,"relations":[{"q":2,"k":1,"tuples":[[1]]}]})j",
                       "--bound", "3"});
  EXPECT_EQ(nlohmann::json::parse(cmp.out)["verdict"], "incomparable");
  EXPECT_EQ(cli({"clone", "member", "--spec", p0, "--gate", R"j({"q":2,"n":1,"map":[1,0]})j"}).code, 1);
}

TEST(Cli, WeightDerive) {
  const CliResult c = cli({"weight", "derive", "counting", "--relation", R"j({"q":3,"k":2,"tuples":[[0,1],[1,0],[1,1]]})j",
                     "--position", "2"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["values"], nlohmann::json::parse("[1,2,0]"));
  const CliResult d = cli({"weight", "derive", "delta", "--q", "2"});
  EXPECT_EQ(nlohmann::json::parse(d.out)["values"], nlohmann::json::parse("[1,0,0,1]"));
  const CliResult h = cli({"weight", "derive", "hom", "--weight",
                     R"j({"q":3,"k":1,"monoid":"nat_add_inf","values":[0,1,"inf"]})j", "--hom", "annihilate_inf"});
  EXPECT_EQ(nlohmann::json::parse(h.out)["values"], nlohmann::json::parse("[1,1,0]"));
  const CliResult m = cli({"weight", "derive", "maxlevel", "--weight", R"j({"q":2,"k":1,"monoid":"nat_add","values":[3,1]})j"});
  EXPECT_EQ(nlohmann::json::parse(m.out)["tuples"], nlohmann::json::parse("[[0]]"));
}

TEST(Cli, Errors) {
  const CliResult bad = cli({"aut", "--relation", R"j({"q":2,"k":1,"tuples":[[5]]})j", "--arity", "1"}, true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["error"], "invalid_argument");
  EXPECT_EQ(cli({"aut", "--bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  const CliResult big = cli({"clone", "slice", "--spec", R"j({"q":2,"relations":[{"q":2,"k":1,"tuples":[[0]]}]})j", "--arity", "13"}, true);
  EXPECT_EQ(big.code, 3);
  EXPECT_EQ(nlohmann::json::parse(big.out)["error"], "resource_limit");
}

TEST(Json, RoundTrips) {
  using namespace permclone;
  const Gate f = gates::toffoli();
  EXPECT_EQ(json_io::gate_from_json(json_io::to_json(f)), f);
  const Relation r = Relation::from_tuples(3, 2, {{0, 1}, {2, 2}});
  EXPECT_EQ(json_io::relation_from_json(json_io::to_json(r)), r);
  const Monoid z3 = Monoid::table({"0", "1", "2"}, "0", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const Weight w(3, 1, z3, {Value::of(0), Value::of(2), Value::of(1)});
  EXPECT_EQ(json_io::weight_from_json(json_io::to_json(w)), w);
  const Weight big(2, 1, Monoid::nat_mul(), {Value::of(Natural(1) << 100), Value::of(3)});
  EXPECT_EQ(json_io::weight_from_json(json_io::to_json(big)), big);
  const Weight inf(2, 1, Monoid::nat_add_inf(), {Value::infinity(), Value::of(3)});
  EXPECT_EQ(json_io::weight_from_json(json_io::to_json(inf)), inf);
  const Monoid pair = Monoid::product({Monoid::bool_and(), Monoid::nat_add()});
  const Weight pw(2, 1, pair, {Value::tuple({Value::of(1), Value::of(0)}), Value::tuple({Value::of(0), Value::of(4)})});
  EXPECT_EQ(json_io::weight_from_json(json_io::to_json(pw)), pw);
  EXPECT_EQ(json_io::relation_from_json(json_io::load("neq(3)")).size(), 6u);
  EXPECT_THROW(json_io::load("{not json"), InvalidArgument);
}
