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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "permclone/census.hpp"

using namespace permclone;

namespace {

Relation bits(int k, std::vector<std::string> words) {
  std::vector<Tuple> ts;
  for (const auto& w : words) {
    Tuple t;
    for (char c : w) t.push_back(c - '0');
    ts.push_back(t);
  }
  return Relation::from_tuples(2, k, ts);
}

const std::vector<std::string> kAffine{"0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"};

using Edge = std::pair<std::string, std::string>;

// the published inclusion diagram, upper then lower
std::set<Edge> expected_edges() {
  return {{"T", "A"},    {"T", "D"},    {"T", "P0"},   {"T", "P1"},  {"P1", "P"},  {"P0", "P"},   {"P", "DP"},
          {"P1", "AP1"}, {"P0", "AP0"}, {"DP", "AP"},  {"A", "AP0"}, {"A", "AP1"}, {"A", "AD"},   {"AD", "AP"},
          {"AP0", "AP"}, {"AP1", "AP"}, {"AP", "Pi"},  {"AD", "U"},  {"U", "Pi"},  {"D", "DP"},   {"D", "AD"}};
}

}  // namespace

TEST(Census, TableRelations) {
  EXPECT_EQ(census::entry("T").relation, bits(1, {"0", "1"}));
  EXPECT_EQ(census::entry("D").relation, bits(2, {"01", "10"}));
  EXPECT_EQ(census::entry("DP").relation, bits(4, {"0110", "1010"}));
  EXPECT_EQ(census::entry("A").relation, bits(4, kAffine));
  EXPECT_EQ(census::entry("AP0").relation, bits(3, {"000", "011", "101", "110"}));
  EXPECT_EQ(census::entry("AD").relation, product(bits(4, kAffine), bits(2, {"01", "10"})));
  EXPECT_EQ(census::entry("AP1").relation, bits(5, {"00001", "00111", "01011", "01101", "10011", "10101", "11001", "11111"}));
  EXPECT_EQ(census::entry("AP").relation, bits(4, {"0001", "0111", "1011", "1101"}));
  EXPECT_EQ(census::entry("P0").relation, bits(1, {"0"}));
  EXPECT_EQ(census::entry("P1").relation, bits(1, {"1"}));
  EXPECT_EQ(census::entry("P").relation, bits(2, {"01"}));
  EXPECT_EQ(census::entry("U").relation, bits(3, {"000", "001", "011", "100", "110", "111"}));
  EXPECT_EQ(census::entries().size(), 13u);
  EXPECT_EQ(census::entries().back().symbol, "Π");
}

TEST(Census, KnownEdges) {
  const auto& e = census::known_edges();
  EXPECT_EQ(e.size(), 21u);
  EXPECT_EQ(std::set<Edge>(e.begin(), e.end()), expected_edges());
}

TEST(Census, RunToArityThree) {
  const census::Census c = census::run(3);
  EXPECT_EQ(c.entries.size(), 13u);
  EXPECT_TRUE(c.distinct);
  EXPECT_TRUE(c.matches_known);
  EXPECT_EQ(std::set<Edge>(c.edges.begin(), c.edges.end()), expected_edges());
  auto orders = [&](const std::string& name) {
    for (const auto& e : c.entries) {
      if (e.name == name) return e.orders;
    }
    return std::vector<Natural>{};
  };
  for (int n = 1; n <= 3; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    EXPECT_EQ(orders("A")[i], affine_group(2, n).order());
    EXPECT_EQ(orders("U")[i], wreath_group(symmetric_group(2), n).order());
    EXPECT_EQ(orders("T")[i], symmetric_group(1u << n).order());
    EXPECT_EQ(orders("Pi")[i], oracle::wire_maps(2, n).size());
  }
  const auto at = c.distinguishing.count({"A", "T"}) ? c.distinguishing.at({"A", "T"}) : c.distinguishing.at({"T", "A"});
  EXPECT_EQ(at, 3);
  const std::string dot = census::to_dot(c);
  std::size_t lines = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++lines;
  EXPECT_EQ(lines, 21u);
}

TEST(Census, BruteEngineAgrees) {
  const census::Census a = census::run(2), b = census::run(2, AutEngine::kBrute);
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].orders, b.entries[i].orders);
}

TEST(Census, Witnesses) {
  const census::WitnessReport r = census::verify_witnesses();
  EXPECT_GT(r.claims, 30u);
  EXPECT_EQ(r.holding, r.claims);
  EXPECT_TRUE(r.discrepancies.empty());
  for (const auto& w : census::witnesses()) {
    for (const auto& name : w.in) EXPECT_TRUE(oracle::respects(w.gate, census::entry(name).relation)) << w.certifies << " " << name;
    for (const auto& name : w.out) EXPECT_FALSE(oracle::respects(w.gate, census::entry(name).relation)) << w.certifies << " " << name;
  }
}

TEST(Census, Collapses) {
  for (const auto& item : census::collapse_checks(3)) EXPECT_TRUE(item.holds) << item.name << " " << item.arity;
  for (const auto* r : {"00 01 10", "01 10 11", "00 01 11"}) {
    std::vector<std::string> words;
    std::string s(r);
    for (std::size_t i = 0; i < s.size(); i += 3) words.push_back(s.substr(i, 2));
    const std::vector<Weight> ws{char_weight(bits(2, words))};
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(oracle::slice_elements(2, n, ws), oracle::wire_maps(2, n)) << r;
  }
}
