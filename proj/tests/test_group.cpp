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

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permclone/automorphism.hpp"
#include "permclone/builtins.hpp"
#include "permclone/error.hpp"
#include "permclone/group.hpp"

using namespace permclone;

namespace {

oracle::PermSet as_set(const PermGroup& g) {
  const auto e = g.elements(2'000'000);
  return oracle::PermSet(e.begin(), e.end());
}

Perm cycle_of(std::uint32_t m) {
  Perm p(m);
  for (std::uint32_t i = 0; i < m; ++i) p[i] = (i + 1) % m;
  return p;
}

}  // namespace

TEST(PermGroup, SymmetricFromTwoGenerators) {
  Perm t = identity_perm(8);
  std::swap(t[0], t[1]);
  const PermGroup g(8, {t, cycle_of(8)});
  EXPECT_EQ(g.order(), 40320);
  EXPECT_TRUE(g.contains(identity_perm(8)));
  EXPECT_EQ(PermGroup(4, {{1, 0, 3, 2}}).order(), 2);
  EXPECT_EQ(trivial_group(5).order(), 1);
  EXPECT_EQ(symmetric_group(9).order(), 362880);
  EXPECT_THROW(PermGroup(3, {{0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(g.contains(identity_perm(7)), InvalidArgument);
}

TEST(PermGroup, OrderMatchesClosure) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 7);
    std::vector<Perm> gens;
    for (int i = static_cast<int>(rng() % 3); i >= 0; --i) {
      Perm p = identity_perm(m);
      // mostly sparse generators so that small groups appear
      if (rng() % 3 == 0) {
        p = oracle::random_perm(m, rng);
      } else {
        for (int s = 1 + static_cast<int>(rng() % 2); s > 0; --s) std::swap(p[rng() % m], p[rng() % m]);
      }
      gens.push_back(p);
    }
    const PermGroup g(m, gens);
    const oracle::PermSet all = oracle::closure(m, gens);
    ASSERT_EQ(g.order(), all.size());
    ASSERT_EQ(as_set(g), all);
    std::uint64_t orbit_product = 1;
    for (auto s : g.orbit_sizes()) orbit_product *= s;
    ASSERT_EQ(g.order(), orbit_product);
    for (int i = 0; i < 20; ++i) {
      const Perm p = oracle::random_perm(m, rng);
      ASSERT_EQ(g.contains(p), all.count(p) == 1);
    }
  }
}

TEST(PermGroup, AddGenerator) {
  PermGroup g(6);
  EXPECT_TRUE(g.add_generator({1, 0, 2, 3, 4, 5}));
  EXPECT_FALSE(g.add_generator({1, 0, 2, 3, 4, 5}));
  EXPECT_TRUE(g.add_generator({0, 2, 1, 3, 4, 5}));
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(g.add_generator(cycle_of(6)));
  EXPECT_EQ(g.order(), 720);
}

TEST(PermGroup, SubgroupAndEquality) {
  const PermGroup s4 = symmetric_group(4);
  const PermGroup v4(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  EXPECT_TRUE(is_subgroup(v4, s4));
  EXPECT_FALSE(is_subgroup(s4, v4));
  EXPECT_TRUE(group_equal(s4, PermGroup(4, {{1, 0, 2, 3}, {1, 2, 3, 0}})));
  EXPECT_FALSE(group_equal(s4, v4));
  const std::vector<Perm> els{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  EXPECT_TRUE(group_equal(group_from_elements(4, els), v4));
}

TEST(PermGroup, EnumerationCap) {
  EXPECT_THROW(symmetric_group(9).elements(1000), ResourceLimit);
  EXPECT_EQ(symmetric_group(5).elements(120).size(), 120u);
}

TEST(PermGroup, UniformSampling) {
  const PermGroup s4 = symmetric_group(4);
  std::mt19937_64 rng(2024);
  std::map<Perm, int> freq;
  const int n = 10000;
  for (int i = 0; i < n; ++i) ++freq[s4.random_element(rng)];
  ASSERT_EQ(freq.size(), 24u);
  const double p = 1.0 / 24, sigma = std::sqrt(n * p * (1 - p));
  for (const auto& [perm, c] : freq) EXPECT_LT(std::abs(c - n * p), 5 * sigma);
  EXPECT_EQ(uniform_random_element(s4, 5), uniform_random_element(s4, 5));
  EXPECT_EQ(uniform_random_element(trivial_group(4), 9), identity_perm(4));
  const PermGroup w = wreath_group(symmetric_group(2), 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_TRUE(w.contains(uniform_random_element(w, seed)));
}

TEST(Constructions, Wreath) {
  EXPECT_EQ(wreath_group(symmetric_group(2), 3).order(), 48);
  EXPECT_EQ(wreath_group(symmetric_group(3), 2).order(), 72);
  EXPECT_EQ(wreath_group(trivial_group(3), 3).order(), 6);
  EXPECT_EQ(as_set(wreath_group(symmetric_group(2), 3)), oracle::degenerate_maps(2, 3));
  EXPECT_EQ(as_set(wreath_group(symmetric_group(3), 2)), oracle::degenerate_maps(3, 2));
  EXPECT_EQ(as_set(wreath_group(trivial_group(2), 3)), oracle::wire_maps(2, 3));
  EXPECT_EQ(as_set(wire_group(3, 2)), oracle::wire_maps(3, 2));
  EXPECT_EQ(wire_group(2, 4).order(), 24);
}

TEST(Constructions, Affine) {
  EXPECT_EQ(affine_group(2, 1).order(), 2);
  EXPECT_EQ(affine_group(2, 2).order(), 24);
  EXPECT_EQ(affine_group(2, 3).order(), 1344);
  EXPECT_EQ(affine_group(3, 2).order(), 432);
  EXPECT_EQ(affine_group(5, 2).order(), 25 * 24 * 20);
  EXPECT_EQ(as_set(affine_group(2, 3)), oracle::affine_maps(2, 3));
  EXPECT_EQ(as_set(affine_group(3, 2)), oracle::affine_maps(3, 2));
  EXPECT_THROW(affine_group(6, 1), InvalidArgument);
}

TEST(Automorphism, Examples) {
  const auto square = colored_structure_from_weights(4, 1, std::vector<Weight>{char_weight(builtins::square_relation())});
  EXPECT_EQ(automorphism_group(square).order(), 8);
  const auto ham = colored_structure_from_weights(2, 2, std::vector<Weight>{char_weight(builtins::hamming_relation(2))});
  EXPECT_EQ(automorphism_group(ham).order(), 8);
  EXPECT_EQ(automorphism_group(ham, AutEngine::kBrute).order(), 8);
  const auto leq = colored_structure_from_weights(2, 2, std::vector<Weight>{char_weight(builtins::leq_chain(2))});
  EXPECT_EQ(automorphism_group(leq).order(), 2);
  const Monoid b2 = Monoid::product({Monoid::bool_and(), Monoid::bool_and()});
  const Weight w(2, 1, b2, {Value::tuple({Value::of(1), Value::of(0)}), Value::tuple({Value::of(0), Value::of(1)})});
  const PermGroup stab = automorphism_group(colored_structure_from_weights(2, 2, std::vector<Weight>{w}));
  EXPECT_EQ(stab.order(), 2);
  const Perm swap{0, 2, 1, 3};
  EXPECT_TRUE(stab.contains(swap));
  const std::vector<Weight> units{char_weight(Relation::from_tuples(2, 1, {{0}})),
                                  char_weight(Relation::from_tuples(2, 1, {{1}}))};
  EXPECT_EQ(automorphism_group(colored_structure_from_weights(2, 1, units)).order(), 1);
  ColoredStructure flat(7);
  flat.add_layer(2, std::vector<std::uint32_t>(49, 5));
  EXPECT_EQ(automorphism_group(flat).order(), 5040);
}

TEST(Automorphism, Canonicalizes) {
  ColoredStructure s(3);
  s.add_layer(1, {7, 3, 7});
  EXPECT_EQ(s.layers()[0].colors, (std::vector<std::uint32_t>{0, 1, 0}));
  EXPECT_EQ(s.layers()[0].num_colors, 2u);
  EXPECT_THROW(s.add_layer(2, {0, 1}), InvalidArgument);
  EXPECT_THROW(ColoredStructure(5000), ResourceLimit);
}

TEST(Automorphism, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 7);
    const ColoredStructure s = oracle::random_structure(m, rng);
    const PermGroup g = automorphism_group(s);
    for (const Perm& gen : g.generators()) ASSERT_TRUE(preserves(s, gen));
    ASSERT_EQ(as_set(g), oracle::automorphisms(s));
    ASSERT_TRUE(group_equal(g, automorphism_group(s, AutEngine::kBrute)));
    ASSERT_TRUE(group_equal(g, automorphism_group(s, AutEngine::kBacktrack, kernels::Exec::kSerial)));
  }
}

TEST(Automorphism, SerialAndParallelStructures) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 2);
    const std::vector<Weight> ws{char_weight(oracle::random_relation(q, 2, rng)), char_weight(oracle::random_relation(q, 1, rng))};
    const auto a = colored_structure_from_weights(q, 2, ws, kernels::Exec::kSerial);
    const auto b = colored_structure_from_weights(q, 2, ws, kernels::Exec::kParallel);
    ASSERT_EQ(a.layers().size(), b.layers().size());
    for (std::size_t i = 0; i < a.layers().size(); ++i) ASSERT_EQ(a.layers()[i].colors, b.layers()[i].colors);
  }
  const std::vector<Weight> mixed{char_weight(builtins::neq(2)), char_weight(builtins::neq(3))};
  EXPECT_THROW(colored_structure_from_weights(2, 1, mixed), InvalidArgument);
}
