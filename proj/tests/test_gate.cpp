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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permclone/error.hpp"
#include "permclone/gate.hpp"
#include "permclone/tuple.hpp"

using namespace permclone;

namespace {

// every gate of B_n(A)
std::vector<Gate> all_gates(int q, int n) {
  std::vector<Gate> out;
  std::uint32_t m = 1;
  for (int i = 0; i < n; ++i) m *= static_cast<std::uint32_t>(q);
  std::vector<std::uint32_t> p(m);
  std::iota(p.begin(), p.end(), 0u);
  do out.emplace_back(q, n, p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Gate random_gate(int q, int n, std::mt19937_64& rng) {
  std::uint32_t m = 1;
  for (int i = 0; i < n; ++i) m *= static_cast<std::uint32_t>(q);
  return Gate(q, n, oracle::random_perm(m, rng));
}

}  // namespace

TEST(Tuple, RankRoundTrip) {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
      for (std::uint64_t r = 0; r < total; ++r) {
        const Tuple t = unrank(r, q, n);
        EXPECT_EQ(t, oracle::digits(r, q, n));
        EXPECT_EQ(rank(t, q), r);
        for (int i = 0; i < n; ++i) EXPECT_EQ(digit_at(r, q, n, i), t[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST(Tuple, BigEndian) {
  EXPECT_EQ(rank(Tuple{1, 0, 1}, 2), 5u);
  EXPECT_EQ(rank(Tuple{0, 2}, 3), 2u);
  EXPECT_THROW(rank(Tuple{0, 3}, 3), InvalidArgument);
  EXPECT_THROW(check_alphabet(1), InvalidArgument);
}

TEST(Gate, RejectsNonBijection) {
  EXPECT_THROW(Gate(2, 1, {0, 0}), InvalidArgument);
  EXPECT_THROW(Gate(2, 2, {0, 1, 2}), InvalidArgument);
}

TEST(Gate, NamedGates) {
  EXPECT_EQ(gates::not_gate().apply(Tuple{0}), Tuple{1});
  EXPECT_EQ(gates::cnot().apply(Tuple{1, 0}), (Tuple{1, 1}));
  EXPECT_EQ(gates::cnot().apply(Tuple{0, 1}), (Tuple{0, 1}));
  EXPECT_EQ(gates::toffoli().apply(Tuple{1, 1, 0}), (Tuple{1, 1, 1}));
  EXPECT_EQ(gates::toffoli().apply(Tuple{1, 0, 0}), (Tuple{1, 0, 0}));
  EXPECT_EQ(gates::fredkin().apply(Tuple{1, 0, 1}), (Tuple{1, 1, 0}));
  EXPECT_EQ(gates::fredkin().apply(Tuple{0, 0, 1}), (Tuple{0, 0, 1}));
}

TEST(Gate, SerialActsFirstThenSecond) {
  const Gate f = parallel(gates::not_gate(), identity_gate(2, 1));
  const Gate fg = serial(f, gates::cnot());
  // (0,0) -> (1,0) -> (1,1)
  EXPECT_EQ(fg.apply(Tuple{0, 0}), (Tuple{1, 1}));
  const Gate gf = serial(gates::cnot(), f);
  EXPECT_EQ(gf.apply(Tuple{0, 0}), (Tuple{1, 0}));
}

TEST(Gate, SerialPadsShorterOperand) {
  const Gate g = serial(gates::not_gate(), gates::cnot());
  EXPECT_EQ(g.arity(), 2);
  EXPECT_EQ(g, serial(pad(gates::not_gate(), 1), gates::cnot()));
  EXPECT_EQ(pad(gates::not_gate(), 2).apply(Tuple{0, 1, 1}), (Tuple{1, 1, 1}));
}

TEST(Gate, ParallelIsAssociative) {
  std::vector<Gate> small = all_gates(2, 1);
  for (const Gate& g : all_gates(2, 2)) small.push_back(g);
  for (const Gate& f : small) {
    for (const Gate& g : small) {
      for (const Gate& h : small) {
        ASSERT_EQ(parallel(parallel(f, g), h), parallel(f, parallel(g, h)));
      }
    }
  }
}

TEST(Gate, WirePermutationsCompose) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    do {
      std::vector<int> b(a.size());
      std::iota(b.begin(), b.end(), 0);
      do {
        std::vector<int> ab(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) ab[i] = b[static_cast<std::size_t>(a[i])];
        ASSERT_EQ(serial(wire_perm(2, a), wire_perm(2, b)), wire_perm(2, ab));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  // pi_alpha moves the value on wire i to wire alpha[i]
  const std::vector<int> rot{1, 2, 0};
  EXPECT_EQ(wire_perm(2, rot).apply(Tuple{1, 0, 0}), (Tuple{0, 1, 0}));
  EXPECT_THROW(wire_perm(2, std::vector<int>{0, 0}), InvalidArgument);
}

TEST(Gate, InverseCancels) {
  for (int n = 1; n <= 2; ++n) {
    for (const Gate& f : all_gates(2, n)) ASSERT_EQ(serial(f, inverse(f)), identity_gate(2, n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Gate f = random_gate(2, 3, rng);
    ASSERT_EQ(serial(inverse(f), f), identity_gate(2, 3));
  }
}

TEST(Gate, ComponentsAreBalanced) {
  std::mt19937_64 rng(11);
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 100; ++i) {
        const Gate f = random_gate(q, n, rng);
        for (int c = 1; c <= n; ++c) ASSERT_TRUE(is_balanced(component(f, c)));
      }
    }
  }
}

TEST(Gate, BalancedTables) {
  EXPECT_TRUE(is_balanced({2, 2, {0, 1, 1, 0}}));
  EXPECT_FALSE(is_balanced({2, 2, {0, 0, 0, 0}}));
  EXPECT_FALSE(is_balanced({2, 2, {0, 0, 0, 1}}));
}

TEST(Gate, DegenerateMatchesDirectListing) {
  struct Case {
    int q, n;
  };
  for (const Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{3, 2}}) {
    const oracle::PermSet deg = oracle::degenerate_maps(c.q, c.n);
    if (c.q == 3 && c.n == 2) {
      std::mt19937_64 rng(5);
      for (int i = 0; i < 2000; ++i) {
        const Gate f = random_gate(3, 2, rng);
        ASSERT_EQ(is_degenerate(f), deg.count(oracle::Perm(f.map().begin(), f.map().end())) == 1);
      }
      continue;
    }
    for (const Gate& f : all_gates(c.q, c.n)) {
      ASSERT_EQ(is_degenerate(f), deg.count(oracle::Perm(f.map().begin(), f.map().end())) == 1);
    }
  }
  for (const auto& p : oracle::degenerate_maps(2, 3)) ASSERT_TRUE(is_degenerate(Gate(2, 3, p)));
  const std::vector<int> swap{1, 0};
  EXPECT_TRUE(is_degenerate(wire_perm(2, swap)));
  EXPECT_FALSE(is_degenerate(gates::cnot()));
  EXPECT_TRUE(is_degenerate(parallel(gates::not_gate(), identity_gate(2, 1))));
}

TEST(Gate, AffineMatchesDirectListing) {
  for (int n = 1; n <= 2; ++n) {
    const oracle::PermSet aff = oracle::affine_maps(2, n);
    for (const Gate& f : all_gates(2, n)) {
      ASSERT_EQ(is_affine(f), aff.count(oracle::Perm(f.map().begin(), f.map().end())) == 1);
    }
  }
  const oracle::PermSet aff3 = oracle::affine_maps(3, 1);
  for (const Gate& f : all_gates(3, 1)) EXPECT_EQ(is_affine(f), aff3.count(oracle::Perm(f.map().begin(), f.map().end())) == 1);
  EXPECT_EQ(oracle::affine_maps(2, 3).size(), 1344u);
  EXPECT_TRUE(is_affine(gates::cnot()));
  EXPECT_FALSE(is_affine(gates::toffoli()));
  EXPECT_TRUE(is_affine(parallel(gates::not_gate(), gates::not_gate())));
  EXPECT_THROW(is_affine(identity_gate(4, 1)), InvalidArgument);
}

TEST(Gate, ControlledPerm) {
  const std::vector<int> swap{1, 0};
  const std::vector<Tuple> one{{1}};
  const Gate fredkin = controlled_perm(1, one, wire_perm(2, swap));
  EXPECT_EQ(fredkin, gates::fredkin());
  EXPECT_EQ(fredkin.apply(Tuple{1, 0, 1}), (Tuple{1, 1, 0}));
  EXPECT_EQ(controlled_perm(1, std::vector<Tuple>{}, gates::cnot()), identity_gate(2, 3));
  const std::vector<Tuple> both{{0}, {1}};
  EXPECT_EQ(controlled_perm(1, both, gates::cnot()), parallel(identity_gate(2, 1), gates::cnot()));
  const std::vector<Tuple> bad{{0, 1}};
  EXPECT_THROW(controlled_perm(1, bad, gates::not_gate()), InvalidArgument);
}

TEST(Gate, Cycles) {
  EXPECT_EQ(cycle_string(gates::cnot().map()), "(2 3)");
  EXPECT_EQ(cycle_string(identity_gate(2, 2).map()), "()");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_perm(16, rng);
    ASSERT_EQ(parse_cycles(cycle_string(p), 16), p);
  }
  EXPECT_THROW(parse_cycles("(0 0)", 4), InvalidArgument);
  EXPECT_THROW(parse_cycles("(0 9)", 4), InvalidArgument);
}

TEST(Quotient, FourLettersToFredkin) {
  const Partition rho = Partition::parse(4, "01|23");
  const std::vector<int> swap{1, 0};
  const std::vector<Tuple> controls{{0}, {1}};
  const Gate f = controlled_perm(1, controls, wire_perm(4, swap));
  ASSERT_TRUE(respects_partition(f, rho));
  const Gate e = quotient_gate(f, rho);
  // control on class [0], i.e. the Fredkin gate with its control negated
  const std::vector<Tuple> zero{{0}};
  EXPECT_EQ(e, controlled_perm(1, zero, wire_perm(2, swap)));
  const Gate neg = parallel(gates::not_gate(), identity_gate(2, 2));
  EXPECT_EQ(serial(serial(neg, e), neg), gates::fredkin());
}

TEST(Quotient, Trivial) {
  const Partition rho = Partition::parse(4, "01|23");
  EXPECT_EQ(quotient_gate(identity_gate(4, 2), rho), identity_gate(2, 2));
  std::mt19937_64 rng(9);
  const Partition eq = Partition::parse(3, "0|1|2");
  for (int i = 0; i < 20; ++i) {
    const Gate f = random_gate(3, 2, rng);
    EXPECT_EQ(quotient_gate(f, eq), f);
  }
  EXPECT_THROW(quotient_gate(Gate(4, 1, {1, 2, 0, 3}), rho), InvalidArgument);
  EXPECT_THROW(quotient_gate(identity_gate(4, 1), Partition::parse(4, "0123")), InvalidArgument);
  EXPECT_EQ(Partition::parse(12, "0,1|10,11|2,3,4,5,6,7,8,9").num_classes(), 3);
}
