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


#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "permclone/gate.hpp"
#include "permclone/monoid.hpp"

namespace permclone {

/// A permutation of {0..m-1} as an image array. Products act on the right:
/// compose(g, h) is "g then h", x -> h[g[x]].
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::uint32_t degree);
Perm compose(std::span<const std::uint32_t> g, std::span<const std::uint32_t> h);
Perm invert(std::span<const std::uint32_t> g);
bool is_identity(std::span<const std::uint32_t> g);
/// Throws InvalidArgument unless g is a permutation of the given degree.
void check_perm(std::span<const std::uint32_t> g, std::uint32_t degree);

/// A permutation group with a base and strong generating set, built eagerly
/// by deterministic Schreier-Sims. Immutable once constructed apart from
/// add_generator, which extends the BSGS in place.
class PermGroup {
 public:
  explicit PermGroup(std::uint32_t degree, std::vector<Perm> generators = {});

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::vector<std::uint32_t> base() const;
  /// Fundamental orbit sizes along the base.
  std::vector<std::uint64_t> orbit_sizes() const;

  Natural order() const;
  bool contains(std::span<const std::uint32_t> g) const;

  /// Adds g unless it is already an element. Returns whether the group grew.
  bool add_generator(const Perm& g);

  /// Visits every element; throws ResourceLimit if the order exceeds cap.
  void for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& visit) const;
  std::vector<Perm> elements(std::uint64_t cap) const;

  /// Exactly uniform element: one uniform transversal choice per level,
  /// drawn by rejection from a 64-bit Mersenne twister.
  Perm random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    std::uint32_t point;
    std::vector<Perm> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // slot[x] = index into transversal, or -1
    std::vector<Perm> transversal;   // transversal[i] maps point to orbit[i]
  };

  void rebuild_orbit(Level& level) const;
  void push_level(std::uint32_t point);
  /// Sifts g from `from`; returns the residue and the level where it stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void insert(const Perm& g, std::size_t from, std::size_t to);
  void complete(std::size_t start);

  std::uint32_t degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

/// Uniform element under a fixed seed.
Perm uniform_random_element(const PermGroup& g, std::uint64_t seed);

bool group_equal(const PermGroup& g, const PermGroup& h);
/// Whether h <= g.
bool is_subgroup(const PermGroup& h, const PermGroup& g);

/// Builds the group generated by a list of elements, adding only those not
/// already generated.
PermGroup group_from_elements(std::uint32_t degree, std::span<const Perm> elements);

// Constructions on the points of A^n, ranked big-endian.

PermGroup symmetric_group(std::uint32_t degree);
PermGroup trivial_group(std::uint32_t degree);
/// base wr S_n acting on q^n points, q = base.degree().
PermGroup wreath_group(const PermGroup& base, int n);
/// Wire permutations of A^n, order n!.
PermGroup wire_group(int q, int n);
/// AGL_n(p).
PermGroup affine_group(int p, int n);

Perm perm_of(const Gate& f);

}  // namespace permclone
