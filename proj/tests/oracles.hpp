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

// Slow, direct implementations used to cross-check the library. Nothing here
// calls the group engine, the kernels or the automorphism search.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "permclone/automorphism.hpp"
#include "permclone/gate.hpp"
#include "permclone/group.hpp"
#include "permclone/relation.hpp"
#include "permclone/weight.hpp"

namespace oracle {

using permclone::Gate;
using permclone::Relation;
using permclone::Value;
using permclone::Weight;
using Perm = std::vector<std::uint32_t>;
using PermSet = std::set<Perm>;

/// Digits of a point of A^n, most significant first.
std::vector<int> digits(std::uint64_t point, int q, int n);

/// Value of the k x n array whose rows are the given points, folded column
/// by column.
Value array_weight(const Weight& w, int n, const std::vector<std::uint32_t>& rows);

/// Whether w(a) == w(f(a)) for every array, by listing all of them.
bool respects(const Gate& f, const Weight& w);

/// Whether f maps arrays with all columns in R to arrays with all columns in R.
bool respects(const Gate& f, const Relation& r);

/// Every permutation of {0..m-1} passing `keep`.
PermSet filter_all(std::uint32_t m, const std::function<bool(const Perm&)>& keep);

/// Bijections of A^n respecting every weight, by filtering Sym(q^n).
PermSet slice_elements(int q, int n, const std::vector<Weight>& ws);

/// Closure of a generating set under composition, by breadth-first search.
PermSet closure(std::uint32_t degree, const std::vector<Perm>& gens, std::size_t cap = 2'000'000);

/// Every pi_alpha . (beta_1 (+) ... (+) beta_n), listed directly.
PermSet degenerate_maps(int q, int n);
/// Every x -> Mx + b with M invertible over GF(p).
PermSet affine_maps(int p, int n);
/// Every wire permutation of A^n.
PermSet wire_maps(int q, int n);

/// c_{R,i} by counting completions one tuple at a time.
std::vector<std::uint64_t> completion_counts(const Relation& r, int position);

/// Whether R is {a : a_i = a_j for i ~ j} for some equivalence on the
/// positions. Uses the equivalence of positions on which R never differs.
bool equivalence_pattern(const Relation& r);

/// Whether every bijection of A^n respects R for all n <= max_arity. Checks a
/// transposition and a long cycle, which generate Sym(q^n).
bool full_clone(const Relation& r, int max_arity);

/// Aut of a colored structure by listing Sym(m).
PermSet automorphisms(const permclone::ColoredStructure& s);

Perm random_perm(std::uint32_t m, std::mt19937_64& rng);
Relation random_relation(int q, int k, std::mt19937_64& rng);

/// Random colored structure on m points; colors are unions of orbits of a
/// random subgroup so that the automorphism group is usually nontrivial.
permclone::ColoredStructure random_structure(std::uint32_t m, std::mt19937_64& rng);

}  // namespace oracle
