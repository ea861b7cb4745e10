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

#include <span>
#include <vector>

#include "permclone/relation.hpp"
#include "permclone/weight.hpp"

namespace permclone::builtins {

/// iota_m: m-tuples with at least one repeated entry.
Relation iota(int q, int m);
/// eta: a != b.
Relation neq(int q);
/// a <= b.
Relation leq_chain(int q);
/// a + b = c + d (mod q), q prime.
Relation affine_relation(int q);
/// a + b = c (mod q), q prime.
Relation linear_relation(int q);
/// {(a, sigma(a))} for a fixed-point-free permutation sigma of A.
Relation selfdual_relation(std::span<const int> sigma);
/// Edges of the 4-cycle 0-1-2-3-0, both directions.
Relation square_relation();
/// a = b or b = c.
Relation hamming_relation(int q);
Relation unary_relation(int q, const std::vector<int>& elements);

/// w_s(a) = [a == s] into nat_add, for s = 1..q-1. A gate respects all of
/// them iff it preserves how often each symbol occurs.
std::vector<Weight> conservative_weights(int q);
/// w(x, y) = x * y into (Z_p, +) as a table monoid.
Weight orthogonal_weight(int p);

}  // namespace permclone::builtins
