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
#include <span>
#include <vector>

#include "permclone/gate.hpp"
#include "permclone/monoid.hpp"
#include "permclone/relation.hpp"

namespace permclone {

/// A weight map w : A^k -> M, tabulated over the ranks of A^k.
class Weight {
 public:
  Weight(int q, int arity, Monoid monoid, std::vector<Value> values);

  int q() const { return q_; }
  int arity() const { return arity_; }
  const Monoid& monoid() const { return monoid_; }
  const std::vector<Value>& values() const { return values_; }
  const Value& at(std::uint64_t tuple_rank) const { return values_[tuple_rank]; }

  bool operator==(const Weight& other) const {
    return q_ == other.q_ && arity_ == other.arity_ && monoid_ == other.monoid_ &&
           values_ == other.values_;
  }

 private:
  int q_;
  int arity_;
  Monoid monoid_;
  std::vector<Value> values_;
};

/// The product over columns of a k x n array (given as k rows of length n).
Value weight_eval(const Weight& w, std::span<const Tuple> rows);

/// Whether w(a) == w(f(a)) for every k x n array a. Runs the parallel sweep;
/// see kernels.hpp for the serial reference.
bool respects_weight(const Gate& f, const Weight& w);

/// w_R into bool_and.
Weight char_weight(const Relation& r);

/// c_{R,i} into nat_mul: the number of x completing a (k-1)-tuple to a tuple
/// of R when inserted at the 1-based position i.
Weight counting_weight(const Relation& r, int position);

/// Tuples where an ℕ-valued weight attains its maximum (resp. minimum).
Relation max_level_relation(const Weight& w);
Relation min_level_relation(const Weight& w);

// Coclone closure operations.

/// (w . rho)(x_1..x_l) = w(x_{rho(1)}, ..., x_{rho(k)}); rho is 0-based with
/// values below `target_arity`.
Weight substitute_indices(const Weight& w, std::span<const int> rho, int target_arity);
Weight map_monoid(const Weight& w, const MonoidHom& phi);
/// Reinterprets w in a submonoid: a table submonoid (by labels), nat_add
/// inside nat_add_inf, or bool_and as {0,1} inside nat_mul.
Weight restrict_monoid(const Weight& w, const Monoid& submonoid);
/// Pointwise tuple of weights of equal arity, into the product monoid.
Weight product_weights(std::span<const Weight> ws);
/// c_1 : A -> (ℕ₀, +), constantly 1.
Weight const_one_weight(int q);
/// delta : A^2 -> bool_and, [a == b].
Weight delta_weight(int q);
/// w^(+)(a_1..a_{k-1}) = sum over a of w(a_1..a_{k-1}, a) in the semiring.
Weight semiring_sum(const Weight& w, const Semiring& s);

/// The characteristic weight of max_level_relation(w), built with closure
/// operations only: pair w with m*c_1, take the ratio w/(m c_1) over exact
/// rationals and threshold it at 1.
Weight max_level_weight_via_closure(const Weight& w);

}  // namespace permclone
