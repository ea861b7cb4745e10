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
#include "permclone/tuple.hpp"

namespace permclone {

/// A k-ary relation on {0..q-1}, stored as the sorted ranks of its tuples.
/// The empty relation is representable; check `empty()` where it matters.
class Relation {
 public:
  Relation(int q, int arity, std::vector<std::uint64_t> ranks);

  static Relation from_tuples(int q, int arity, const std::vector<Tuple>& tuples);
  static Relation full(int q, int arity);

  int q() const { return q_; }
  int arity() const { return arity_; }
  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }

  bool contains(std::uint64_t tuple_rank) const;
  bool contains(std::span<const int> tuple) const;

  std::vector<Tuple> tuples() const;
  /// indicator[r] == contains(r), for all r < q^k.
  std::vector<bool> indicator() const;

  bool operator==(const Relation&) const = default;

 private:
  int q_;
  int arity_;
  std::vector<std::uint64_t> ranks_;
};

/// Moves entry i of every tuple to position sigma[i] (0-based).
Relation permute_entries(const Relation& r, std::span<const int> sigma);

/// Existential projection dropping the 1-based `position`.
Relation project(const Relation& r, int position);

/// Cartesian product R x S, of arity k + l.
Relation product(const Relation& r, const Relation& s);

Relation intersect(const Relation& r, const Relation& s);

Relation equality_relation(int q);

/// f maps R^n into R^n, checked by enumerating the |R|^n arrays with columns
/// in R.
bool respects_relation(const Gate& f, const Relation& r);

/// Clone-sense check run separately on every component f_i: for each array
/// with columns in R, the column (f_i(row_1), ..., f_i(row_k)) lies in R.
bool respects_relation_componentwise(const Gate& f, const Relation& r);

}  // namespace permclone
