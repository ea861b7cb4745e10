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

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference selected by `Exec`; both must return identical results.

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "permclone/gate.hpp"
#include "permclone/weight.hpp"

namespace permclone::kernels {

enum class Exec { kSerial, kParallel };

/// Largest number of column multisets ColumnProducts will tabulate.
inline constexpr std::uint64_t kMaxMultisets = 4'000'000;

/// Products of n weight columns, classified exactly. Two k x n arrays get the
/// same class iff their weights are equal. Because the monoid is commutative a
/// product only depends on the multiset of column values, so every multiset
/// is evaluated once up front and lookups are read-only.
class ColumnProducts {
 public:
  ColumnProducts(const Weight& w, int columns);

  int q() const { return q_; }
  int arity() const { return arity_; }
  int columns() const { return columns_; }
  std::uint32_t num_classes() const { return static_cast<std::uint32_t>(products_.size()); }

  /// Id of the distinct weight value at a column (a rank in A^k).
  std::uint32_t value_id(std::uint64_t column_rank) const { return value_ids_[column_rank]; }

  /// Class of the product of the given column value ids (any order, length
  /// `columns()`). `scratch` must have the same length.
  std::uint32_t classify(std::span<const std::uint32_t> ids, std::span<std::uint32_t> scratch) const;

  const Value& product(std::uint32_t cls) const { return products_[cls]; }

  /// Class of the k-tuple of points (p_1..p_k) of A^n, i.e. of the array
  /// whose rows are the points.
  std::uint32_t classify_points(std::span<const std::uint32_t> points,
                                std::span<std::uint32_t> ids,
                                std::span<std::uint32_t> scratch) const;

 private:
  std::uint64_t code(std::span<const std::uint32_t> sorted) const;

  int q_;
  int arity_;
  int columns_;
  std::uint32_t num_values_;
  std::vector<std::uint32_t> value_ids_;
  std::vector<std::uint32_t> digits_;  // digits_[p * columns + i] = digit i of point p
  std::vector<std::uint32_t> dense_;   // code -> class, when the code space is small
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  std::vector<Value> products_;
};

/// Product class of every k-tuple of points of A^n, indexed by the big-endian
/// rank of the tuple over an alphabet of q^n points.
std::vector<std::uint32_t> tuple_classes(const ColumnProducts& cp, Exec exec);

/// Whether f preserves the product class of every k-tuple of points.
bool respects_sweep(const Gate& f, const ColumnProducts& cp, Exec exec);

/// Every permutation of {0..m-1} accepted by `keep`, in lexicographic order.
/// `keep` must be safe to call concurrently.
std::vector<std::vector<std::uint32_t>> filter_permutations(
    std::uint32_t m, const std::function<bool(std::span<const std::uint32_t>)>& keep, Exec exec);

}  // namespace permclone::kernels
