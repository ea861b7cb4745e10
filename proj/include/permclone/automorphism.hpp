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

#include "permclone/group.hpp"
#include "permclone/kernels.hpp"
#include "permclone/weight.hpp"

namespace permclone {

inline constexpr std::uint32_t kMaxStructurePoints = 4096;
inline constexpr std::uint64_t kMaxColorEntries = std::uint64_t{1} << 26;

/// One coloring of the k-tuples of points, indexed by big-endian tuple rank
/// over an alphabet of `degree` points. Colors are contiguous from 0 in order
/// of first appearance.
struct ColorLayer {
  int arity = 1;
  std::uint32_t num_colors = 0;
  std::vector<std::uint32_t> colors;
};

/// Points 0..m-1 with any number of tuple colorings. An automorphism is a
/// point permutation preserving every layer.
class ColoredStructure {
 public:
  explicit ColoredStructure(std::uint32_t degree);

  /// Canonicalizes the colors. Throws ResourceLimit past the dense limit.
  void add_layer(int arity, std::vector<std::uint32_t> colors);

  std::uint32_t degree() const { return degree_; }
  const std::vector<ColorLayer>& layers() const { return layers_; }

 private:
  std::uint32_t degree_;
  std::vector<ColorLayer> layers_;
};

/// The structure on A^n whose automorphisms are the n-ary gates respecting
/// every weight: one layer per distinct arity, colored by the tuple of
/// column-product classes.
ColoredStructure colored_structure_from_weights(int q, int n, std::span<const Weight> weights,
                                                kernels::Exec exec = kernels::Exec::kParallel);

bool preserves(const ColoredStructure& s, std::span<const std::uint32_t> perm);

enum class AutEngine { kBacktrack, kBrute };

/// Aut(S). Backtracking verifies every generator it returns; the brute
/// engine filters all of Sym(m) and is limited to m <= 10.
PermGroup automorphism_group(const ColoredStructure& s, AutEngine engine = AutEngine::kBacktrack,
                             kernels::Exec exec = kernels::Exec::kParallel);

}  // namespace permclone
