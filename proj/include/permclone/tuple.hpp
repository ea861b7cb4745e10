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

// Big-endian ranking of tuples over the alphabet {0, ..., q-1}: the leftmost
// entry is the most significant digit, so rank(a1..an) = sum a_i q^(n-i).

#include <cstdint>
#include <span>
#include <vector>

namespace permclone {

using Tuple = std::vector<int>;

/// q^n, throwing ResourceLimit if the result does not fit in 62 bits.
std::uint64_t checked_pow(std::uint64_t base, int exponent);

void check_alphabet(int q);

std::uint64_t rank(std::span<const int> digits, int q);
Tuple unrank(std::uint64_t index, int q, int n);

/// Digit at position `i` (0-based from the left) of the rank of an n-tuple.
inline int digit_at(std::uint64_t index, int q, int n, int i) {
  for (int j = n - 1; j > i; --j) index /= static_cast<std::uint64_t>(q);
  return static_cast<int>(index % static_cast<std::uint64_t>(q));
}

/// All n digits of `index`, written into `out` (size n).
inline void unrank_into(std::uint64_t index, int q, std::span<int> out) {
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<int>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
}

}  // namespace permclone
