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

#include "permclone/tuple.hpp"

#include <string>

#include "permclone/error.hpp"

namespace permclone {

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  std::uint64_t result = 1;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > kLimit / base) {
      throw ResourceLimit(std::to_string(base) + "^" + std::to_string(exponent) +
                          " exceeds 2^62");
    }
    result *= base;
  }
  return result;
}

void check_alphabet(int q) {
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2, got " + std::to_string(q));
}

std::uint64_t rank(std::span<const int> digits, int q) {
  check_alphabet(q);
  std::uint64_t r = 0;
  for (int d : digits) {
    if (d < 0 || d >= q) {
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for q=" +
                            std::to_string(q));
    }
    r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(d);
  }
  return r;
}

Tuple unrank(std::uint64_t index, int q, int n) {
  check_alphabet(q);
  if (n < 0) throw InvalidArgument("negative tuple length");
  if (index >= checked_pow(static_cast<std::uint64_t>(q), n)) {
    throw InvalidArgument("rank " + std::to_string(index) + " out of range");
  }
  Tuple out(static_cast<std::size_t>(n));
  unrank_into(index, q, out);
  return out;
}

}  // namespace permclone
