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
#include <string>
#include <vector>

#include "permclone/tuple.hpp"

namespace permclone {

/// Largest number of points a gate may act on.
inline constexpr std::uint64_t kMaxGatePoints = std::uint64_t{1} << 24;

/// A reversible gate: a bijection of A^n, stored as the image rank of every
/// point rank.
///
/// Gates act on the right. `serial(f, g)` applies f first and then g, so
/// serial(f, g)(x) == g(f(x)).
class Gate {
 public:
  Gate(int q, int arity, std::vector<std::uint32_t> map);

  int q() const { return q_; }
  int arity() const { return arity_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(map_.size()); }

  std::uint32_t operator()(std::uint32_t point) const { return map_[point]; }
  std::span<const std::uint32_t> map() const { return map_; }

  Tuple apply(std::span<const int> tuple) const;

  bool operator==(const Gate&) const = default;

 private:
  int q_;
  int arity_;
  std::vector<std::uint32_t> map_;
};

/// One coordinate f_i : A^n -> A of a gate.
struct ComponentTable {
  int q = 2;
  int arity = 1;
  std::vector<int> values;
};

Gate identity_gate(int q, int n);

/// pi_alpha with `alpha[i]` the 0-based image of wire i. The gate sends
/// (x_1..x_n) to (x_{alpha^-1(1)}..x_{alpha^-1(n)}).
Gate wire_perm(int q, std::span<const int> alpha);

/// f (+) g: f on the first ar(f) wires, g on the rest.
Gate parallel(const Gate& f, const Gate& g);

/// f . g with identity padding on the right of the shorter operand; f first.
Gate serial(const Gate& f, const Gate& g);

Gate inverse(const Gate& f);

/// f (+) i_extra.
Gate pad(const Gate& f, int extra);

/// Component i, 1-based.
ComponentTable component(const Gate& f, int i);

bool is_balanced(const ComponentTable& c);

/// Whether f is pi_alpha . (beta_1 (+) ... (+) beta_n).
bool is_degenerate(const Gate& f);

bool is_prime(int q);

/// Whether f(x) = Mx + b over GF(q). Requires q prime.
bool is_affine(const Gate& f);

/// (x, y) -> (x, f(y)) when x is one of `controls`, else unchanged. Every
/// control tuple has length `control_arity`.
Gate controlled_perm(int control_arity, std::span<const Tuple> controls,
                     const Gate& f);

/// A partition of {0..q-1}. Classes are numbered by ascending minimum
/// element.
class Partition {
 public:
  Partition(int q, const std::vector<std::vector<int>>& blocks);

  int q() const { return q_; }
  int num_classes() const { return num_classes_; }
  int class_of(int a) const { return class_of_[a]; }
  std::vector<std::vector<int>> blocks() const;

  /// Parses "01|23" or, for larger alphabets, "0,1|10,11".
  static Partition parse(int q, const std::string& text);

 private:
  int q_;
  int num_classes_;
  std::vector<int> class_of_;
};

/// The gate induced on (A/rho)^n. Throws InvalidArgument if f does not
/// respect the equivalence relation, or if there is only one class.
Gate quotient_gate(const Gate& f, const Partition& partition);

/// Whether f maps rho^n-related points to rho^n-related points.
bool respects_partition(const Gate& f, const Partition& partition);

/// "(0 1)(2 3)" on point ranks; fixed points omitted; "()" for identity.
std::string cycle_string(std::span<const std::uint32_t> images);

/// Inverse of cycle_string for a given degree.
std::vector<std::uint32_t> parse_cycles(const std::string& text,
                                        std::uint32_t degree);

namespace gates {
Gate not_gate();
Gate cnot();
Gate toffoli();
Gate fredkin();
}  // namespace gates

}  // namespace permclone
