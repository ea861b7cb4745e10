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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "permclone/automorphism.hpp"
#include "permclone/group.hpp"
#include "permclone/relation.hpp"
#include "permclone/weight.hpp"

namespace permclone {

/// Pol(W) for a finite list of weights over one alphabet.
struct CloneSpec {
  int q = 2;
  std::string name;
  std::vector<Weight> weights;

  CloneSpec(int q, std::string name, std::vector<Weight> weights);
  static CloneSpec from_relations(int q, std::string name, const std::vector<Relation>& relations);
};

/// Whether f respects every weight of the spec. Builds no group.
bool member(const Gate& f, const CloneSpec& spec);

/// Pol(W)^[n] as the automorphism group of the weight coloring of A^n.
PermGroup compute_slice(const CloneSpec& spec, int n, AutEngine engine = AutEngine::kBacktrack);

/// Per-spec cache of slices. Safe to share between threads: concurrent
/// requests for one arity may both compute, the first result is kept.
class CloneEngine {
 public:
  explicit CloneEngine(CloneSpec spec, AutEngine engine = AutEngine::kBacktrack);

  const CloneSpec& spec() const { return spec_; }
  std::shared_ptr<const PermGroup> slice(int n) const;

 private:
  CloneSpec spec_;
  AutEngine engine_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const PermGroup>> cache_;
};

enum class Verdict { kEqual, kLess, kGreater, kIncomparable };
std::string to_string(Verdict v);

struct CompareLevel {
  int arity;
  Natural order_a;
  Natural order_b;
  bool a_in_b;
  bool b_in_a;
};

/// Verdict over the arities 1..bound only.
struct CompareResult {
  Verdict verdict;
  int bound;
  std::vector<CompareLevel> levels;
};

CompareResult compare(const CloneEngine& a, const CloneEngine& b, int bound);

/// How a closure property was checked at one arity. "enumeration" walks
/// every element of the larger slice, "structural" intersects it with the
/// subgroup of the relevant shape and checks generators; both are exact.
/// "sampled" only tests random elements.
struct ClosureLevel {
  int arity = 0;
  std::string regime;  // "exact" or "sampled"
  std::string method;  // "enumeration", "structural" or "sampled"
  std::uint64_t samples = 0;
  bool holds = true;
  std::optional<Gate> witness;       // f outside the slice
  std::optional<Gate> certificate;   // the larger gate exhibiting f
  std::optional<Gate> second;        // factoring: g
  int ancilla_value = -1;
};

struct ClosureReport {
  std::string check;
  std::string spec_name;
  int bound = 0;
  bool holds = true;
  std::vector<ClosureLevel> levels;
};

struct ClosureOptions {
  std::uint64_t enumeration_limit = 1'000'000;
  bool sample = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

/// For n < bound: every f with f (+) i_1 in C^[n+1] lies in C^[n].
ClosureReport borrow_closed_up_to(const CloneEngine& c, int bound, const ClosureOptions& opt = {});
/// For n < bound and every a: if g(x, a) = (f(x), a) for some g in C^[n+1]
/// then f lies in C^[n].
ClosureReport ancilla_closed_up_to(const CloneEngine& c, int bound, const ClosureOptions& opt = {});
/// Every h = f (+) g in C^[n+m] has f in C^[n] and g in C^[m].
ClosureReport factoring_check(const CloneEngine& c, int n, int m, const ClosureOptions& opt = {});

/// Splits h into f (+) g with ar(f) = n, if h has that form.
std::optional<std::pair<Gate, Gate>> split_parallel(const Gate& h, int n);

/// Relations R with R = {a : a_i = a_j for all (i, j) in E} for some
/// equivalence E on the positions.
bool is_equivalence_pattern(const Relation& r);

struct FullCloneMismatch {
  Relation relation;
  bool full;       // slice(n) = Sym(q^n) for every n <= max_arity
  bool pattern;    // syntactic criterion
};

struct FullCloneReport {
  int q = 2;
  int k_max = 0;
  int max_arity = 3;
  std::uint64_t relations = 0;
  std::uint64_t full = 0;
  std::uint64_t patterns = 0;
  std::vector<FullCloneMismatch> mismatches;
};

/// Checks every nonempty R of arity <= k_max.
FullCloneReport full_clone_relation_oracle(int q, int k_max, int max_arity = 3);

}  // namespace permclone
