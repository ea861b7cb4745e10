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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permclone/clone.hpp"

namespace permclone::census {

/// One of the 13 binary clones with its defining relation.
struct Entry {
  std::string name;    // ASCII: T, D, DP, A, AP0, AD, AP1, AP, P0, P1, P, U, Pi
  std::string symbol;  // display form: ⊤, AP₀, Π, ...
  Relation relation;
};

/// The 13 entries in table order. Pi is defined by the order relation.
const std::vector<Entry>& entries();
const Entry& entry(const std::string& name);
CloneSpec spec_of(const Entry& e);

/// The 21 covering pairs (upper, lower) of the published inclusion diagram.
const std::vector<std::pair<std::string, std::string>>& known_edges();

struct Witness {
  std::string certifies;
  Gate gate;
  std::vector<std::string> in;
  std::vector<std::string> out;
};

const std::vector<Witness>& witnesses();

struct WitnessResult {
  std::string certifies;
  std::string entry;
  bool claimed_member;
  bool member;
};

struct WitnessReport {
  std::size_t claims = 0;
  std::size_t holding = 0;
  std::vector<WitnessResult> discrepancies;
};

WitnessReport verify_witnesses();

struct EntryResult {
  std::string name;
  std::string symbol;
  std::vector<Natural> orders;  // orders[n - 1]
};

struct Census {
  int bound = 3;
  std::string engine;
  std::vector<EntryResult> entries;
  /// For every unordered pair, the least arity where the slices differ, or
  /// 0 if they agree up to the bound.
  std::map<std::pair<std::string, std::string>, int> distinguishing;
  std::vector<std::pair<std::string, std::string>> edges;  // (upper, lower)
  bool distinct = false;
  bool matches_known = false;
  double seconds = 0;
};

Census run(int max_arity, AutEngine engine = AutEngine::kBacktrack);

/// Graphviz rendering, nodes ranked by the diagram's levels.
std::string to_dot(const Census& c);

struct CollapseItem {
  std::string name;
  int arity;
  Natural order;
  Natural expected;
  bool holds;
};

/// T0^2, T1^2 and the order relation give only wire permutations up to the
/// bound; adding the self-duality relation to U changes nothing; AD as a
/// product relation equals the {A, D} intersection.
std::vector<CollapseItem> collapse_checks(int max_arity = 3);

}  // namespace permclone::census
