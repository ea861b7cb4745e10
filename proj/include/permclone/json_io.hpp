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

// JSON forms of every value the command line reads or writes. Output uses
// insertion-ordered objects so identical inputs give identical bytes.

#include <nlohmann/json.hpp>
#include <string>

#include "permclone/census.hpp"
#include "permclone/clone.hpp"
#include "permclone/group.hpp"
#include "permclone/monoid.hpp"
#include "permclone/weight.hpp"

namespace permclone::json_io {

using Json = nlohmann::ordered_json;

/// Parses text that is inline JSON, a path to a JSON file, or a bare builtin
/// call such as neq(3) (returned as a JSON string).
Json load(const std::string& text_or_path);

Json to_json(const Gate& f);
/// {"q","n","map"} or {"q","n","cycles":"(0 1)(2 3)"}.
Gate gate_from_json(const Json& j);

Json to_json(const Relation& r);
/// Also accepts builtin calls: iota(q,m), neq(q), leq_chain(q),
/// affine_relation(p), linear_relation(p), hamming_relation(q), equality(q),
/// selfdual_relation(s0,...,s_{q-1}), square_relation.
Relation relation_from_json(const Json& j);

/// A builtin name, {"elements","identity","table"} or {"product":[...]}.
Json to_json(const Monoid& m);
Monoid monoid_from_json(const Json& j);

Json value_to_json(const Monoid& m, const Value& v);
Value value_from_json(const Monoid& m, const Json& j);

Json to_json(const Weight& w);
/// Strings are builtin calls: orthogonal_weight(p) or any relation builtin
/// (its characteristic weight). conservative_weights(q) is allowed in specs.
Weight weight_from_json(const Json& j);

/// A rule name ("annihilate_inf", "nonzero", "bool_to_nat", "exp2",
/// "scale:c", "power:e"), {"rule":"projection","source":M,"index":i},
/// {"rule":"meet","source":M} or {"source","target","images"}.
MonoidHom hom_from_json(const Json& j);

/// "natural", "boolean" or {"multiplicative":M,"addition":[[..]],"zero":l}.
Semiring semiring_from_json(const Json& j);

/// {"q","name","weights":[...],"relations":[...]}.
CloneSpec spec_from_json(const Json& j);

Json to_json(const PermGroup& g);
Json to_json(const ClosureReport& r);
Json to_json(const CompareResult& r);
Json to_json(const FullCloneReport& r);
Json to_json(const census::Census& c);
Json to_json(const census::WitnessReport& r);

}  // namespace permclone::json_io
