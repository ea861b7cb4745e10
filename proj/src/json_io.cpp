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

#include "permclone/json_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "permclone/builtins.hpp"
#include "permclone/error.hpp"

namespace permclone::json_io {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
  }
}

Json natural_json(const Natural& n) {
  if (n <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(n);
  return n.str();
}

Natural natural_from(const Json& j) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw InvalidArgument("negative natural");
    return Natural(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw InvalidArgument("bad natural '" + s + "'");
    return Natural(s);
  }
  throw InvalidArgument("expected a natural number");
}

Json perm_json(std::span<const std::uint32_t> p) { return Json(std::vector<std::uint32_t>(p.begin(), p.end())); }

bool looks_like_call(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  const auto open = s.find('(');
  for (std::size_t i = 0; i < std::min(open, s.size()); ++i) {
    const char c = s[i];
    if (!std::islower(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return open == std::string::npos || s.back() == ')';
}

struct Call {
  std::string name;
  std::vector<int> args;
};

Call parse_call(const std::string& s) {
  if (!looks_like_call(s)) throw InvalidArgument("bad builtin '" + s + "'");
  Call c;
  const auto open = s.find('(');
  c.name = s.substr(0, open);
  if (open == std::string::npos) return c;
  std::stringstream in(s.substr(open + 1, s.size() - open - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      c.args.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad argument '" + item + "' in '" + s + "'");
    }
  }
  return c;
}

void want_args(const Call& c, std::size_t n) {
  if (c.args.size() != n) {
    throw InvalidArgument(c.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

Relation builtin_relation(const std::string& s) {
  const Call c = parse_call(s);
  if (c.name == "square_relation") {
    want_args(c, 0);
    return builtins::square_relation();
  }
  if (c.name == "iota") {
    want_args(c, 2);
    return builtins::iota(c.args[0], c.args[1]);
  }
  if (c.name == "selfdual_relation") return builtins::selfdual_relation(c.args);
  want_args(c, 1);
  const int q = c.args[0];
  if (c.name == "neq") return builtins::neq(q);
  if (c.name == "leq_chain") return builtins::leq_chain(q);
  if (c.name == "affine_relation") return builtins::affine_relation(q);
  if (c.name == "linear_relation") return builtins::linear_relation(q);
  if (c.name == "hamming_relation") return builtins::hamming_relation(q);
  if (c.name == "equality") return equality_relation(q);
  throw InvalidArgument("unknown builtin relation '" + c.name + "'");
}

std::vector<Weight> builtin_weights(const std::string& s) {
  const Call c = parse_call(s);
  if (c.name == "conservative_weights") {
    want_args(c, 1);
    return builtins::conservative_weights(c.args[0]);
  }
  if (c.name == "orthogonal_weight") {
    want_args(c, 1);
    return {builtins::orthogonal_weight(c.args[0])};
  }
  return {char_weight(builtin_relation(s))};
}

}  // namespace

Json load(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[' || text_or_path[first] == '"')) {
      return Json::parse(text_or_path);
    }
    if (looks_like_call(text_or_path) && !std::filesystem::exists(text_or_path)) return Json(text_or_path);
    std::ifstream in(text_or_path);
    if (!in) throw InvalidArgument("cannot open '" + text_or_path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Gate& f) {
  Json j;
  j["q"] = f.q();
  j["n"] = f.arity();
  j["map"] = perm_json(f.map());
  return j;
}

Gate gate_from_json(const Json& j) {
  const int q = get<int>(j, "q"), n = get<int>(j, "n");
  check_alphabet(q);
  if (n < 1) throw InvalidArgument("gate arity must be at least 1");
  const std::uint64_t points = checked_pow(static_cast<std::uint64_t>(q), n);
  if (points > kMaxGatePoints) throw ResourceLimit("gate has too many points");
  if (j.contains("map")) return Gate(q, n, get<std::vector<std::uint32_t>>(j, "map"));
  if (j.contains("cycles")) return Gate(q, n, parse_cycles(get<std::string>(j, "cycles"), static_cast<std::uint32_t>(points)));
  throw InvalidArgument("gate needs 'map' or 'cycles'");
}

Json to_json(const Relation& r) {
  Json j;
  j["q"] = r.q();
  j["k"] = r.arity();
  j["tuples"] = r.tuples();
  return j;
}

Relation relation_from_json(const Json& j) {
  if (j.is_string()) return builtin_relation(j.get<std::string>());
  const int q = get<int>(j, "q"), k = get<int>(j, "k");
  check_alphabet(q);
  return Relation::from_tuples(q, k, get<std::vector<Tuple>>(j, "tuples"));
}

Json to_json(const Monoid& m) {
  switch (m.kind()) {
    case MonoidKind::kTable: {
      Json j;
      j["elements"] = m.labels();
      j["identity"] = m.format(m.identity());
      j["table"] = m.table();
      return j;
    }
    case MonoidKind::kProduct: {
      Json parts = Json::array();
      for (const Monoid& f : m.factors()) parts.push_back(to_json(f));
      Json j;
      j["product"] = parts;
      return j;
    }
    default: return m.name();
  }
}

Monoid monoid_from_json(const Json& j) {
  if (j.is_string()) return Monoid::builtin(j.get<std::string>());
  if (j.is_object() && j.contains("product")) {
    std::vector<Monoid> factors;
    for (const Json& f : j.at("product")) factors.push_back(monoid_from_json(f));
    return Monoid::product(std::move(factors));
  }
  return Monoid::table(get<std::vector<std::string>>(j, "elements"), get<std::string>(j, "identity"),
                       get<std::vector<std::vector<int>>>(j, "table"));
}

Json value_to_json(const Monoid& m, const Value& v) {
  switch (m.kind()) {
    case MonoidKind::kTable: return m.format(v);
    case MonoidKind::kProduct: {
      Json parts = Json::array();
      for (std::size_t i = 0; i < v.parts.size(); ++i) parts.push_back(value_to_json(m.factors()[i], v.parts[i]));
      return parts;
    }
    default: return v.infinite ? Json("inf") : natural_json(v.num);
  }
}

Value value_from_json(const Monoid& m, const Json& j) {
  Value v;
  switch (m.kind()) {
    case MonoidKind::kTable:
      if (!j.is_string()) throw InvalidArgument("table monoid values are labels");
      v = m.element(j.get<std::string>());
      break;
    case MonoidKind::kProduct: {
      if (!j.is_array() || j.size() != m.factors().size()) throw InvalidArgument("product value needs one part per factor");
      std::vector<Value> parts;
      for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(value_from_json(m.factors()[i], j[i]));
      v = Value::tuple(std::move(parts));
      break;
    }
    default:
      if (j.is_string() && j.get<std::string>() == "inf") {
        v = Value::infinity();
      } else if (j.is_boolean()) {
        v = Value::of(j.get<bool>() ? 1 : 0);
      } else {
        v = Value::of(natural_from(j));
      }
  }
  if (!m.contains(v)) throw InvalidArgument("value " + j.dump() + " is not in " + m.name());
  return v;
}

Json to_json(const Weight& w) {
  Json j;
  j["q"] = w.q();
  j["k"] = w.arity();
  j["monoid"] = to_json(w.monoid());
  Json values = Json::array();
  for (const Value& v : w.values()) values.push_back(value_to_json(w.monoid(), v));
  j["values"] = values;
  return j;
}

Weight weight_from_json(const Json& j) {
  if (j.is_string()) {
    auto ws = builtin_weights(j.get<std::string>());
    if (ws.size() != 1) throw InvalidArgument("'" + j.get<std::string>() + "' names several weights");
    return ws[0];
  }
  const int q = get<int>(j, "q"), k = get<int>(j, "k");
  check_alphabet(q);
  if (!j.contains("monoid")) throw InvalidArgument("missing field 'monoid'");
  const Monoid m = monoid_from_json(j.at("monoid"));
  if (!j.contains("values") || !j.at("values").is_array()) throw InvalidArgument("missing field 'values'");
  std::vector<Value> values;
  for (const Json& v : j.at("values")) values.push_back(value_from_json(m, v));
  return Weight(q, k, m, std::move(values));
}

MonoidHom hom_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "annihilate_inf") return MonoidHom::annihilate_infinity();
    if (s == "nonzero") return MonoidHom::nonzero();
    if (s == "bool_to_nat") return MonoidHom::bool_to_nat();
    if (s == "exp2") return MonoidHom::exp2();
    if (s.rfind("scale:", 0) == 0) return MonoidHom::scale(natural_from(Json(s.substr(6))));
    if (s.rfind("power:", 0) == 0) {
      const Natural e = natural_from(Json(s.substr(6)));
      if (e > 64) throw InvalidArgument("exponent too large");
      return MonoidHom::power(static_cast<unsigned>(e));
    }
    throw InvalidArgument("unknown homomorphism '" + s + "'");
  }
  if (j.is_object() && j.contains("rule")) {
    const auto rule = get<std::string>(j, "rule");
    const Monoid src = monoid_from_json(j.at("source"));
    if (rule == "projection") return MonoidHom::projection(src, get<std::size_t>(j, "index"));
    if (rule == "meet") return MonoidHom::meet(src);
    throw InvalidArgument("unknown homomorphism rule '" + rule + "'");
  }
  if (!j.is_object() || !j.contains("source") || !j.contains("target")) throw InvalidArgument("homomorphism needs source and target");
  const Monoid src = monoid_from_json(j.at("source"));
  const Monoid dst = monoid_from_json(j.at("target"));
  std::vector<Value> images;
  for (const Json& v : j.at("images")) images.push_back(value_from_json(dst, v));
  return MonoidHom::table(src, dst, std::move(images));
}

Semiring semiring_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "natural") return Semiring::natural();
    if (s == "boolean") return Semiring::boolean();
    throw InvalidArgument("unknown semiring '" + s + "'");
  }
  return Semiring::table(monoid_from_json(j.at("multiplicative")), get<std::vector<std::vector<int>>>(j, "addition"),
                         get<std::string>(j, "zero"));
}

CloneSpec spec_from_json(const Json& j) {
  const int q = get<int>(j, "q");
  std::vector<Weight> ws;
  if (j.contains("weights")) {
    for (const Json& w : j.at("weights")) {
      if (w.is_string()) {
        for (Weight& x : builtin_weights(w.get<std::string>())) ws.push_back(std::move(x));
      } else {
        ws.push_back(weight_from_json(w));
      }
    }
  }
  if (j.contains("relations")) {
    for (const Json& r : j.at("relations")) ws.push_back(char_weight(relation_from_json(r)));
  }
  return CloneSpec(q, j.contains("name") ? get<std::string>(j, "name") : std::string(), std::move(ws));
}

Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_json(p));
  j["generators"] = gens;
  return j;
}

namespace {

Json level_json(const ClosureLevel& l) {
  Json j;
  j["arity"] = l.arity;
  j["regime"] = l.regime;
  j["method"] = l.method;
  j["samples"] = l.samples;
  j["verdict"] = l.holds;
  if (l.witness) {
    Json w;
    w["gate"] = to_json(*l.witness);
    if (l.certificate) w["extended"] = to_json(*l.certificate);
    if (l.second) w["second"] = to_json(*l.second);
    if (l.ancilla_value >= 0) w["ancilla_value"] = l.ancilla_value;
    j["witness"] = w;
  }
  return j;
}

}  // namespace

Json to_json(const ClosureReport& r) {
  Json j;
  j["check"] = r.check;
  j["spec"] = r.spec_name;
  j["bound"] = r.bound;
  j["verdict"] = r.holds;
  bool exact = true;
  for (const ClosureLevel& l : r.levels) exact = exact && l.regime == "exact";
  j["regime"] = exact ? "exact" : "sampled";
  Json levels = Json::array();
  for (const ClosureLevel& l : r.levels) levels.push_back(level_json(l));
  j["levels"] = levels;
  return j;
}

Json to_json(const CompareResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["arity_bound"] = r.bound;
  Json levels = Json::array();
  for (const CompareLevel& l : r.levels) {
    Json x;
    x["arity"] = l.arity;
    x["order_a"] = l.order_a.str();
    x["order_b"] = l.order_b.str();
    x["a_in_b"] = l.a_in_b;
    x["b_in_a"] = l.b_in_a;
    levels.push_back(x);
  }
  j["levels"] = levels;
  return j;
}

Json to_json(const FullCloneReport& r) {
  Json j;
  j["q"] = r.q;
  j["k_max"] = r.k_max;
  j["arity_bound"] = r.max_arity;
  j["relations"] = r.relations;
  j["full"] = r.full;
  j["patterns"] = r.patterns;
  Json mm = Json::array();
  for (const FullCloneMismatch& m : r.mismatches) {
    Json x;
    x["relation"] = to_json(m.relation);
    x["full"] = m.full;
    x["pattern"] = m.pattern;
    mm.push_back(x);
  }
  j["mismatches"] = mm;
  j["verdict"] = r.mismatches.empty();
  return j;
}

Json to_json(const census::Census& c) {
  Json j;
  j["arity_bound"] = c.bound;
  j["engine"] = c.engine;
  j["count"] = c.entries.size();
  j["distinct"] = c.distinct;
  Json entries = Json::array();
  for (const census::EntryResult& e : c.entries) {
    Json x;
    x["name"] = e.name;
    x["symbol"] = e.symbol;
    x["relation"] = to_json(census::entry(e.name).relation);
    Json orders = Json::array();
    for (const Natural& o : e.orders) orders.push_back(o.str());
    x["orders"] = orders;
    entries.push_back(x);
  }
  j["entries"] = entries;
  Json dist = Json::array();
  for (const auto& [pair, n] : c.distinguishing) {
    Json x;
    x["a"] = pair.first;
    x["b"] = pair.second;
    x["arity"] = n;
    dist.push_back(x);
  }
  j["distinguishing_arities"] = dist;
  Json edges = Json::array();
  for (const auto& [u, l] : c.edges) edges.push_back(Json::array({u, l}));
  j["edges"] = edges;
  j["matches_known"] = c.matches_known;
  return j;
}

Json to_json(const census::WitnessReport& r) {
  Json j;
  j["claims"] = r.claims;
  j["holding"] = r.holding;
  Json d = Json::array();
  for (const census::WitnessResult& x : r.discrepancies) {
    Json y;
    y["witness"] = x.certifies;
    y["entry"] = x.entry;
    y["claimed_member"] = x.claimed_member;
    y["member"] = x.member;
    d.push_back(y);
  }
  j["discrepancies"] = d;
  j["verdict"] = r.discrepancies.empty();
  return j;
}

}  // namespace permclone::json_io
