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


#include "permclone/census.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "permclone/builtins.hpp"
#include "permclone/error.hpp"

namespace permclone::census {

namespace {

Relation bits(int k, std::initializer_list<const char*> words) {
  std::vector<Tuple> tuples;
  for (const char* w : words) {
    Tuple t;
    for (const char* c = w; *c != '\0'; ++c) t.push_back(*c - '0');
    tuples.push_back(std::move(t));
  }
  return Relation::from_tuples(2, k, tuples);
}

Relation affine4() { return bits(4, {"0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"}); }

std::vector<Entry> build_entries() {
  return {
      {"T", "⊤", bits(1, {"0", "1"})},
      {"D", "D", bits(2, {"01", "10"})},
      {"DP", "DP", bits(4, {"0110", "1010"})},
      {"A", "A", affine4()},
      {"AP0", "AP₀", bits(3, {"000", "011", "101", "110"})},
      {"AD", "AD", product(affine4(), bits(2, {"01", "10"}))},
      {"AP1", "AP₁", bits(5, {"00001", "00111", "01011", "01101", "10011", "10101", "11001", "11111"})},
      {"AP", "AP", bits(4, {"0001", "0111", "1011", "1101"})},
      {"P0", "P₀", bits(1, {"0"})},
      {"P1", "P₁", bits(1, {"1"})},
      {"P", "P", bits(2, {"01"})},
      {"U", "U", bits(3, {"000", "001", "011", "100", "110", "111"})},
      {"Pi", "Π", builtins::leq_chain(2)},
  };
}

// Gate on 3 bits from a list of (from, to) words; unlisted points are fixed.
Gate table_gate(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<std::uint32_t> map(8);
  for (std::uint32_t i = 0; i < 8; ++i) map[i] = i;
  auto word = [](const char* w) { return static_cast<std::uint32_t>((w[0] - '0') * 4 + (w[1] - '0') * 2 + (w[2] - '0')); };
  for (const auto& [from, to] : rows) map[word(from)] = word(to);
  return Gate(2, 3, std::move(map));
}

// x -> Mx + b over GF(2), x a column with x_1 the leftmost bit.
Gate affine_gate(const int (&m)[3][3], const int (&b)[3]) {
  std::vector<std::uint32_t> map(8);
  for (std::uint32_t r = 0; r < 8; ++r) {
    const int x[3] = {static_cast<int>(r >> 2 & 1U), static_cast<int>(r >> 1 & 1U), static_cast<int>(r & 1U)};
    std::uint32_t img = 0;
    for (int i = 0; i < 3; ++i) {
      const int y = (m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + b[i]) % 2;
      img = img * 2 + static_cast<std::uint32_t>(y);
    }
    map[r] = img;
  }
  return Gate(2, 3, std::move(map));
}

std::vector<Witness> build_witnesses() {
  const int m[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const int md[3][3] = {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
  const int b111[3] = {1, 1, 1}, b000[3] = {0, 0, 0}, b100[3] = {1, 0, 0};
  std::vector<Witness> w;
  w.push_back({"T",
               table_gate({{"000", "001"}, {"001", "010"}, {"010", "000"}, {"011", "100"}, {"100", "011"},
                           {"101", "101"}, {"110", "111"}, {"111", "110"}}),
               {"T"},
               {"D", "A", "P0", "P1"}});
  w.push_back({"D", table_gate({{"000", "111"}, {"111", "000"}}), {"D"}, {"A", "P0", "P1"}});
  w.push_back({"DP", table_gate({{"010", "101"}, {"101", "010"}}), {"DP", "D", "P0", "P1"}, {"A"}});
  w.push_back({"A", affine_gate(m, b111), {"A"}, {"AP0", "P1", "D"}});
  w.push_back({"AP0", affine_gate(m, b000), {"AP0"}, {"P1", "D"}});
  w.push_back({"AP1", affine_gate(m, b100), {"AP1", "P1"}, {"AP0", "AP"}});
  w.push_back({"AD", affine_gate(md, b100), {"AD", "D", "A"}, {"AP0", "AP"}});
  w.push_back({"AP", affine_gate(md, b000), {"AP"}, {"Pi"}});
  w.push_back({"U", gates::not_gate(), {"U", "A", "D", "AD"}, {"Pi", "P0"}});
  w.push_back({"P0", table_gate({{"011", "111"}, {"111", "011"}}), {"P0"}, {"A", "P1"}});
  w.push_back({"P1", table_gate({{"000", "011"}, {"011", "000"}}), {"P1"}, {"A", "P0"}});
  w.push_back({"P", table_gate({{"001", "010"}, {"010", "011"}, {"011", "001"}}), {"P"}, {"A", "D"}});
  return w;
}

Natural factorial(int n) {
  Natural f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Diagram levels, top to bottom, for DOT ranks.
const std::vector<std::vector<std::string>>& levels() {
  static const std::vector<std::vector<std::string>> l = {
      {"T"}, {"D", "A", "P0", "P1"}, {"AD", "AP1", "AP0", "P"}, {"U", "DP"}, {"AP"}, {"Pi"}};
  return l;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_entries();
  return e;
}

const Entry& entry(const std::string& name) {
  for (const Entry& e : entries()) {
    if (e.name == name) return e;
  }
  throw InvalidArgument("unknown census entry " + name);
}

CloneSpec spec_of(const Entry& e) { return CloneSpec::from_relations(2, e.name, {e.relation}); }

const std::vector<std::pair<std::string, std::string>>& known_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"T", "A"},    {"T", "D"},    {"T", "P0"},   {"T", "P1"},  {"P1", "P"},   {"P0", "P"},  {"P", "DP"},
      {"P1", "AP1"}, {"P0", "AP0"}, {"DP", "AP"},  {"A", "AP0"}, {"A", "AP1"},  {"A", "AD"},  {"AD", "AP"},
      {"AP0", "AP"}, {"AP1", "AP"}, {"AP", "Pi"},  {"AD", "U"},  {"U", "Pi"},   {"D", "DP"},  {"D", "AD"},
  };
  return edges;
}

const std::vector<Witness>& witnesses() {
  static const std::vector<Witness> w = build_witnesses();
  return w;
}

WitnessReport verify_witnesses() {
  WitnessReport report;
  for (const Witness& w : witnesses()) {
    auto check = [&](const std::string& name, bool claimed) {
      const bool actual = member(w.gate, spec_of(entry(name)));
      ++report.claims;
      if (actual == claimed) {
        ++report.holding;
      } else {
        report.discrepancies.push_back({w.certifies, name, claimed, actual});
      }
    };
    for (const std::string& n : w.in) check(n, true);
    for (const std::string& n : w.out) check(n, false);
  }
  return report;
}

Census run(int max_arity, AutEngine engine) {
  if (max_arity < 1) throw InvalidArgument("arity bound must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Census c;
  c.bound = max_arity;
  c.engine = engine == AutEngine::kBrute ? "brute" : "backtrack";
  const auto& es = entries();
  const std::size_t count = es.size();

  // slices[i][n-1]; entries are independent
  std::vector<std::vector<PermGroup>> slices(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    const CloneSpec spec = spec_of(es[i]);
    for (int n = 1; n <= max_arity; ++n) slices[i].push_back(compute_slice(spec, n, engine));
  }

  std::vector<std::vector<bool>> le(count, std::vector<bool>(count, true));
  for (std::size_t i = 0; i < count; ++i) {
    EntryResult r{es[i].name, es[i].symbol, {}};
    for (const PermGroup& g : slices[i]) r.orders.push_back(g.order());
    c.entries.push_back(std::move(r));
    for (std::size_t j = 0; j < count; ++j) {
      for (int n = 0; n < max_arity && le[i][j]; ++n) le[i][j] = is_subgroup(slices[i][static_cast<std::size_t>(n)], slices[j][static_cast<std::size_t>(n)]);
    }
  }
  c.distinct = true;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      int first = 0;
      for (int n = 1; n <= max_arity && first == 0; ++n) {
        if (!group_equal(slices[i][static_cast<std::size_t>(n - 1)], slices[j][static_cast<std::size_t>(n - 1)])) first = n;
      }
      c.distinguishing[{es[i].name, es[j].name}] = first;
      if (first == 0) c.distinct = false;
    }
  }
  // covers of the strict order
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !le[j][i] || le[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k) {
        if (k == i || k == j) continue;
        const bool between = le[j][k] && !le[k][j] && le[k][i] && !le[i][k];
        if (between) cover = false;
      }
      if (cover) c.edges.emplace_back(es[i].name, es[j].name);
    }
  }
  auto norm = [](std::vector<std::pair<std::string, std::string>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  c.matches_known = norm(c.edges) == norm(known_edges());
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::string to_dot(const Census& c) {
  std::ostringstream out;
  out << "graph census {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (const auto& level : levels()) {
    out << "  { rank=same;";
    for (const std::string& n : level) out << " \"" << n << "\";";
    out << " }\n";
  }
  for (const EntryResult& e : c.entries) {
    out << "  \"" << e.name << "\" [label=\"" << e.symbol << "\"];\n";
  }
  for (const auto& [upper, lower] : c.edges) out << "  \"" << upper << "\" -- \"" << lower << "\";\n";
  out << "}\n";
  return out.str();
}

std::vector<CollapseItem> collapse_checks(int max_arity) {
  std::vector<CollapseItem> out;
  const std::vector<std::pair<std::string, Relation>> trivial = {
      {"T0^2", bits(2, {"00", "01", "10"})},
      {"T1^2", bits(2, {"01", "10", "11"})},
      {"leq", builtins::leq_chain(2)},
  };
  for (const auto& [name, rel] : trivial) {
    const CloneSpec spec = CloneSpec::from_relations(2, name, {rel});
    for (int n = 1; n <= max_arity; ++n) {
      const PermGroup g = compute_slice(spec, n);
      const bool same = group_equal(g, wire_group(2, n));
      out.push_back({name, n, g.order(), factorial(n), same});
    }
  }
  const Relation u = entry("U").relation, d = entry("D").relation;
  const CloneSpec u_only = CloneSpec::from_relations(2, "U", {u});
  const CloneSpec ud = CloneSpec::from_relations(2, "UD", {u, d});
  const CloneSpec ad_product = spec_of(entry("AD"));
  const CloneSpec ad_pair = CloneSpec::from_relations(2, "A+D", {entry("A").relation, d});
  for (int n = 1; n <= max_arity; ++n) {
    const PermGroup a = compute_slice(u_only, n), b = compute_slice(ud, n);
    out.push_back({"U=UD", n, b.order(), a.order(), group_equal(a, b)});
    const PermGroup x = compute_slice(ad_product, n), y = compute_slice(ad_pair, n);
    out.push_back({"AD=A+D", n, x.order(), y.order(), group_equal(x, y)});
  }
  return out;
}

}  // namespace permclone::census
