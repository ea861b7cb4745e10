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


#include "permclone/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "permclone/error.hpp"

namespace permclone {

ColoredStructure::ColoredStructure(std::uint32_t degree) : degree_(degree) {
  if (degree == 0) throw InvalidArgument("structure needs at least one point");
  if (degree > kMaxStructurePoints) {
    throw ResourceLimit("structure has " + std::to_string(degree) + " points, limit is " + std::to_string(kMaxStructurePoints));
  }
}

void ColoredStructure::add_layer(int arity, std::vector<std::uint32_t> colors) {
  if (arity < 1) throw InvalidArgument("layer arity must be at least 1");
  const std::uint64_t entries = checked_pow(degree_, arity);
  if (entries > kMaxColorEntries) throw ResourceLimit("coloring needs " + std::to_string(entries) + " entries");
  if (colors.size() != entries) throw InvalidArgument("coloring has the wrong number of entries");
  std::unordered_map<std::uint32_t, std::uint32_t> canon;
  for (std::uint32_t& c : colors) {
    auto [it, fresh] = canon.emplace(c, static_cast<std::uint32_t>(canon.size()));
    c = it->second;
  }
  layers_.push_back(ColorLayer{arity, static_cast<std::uint32_t>(canon.size()), std::move(colors)});
}

ColoredStructure colored_structure_from_weights(int q, int n, std::span<const Weight> weights, kernels::Exec exec) {
  check_alphabet(q);
  const std::uint64_t m = checked_pow(static_cast<std::uint64_t>(q), n);
  if (m > kMaxStructurePoints) throw ResourceLimit("A^n has " + std::to_string(m) + " points, limit is " + std::to_string(kMaxStructurePoints));
  ColoredStructure s(static_cast<std::uint32_t>(m));
  std::map<int, std::vector<const Weight*>> by_arity;
  for (const Weight& w : weights) {
    if (w.q() != q) throw InvalidArgument("weight alphabet does not match");
    by_arity[w.arity()].push_back(&w);
  }
  for (const auto& [k, ws] : by_arity) {
    const std::uint64_t entries = checked_pow(m, k);
    if (entries > kMaxColorEntries) throw ResourceLimit("coloring of arity " + std::to_string(k) + " needs " + std::to_string(entries) + " entries");
    std::vector<std::uint32_t> combined;
    std::uint32_t num = 1;
    for (const Weight* w : ws) {
      const kernels::ColumnProducts cp(*w, n);
      std::vector<std::uint32_t> cls = kernels::tuple_classes(cp, exec);
      if (combined.empty()) {
        combined = std::move(cls);
        num = cp.num_classes();
        continue;
      }
      std::unordered_map<std::uint64_t, std::uint32_t> pair_id;
      for (std::size_t t = 0; t < combined.size(); ++t) {
        const std::uint64_t key = std::uint64_t{combined[t]} * cp.num_classes() + cls[t];
        auto [it, fresh] = pair_id.emplace(key, static_cast<std::uint32_t>(pair_id.size()));
        combined[t] = it->second;
      }
      num = static_cast<std::uint32_t>(pair_id.size());
    }
    (void)num;
    s.add_layer(k, std::move(combined));
  }
  return s;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Non-background tuples of one layer, flattened.
struct Sparse {
  int arity;
  std::vector<std::uint32_t> points;  // arity entries per tuple
  std::vector<std::uint32_t> colors;
  const ColorLayer* layer;
};

std::vector<Sparse> sparsify(const ColoredStructure& s) {
  std::vector<Sparse> out;
  const std::uint64_t m = s.degree();
  for (const ColorLayer& layer : s.layers()) {
    std::vector<std::uint64_t> freq(layer.num_colors, 0);
    for (std::uint32_t c : layer.colors) ++freq[c];
    const auto background = static_cast<std::uint32_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    Sparse sp{layer.arity, {}, {}, &layer};
    const auto k = static_cast<std::size_t>(layer.arity);
    for (std::uint64_t t = 0; t < layer.colors.size(); ++t) {
      if (layer.colors[t] == background) continue;
      std::uint64_t r = t;
      const std::size_t at = sp.points.size();
      sp.points.resize(at + k);
      for (std::size_t j = k; j-- > 0;) {
        sp.points[at + j] = static_cast<std::uint32_t>(r % m);
        r /= m;
      }
      sp.colors.push_back(layer.colors[t]);
    }
    out.push_back(std::move(sp));
  }
  return out;
}

bool preserves_sparse(const std::vector<Sparse>& layers, std::uint32_t m, std::span<const std::uint32_t> g) {
  for (const Sparse& sp : layers) {
    const auto k = static_cast<std::size_t>(sp.arity);
    for (std::size_t i = 0; i < sp.colors.size(); ++i) {
      std::uint64_t r = 0;
      for (std::size_t j = 0; j < k; ++j) r = r * m + g[sp.points[i * k + j]];
      if (sp.layer->colors[r] != sp.colors[i]) return false;
    }
  }
  return true;
}

// Ordered partition; a cell is named by its first position.
struct Partition {
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell_of;
  std::vector<std::uint32_t> cell_end;  // valid at cell starts
  std::uint32_t cells = 0;
  std::uint64_t trace = 0;

  explicit Partition(std::uint32_t m) : order(m), pos(m), cell_of(m, 0), cell_end(m, 0) {
    std::iota(order.begin(), order.end(), 0u);
    std::iota(pos.begin(), pos.end(), 0u);
    cell_end[0] = m;
    cells = 1;
  }

  bool discrete() const { return cells == order.size(); }

  bool same_shape(const Partition& o) const {
    if (cells != o.cells || trace != o.trace) return false;
    for (std::uint32_t s = 0; s < order.size(); s = cell_end[s]) {
      if (o.cell_of[o.order[s]] != s || o.cell_end[s] != cell_end[s]) return false;
    }
    return true;
  }
};

class Searcher {
 public:
  explicit Searcher(const ColoredStructure& s) : m_(s.degree()), layers_(sparsify(s)), sig_(m_) {}

  void refine(Partition& p) {
    for (;;) {
      std::fill(sig_.begin(), sig_.end(), 0);
      for (std::size_t li = 0; li < layers_.size(); ++li) {
        const Sparse& sp = layers_[li];
        const auto k = static_cast<std::size_t>(sp.arity);
        for (std::size_t i = 0; i < sp.colors.size(); ++i) {
          const std::uint32_t* t = &sp.points[i * k];
          for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t key = mix((li << 8) ^ (j << 4) ^ (std::uint64_t{sp.colors[i]} << 20));
            for (std::size_t e = 0; e < k; ++e) {
              key = mix(key ^ (e == j ? 0xffffffffULL : p.cell_of[t[e]]));
            }
            sig_[t[j]] += key;
          }
        }
      }
      bool split = false;
      for (std::uint32_t s = 0; s < m_;) {
        const std::uint32_t e = p.cell_end[s];
        if (e - s > 1) split |= split_cell(p, s, e);
        s = e;
      }
      if (!split) return;
    }
  }

  void individualize(Partition& p, std::uint32_t v) {
    const std::uint32_t s = p.cell_of[v], e = p.cell_end[s];
    const std::uint32_t other = p.order[s];
    std::swap(p.order[s], p.order[p.pos[v]]);
    p.pos[other] = p.pos[v];
    p.pos[v] = s;
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell_of[p.order[i]] = s + 1;
    ++p.cells;
    p.trace = mix(p.trace ^ (std::uint64_t{s} << 32) ^ e);
  }

  std::uint32_t degree() const { return m_; }
  bool verify(std::span<const std::uint32_t> g) const { return preserves_sparse(layers_, m_, g); }

 private:
  bool split_cell(Partition& p, std::uint32_t s, std::uint32_t e) {
    auto first = p.order.begin() + s, last = p.order.begin() + e;
    std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) {
      return sig_[a] != sig_[b] ? sig_[a] < sig_[b] : a < b;
    });
    if (sig_[p.order[s]] == sig_[p.order[e - 1]]) return false;
    std::uint32_t start = s;
    for (std::uint32_t i = s; i < e; ++i) {
      const std::uint32_t v = p.order[i];
      p.pos[v] = i;
      if (i > s && sig_[v] != sig_[p.order[i - 1]]) {
        p.cell_end[start] = i;
        ++p.cells;
        p.trace = mix(p.trace ^ (std::uint64_t{start} << 32) ^ i ^ sig_[p.order[start]]);
        start = i;
      }
      p.cell_of[v] = start;
    }
    p.cell_end[start] = e;
    p.trace = mix(p.trace ^ (std::uint64_t{start} << 32) ^ e ^ sig_[p.order[start]]);
    return true;
  }

  std::uint32_t m_;
  std::vector<Sparse> layers_;
  std::vector<std::uint64_t> sig_;
};

std::uint32_t target_cell(const Partition& p) {
  for (std::uint32_t s = 0; s < p.order.size(); s = p.cell_end[s]) {
    if (p.cell_end[s] - s > 1) return s;
  }
  return static_cast<std::uint32_t>(p.order.size());
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t m) : parent(m) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Backtrack {
 public:
  explicit Backtrack(const ColoredStructure& s) : search_(s) {}

  PermGroup run() {
    const std::uint32_t m = search_.degree();
    Partition root(m);
    search_.refine(root);
    path_.push_back(root);
    while (!path_.back().discrete()) {
      Partition next = path_.back();
      const std::uint32_t s = target_cell(next);
      targets_.push_back(s);
      search_.individualize(next, next.order[s]);
      search_.refine(next);
      path_.push_back(std::move(next));
    }
    leaf_ = path_.back().order;

    std::vector<Perm> gens;
    UnionFind orbits(m);
    for (std::size_t l = targets_.size(); l-- > 0;) {
      const Partition& node = path_[l];
      const std::uint32_t s = targets_[l], e = node.cell_end[s];
      const std::uint32_t b = path_[l + 1].order[s];
      std::vector<std::uint32_t> failed;
      for (std::uint32_t i = s; i < e; ++i) {
        const std::uint32_t v = node.order[i];
        if (orbits.find(v) == orbits.find(b)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](std::uint32_t f) { return orbits.find(f) == orbits.find(v); })) continue;
        Partition child = node;
        search_.individualize(child, v);
        search_.refine(child);
        std::optional<Perm> g;
        if (child.same_shape(path_[l + 1])) g = descend(l + 1, child);
        if (!g) {
          failed.push_back(v);
          continue;
        }
        for (std::uint32_t x = 0; x < m; ++x) orbits.unite(x, (*g)[x]);
        gens.push_back(std::move(*g));
      }
    }
    return PermGroup(m, std::move(gens));
  }

 private:
  std::optional<Perm> descend(std::size_t depth, const Partition& p) {
    if (p.discrete()) {
      Perm g(leaf_.size());
      for (std::size_t i = 0; i < leaf_.size(); ++i) g[leaf_[i]] = p.order[i];
      if (search_.verify(g)) return g;
      return std::nullopt;
    }
    const std::uint32_t s = targets_[depth], e = p.cell_end[s];
    for (std::uint32_t i = s; i < e; ++i) {
      Partition child = p;
      search_.individualize(child, p.order[i]);
      search_.refine(child);
      if (!child.same_shape(path_[depth + 1])) continue;
      if (auto g = descend(depth + 1, child)) return g;
    }
    return std::nullopt;
  }

  Searcher search_;
  std::vector<Partition> path_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> leaf_;
};

}  // namespace

bool preserves(const ColoredStructure& s, std::span<const std::uint32_t> perm) {
  check_perm(perm, s.degree());
  const std::uint64_t m = s.degree();
  for (const ColorLayer& layer : s.layers()) {
    const auto k = layer.arity;
    for (std::uint64_t t = 0; t < layer.colors.size(); ++t) {
      std::uint64_t r = t, img = 0, scale = 1;
      for (int j = 0; j < k; ++j) {
        img += perm[r % m] * scale;
        scale *= m;
        r /= m;
      }
      if (layer.colors[img] != layer.colors[t]) return false;
    }
  }
  return true;
}

PermGroup automorphism_group(const ColoredStructure& s, AutEngine engine, kernels::Exec exec) {
  if (engine == AutEngine::kBrute) {
    const auto layers = sparsify(s);
    const std::uint32_t m = s.degree();
    const auto found = kernels::filter_permutations(
        m, [&](std::span<const std::uint32_t> p) { return preserves_sparse(layers, m, p); }, exec);
    return group_from_elements(m, found);
  }
  Backtrack bt(s);
  return bt.run();
}

}  // namespace permclone
