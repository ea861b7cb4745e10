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


#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oracle {

namespace {

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t encode(const std::vector<int>& d, int q) {
  std::uint64_t r = 0;
  for (int x : d) r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x);
  return r;
}

// calls visit for every k-tuple of values below m
void for_each_tuple(std::uint32_t m, int k, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> t(static_cast<std::size_t>(k), 0);
  for (;;) {
    visit(t);
    int i = k - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == m) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

Perm apply_all(const Perm& f, const std::vector<std::uint32_t>& t) {
  Perm out;
  for (auto x : t) out.push_back(f[x]);
  return out;
}

Perm then(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

}  // namespace

std::vector<int> digits(std::uint64_t point, int q, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(point % static_cast<std::uint64_t>(q));
    point /= static_cast<std::uint64_t>(q);
  }
  return d;
}

Value array_weight(const Weight& w, int n, const std::vector<std::uint32_t>& rows) {
  std::vector<std::vector<int>> table;
  for (auto p : rows) table.push_back(digits(p, w.q(), n));
  Value acc = w.monoid().identity();
  for (int col = 0; col < n; ++col) {
    std::vector<int> column;
    for (const auto& row : table) column.push_back(row[static_cast<std::size_t>(col)]);
    acc = w.monoid().op(acc, w.at(encode(column, w.q())));
  }
  return acc;
}

bool respects(const Gate& f, const Weight& w) {
  const Perm map(f.map().begin(), f.map().end());
  bool ok = true;
  for_each_tuple(f.size(), w.arity(), [&](const std::vector<std::uint32_t>& t) {
    if (ok && !(array_weight(w, f.arity(), t) == array_weight(w, f.arity(), apply_all(map, t)))) ok = false;
  });
  return ok;
}

bool respects(const Gate& f, const Relation& r) {
  const int n = f.arity(), q = f.q();
  auto columns_in = [&](const std::vector<std::uint32_t>& t) {
    std::vector<std::vector<int>> rows;
    for (auto p : t) rows.push_back(digits(p, q, n));
    for (int c = 0; c < n; ++c) {
      std::vector<int> col;
      for (const auto& row : rows) col.push_back(row[static_cast<std::size_t>(c)]);
      if (!r.contains(std::span<const int>(col))) return false;
    }
    return true;
  };
  const Perm map(f.map().begin(), f.map().end());
  bool ok = true;
  for_each_tuple(f.size(), r.arity(), [&](const std::vector<std::uint32_t>& t) {
    if (ok && columns_in(t) && !columns_in(apply_all(map, t))) ok = false;
  });
  return ok;
}

PermSet filter_all(std::uint32_t m, const std::function<bool(const Perm&)>& keep) {
  PermSet out;
  Perm p(m);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (keep(p)) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

PermSet slice_elements(int q, int n, const std::vector<Weight>& ws) {
  const auto m = static_cast<std::uint32_t>(power(static_cast<std::uint64_t>(q), n));
  struct Table {
    int k;
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<std::uint32_t> cls;
  };
  std::vector<Table> tables;
  for (const Weight& w : ws) {
    Table t{w.arity(), {}, {}};
    std::map<Value, std::uint32_t> ids;
    for_each_tuple(m, w.arity(), [&](const std::vector<std::uint32_t>& tup) {
      const Value v = array_weight(w, n, tup);
      t.cls.push_back(ids.emplace(v, static_cast<std::uint32_t>(ids.size())).first->second);
      t.tuples.push_back(tup);
    });
    tables.push_back(std::move(t));
  }
  return filter_all(m, [&](const Perm& p) {
    for (const Table& t : tables) {
      for (std::size_t i = 0; i < t.tuples.size(); ++i) {
        std::uint64_t img = 0;
        for (auto x : t.tuples[i]) img = img * m + p[x];
        if (t.cls[i] != t.cls[img]) return false;
      }
    }
    return true;
  });
}

PermSet closure(std::uint32_t degree, const std::vector<Perm>& gens, std::size_t cap) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  PermSet seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    const Perm g = todo.front();
    todo.pop_front();
    for (const Perm& s : gens) {
      Perm h = then(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
        todo.push_back(std::move(h));
      }
    }
  }
  return seen;
}

PermSet degenerate_maps(int q, int n) {
  const auto m = static_cast<std::uint32_t>(power(static_cast<std::uint64_t>(q), n));
  std::vector<Perm> sym_q;
  {
    Perm b(static_cast<std::size_t>(q));
    std::iota(b.begin(), b.end(), 0u);
    do sym_q.push_back(b);
    while (std::next_permutation(b.begin(), b.end()));
  }
  PermSet out;
  std::vector<int> wires(static_cast<std::size_t>(n));
  std::iota(wires.begin(), wires.end(), 0);
  do {
    for_each_tuple(static_cast<std::uint32_t>(sym_q.size()), n, [&](const std::vector<std::uint32_t>& choice) {
      Perm f(m);
      for (std::uint32_t x = 0; x < m; ++x) {
        const auto d = digits(x, q, n);
        std::vector<int> y(static_cast<std::size_t>(n));
        // apply beta_i to digit i, then move digit i to position wires[i]
        for (int i = 0; i < n; ++i) {
          y[static_cast<std::size_t>(wires[static_cast<std::size_t>(i)])] =
              static_cast<int>(sym_q[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(d[static_cast<std::size_t>(i)])]);
        }
        f[x] = static_cast<std::uint32_t>(encode(y, q));
      }
      out.insert(f);
    });
  } while (std::next_permutation(wires.begin(), wires.end()));
  return out;
}

PermSet affine_maps(int p, int n) {
  const auto m = static_cast<std::uint32_t>(power(static_cast<std::uint64_t>(p), n));
  PermSet out;
  for_each_tuple(static_cast<std::uint32_t>(p), n * n + n, [&](const std::vector<std::uint32_t>& e) {
    Perm f(m);
    std::vector<bool> hit(m, false);
    for (std::uint32_t x = 0; x < m; ++x) {
      const auto d = digits(x, p, n);
      std::vector<int> y(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int s = static_cast<int>(e[static_cast<std::size_t>(n * n + i)]);
        for (int j = 0; j < n; ++j) s += static_cast<int>(e[static_cast<std::size_t>(i * n + j)]) * d[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s % p;
      }
      f[x] = static_cast<std::uint32_t>(encode(y, p));
      if (hit[f[x]]) return;
      hit[f[x]] = true;
    }
    out.insert(f);
  });
  return out;
}

PermSet wire_maps(int q, int n) {
  const auto m = static_cast<std::uint32_t>(power(static_cast<std::uint64_t>(q), n));
  PermSet out;
  std::vector<int> wires(static_cast<std::size_t>(n));
  std::iota(wires.begin(), wires.end(), 0);
  do {
    Perm f(m);
    for (std::uint32_t x = 0; x < m; ++x) {
      const auto d = digits(x, q, n);
      std::vector<int> y(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(wires[static_cast<std::size_t>(i)])] = d[static_cast<std::size_t>(i)];
      f[x] = static_cast<std::uint32_t>(encode(y, q));
    }
    out.insert(f);
  } while (std::next_permutation(wires.begin(), wires.end()));
  return out;
}

std::vector<std::uint64_t> completion_counts(const Relation& r, int position) {
  const int q = r.q(), k = r.arity();
  std::vector<std::uint64_t> out;
  for_each_tuple(static_cast<std::uint32_t>(q), k - 1, [&](const std::vector<std::uint32_t>& t) {
    std::uint64_t c = 0;
    for (int a = 0; a < q; ++a) {
      std::vector<int> full(t.begin(), t.end());
      full.insert(full.begin() + (position - 1), a);
      if (r.contains(std::span<const int>(full))) ++c;
    }
    out.push_back(c);
  });
  return out;
}

bool equivalence_pattern(const Relation& r) {
  // the coarsest equivalence R satisfies, then compare R with its pattern
  const int k = r.arity(), q = r.q();
  const auto tuples = r.tuples();
  auto tied = [&](int i, int j) {
    for (const auto& t : tuples) {
      if (t[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> ranks;
  std::uint64_t rank = 0;
  for_each_tuple(static_cast<std::uint32_t>(q), k, [&](const std::vector<std::uint32_t>& t) {
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (tied(i, j) && t[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(j)]) ok = false;
      }
    }
    if (ok) ranks.push_back(rank);
    ++rank;
  });
  return ranks == r.ranks();
}

bool full_clone(const Relation& r, int max_arity) {
  for (int n = 1; n <= max_arity; ++n) {
    const auto m = static_cast<std::uint32_t>(power(static_cast<std::uint64_t>(r.q()), n));
    Perm swap(m), cycle(m);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
    if (!respects(Gate(r.q(), n, swap), r) || !respects(Gate(r.q(), n, cycle), r)) return false;
  }
  return true;
}

PermSet automorphisms(const permclone::ColoredStructure& s) {
  const std::uint32_t m = s.degree();
  return filter_all(m, [&](const Perm& p) {
    for (const auto& layer : s.layers()) {
      std::uint64_t idx = 0;
      bool ok = true;
      for_each_tuple(m, layer.arity, [&](const std::vector<std::uint32_t>& t) {
        if (ok) {
          std::uint64_t img = 0;
          for (auto x : t) img = img * m + p[x];
          if (layer.colors[idx] != layer.colors[img]) ok = false;
        }
        ++idx;
      });
      if (!ok) return false;
    }
    return true;
  });
}

Perm random_perm(std::uint32_t m, std::mt19937_64& rng) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Relation random_relation(int q, int k, std::mt19937_64& rng) {
  const std::uint64_t total = power(static_cast<std::uint64_t>(q), k);
  // vary the density so that both sparse and dense relations occur
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = unit(rng);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t t = 0; t < total; ++t) {
    if (unit(rng) < density) ranks.push_back(t);
  }
  return Relation(q, k, std::move(ranks));
}

permclone::ColoredStructure random_structure(std::uint32_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> layers_d(1, 3), arity_d(1, 3), gens_d(0, 2), palette_d(1, 4);
  std::vector<Perm> gens;
  for (int i = gens_d(rng); i > 0; --i) {
    // short cycles and transpositions keep the planted group small
    Perm p(m);
    std::iota(p.begin(), p.end(), 0u);
    std::uniform_int_distribution<std::uint32_t> pt(0, m - 1);
    const std::uint32_t a = pt(rng), b = pt(rng);
    std::swap(p[a], p[b]);
    if (i == 2) {
      const std::uint32_t c = pt(rng);
      std::swap(p[b], p[c]);
    }
    gens.push_back(std::move(p));
  }
  permclone::ColoredStructure s(m);
  for (int l = layers_d(rng); l > 0; --l) {
    int k = arity_d(rng);
    if (m > 6 && k == 3) k = 2;
    const std::uint64_t total = power(m, k);
    std::vector<std::uint32_t> orbit(total, UINT32_MAX);
    std::uint32_t orbits = 0;
    for (std::uint64_t t = 0; t < total; ++t) {
      if (orbit[t] != UINT32_MAX) continue;
      std::deque<std::uint64_t> todo{t};
      orbit[t] = orbits;
      while (!todo.empty()) {
        const std::uint64_t u = todo.front();
        todo.pop_front();
        std::vector<std::uint32_t> tup(static_cast<std::size_t>(k));
        std::uint64_t rest = u;
        for (int j = k - 1; j >= 0; --j) {
          tup[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest % m);
          rest /= m;
        }
        for (const Perm& g : gens) {
          std::uint64_t img = 0;
          for (auto x : tup) img = img * m + g[x];
          if (orbit[img] == UINT32_MAX) {
            orbit[img] = orbits;
            todo.push_back(img);
          }
        }
      }
      ++orbits;
    }
    std::uniform_int_distribution<std::uint32_t> color(0, static_cast<std::uint32_t>(palette_d(rng)));
    std::vector<std::uint32_t> orbit_color(orbits);
    for (auto& c : orbit_color) c = color(rng);
    std::vector<std::uint32_t> colors(total);
    for (std::uint64_t t = 0; t < total; ++t) colors[t] = orbit_color[orbit[t]];
    s.add_layer(k, std::move(colors));
  }
  return s;
}

}  // namespace oracle
