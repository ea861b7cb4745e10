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


#include "permclone/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "permclone/error.hpp"

namespace permclone {

Perm identity_perm(std::uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(std::span<const std::uint32_t> g, std::span<const std::uint32_t> h) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = h[g[x]];
  return out;
}

Perm invert(std::span<const std::uint32_t> g) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[g[x]] = static_cast<std::uint32_t>(x);
  return out;
}

bool is_identity(std::span<const std::uint32_t> g) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return false;
  }
  return true;
}

void check_perm(std::span<const std::uint32_t> g, std::uint32_t degree) {
  if (g.size() != degree) {
    throw InvalidArgument("permutation has degree " + std::to_string(g.size()) + ", expected " + std::to_string(degree));
  }
  std::vector<bool> hit(degree, false);
  for (std::uint32_t y : g) {
    if (y >= degree || hit[y]) throw InvalidArgument("not a permutation");
    hit[y] = true;
  }
}

namespace {

std::uint32_t first_moved(const Perm& g) {
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return x;
  }
  return std::numeric_limits<std::uint32_t>::max();
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

}  // namespace

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators) : degree_(degree) {
  for (Perm& g : generators) {
    check_perm(g, degree);
    if (!is_identity(g)) generators_.push_back(std::move(g));
  }
  if (generators_.empty()) return;
  for (const Perm& g : generators_) {
    const bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g[l.point] == l.point; });
    if (fixes_base) push_level(first_moved(g));
  }
  for (const Perm& g : generators_) {
    for (Level& l : levels_) {
      l.gens.push_back(g);
      if (g[l.point] != l.point) break;
    }
  }
  for (Level& l : levels_) rebuild_orbit(l);
  complete(levels_.size() - 1);
}

void PermGroup::push_level(std::uint32_t point) {
  Level l;
  l.point = point;
  levels_.push_back(std::move(l));
  rebuild_orbit(levels_.back());
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.point);
  level.slot.assign(degree_, -1);
  level.slot[level.point] = 0;
  level.transversal.assign(1, identity_perm(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const std::uint32_t x = level.orbit[i];
    for (const Perm& s : level.gens) {
      const std::uint32_t y = s[x];
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(compose(level.transversal[i], s));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t s = level.slot[g[level.point]];
    if (s < 0) return {std::move(g), l};
    const Perm& t = level.transversal[static_cast<std::size_t>(s)];
    // g * t^-1 without materializing the inverse
    Perm next(degree_);
    for (std::uint32_t x = 0; x < degree_; ++x) next[t[x]] = x;
    for (std::uint32_t x = 0; x < degree_; ++x) g[x] = next[g[x]];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::insert(const Perm& g, std::size_t from, std::size_t to) {
  if (to == levels_.size()) push_level(first_moved(g));
  for (std::size_t l = from; l <= to; ++l) {
    levels_[l].gens.push_back(g);
    rebuild_orbit(levels_[l]);
  }
}

void PermGroup::complete(std::size_t start) {
  auto i = static_cast<std::int64_t>(start);
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
        const Level& level = levels_[li];
        const Perm& s = level.gens[si];
        const std::uint32_t x = level.orbit[oi];
        const Perm& ty = level.transversal[static_cast<std::size_t>(level.slot[s[x]])];
        Perm h = compose(level.transversal[oi], s);
        h = compose(h, invert(ty));
        if (is_identity(h)) continue;
        auto [residue, j] = strip(std::move(h), li + 1);
        if (j == levels_.size() && is_identity(residue)) continue;
        insert(residue, li + 1, j);
        i = static_cast<std::int64_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool PermGroup::add_generator(const Perm& g) {
  check_perm(g, degree_);
  if (contains(g)) return false;
  generators_.push_back(g);
  std::size_t top = 0;
  while (top < levels_.size() && g[levels_[top].point] == levels_[top].point) ++top;
  if (top == levels_.size()) push_level(first_moved(g));
  for (std::size_t l = 0; l <= top; ++l) {
    levels_[l].gens.push_back(g);
    rebuild_orbit(levels_[l]);
  }
  complete(top);
  return true;
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> out;
  for (const Level& l : levels_) out.push_back(l.point);
  return out;
}

std::vector<std::uint64_t> PermGroup::orbit_sizes() const {
  std::vector<std::uint64_t> out;
  for (const Level& l : levels_) out.push_back(l.orbit.size());
  return out;
}

Natural PermGroup::order() const {
  Natural n = 1;
  for (const Level& l : levels_) n *= l.orbit.size();
  return n;
}

bool PermGroup::contains(std::span<const std::uint32_t> g) const {
  if (g.size() != degree_) throw InvalidArgument("degree mismatch in membership test");
  auto [residue, j] = strip(Perm(g.begin(), g.end()), 0);
  return j == levels_.size() && is_identity(residue);
}

void PermGroup::for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& visit) const {
  if (order() > cap) throw ResourceLimit("group order " + order().str() + " exceeds enumeration cap " + std::to_string(cap));
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& acc) {
    if (l == 0) {
      visit(acc);
      return;
    }
    for (const Perm& t : levels_[l - 1].transversal) rec(l - 1, compose(acc, t));
  };
  rec(levels_.size(), identity_perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  for_each_element(cap, [&](const Perm& p) { out.push_back(p); });
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm acc = identity_perm(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& tr = levels_[l].transversal;
    acc = compose(acc, tr[bounded(rng, tr.size())]);
  }
  return acc;
}

Perm uniform_random_element(const PermGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return g.random_element(rng);
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw InvalidArgument("degree mismatch");
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& p) { return g.contains(p); });
}

bool group_equal(const PermGroup& g, const PermGroup& h) {
  return g.order() == h.order() && is_subgroup(h, g);
}

PermGroup group_from_elements(std::uint32_t degree, std::span<const Perm> elements) {
  PermGroup g(degree);
  for (const Perm& p : elements) g.add_generator(p);
  return g;
}

PermGroup symmetric_group(std::uint32_t degree) {
  if (degree < 2) return PermGroup(degree);
  Perm swap = identity_perm(degree);
  std::swap(swap[0], swap[1]);
  Perm cycle(degree);
  for (std::uint32_t x = 0; x < degree; ++x) cycle[x] = (x + 1) % degree;
  return PermGroup(degree, {swap, cycle});
}

PermGroup trivial_group(std::uint32_t degree) { return PermGroup(degree); }

namespace {

// The permutation of A^n induced by a map on digit vectors.
template <class F>
Perm on_points(int q, int n, F f) {
  const std::uint64_t m = checked_pow(static_cast<std::uint64_t>(q), n);
  if (m > kMaxGatePoints) throw ResourceLimit("too many points");
  Perm p(m);
  std::vector<int> x(static_cast<std::size_t>(n));
  for (std::uint64_t r = 0; r < m; ++r) {
    unrank_into(r, q, x);
    f(x);
    p[r] = static_cast<std::uint32_t>(rank(x, q));
  }
  return p;
}

}  // namespace

PermGroup wreath_group(const PermGroup& base, int n) {
  if (n < 1) throw InvalidArgument("wreath product needs n >= 1");
  const int q = static_cast<int>(base.degree());
  check_alphabet(q);
  std::vector<Perm> gens;
  for (const Perm& b : base.generators()) {
    gens.push_back(on_points(q, n, [&](std::vector<int>& x) { x[0] = static_cast<int>(b[static_cast<std::size_t>(x[0])]); }));
  }
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back(on_points(q, n, [&](std::vector<int>& x) { std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i) + 1]); }));
  }
  const auto m = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(q), n));
  return PermGroup(m, std::move(gens));
}

PermGroup wire_group(int q, int n) {
  check_alphabet(q);
  return wreath_group(trivial_group(static_cast<std::uint32_t>(q)), n);
}

PermGroup affine_group(int p, int n) {
  if (!is_prime(p)) throw InvalidArgument("affine group needs a prime field, got " + std::to_string(p));
  if (n < 1) throw InvalidArgument("affine group needs n >= 1");
  int omega = 1;
  for (int c = 1; c < p; ++c) {
    int x = c, ord = 1;
    while (x != 1) {
      x = x * c % p;
      ++ord;
    }
    if (ord == p - 1) {
      omega = c;
      break;
    }
  }
  std::vector<Perm> gens;
  gens.push_back(on_points(p, n, [&](std::vector<int>& x) { x[0] = (x[0] + 1) % p; }));
  if (p > 2) gens.push_back(on_points(p, n, [&](std::vector<int>& x) { x[0] = x[0] * omega % p; }));
  if (n > 1) gens.push_back(on_points(p, n, [&](std::vector<int>& x) { x[0] = (x[0] + x[1]) % p; }));
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back(on_points(p, n, [&](std::vector<int>& x) { std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i) + 1]); }));
  }
  const auto m = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(p), n));
  return PermGroup(m, std::move(gens));
}

Perm perm_of(const Gate& f) { return Perm(f.map().begin(), f.map().end()); }

}  // namespace permclone
