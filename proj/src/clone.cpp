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


#include "permclone/clone.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "permclone/error.hpp"

namespace permclone {

CloneSpec::CloneSpec(int q_, std::string name_, std::vector<Weight> weights_)
    : q(q_), name(std::move(name_)), weights(std::move(weights_)) {
  check_alphabet(q);
  if (weights.empty()) throw InvalidArgument("clone spec needs at least one weight or relation");
  for (const Weight& w : weights) {
    if (w.q() != q) throw InvalidArgument("clone spec mixes alphabets");
  }
}

CloneSpec CloneSpec::from_relations(int q, std::string name, const std::vector<Relation>& relations) {
  std::vector<Weight> ws;
  for (const Relation& r : relations) ws.push_back(char_weight(r));
  return CloneSpec(q, std::move(name), std::move(ws));
}

bool member(const Gate& f, const CloneSpec& spec) {
  if (f.q() != spec.q) throw InvalidArgument("alphabet mismatch between gate and clone");
  return std::all_of(spec.weights.begin(), spec.weights.end(), [&](const Weight& w) { return respects_weight(f, w); });
}

PermGroup compute_slice(const CloneSpec& spec, int n, AutEngine engine) {
  if (n < 1) throw InvalidArgument("slice arity must be at least 1");
  return automorphism_group(colored_structure_from_weights(spec.q, n, spec.weights), engine);
}

CloneEngine::CloneEngine(CloneSpec spec, AutEngine engine) : spec_(std::move(spec)), engine_(engine) {}

std::shared_ptr<const PermGroup> CloneEngine::slice(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const PermGroup>(compute_slice(spec_, n, engine_));
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(n, std::move(computed)).first->second;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kEqual: return "equal";
    case Verdict::kLess: return "less";
    case Verdict::kGreater: return "greater";
    case Verdict::kIncomparable: return "incomparable";
  }
  return "?";
}

CompareResult compare(const CloneEngine& a, const CloneEngine& b, int bound) {
  if (a.spec().q != b.spec().q) throw InvalidArgument("cannot compare clones over different alphabets");
  if (bound < 1) throw InvalidArgument("arity bound must be at least 1");
  CompareResult out{Verdict::kEqual, bound, {}};
  bool le = true, ge = true;
  for (int n = 1; n <= bound; ++n) {
    const auto ga = a.slice(n), gb = b.slice(n);
    CompareLevel level{n, ga->order(), gb->order(), is_subgroup(*ga, *gb), is_subgroup(*gb, *ga)};
    le = le && level.a_in_b;
    ge = ge && level.b_in_a;
    out.levels.push_back(std::move(level));
  }
  out.verdict = le && ge ? Verdict::kEqual : le ? Verdict::kLess : ge ? Verdict::kGreater : Verdict::kIncomparable;
  return out;
}

std::optional<std::pair<Gate, Gate>> split_parallel(const Gate& h, int n) {
  const int q = h.q(), m = h.arity() - n;
  if (n < 1 || m < 1) throw InvalidArgument("split point must leave both blocks nonempty");
  const auto big = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(q), n));
  const auto small = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(q), m));
  std::vector<std::uint32_t> f(big), g(small);
  for (std::uint32_t x = 0; x < big; ++x) f[x] = h(x * small) / small;
  for (std::uint32_t y = 0; y < small; ++y) g[y] = h(y) % small;
  for (std::uint32_t x = 0; x < big; ++x) {
    for (std::uint32_t y = 0; y < small; ++y) {
      if (h(x * small + y) != f[x] * small + g[y]) return std::nullopt;
    }
  }
  return std::make_pair(Gate(q, n, std::move(f)), Gate(q, m, std::move(g)));
}

namespace {

using Extract = std::function<std::optional<ClosureLevel>(const Perm&)>;

// Points of A^(n+1) as (x, a) with a the last coordinate.
std::optional<Gate> restrict_to_layer(const Perm& g, int q, int n, int a) {
  const auto qq = static_cast<std::uint32_t>(q);
  const auto points = static_cast<std::uint32_t>(checked_pow(qq, n));
  std::vector<std::uint32_t> f(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    const std::uint32_t img = g[x * qq + static_cast<std::uint32_t>(a)];
    if (img % qq != static_cast<std::uint32_t>(a)) return std::nullopt;
    f[x] = img / qq;
  }
  return Gate(q, n, std::move(f));
}

// Runs one arity of a closure check over the group `big`: every element,
// random elements, or the generators of a structural subgroup.
ClosureLevel run_level(int arity, const PermGroup& big, const ClosureOptions& opt,
                       const std::function<PermGroup()>& structural, const Extract& check) {
  ClosureLevel level;
  level.arity = arity;
  auto consider = [&](const Perm& g) {
    if (!level.holds) return;
    if (auto bad = check(g)) {
      bad->arity = arity;
      level.holds = false;
      level.witness = std::move(bad->witness);
      level.certificate = std::move(bad->certificate);
      level.second = std::move(bad->second);
      level.ancilla_value = bad->ancilla_value;
    }
  };
  if (opt.sample) {
    level.regime = "sampled";
    level.method = "sampled";
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(arity));
    for (std::uint64_t i = 0; i < opt.samples && level.holds; ++i) {
      consider(big.random_element(rng));
      ++level.samples;
    }
    return level;
  }
  level.regime = "exact";
  if (big.order() <= opt.enumeration_limit) {
    level.method = "enumeration";
    big.for_each_element(opt.enumeration_limit, [&](const Perm& g) {
      ++level.samples;
      consider(g);
    });
  } else {
    level.method = "structural";
    const PermGroup sub = structural();
    for (const Perm& g : sub.generators()) {
      ++level.samples;
      consider(g);
    }
  }
  return level;
}

ClosureReport finish(ClosureReport r) {
  r.holds = std::all_of(r.levels.begin(), r.levels.end(), [](const ClosureLevel& l) { return l.holds; });
  return r;
}

std::vector<std::uint32_t> last_coordinate_colors(int q, int n1) {
  const auto m = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(q), n1));
  std::vector<std::uint32_t> c(m);
  for (std::uint32_t p = 0; p < m; ++p) c[p] = p % static_cast<std::uint32_t>(q);
  return c;
}

}  // namespace

ClosureReport borrow_closed_up_to(const CloneEngine& c, int bound, const ClosureOptions& opt) {
  const CloneSpec& spec = c.spec();
  const int q = spec.q;
  ClosureReport report{"borrow", spec.name, bound, true, {}};
  for (int n = 1; n < bound; ++n) {
    const auto small = c.slice(n);
    const auto big = c.slice(n + 1);
    auto structural = [&]() {
      ColoredStructure s = colored_structure_from_weights(q, n + 1, spec.weights);
      s.add_layer(1, last_coordinate_colors(q, n + 1));
      // pairs colored by (same x-part, a, b): forces g = f (+) i_1
      const std::uint32_t m = s.degree();
      const auto qq = static_cast<std::uint32_t>(q);
      std::vector<std::uint32_t> pair(std::uint64_t{m} * m);
      for (std::uint32_t u = 0; u < m; ++u) {
        for (std::uint32_t v = 0; v < m; ++v) {
          pair[std::uint64_t{u} * m + v] = (u / qq == v / qq ? qq * qq : 0) + (u % qq) * qq + v % qq;
        }
      }
      s.add_layer(2, std::move(pair));
      return automorphism_group(s);
    };
    auto check = [&](const Perm& g) -> std::optional<ClosureLevel> {
      const auto f = restrict_to_layer(g, q, n, 0);
      if (!f) return std::nullopt;
      const Gate padded = pad(*f, 1);
      if (!std::equal(padded.map().begin(), padded.map().end(), g.begin())) return std::nullopt;
      if (small->contains(f->map())) return std::nullopt;
      ClosureLevel bad;
      bad.witness = *f;
      bad.certificate = padded;
      return bad;
    };
    report.levels.push_back(run_level(n, *big, opt, structural, check));
  }
  return finish(std::move(report));
}

ClosureReport ancilla_closed_up_to(const CloneEngine& c, int bound, const ClosureOptions& opt) {
  const CloneSpec& spec = c.spec();
  const int q = spec.q;
  ClosureReport report{"ancilla", spec.name, bound, true, {}};
  for (int n = 1; n < bound; ++n) {
    const auto small = c.slice(n);
    const auto big = c.slice(n + 1);
    auto check_value = [&](const Perm& g, int a) -> std::optional<ClosureLevel> {
      const auto f = restrict_to_layer(g, q, n, a);
      if (!f || small->contains(f->map())) return std::nullopt;
      ClosureLevel bad;
      bad.witness = *f;
      bad.certificate = Gate(q, n + 1, g);
      bad.ancilla_value = a;
      return bad;
    };
    if (opt.sample || big->order() <= opt.enumeration_limit) {
      auto check = [&](const Perm& g) -> std::optional<ClosureLevel> {
        for (int a = 0; a < q; ++a) {
          if (auto bad = check_value(g, a)) return bad;
        }
        return std::nullopt;
      };
      report.levels.push_back(run_level(n, *big, opt, [] { return PermGroup(1); }, check));
      continue;
    }
    // one structural subgroup per ancilla value, merged into one level
    ClosureLevel merged;
    merged.arity = n;
    merged.regime = "exact";
    merged.method = "structural";
    for (int a = 0; a < q && merged.holds; ++a) {
      ColoredStructure s = colored_structure_from_weights(q, n + 1, spec.weights);
      std::vector<std::uint32_t> layer = last_coordinate_colors(q, n + 1);
      for (std::uint32_t& v : layer) v = v == static_cast<std::uint32_t>(a) ? 1 : 0;
      s.add_layer(1, std::move(layer));
      const PermGroup stab = automorphism_group(s);
      for (const Perm& g : stab.generators()) {
        ++merged.samples;
        if (auto bad = check_value(g, a)) {
          merged.holds = false;
          merged.witness = std::move(bad->witness);
          merged.certificate = std::move(bad->certificate);
          merged.ancilla_value = a;
          break;
        }
      }
    }
    report.levels.push_back(std::move(merged));
  }
  return finish(std::move(report));
}

ClosureReport factoring_check(const CloneEngine& c, int n, int m, const ClosureOptions& opt) {
  const CloneSpec& spec = c.spec();
  const int q = spec.q;
  if (n < 1 || m < 1) throw InvalidArgument("factoring needs two nonempty blocks");
  ClosureReport report{"factoring", spec.name, n + m, true, {}};
  const auto left = c.slice(n);
  const auto right = c.slice(m);
  const auto big = c.slice(n + m);
  auto structural = [&]() {
    ColoredStructure s = colored_structure_from_weights(q, n + m, spec.weights);
    const std::uint32_t pts = s.degree();
    const auto low = static_cast<std::uint32_t>(checked_pow(static_cast<std::uint64_t>(q), m));
    std::vector<std::uint32_t> pair(std::uint64_t{pts} * pts);
    for (std::uint32_t u = 0; u < pts; ++u) {
      for (std::uint32_t v = 0; v < pts; ++v) {
        pair[std::uint64_t{u} * pts + v] = (u / low == v / low ? 2u : 0u) + (u % low == v % low ? 1u : 0u);
      }
    }
    s.add_layer(2, std::move(pair));
    return automorphism_group(s);
  };
  auto check = [&](const Perm& h) -> std::optional<ClosureLevel> {
    const auto parts = split_parallel(Gate(q, n + m, h), n);
    if (!parts) return std::nullopt;
    if (left->contains(parts->first.map()) && right->contains(parts->second.map())) return std::nullopt;
    ClosureLevel bad;
    bad.witness = parts->first;
    bad.second = parts->second;
    bad.certificate = Gate(q, n + m, h);
    return bad;
  };
  report.levels.push_back(run_level(n + m, *big, opt, structural, check));
  return finish(std::move(report));
}

namespace {

// Restricted growth strings: every set partition of {0..k-1}.
void for_each_partition(int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> block(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == k) {
      visit(block);
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

Relation pattern_relation(int q, const std::vector<int>& block) {
  const int k = static_cast<int>(block.size());
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), k);
  std::vector<std::uint64_t> ranks;
  std::vector<int> t(block.size());
  for (std::uint64_t r = 0; r < total; ++r) {
    unrank_into(r, q, t);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) {
        if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)] && t[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(j)]) ok = false;
      }
    }
    if (ok) ranks.push_back(r);
  }
  return Relation(q, k, std::move(ranks));
}

Natural factorial(std::uint64_t m) {
  Natural f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

bool is_equivalence_pattern(const Relation& r) {
  bool found = false;
  for_each_partition(r.arity(), [&](const std::vector<int>& block) {
    if (!found && pattern_relation(r.q(), block) == r) found = true;
  });
  return found;
}

FullCloneReport full_clone_relation_oracle(int q, int k_max, int max_arity) {
  check_alphabet(q);
  FullCloneReport report;
  report.q = q;
  report.k_max = k_max;
  report.max_arity = max_arity;
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t tuples = checked_pow(static_cast<std::uint64_t>(q), k);
    if (tuples > 20) throw ResourceLimit("too many relations to enumerate");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << tuples); ++mask) {
      std::vector<std::uint64_t> ranks;
      for (std::uint64_t t = 0; t < tuples; ++t) {
        if (mask >> t & 1U) ranks.push_back(t);
      }
      const Relation r(q, k, std::move(ranks));
      const CloneSpec spec = CloneSpec::from_relations(q, "R", {r});
      bool full = true;
      for (int n = 1; n <= max_arity && full; ++n) {
        full = compute_slice(spec, n).order() == factorial(checked_pow(static_cast<std::uint64_t>(q), n));
      }
      const bool pattern = is_equivalence_pattern(r);
      ++report.relations;
      report.full += full ? 1 : 0;
      report.patterns += pattern ? 1 : 0;
      if (full != pattern) report.mismatches.push_back({r, full, pattern});
    }
  }
  return report;
}

}  // namespace permclone
