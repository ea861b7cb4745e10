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

#include "permclone/relation.hpp"

#include <algorithm>
#include <string>

#include "permclone/error.hpp"

namespace permclone {

Relation::Relation(int q, int arity, std::vector<std::uint64_t> ranks)
    : q_(q), arity_(arity), ranks_(std::move(ranks)) {
  check_alphabet(q);
  if (arity < 1) throw InvalidArgument("relation arity must be at least 1");
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), arity);
  std::sort(ranks_.begin(), ranks_.end());
  ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  if (!ranks_.empty() && ranks_.back() >= total) {
    throw InvalidArgument("relation tuple rank " + std::to_string(ranks_.back()) + " out of range");
  }
}

Relation Relation::from_tuples(int q, int arity, const std::vector<Tuple>& tuples) {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(tuples.size());
  for (const Tuple& t : tuples) {
    if (static_cast<int>(t.size()) != arity) throw InvalidArgument("relation tuple has wrong length");
    ranks.push_back(rank(t, q));
  }
  return Relation(q, arity, std::move(ranks));
}

Relation Relation::full(int q, int arity) {
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), arity);
  std::vector<std::uint64_t> ranks(total);
  for (std::uint64_t r = 0; r < total; ++r) ranks[r] = r;
  return Relation(q, arity, std::move(ranks));
}

bool Relation::contains(std::uint64_t tuple_rank) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), tuple_rank);
}

bool Relation::contains(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw InvalidArgument("tuple length mismatch");
  return contains(rank(tuple, q_));
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  out.reserve(ranks_.size());
  for (std::uint64_t r : ranks_) out.push_back(unrank(r, q_, arity_));
  return out;
}

std::vector<bool> Relation::indicator() const {
  std::vector<bool> out(checked_pow(static_cast<std::uint64_t>(q_), arity_), false);
  for (std::uint64_t r : ranks_) out[r] = true;
  return out;
}

Relation permute_entries(const Relation& r, std::span<const int> sigma) {
  const int k = r.arity();
  if (static_cast<int>(sigma.size()) != k) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int s : sigma) {
    if (s < 0 || s >= k || seen[static_cast<std::size_t>(s)]) {
      throw InvalidArgument("invalid entry permutation");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  std::vector<Tuple> out;
  for (const Tuple& t : r.tuples()) {
    Tuple u(t.size());
    for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(sigma[i])] = t[static_cast<std::size_t>(i)];
    out.push_back(std::move(u));
  }
  return Relation::from_tuples(r.q(), k, out);
}

Relation project(const Relation& r, int position) {
  const int k = r.arity();
  if (k < 2) throw InvalidArgument("cannot project a unary relation");
  if (position < 1 || position > k) throw InvalidArgument("projection position out of range");
  std::vector<Tuple> out;
  for (Tuple t : r.tuples()) {
    t.erase(t.begin() + (position - 1));
    out.push_back(std::move(t));
  }
  return Relation::from_tuples(r.q(), k - 1, out);
}

Relation product(const Relation& r, const Relation& s) {
  if (r.q() != s.q()) throw InvalidArgument("alphabet mismatch");
  const std::uint64_t scale = checked_pow(static_cast<std::uint64_t>(r.q()), s.arity());
  checked_pow(static_cast<std::uint64_t>(r.q()), r.arity() + s.arity());
  std::vector<std::uint64_t> ranks;
  ranks.reserve(r.size() * s.size());
  for (std::uint64_t a : r.ranks()) {
    for (std::uint64_t b : s.ranks()) ranks.push_back(a * scale + b);
  }
  return Relation(r.q(), r.arity() + s.arity(), std::move(ranks));
}

Relation intersect(const Relation& r, const Relation& s) {
  if (r.q() != s.q()) throw InvalidArgument("alphabet mismatch");
  if (r.arity() != s.arity()) throw InvalidArgument("arity mismatch in intersection");
  std::vector<std::uint64_t> ranks;
  std::set_intersection(r.ranks().begin(), r.ranks().end(), s.ranks().begin(), s.ranks().end(),
                        std::back_inserter(ranks));
  return Relation(r.q(), r.arity(), std::move(ranks));
}

Relation equality_relation(int q) {
  check_alphabet(q);
  std::vector<std::uint64_t> ranks;
  for (int a = 0; a < q; ++a) ranks.push_back(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(a));
  return Relation(q, 2, std::move(ranks));
}

namespace {

// Calls visit(rows) for every k x n array whose columns lie in R, with rows
// given as point ranks in A^n. Stops early when visit returns false.
template <class Visit>
bool for_each_array_in_power(const Relation& r, int n, Visit visit) {
  const int k = r.arity(), q = r.q();
  const std::vector<Tuple> tuples = r.tuples();
  if (tuples.empty()) return true;
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
  for (;;) {
    for (int j = 0; j < k; ++j) {
      std::uint32_t row = 0;
      for (int i = 0; i < n; ++i) {
        row = row * static_cast<std::uint32_t>(q) +
              static_cast<std::uint32_t>(tuples[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)]);
      }
      rows[static_cast<std::size_t>(j)] = row;
    }
    if (!visit(std::span<const std::uint32_t>(rows))) return false;
    int i = n - 1;
    while (i >= 0 && ++choice[static_cast<std::size_t>(i)] == tuples.size()) {
      choice[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
  }
}

void require_compatible(const Gate& f, const Relation& r) {
  if (f.q() != r.q()) throw InvalidArgument("alphabet mismatch between gate and relation");
}

}  // namespace

bool respects_relation(const Gate& f, const Relation& r) {
  require_compatible(f, r);
  const int n = f.arity(), k = r.arity(), q = r.q();
  std::vector<int> column(static_cast<std::size_t>(k));
  return for_each_array_in_power(r, n, [&](std::span<const std::uint32_t> rows) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) {
        column[static_cast<std::size_t>(j)] = digit_at(f(rows[static_cast<std::size_t>(j)]), q, n, i);
      }
      if (!r.contains(column)) return false;
    }
    return true;
  });
}

bool respects_relation_componentwise(const Gate& f, const Relation& r) {
  require_compatible(f, r);
  const int n = f.arity(), k = r.arity();
  const std::vector<bool> in_r = r.indicator();
  for (int i = 1; i <= n; ++i) {
    const ComponentTable fi = component(f, i);
    const bool ok = for_each_array_in_power(r, n, [&](std::span<const std::uint32_t> rows) {
      std::uint64_t col = 0;
      for (int j = 0; j < k; ++j) {
        col = col * static_cast<std::uint64_t>(r.q()) +
              static_cast<std::uint64_t>(fi.values[rows[static_cast<std::size_t>(j)]]);
      }
      return static_cast<bool>(in_r[col]);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace permclone
