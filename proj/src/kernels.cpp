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

#include "permclone/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "permclone/error.hpp"

namespace permclone::kernels {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kDenseCodes = std::uint64_t{1} << 24;

// C(v + n - 1, n), saturating at limit + 1.
std::uint64_t multiset_count(std::uint64_t v, int n, std::uint64_t limit) {
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) {
    // c * (v + i - 1) / i stays integral at every step
    const unsigned __int128 next = static_cast<unsigned __int128>(c) * (v + static_cast<std::uint64_t>(i) - 1) / static_cast<unsigned>(i);
    if (next > limit) return limit + 1;
    c = static_cast<std::uint64_t>(next);
  }
  return c;
}

}  // namespace

ColumnProducts::ColumnProducts(const Weight& w, int columns)
    : q_(w.q()), arity_(w.arity()), columns_(columns) {
  if (columns < 1) throw InvalidArgument("column count must be at least 1");
  std::map<Value, std::uint32_t> seen;
  std::vector<Value> distinct;
  value_ids_.reserve(w.values().size());
  for (const Value& v : w.values()) {
    auto [it, fresh] = seen.emplace(v, static_cast<std::uint32_t>(distinct.size()));
    if (fresh) distinct.push_back(v);
    value_ids_.push_back(it->second);
  }
  num_values_ = static_cast<std::uint32_t>(distinct.size());

  if (multiset_count(num_values_, columns, kMaxMultisets) > kMaxMultisets) {
    throw ResourceLimit("too many column multisets for " + std::to_string(num_values_) + " weight values over " +
                        std::to_string(columns) + " columns");
  }
  const std::uint64_t code_space = checked_pow(num_values_, columns);
  if (code_space <= kDenseCodes) dense_.assign(code_space, kUnset);

  // every nondecreasing id sequence, with running products
  std::map<Value, std::uint32_t> classes;
  std::vector<std::uint32_t> ids(static_cast<std::size_t>(columns), 0);
  std::vector<Value> prefix(static_cast<std::size_t>(columns) + 1);
  prefix[0] = w.monoid().identity();
  for (int d = 0; d < columns; ++d) prefix[static_cast<std::size_t>(d) + 1] = w.monoid().op(prefix[static_cast<std::size_t>(d)], distinct[0]);
  for (;;) {
    const Value& prod = prefix.back();
    auto [it, fresh] = classes.emplace(prod, static_cast<std::uint32_t>(products_.size()));
    if (fresh) products_.push_back(prod);
    const std::uint64_t c = code(ids);
    if (dense_.empty()) {
      sparse_.emplace(c, it->second);
    } else {
      dense_[c] = it->second;
    }
    int d = columns - 1;
    while (d >= 0 && ids[static_cast<std::size_t>(d)] + 1 == num_values_) --d;
    if (d < 0) break;
    const std::uint32_t next = ids[static_cast<std::size_t>(d)] + 1;
    for (int e = d; e < columns; ++e) {
      ids[static_cast<std::size_t>(e)] = next;
      prefix[static_cast<std::size_t>(e) + 1] = w.monoid().op(prefix[static_cast<std::size_t>(e)], distinct[next]);
    }
  }

  const std::uint64_t points = checked_pow(static_cast<std::uint64_t>(q_), columns);
  if (points > kMaxGatePoints) throw ResourceLimit("too many points for a column table");
  digits_.resize(points * static_cast<std::uint64_t>(columns));
  std::vector<int> buf(static_cast<std::size_t>(columns));
  for (std::uint64_t p = 0; p < points; ++p) {
    unrank_into(p, q_, buf);
    for (int i = 0; i < columns; ++i) digits_[p * static_cast<std::uint64_t>(columns) + static_cast<std::uint64_t>(i)] = static_cast<std::uint32_t>(buf[static_cast<std::size_t>(i)]);
  }
}

std::uint64_t ColumnProducts::code(std::span<const std::uint32_t> sorted) const {
  std::uint64_t c = 0;
  for (std::uint32_t id : sorted) c = c * num_values_ + id;
  return c;
}

std::uint32_t ColumnProducts::classify(std::span<const std::uint32_t> ids, std::span<std::uint32_t> scratch) const {
  std::copy(ids.begin(), ids.end(), scratch.begin());
  std::sort(scratch.begin(), scratch.end());
  const std::uint64_t c = code(scratch);
  if (!dense_.empty()) return dense_[c];
  return sparse_.at(c);
}

std::uint32_t ColumnProducts::classify_points(std::span<const std::uint32_t> points,
                                              std::span<std::uint32_t> ids,
                                              std::span<std::uint32_t> scratch) const {
  const std::size_t n = static_cast<std::size_t>(columns_);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t col = 0;
    for (std::uint32_t p : points) col = col * static_cast<std::uint64_t>(q_) + digits_[p * n + i];
    ids[i] = value_ids_[col];
  }
  return classify(ids, scratch);
}

namespace {

struct TupleSpace {
  std::uint64_t points;
  std::uint64_t total;
  int k;

  void decode(std::uint64_t t, std::span<std::uint32_t> out) const {
    for (int j = k - 1; j >= 0; --j) {
      out[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(t % points);
      t /= points;
    }
  }
};

TupleSpace tuple_space(const ColumnProducts& cp) {
  const std::uint64_t points = checked_pow(static_cast<std::uint64_t>(cp.q()), cp.columns());
  return {points, checked_pow(points, cp.arity()), cp.arity()};
}

}  // namespace

std::vector<std::uint32_t> tuple_classes(const ColumnProducts& cp, Exec exec) {
  const TupleSpace space = tuple_space(cp);
  std::vector<std::uint32_t> out(space.total);
  const std::size_t k = static_cast<std::size_t>(cp.arity()), n = static_cast<std::size_t>(cp.columns());
  const auto total = static_cast<std::int64_t>(space.total);
  if (exec == Exec::kSerial) {
    std::vector<std::uint32_t> pts(k), ids(n), scratch(n);
    for (std::int64_t t = 0; t < total; ++t) {
      space.decode(static_cast<std::uint64_t>(t), pts);
      out[static_cast<std::size_t>(t)] = cp.classify_points(pts, ids, scratch);
    }
    return out;
  }
#pragma omp parallel
  {
    std::vector<std::uint32_t> pts(k), ids(n), scratch(n);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t) {
      space.decode(static_cast<std::uint64_t>(t), pts);
      out[static_cast<std::size_t>(t)] = cp.classify_points(pts, ids, scratch);
    }
  }
  return out;
}

bool respects_sweep(const Gate& f, const ColumnProducts& cp, Exec exec) {
  if (f.q() != cp.q() || f.arity() != cp.columns()) throw InvalidArgument("gate does not match the column table");
  const TupleSpace space = tuple_space(cp);
  const std::size_t k = static_cast<std::size_t>(cp.arity()), n = static_cast<std::size_t>(cp.columns());
  const auto total = static_cast<std::int64_t>(space.total);
  if (exec == Exec::kSerial) {
    std::vector<std::uint32_t> pts(k), img(k), ids(n), scratch(n);
    for (std::int64_t t = 0; t < total; ++t) {
      space.decode(static_cast<std::uint64_t>(t), pts);
      for (std::size_t j = 0; j < k; ++j) img[j] = f(pts[j]);
      if (cp.classify_points(pts, ids, scratch) != cp.classify_points(img, ids, scratch)) return false;
    }
    return true;
  }
  std::atomic<bool> ok{true};
#pragma omp parallel
  {
    std::vector<std::uint32_t> pts(k), img(k), ids(n), scratch(n);
#pragma omp for schedule(dynamic, 4096)
    for (std::int64_t t = 0; t < total; ++t) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      space.decode(static_cast<std::uint64_t>(t), pts);
      for (std::size_t j = 0; j < k; ++j) img[j] = f(pts[j]);
      if (cp.classify_points(pts, ids, scratch) != cp.classify_points(img, ids, scratch)) {
        ok.store(false, std::memory_order_relaxed);
      }
    }
  }
  return ok.load();
}

std::vector<std::vector<std::uint32_t>> filter_permutations(
    std::uint32_t m, const std::function<bool(std::span<const std::uint32_t>)>& keep, Exec exec) {
  if (m > 10) throw ResourceLimit("brute-force permutation filter is limited to 10 points");
  std::vector<std::vector<std::uint32_t>> out;
  if (exec == Exec::kSerial || m < 3) {
    std::vector<std::uint32_t> p(m);
    std::iota(p.begin(), p.end(), 0u);
    do {
      if (keep(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  // one chunk per choice of the first two images, joined in lexicographic order
  const std::int64_t chunks = static_cast<std::int64_t>(m) * (m - 1);
  std::vector<std::vector<std::vector<std::uint32_t>>> found(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto a = static_cast<std::uint32_t>(c / (m - 1));
    auto b = static_cast<std::uint32_t>(c % (m - 1));
    if (b >= a) ++b;
    std::vector<std::uint32_t> p{a, b};
    for (std::uint32_t x = 0; x < m; ++x) {
      if (x != a && x != b) p.push_back(x);
    }
    do {
      if (keep(p)) found[static_cast<std::size_t>(c)].push_back(p);
    } while (std::next_permutation(p.begin() + 2, p.end()));
  }
  for (auto& chunk : found) {
    for (auto& p : chunk) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace permclone::kernels
