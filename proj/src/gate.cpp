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

#include "permclone/gate.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "permclone/error.hpp"

namespace permclone {

namespace {

std::uint32_t num_points(int q, int n) {
  check_alphabet(q);
  if (n < 1) throw InvalidArgument("gate arity must be at least 1");
  std::uint64_t m = checked_pow(static_cast<std::uint64_t>(q), n);
  if (m > kMaxGatePoints) {
    throw ResourceLimit("gate on " + std::to_string(m) + " points exceeds limit");
  }
  return static_cast<std::uint32_t>(m);
}

void require_same_alphabet(const Gate& f, const Gate& g) {
  if (f.q() != g.q()) {
    throw InvalidArgument("alphabet mismatch: q=" + std::to_string(f.q()) + " vs q=" +
                          std::to_string(g.q()));
  }
}

}  // namespace

Gate::Gate(int q, int arity, std::vector<std::uint32_t> map)
    : q_(q), arity_(arity), map_(std::move(map)) {
  std::uint32_t m = num_points(q, arity);
  if (map_.size() != m) {
    throw InvalidArgument("gate map has " + std::to_string(map_.size()) +
                          " entries, expected " + std::to_string(m));
  }
  std::vector<bool> seen(m, false);
  for (std::uint32_t image : map_) {
    if (image >= m || seen[image]) throw InvalidArgument("gate map is not a bijection");
    seen[image] = true;
  }
}

Tuple Gate::apply(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw InvalidArgument("tuple length does not match gate arity");
  }
  return unrank(map_[rank(tuple, q_)], q_, arity_);
}

Gate identity_gate(int q, int n) {
  std::vector<std::uint32_t> map(num_points(q, n));
  std::iota(map.begin(), map.end(), 0u);
  return Gate(q, n, std::move(map));
}

Gate wire_perm(int q, std::span<const int> alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<bool> seen(alpha.size(), false);
  for (int a : alpha) {
    if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)]) {
      throw InvalidArgument("invalid wire permutation");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
  const std::uint32_t m = num_points(q, n);
  std::vector<std::uint32_t> map(m);
  Tuple x(alpha.size()), y(alpha.size());
  for (std::uint32_t p = 0; p < m; ++p) {
    unrank_into(p, q, x);
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(alpha[i])] = x[i];
    map[p] = static_cast<std::uint32_t>(rank(y, q));
  }
  return Gate(q, n, std::move(map));
}

Gate parallel(const Gate& f, const Gate& g) {
  require_same_alphabet(f, g);
  const int n = f.arity() + g.arity();
  const std::uint32_t total = num_points(f.q(), n);
  const std::uint32_t low = g.size();
  std::vector<std::uint32_t> map(total);
  for (std::uint32_t p = 0; p < total; ++p) {
    map[p] = f(p / low) * low + g(p % low);
  }
  return Gate(f.q(), n, std::move(map));
}

Gate pad(const Gate& f, int extra) {
  if (extra == 0) return f;
  return parallel(f, identity_gate(f.q(), extra));
}

Gate serial(const Gate& f, const Gate& g) {
  require_same_alphabet(f, g);
  const int n = std::max(f.arity(), g.arity());
  const Gate first = pad(f, n - f.arity());
  const Gate second = pad(g, n - g.arity());
  std::vector<std::uint32_t> map(first.size());
  for (std::uint32_t p = 0; p < first.size(); ++p) map[p] = second(first(p));
  return Gate(f.q(), n, std::move(map));
}

Gate inverse(const Gate& f) {
  std::vector<std::uint32_t> map(f.size());
  for (std::uint32_t p = 0; p < f.size(); ++p) map[f(p)] = p;
  return Gate(f.q(), f.arity(), std::move(map));
}

ComponentTable component(const Gate& f, int i) {
  if (i < 1 || i > f.arity()) {
    throw InvalidArgument("component index " + std::to_string(i) + " out of range");
  }
  ComponentTable table{f.q(), f.arity(), std::vector<int>(f.size())};
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    table.values[p] = digit_at(f(p), f.q(), f.arity(), i - 1);
  }
  return table;
}

bool is_balanced(const ComponentTable& c) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(c.q), 0);
  for (int v : c.values) {
    if (v < 0 || v >= c.q) return false;
    ++counts[static_cast<std::size_t>(v)];
  }
  const std::uint64_t expected = c.values.size() / static_cast<std::uint64_t>(c.q);
  return std::all_of(counts.begin(), counts.end(),
                     [&](std::uint64_t k) { return k == expected; });
}

namespace {

// Variables (0-based) that component `i` of f depends on.
std::vector<int> dependencies(const Gate& f, int i) {
  const int q = f.q(), n = f.arity();
  std::vector<int> deps;
  std::uint64_t place = 1;
  for (int j = n - 1; j >= 0; --j, place *= static_cast<std::uint64_t>(q)) {
    bool depends = false;
    for (std::uint32_t p = 0; p < f.size() && !depends; ++p) {
      const int dj = digit_at(p, q, n, j);
      if (dj != 0) continue;
      const int base_value = digit_at(f(p), q, n, i);
      for (int a = 1; a < q; ++a) {
        const auto other = static_cast<std::uint32_t>(p + place * static_cast<std::uint64_t>(a));
        if (digit_at(f(other), q, n, i) != base_value) {
          depends = true;
          break;
        }
      }
    }
    if (depends) deps.push_back(j);
  }
  return deps;
}

}  // namespace

bool is_degenerate(const Gate& f) {
  std::vector<bool> used(static_cast<std::size_t>(f.arity()), false);
  for (int i = 0; i < f.arity(); ++i) {
    const std::vector<int> deps = dependencies(f, i);
    if (deps.size() != 1 || used[static_cast<std::size_t>(deps[0])]) return false;
    used[static_cast<std::size_t>(deps[0])] = true;
  }
  return true;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

bool is_affine(const Gate& f) {
  const int q = f.q(), n = f.arity();
  if (!is_prime(q)) throw InvalidArgument("is_affine requires a prime alphabet size");
  const Tuple b = unrank(f(0), q, n);
  // Column j of the linear part is f(e_j) - b.
  std::vector<Tuple> columns(static_cast<std::size_t>(n), Tuple(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    Tuple e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    const Tuple image = f.apply(e);
    for (int r = 0; r < n; ++r) {
      columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] =
          ((image[static_cast<std::size_t>(r)] - b[static_cast<std::size_t>(r)]) % q + q) % q;
    }
  }
  Tuple x(static_cast<std::size_t>(n)), expected(static_cast<std::size_t>(n));
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    unrank_into(p, q, x);
    for (int r = 0; r < n; ++r) {
      int acc = b[static_cast<std::size_t>(r)];
      for (int j = 0; j < n; ++j) {
        acc += x[static_cast<std::size_t>(j)] *
               columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      }
      expected[static_cast<std::size_t>(r)] = acc % q;
    }
    if (rank(expected, q) != f(p)) return false;
  }
  return true;
}

Gate controlled_perm(int control_arity, std::span<const Tuple> controls, const Gate& f) {
  if (control_arity < 1) throw InvalidArgument("control arity must be at least 1");
  const int q = f.q();
  std::set<std::uint64_t> control_ranks;
  for (const Tuple& c : controls) {
    if (static_cast<int>(c.size()) != control_arity) {
      throw InvalidArgument("control tuple length mismatch");
    }
    control_ranks.insert(rank(c, q));
  }
  const int n = control_arity + f.arity();
  const std::uint32_t total = num_points(q, n);
  const std::uint32_t low = f.size();
  std::vector<std::uint32_t> map(total);
  for (std::uint32_t p = 0; p < total; ++p) {
    const std::uint32_t x = p / low, y = p % low;
    map[p] = control_ranks.count(x) ? x * low + f(y) : p;
  }
  return Gate(q, n, std::move(map));
}

Partition::Partition(int q, const std::vector<std::vector<int>>& blocks)
    : q_(q), num_classes_(0), class_of_(static_cast<std::size_t>(q), -1) {
  check_alphabet(q);
  std::vector<std::vector<int>> sorted;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidArgument("empty block in partition");
    std::vector<int> b = block;
    std::sort(b.begin(), b.end());
    sorted.push_back(std::move(b));
  }
  std::sort(sorted.begin(), sorted.end());
  for (const auto& block : sorted) {
    for (int a : block) {
      if (a < 0 || a >= q) throw InvalidArgument("partition element out of range");
      if (class_of_[static_cast<std::size_t>(a)] != -1) {
        throw InvalidArgument("partition blocks overlap");
      }
      class_of_[static_cast<std::size_t>(a)] = num_classes_;
    }
    ++num_classes_;
  }
  for (int c : class_of_) {
    if (c == -1) throw InvalidArgument("partition does not cover the alphabet");
  }
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes_));
  for (int a = 0; a < q_; ++a) out[static_cast<std::size_t>(class_of_[a])].push_back(a);
  return out;
}

Partition Partition::parse(int q, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, '|')) {
    std::vector<int> block;
    if (group.find(',') != std::string::npos) {
      std::stringstream items(group);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (item.empty()) throw InvalidArgument("empty element in partition '" + text + "'");
        try {
          block.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw InvalidArgument("bad element '" + item + "' in partition");
        }
      }
    } else {
      if (q > 10) throw InvalidArgument("alphabets with q > 10 need comma-separated blocks");
      for (char ch : group) {
        if (ch < '0' || ch > '9') throw InvalidArgument("bad character in partition '" + text + "'");
        block.push_back(ch - '0');
      }
    }
    blocks.push_back(std::move(block));
  }
  return Partition(q, blocks);
}

namespace {

std::uint32_t class_rank(std::uint32_t point, const Partition& partition, int n) {
  const int q = partition.q();
  const auto r = static_cast<std::uint32_t>(partition.num_classes());
  std::uint32_t out = 0;
  std::uint64_t rest = point;
  std::uint32_t place = 1;
  for (int j = 0; j < n; ++j) {
    out += place * static_cast<std::uint32_t>(partition.class_of(static_cast<int>(rest % q)));
    rest /= static_cast<std::uint64_t>(q);
    place *= r;
  }
  return out;
}

}  // namespace

bool respects_partition(const Gate& f, const Partition& partition) {
  if (f.q() != partition.q()) throw InvalidArgument("alphabet mismatch");
  const std::uint64_t classes =
      checked_pow(static_cast<std::uint64_t>(partition.num_classes()), f.arity());
  std::vector<std::int64_t> image(classes, -1);
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    const std::uint32_t from = class_rank(p, partition, f.arity());
    const std::uint32_t to = class_rank(f(p), partition, f.arity());
    if (image[from] == -1) {
      image[from] = to;
    } else if (image[from] != to) {
      return false;
    }
  }
  return true;
}

Gate quotient_gate(const Gate& f, const Partition& partition) {
  if (f.q() != partition.q()) throw InvalidArgument("alphabet mismatch");
  if (partition.num_classes() < 2) {
    throw InvalidArgument("quotient alphabet would have a single class");
  }
  if (!respects_partition(f, partition)) {
    throw InvalidArgument("gate does not respect the equivalence relation");
  }
  const int n = f.arity();
  const std::uint32_t m = num_points(partition.num_classes(), n);
  std::vector<std::uint32_t> map(m);
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    map[class_rank(p, partition, n)] = class_rank(f(p), partition, n);
  }
  return Gate(partition.num_classes(), n, std::move(map));
}

std::string cycle_string(std::span<const std::uint32_t> images) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    std::uint32_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
      p = images[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::uint32_t> parse_cycles(const std::string& text, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> moved(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidArgument("expected '(' in cycle string");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw InvalidArgument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw InvalidArgument("bad point in cycle string");
      const unsigned long v = std::stoul(text.substr(pos, end - pos));
      if (v >= degree) throw InvalidArgument("cycle point out of range");
      cycle.push_back(static_cast<std::uint32_t>(v));
      pos = end;
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t p = cycle[i];
      if (moved[p]) throw InvalidArgument("point repeated across cycles");
      moved[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return images;
}

namespace gates {

Gate not_gate() { return Gate(2, 1, {1, 0}); }

Gate cnot() { return Gate(2, 2, {0, 1, 3, 2}); }

Gate toffoli() { return Gate(2, 3, {0, 1, 2, 3, 4, 5, 7, 6}); }

Gate fredkin() {
  const Tuple one{1};
  const int swap[] = {1, 0};
  return controlled_perm(1, std::span<const Tuple>(&one, 1), wire_perm(2, swap));
}

}  // namespace gates

}  // namespace permclone
