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


#include "permclone/builtins.hpp"

#include <string>

#include "permclone/error.hpp"

namespace permclone::builtins {

namespace {

template <class Pred>
Relation filtered(int q, int k, Pred keep) {
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), k);
  std::vector<std::uint64_t> ranks;
  std::vector<int> t(static_cast<std::size_t>(k));
  for (std::uint64_t r = 0; r < total; ++r) {
    unrank_into(r, q, t);
    if (keep(t)) ranks.push_back(r);
  }
  return Relation(q, k, std::move(ranks));
}

void require_prime(int q) {
  if (!is_prime(q)) throw InvalidArgument("alphabet size " + std::to_string(q) + " is not prime");
}

}  // namespace

Relation iota(int q, int m) {
  if (m < 2) throw InvalidArgument("iota needs m >= 2");
  return filtered(q, m, [](const std::vector<int>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[i] == t[j]) return true;
      }
    }
    return false;
  });
}

Relation neq(int q) {
  return filtered(q, 2, [](const std::vector<int>& t) { return t[0] != t[1]; });
}

Relation leq_chain(int q) {
  return filtered(q, 2, [](const std::vector<int>& t) { return t[0] <= t[1]; });
}

Relation affine_relation(int q) {
  require_prime(q);
  return filtered(q, 4, [q](const std::vector<int>& t) { return (t[0] + t[1]) % q == (t[2] + t[3]) % q; });
}

Relation linear_relation(int q) {
  require_prime(q);
  return filtered(q, 3, [q](const std::vector<int>& t) { return (t[0] + t[1]) % q == t[2]; });
}

Relation selfdual_relation(std::span<const int> sigma) {
  const int q = static_cast<int>(sigma.size());
  check_alphabet(q);
  std::vector<bool> hit(sigma.size(), false);
  for (int a = 0; a < q; ++a) {
    const int s = sigma[static_cast<std::size_t>(a)];
    if (s < 0 || s >= q || hit[static_cast<std::size_t>(s)]) throw InvalidArgument("not a permutation of the alphabet");
    if (s == a) throw InvalidArgument("self-duality permutation has a fixed point");
    hit[static_cast<std::size_t>(s)] = true;
  }
  return filtered(q, 2, [&](const std::vector<int>& t) { return sigma[static_cast<std::size_t>(t[0])] == t[1]; });
}

Relation square_relation() {
  return filtered(4, 2, [](const std::vector<int>& t) { return (t[0] - t[1] + 4) % 4 == 1 || (t[1] - t[0] + 4) % 4 == 1; });
}

Relation hamming_relation(int q) {
  return filtered(q, 3, [](const std::vector<int>& t) { return t[0] == t[1] || t[1] == t[2]; });
}

Relation unary_relation(int q, const std::vector<int>& elements) {
  std::vector<Tuple> tuples;
  for (int a : elements) {
    if (a < 0 || a >= q) throw InvalidArgument("unary relation element out of range");
    tuples.push_back({a});
  }
  return Relation::from_tuples(q, 1, tuples);
}

std::vector<Weight> conservative_weights(int q) {
  check_alphabet(q);
  std::vector<Weight> out;
  for (int s = 1; s < q; ++s) {
    std::vector<Value> values;
    for (int a = 0; a < q; ++a) values.push_back(Value::of(a == s ? 1 : 0));
    out.emplace_back(q, 1, Monoid::nat_add(), std::move(values));
  }
  return out;
}

Weight orthogonal_weight(int p) {
  require_prime(p);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
  for (int a = 0; a < p; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < p; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % p;
  }
  const Monoid zp = Monoid::table(std::move(labels), "0", std::move(table));
  std::vector<Value> values;
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) values.push_back(Value::of((x * y) % p));
  }
  return Weight(p, 2, zp, std::move(values));
}

}  // namespace permclone::builtins
