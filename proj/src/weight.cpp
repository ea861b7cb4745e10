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

#include "permclone/weight.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "permclone/error.hpp"
#include "permclone/kernels.hpp"

namespace permclone {

Weight::Weight(int q, int arity, Monoid monoid, std::vector<Value> values)
    : q_(q), arity_(arity), monoid_(std::move(monoid)), values_(std::move(values)) {
  check_alphabet(q);
  if (arity < 1) throw InvalidArgument("weight arity must be at least 1");
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), arity);
  if (values_.size() != total) {
    throw InvalidArgument("weight needs " + std::to_string(total) + " values, got " +
                          std::to_string(values_.size()));
  }
  for (const Value& v : values_) {
    if (!monoid_.contains(v)) throw InvalidArgument("weight value outside monoid " + monoid_.name());
  }
}

Value weight_eval(const Weight& w, std::span<const Tuple> rows) {
  if (static_cast<int>(rows.size()) != w.arity()) throw InvalidArgument("array needs one row per weight argument");
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (const Tuple& row : rows) {
    if (row.size() != n) throw InvalidArgument("array rows differ in length");
    for (int d : row) {
      if (d < 0 || d >= w.q()) throw InvalidArgument("array entry out of range");
    }
  }
  Value acc = w.monoid().identity();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t col = 0;
    for (const Tuple& row : rows) col = col * static_cast<std::uint64_t>(w.q()) + static_cast<std::uint64_t>(row[i]);
    acc = w.monoid().op(acc, w.at(col));
  }
  return acc;
}

bool respects_weight(const Gate& f, const Weight& w) {
  if (f.q() != w.q()) throw InvalidArgument("alphabet mismatch between gate and weight");
  const kernels::ColumnProducts cp(w, f.arity());
  return kernels::respects_sweep(f, cp, kernels::Exec::kParallel);
}

Weight char_weight(const Relation& r) {
  const std::vector<bool> in = r.indicator();
  std::vector<Value> values;
  values.reserve(in.size());
  for (bool b : in) values.push_back(Value::of(b ? 1 : 0));
  return Weight(r.q(), r.arity(), Monoid::bool_and(), std::move(values));
}

Weight counting_weight(const Relation& r, int position) {
  const int k = r.arity(), q = r.q();
  if (k < 2) throw InvalidArgument("counting weight needs arity at least 2");
  if (position < 1 || position > k) throw InvalidArgument("counting position out of range");
  std::vector<Natural> counts(checked_pow(static_cast<std::uint64_t>(q), k - 1), 0);
  for (Tuple t : r.tuples()) {
    t.erase(t.begin() + (position - 1));
    counts[rank(t, q)] += 1;
  }
  std::vector<Value> values;
  values.reserve(counts.size());
  for (Natural& c : counts) values.push_back(Value::of(std::move(c)));
  return Weight(q, k - 1, Monoid::nat_mul(), std::move(values));
}

namespace {

void require_natural(const Weight& w) {
  if (!w.monoid().is_natural()) throw InvalidArgument("level sets need an ℕ-valued weight, got " + w.monoid().name());
}

Relation level_relation(const Weight& w, bool maximum) {
  require_natural(w);
  const auto& vals = w.values();
  const Value& extreme = maximum ? *std::max_element(vals.begin(), vals.end())
                                 : *std::min_element(vals.begin(), vals.end());
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < vals.size(); ++r) {
    if (vals[r] == extreme) ranks.push_back(r);
  }
  return Relation(w.q(), w.arity(), std::move(ranks));
}

}  // namespace

Relation max_level_relation(const Weight& w) { return level_relation(w, true); }
Relation min_level_relation(const Weight& w) { return level_relation(w, false); }

Weight substitute_indices(const Weight& w, std::span<const int> rho, int target_arity) {
  const int k = w.arity(), q = w.q();
  if (static_cast<int>(rho.size()) != k) throw InvalidArgument("index map must have one entry per weight argument");
  if (target_arity < 1) throw InvalidArgument("target arity must be at least 1");
  for (int r : rho) {
    if (r < 0 || r >= target_arity) throw InvalidArgument("index map value out of range");
  }
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), target_arity);
  std::vector<Value> values;
  values.reserve(total);
  std::vector<int> x(static_cast<std::size_t>(target_arity));
  for (std::uint64_t t = 0; t < total; ++t) {
    unrank_into(t, q, x);
    std::uint64_t src = 0;
    for (int r : rho) src = src * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x[static_cast<std::size_t>(r)]);
    values.push_back(w.at(src));
  }
  return Weight(q, target_arity, w.monoid(), std::move(values));
}

Weight map_monoid(const Weight& w, const MonoidHom& phi) {
  if (!(phi.source() == w.monoid())) {
    throw InvalidArgument("homomorphism source " + phi.source().name() + " does not match " + w.monoid().name());
  }
  std::vector<Value> values;
  values.reserve(w.values().size());
  for (const Value& v : w.values()) values.push_back(phi(v));
  return Weight(w.q(), w.arity(), phi.target(), std::move(values));
}

Weight restrict_monoid(const Weight& w, const Monoid& submonoid) {
  const Monoid& m = w.monoid();
  if (submonoid == m) return w;
  std::vector<Value> values;
  values.reserve(w.values().size());
  if (m.kind() == MonoidKind::kTable && submonoid.kind() == MonoidKind::kTable) {
    // labels of the submonoid must name elements of m with the same products
    const auto& sub = submonoid.labels();
    std::vector<int> into(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) into[i] = static_cast<int>(m.element(sub[i]).num);
    const auto& st = submonoid.table();
    const auto& mt = m.table();
    for (std::size_t i = 0; i < sub.size(); ++i) {
      for (std::size_t j = 0; j < sub.size(); ++j) {
        if (into[static_cast<std::size_t>(st[i][j])] != mt[static_cast<std::size_t>(into[i])][static_cast<std::size_t>(into[j])]) {
          throw InvalidArgument("table is not a submonoid: products differ");
        }
      }
    }
    if (m.element(submonoid.labels()[static_cast<std::size_t>(submonoid.identity().num)]) != m.identity()) {
      throw InvalidArgument("table is not a submonoid: identities differ");
    }
    for (const Value& v : w.values()) {
      const auto it = std::find(into.begin(), into.end(), static_cast<int>(v.num));
      if (it == into.end()) throw InvalidArgument("weight takes a value outside the submonoid");
      values.push_back(Value::of(it - into.begin()));
    }
  } else if (m.kind() == MonoidKind::kNatAddInf && submonoid.kind() == MonoidKind::kNatAdd) {
    for (const Value& v : w.values()) {
      if (v.infinite) throw InvalidArgument("weight takes the value inf, outside nat_add");
      values.push_back(v);
    }
  } else if (m.kind() == MonoidKind::kNatMul && submonoid.kind() == MonoidKind::kBoolAnd) {
    for (const Value& v : w.values()) {
      if (v.num > 1) throw InvalidArgument("weight takes a value outside {0,1}");
      values.push_back(v);
    }
  } else {
    throw InvalidArgument(submonoid.name() + " is not a supported submonoid of " + m.name());
  }
  return Weight(w.q(), w.arity(), submonoid, std::move(values));
}

Weight product_weights(std::span<const Weight> ws) {
  if (ws.empty()) throw InvalidArgument("product of zero weights");
  const int q = ws[0].q(), k = ws[0].arity();
  std::vector<Monoid> factors;
  for (const Weight& w : ws) {
    if (w.q() != q || w.arity() != k) throw InvalidArgument("product weights must share alphabet and arity");
    factors.push_back(w.monoid());
  }
  std::vector<Value> values;
  values.reserve(ws[0].values().size());
  for (std::size_t r = 0; r < ws[0].values().size(); ++r) {
    std::vector<Value> parts;
    parts.reserve(ws.size());
    for (const Weight& w : ws) parts.push_back(w.at(r));
    values.push_back(Value::tuple(std::move(parts)));
  }
  return Weight(q, k, Monoid::product(std::move(factors)), std::move(values));
}

Weight const_one_weight(int q) {
  check_alphabet(q);
  return Weight(q, 1, Monoid::nat_add(), std::vector<Value>(static_cast<std::size_t>(q), Value::of(1)));
}

Weight delta_weight(int q) {
  return char_weight(equality_relation(q));
}

Weight semiring_sum(const Weight& w, const Semiring& s) {
  if (w.arity() < 2) throw InvalidArgument("semiring sum needs arity at least 2");
  if (!(s.multiplicative() == w.monoid())) {
    throw InvalidArgument("semiring " + s.name() + " does not act on " + w.monoid().name());
  }
  const std::uint64_t q = static_cast<std::uint64_t>(w.q());
  const std::uint64_t total = checked_pow(q, w.arity() - 1);
  std::vector<Value> values;
  values.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) {
    Value acc = s.zero();
    for (std::uint64_t a = 0; a < q; ++a) acc = s.add(acc, w.at(t * q + a));
    values.push_back(std::move(acc));
  }
  return Weight(w.q(), w.arity() - 1, w.monoid(), std::move(values));
}

Weight max_level_weight_via_closure(const Weight& w) {
  require_natural(w);
  const Value m = *std::max_element(w.values().begin(), w.values().end());
  if (m.num == 0) throw InvalidArgument("maximum level 0: the ratio is undefined");
  const int first[] = {0};
  const Weight ones = substitute_indices(const_one_weight(w.q()), first, w.arity());
  const Weight scaled = map_monoid(ones, MonoidHom::scale(m.num));
  const Weight parts[] = {w, scaled};
  const Weight paired = product_weights(parts);

  using boost::multiprecision::cpp_rational;
  std::vector<Value> values;
  values.reserve(paired.values().size());
  for (const Value& v : paired.values()) {
    const cpp_rational ratio(v.parts[0].num, v.parts[1].num);
    values.push_back(Value::of(ratio == 1 ? 1 : 0));
  }
  return Weight(w.q(), w.arity(), Monoid::bool_and(), std::move(values));
}

}  // namespace permclone
