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

#include "permclone/monoid.hpp"

#include <algorithm>
#include <map>

#include "permclone/error.hpp"

namespace permclone {

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater
                                                  : std::strong_ordering::less;
  if (a.num != b.num) return a.num < b.num ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  const std::size_t n = std::min(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.parts[i] <=> b.parts[i]; c != 0) return c;
  }
  return a.parts.size() <=> b.parts.size();
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

struct Monoid::Impl {
  MonoidKind kind;
  std::vector<std::string> labels;
  int identity = 0;
  std::vector<std::vector<int>> table;
  std::vector<Monoid> factors;
};

namespace {

bool is_bit(const Value& v) { return !v.infinite && v.parts.empty() && (v.num == 0 || v.num == 1); }

bool is_plain_natural(const Value& v) { return !v.infinite && v.parts.empty() && v.num >= 0; }

}  // namespace

Monoid Monoid::bool_and() {
  static const Monoid m(std::make_shared<Impl>(Impl{MonoidKind::kBoolAnd, {}, 0, {}, {}}));
  return m;
}

Monoid Monoid::bool_or() {
  static const Monoid m(std::make_shared<Impl>(Impl{MonoidKind::kBoolOr, {}, 0, {}, {}}));
  return m;
}

Monoid Monoid::nat_add() {
  static const Monoid m(std::make_shared<Impl>(Impl{MonoidKind::kNatAdd, {}, 0, {}, {}}));
  return m;
}

Monoid Monoid::nat_mul() {
  static const Monoid m(std::make_shared<Impl>(Impl{MonoidKind::kNatMul, {}, 0, {}, {}}));
  return m;
}

Monoid Monoid::nat_add_inf() {
  static const Monoid m(std::make_shared<Impl>(Impl{MonoidKind::kNatAddInf, {}, 0, {}, {}}));
  return m;
}

Monoid Monoid::table(std::vector<std::string> labels, const std::string& identity,
                     std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw InvalidArgument("table monoid needs at least one element");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("duplicate label in monoid table");
    }
  }
  auto it = std::find(labels.begin(), labels.end(), identity);
  if (it == labels.end()) throw InvalidArgument("identity '" + identity + "' is not an element");
  const int e = static_cast<int>(it - labels.begin());
  if (static_cast<int>(table.size()) != n) throw InvalidArgument("monoid table has wrong size");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("monoid table has wrong size");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidArgument("monoid table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[e][a] != a || table[a][e] != a) {
      throw InvalidArgument("'" + identity + "' is not an identity for '" + labels[a] + "'");
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) {
        throw InvalidArgument("monoid table is not commutative at (" + labels[a] + "," +
                              labels[b] + ")");
      }
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidArgument("monoid table is not associative at (" + labels[a] + "," +
                                labels[b] + "," + labels[c] + ")");
        }
      }
    }
  }
  return Monoid(std::make_shared<Impl>(
      Impl{MonoidKind::kTable, std::move(labels), e, std::move(table), {}}));
}

Monoid Monoid::product(std::vector<Monoid> factors) {
  if (factors.empty()) throw InvalidArgument("product monoid needs at least one factor");
  return Monoid(std::make_shared<Impl>(Impl{MonoidKind::kProduct, {}, 0, {}, std::move(factors)}));
}

Monoid Monoid::builtin(std::string_view name) {
  if (name == "bool_and") return bool_and();
  if (name == "bool_or") return bool_or();
  if (name == "nat_add") return nat_add();
  if (name == "nat_mul") return nat_mul();
  if (name == "nat_add_inf") return nat_add_inf();
  throw InvalidArgument("unknown monoid '" + std::string(name) + "'");
}

MonoidKind Monoid::kind() const { return impl_->kind; }

std::string Monoid::name() const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd: return "bool_and";
    case MonoidKind::kBoolOr: return "bool_or";
    case MonoidKind::kNatAdd: return "nat_add";
    case MonoidKind::kNatMul: return "nat_mul";
    case MonoidKind::kNatAddInf: return "nat_add_inf";
    case MonoidKind::kTable: return "table";
    case MonoidKind::kProduct: {
      std::string out = "product(";
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i) out += ",";
        out += impl_->factors[i].name();
      }
      return out + ")";
    }
  }
  return "?";
}

Value Monoid::identity() const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd: return Value::of(1);
    case MonoidKind::kBoolOr: return Value::of(0);
    case MonoidKind::kNatAdd: return Value::of(0);
    case MonoidKind::kNatMul: return Value::of(1);
    case MonoidKind::kNatAddInf: return Value::of(0);
    case MonoidKind::kTable: return Value::of(impl_->identity);
    case MonoidKind::kProduct: {
      std::vector<Value> parts;
      for (const Monoid& f : impl_->factors) parts.push_back(f.identity());
      return Value::tuple(std::move(parts));
    }
  }
  return {};
}

Value Monoid::op(const Value& a, const Value& b) const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd: return Value::of((a.num == 1 && b.num == 1) ? 1 : 0);
    case MonoidKind::kBoolOr: return Value::of((a.num == 1 || b.num == 1) ? 1 : 0);
    case MonoidKind::kNatAdd: return Value::of(a.num + b.num);
    case MonoidKind::kNatMul: return Value::of(a.num * b.num);
    case MonoidKind::kNatAddInf:
      if (a.infinite || b.infinite) return Value::infinity();
      return Value::of(a.num + b.num);
    case MonoidKind::kTable:
      return Value::of(impl_->table[static_cast<std::size_t>(a.num)][static_cast<std::size_t>(b.num)]);
    case MonoidKind::kProduct: {
      std::vector<Value> parts(impl_->factors.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i] = impl_->factors[i].op(a.parts[i], b.parts[i]);
      }
      return Value::tuple(std::move(parts));
    }
  }
  return {};
}

bool Monoid::contains(const Value& v) const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd:
    case MonoidKind::kBoolOr: return is_bit(v);
    case MonoidKind::kNatAdd:
    case MonoidKind::kNatMul: return is_plain_natural(v);
    case MonoidKind::kNatAddInf: return v.parts.empty() && (v.infinite ? v.num == 0 : v.num >= 0);
    case MonoidKind::kTable:
      return !v.infinite && v.parts.empty() && v.num >= 0 &&
             v.num < static_cast<long>(impl_->labels.size());
    case MonoidKind::kProduct:
      if (v.infinite || v.num != 0 || v.parts.size() != impl_->factors.size()) return false;
      for (std::size_t i = 0; i < v.parts.size(); ++i) {
        if (!impl_->factors[i].contains(v.parts[i])) return false;
      }
      return true;
  }
  return false;
}

bool Monoid::is_natural() const {
  return impl_->kind == MonoidKind::kNatAdd || impl_->kind == MonoidKind::kNatMul;
}

bool Monoid::is_finite() const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd:
    case MonoidKind::kBoolOr:
    case MonoidKind::kTable: return true;
    case MonoidKind::kProduct:
      return std::all_of(impl_->factors.begin(), impl_->factors.end(),
                         [](const Monoid& f) { return f.is_finite(); });
    default: return false;
  }
}

std::vector<Value> Monoid::elements() const {
  switch (impl_->kind) {
    case MonoidKind::kBoolAnd:
    case MonoidKind::kBoolOr: return {Value::of(0), Value::of(1)};
    case MonoidKind::kTable: {
      std::vector<Value> out;
      for (std::size_t i = 0; i < impl_->labels.size(); ++i) out.push_back(Value::of(static_cast<long>(i)));
      return out;
    }
    case MonoidKind::kProduct: {
      std::vector<Value> out{Value::tuple({})};
      for (const Monoid& f : impl_->factors) {
        std::vector<Value> next;
        for (const Value& prefix : out) {
          for (const Value& e : f.elements()) {
            Value v = prefix;
            v.parts.push_back(e);
            next.push_back(std::move(v));
          }
        }
        out = std::move(next);
      }
      return out;
    }
    default: throw InvalidArgument("monoid " + name() + " is infinite");
  }
}

const std::vector<std::string>& Monoid::labels() const { return impl_->labels; }
const std::vector<std::vector<int>>& Monoid::table() const { return impl_->table; }
const std::vector<Monoid>& Monoid::factors() const { return impl_->factors; }

Value Monoid::element(const std::string& label) const {
  if (impl_->kind != MonoidKind::kTable) throw InvalidArgument("labels only exist in table monoids");
  auto it = std::find(impl_->labels.begin(), impl_->labels.end(), label);
  if (it == impl_->labels.end()) throw InvalidArgument("unknown monoid element '" + label + "'");
  return Value::of(static_cast<long>(it - impl_->labels.begin()));
}

std::string Monoid::format(const Value& v) const {
  switch (impl_->kind) {
    case MonoidKind::kTable: return impl_->labels[static_cast<std::size_t>(v.num)];
    case MonoidKind::kProduct: {
      std::string out = "(";
      for (std::size_t i = 0; i < v.parts.size(); ++i) {
        if (i) out += ",";
        out += impl_->factors[i].format(v.parts[i]);
      }
      return out + ")";
    }
    default: return v.infinite ? "inf" : v.num.str();
  }
}

bool operator==(const Monoid& a, const Monoid& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->kind != b.impl_->kind) return false;
  switch (a.impl_->kind) {
    case MonoidKind::kTable:
      return a.impl_->labels == b.impl_->labels && a.impl_->identity == b.impl_->identity &&
             a.impl_->table == b.impl_->table;
    case MonoidKind::kProduct: return a.impl_->factors == b.impl_->factors;
    default: return true;
  }
}

// --- homomorphisms --------------------------------------------------------

MonoidHom MonoidHom::table(const Monoid& source, const Monoid& target, std::vector<Value> images) {
  const std::vector<Value> elems = source.elements();
  if (images.size() != elems.size()) {
    throw InvalidArgument("homomorphism table has " + std::to_string(images.size()) +
                          " images for " + std::to_string(elems.size()) + " elements");
  }
  std::map<Value, Value> lookup;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!target.contains(images[i])) throw InvalidArgument("homomorphism image outside target");
    lookup.emplace(elems[i], images[i]);
  }
  if (!(lookup.at(source.identity()) == target.identity())) {
    throw InvalidArgument("homomorphism does not preserve the identity");
  }
  for (const Value& x : elems) {
    for (const Value& y : elems) {
      if (!(lookup.at(source.op(x, y)) == target.op(lookup.at(x), lookup.at(y)))) {
        throw InvalidArgument("map is not multiplicative at (" + source.format(x) + "," +
                              source.format(y) + ")");
      }
    }
  }
  MonoidHom h(source, target, Rule::kTable, "table");
  h.images_ = std::move(images);
  return h;
}

MonoidHom MonoidHom::annihilate_infinity() {
  return MonoidHom(Monoid::nat_add_inf(), Monoid::bool_and(), Rule::kAnnihilateInf,
                   "annihilate_inf");
}

MonoidHom MonoidHom::scale(Natural c) {
  if (c < 0) throw InvalidArgument("scale factor must be nonnegative");
  MonoidHom h(Monoid::nat_add(), Monoid::nat_add(), Rule::kScale, "scale:" + c.str());
  h.param_ = std::move(c);
  return h;
}

MonoidHom MonoidHom::power(unsigned e) {
  MonoidHom h(Monoid::nat_mul(), Monoid::nat_mul(), Rule::kPower, "power:" + std::to_string(e));
  h.param_ = e;
  return h;
}

MonoidHom MonoidHom::projection(const Monoid& product, std::size_t i) {
  if (product.kind() != MonoidKind::kProduct || i >= product.factors().size()) {
    throw InvalidArgument("projection needs a product monoid and a valid factor index");
  }
  MonoidHom h(product, product.factors()[i], Rule::kProjection, "project:" + std::to_string(i));
  h.index_ = i;
  return h;
}

MonoidHom MonoidHom::meet(const Monoid& product) {
  if (product.kind() != MonoidKind::kProduct) throw InvalidArgument("meet needs a product monoid");
  for (const Monoid& f : product.factors()) {
    if (f.kind() != MonoidKind::kBoolAnd) throw InvalidArgument("meet needs bool_and factors");
  }
  return MonoidHom(product, Monoid::bool_and(), Rule::kMeet, "meet");
}

MonoidHom MonoidHom::nonzero() {
  return MonoidHom(Monoid::nat_mul(), Monoid::bool_and(), Rule::kNonzero, "nonzero");
}

MonoidHom MonoidHom::bool_to_nat() {
  return MonoidHom(Monoid::bool_and(), Monoid::nat_mul(), Rule::kBoolToNat, "bool_to_nat");
}

MonoidHom MonoidHom::exp2() {
  return MonoidHom(Monoid::nat_add_inf(), Monoid::nat_mul(), Rule::kExp2, "exp2");
}

Value MonoidHom::operator()(const Value& v) const {
  if (!source_.contains(v)) {
    throw InvalidArgument("value " + (v.infinite ? std::string("inf") : v.num.str()) +
                          " is outside the homomorphism's source");
  }
  switch (rule_) {
    case Rule::kTable: {
      const std::vector<Value> elems = source_.elements();
      auto it = std::find(elems.begin(), elems.end(), v);
      return images_[static_cast<std::size_t>(it - elems.begin())];
    }
    case Rule::kAnnihilateInf: return Value::of(v.infinite ? 0 : 1);
    case Rule::kScale: return Value::of(v.num * param_);
    case Rule::kPower:
      return Value::of(boost::multiprecision::pow(v.num, param_.convert_to<unsigned>()));
    case Rule::kProjection: return v.parts[index_];
    case Rule::kMeet: {
      for (const Value& p : v.parts) {
        if (p.num == 0) return Value::of(0);
      }
      return Value::of(1);
    }
    case Rule::kNonzero: return Value::of(v.num != 0 ? 1 : 0);
    case Rule::kBoolToNat: return Value::of(v.num);
    case Rule::kExp2: {
      if (v.infinite) return Value::of(0);
      if (v.num > 1'000'000) throw ResourceLimit("2^n with n > 10^6");
      return Value::of(Natural(1) << v.num.convert_to<unsigned>());
    }
  }
  return {};
}

// --- semirings ------------------------------------------------------------

Semiring Semiring::natural() { return Semiring(Monoid::nat_mul(), "natural"); }

Semiring Semiring::boolean() { return Semiring(Monoid::bool_and(), "boolean"); }

Semiring Semiring::table(const Monoid& multiplicative, std::vector<std::vector<int>> addition,
                         const std::string& zero) {
  if (multiplicative.kind() != MonoidKind::kTable) {
    throw InvalidArgument("table semiring needs a table multiplicative monoid");
  }
  const std::vector<std::string>& labels = multiplicative.labels();
  // Reuses the monoid validator for the additive structure.
  Monoid::table(labels, zero, addition);
  const auto& mul = multiplicative.table();
  const int n = static_cast<int>(labels.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul[a][addition[b][c]] != addition[mul[a][b]][mul[a][c]]) {
          throw InvalidArgument("semiring is not distributive at (" + labels[a] + "," +
                                labels[b] + "," + labels[c] + ")");
        }
      }
    }
  }
  Semiring s(multiplicative, "table");
  s.addition_ = std::move(addition);
  s.zero_ = static_cast<int>(std::find(labels.begin(), labels.end(), zero) - labels.begin());
  return s;
}

Value Semiring::zero() const {
  switch (mul_.kind()) {
    case MonoidKind::kTable: return Value::of(zero_);
    default: return Value::of(0);
  }
}

Value Semiring::add(const Value& a, const Value& b) const {
  switch (mul_.kind()) {
    case MonoidKind::kNatMul: return Value::of(a.num + b.num);
    case MonoidKind::kBoolAnd: return Value::of((a.num == 1 || b.num == 1) ? 1 : 0);
    case MonoidKind::kTable:
      return Value::of(addition_[static_cast<std::size_t>(a.num)][static_cast<std::size_t>(b.num)]);
    default: throw InvalidArgument("unsupported semiring");
  }
}

}  // namespace permclone
