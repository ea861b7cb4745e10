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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace permclone {

using Natural = boost::multiprecision::cpp_int;

/// An element of some commutative monoid. Which fields are meaningful
/// depends on the monoid: booleans and table elements use `num` (0/1 or the
/// element index), naturals use `num` and, for nat_add_inf, `infinite`;
/// product monoids use `parts`.
struct Value {
  Natural num = 0;
  bool infinite = false;
  std::vector<Value> parts;

  static Value of(Natural n) { return Value{std::move(n), false, {}}; }
  static Value infinity() { return Value{0, true, {}}; }
  static Value tuple(std::vector<Value> parts) { return Value{0, false, std::move(parts)}; }

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
};

enum class MonoidKind { kBoolAnd, kBoolOr, kNatAdd, kNatMul, kNatAddInf, kTable, kProduct };

/// A commutative monoid: one of the built-in carriers or a validated finite
/// table. Cheap to copy.
class Monoid {
 public:
  static Monoid bool_and();
  static Monoid bool_or();
  static Monoid nat_add();
  static Monoid nat_mul();
  static Monoid nat_add_inf();

  /// Validates closure, identity, commutativity and associativity.
  static Monoid table(std::vector<std::string> labels, const std::string& identity,
                      std::vector<std::vector<int>> table);

  static Monoid product(std::vector<Monoid> factors);

  /// Built-in monoid by name ("bool_and", "nat_add", ...).
  static Monoid builtin(std::string_view name);

  MonoidKind kind() const;
  std::string name() const;

  Value identity() const;
  Value op(const Value& a, const Value& b) const;
  bool contains(const Value& v) const;

  /// Whether the carrier is ℕ₀ with its usual total order (nat_add, nat_mul).
  bool is_natural() const;
  bool is_finite() const;

  /// Every element of a finite carrier, in canonical order.
  std::vector<Value> elements() const;

  const std::vector<std::string>& labels() const;
  const std::vector<std::vector<int>>& table() const;
  const std::vector<Monoid>& factors() const;

  /// Table element by label.
  Value element(const std::string& label) const;

  std::string format(const Value& v) const;

  friend bool operator==(const Monoid& a, const Monoid& b);

 private:
  struct Impl;
  explicit Monoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A commutative-monoid homomorphism. Table-sourced homomorphisms are
/// validated exhaustively at construction; the built-in rules are
/// homomorphisms by construction.
class MonoidHom {
 public:
  static MonoidHom table(const Monoid& source, const Monoid& target, std::vector<Value> images);
  /// nat_add_inf -> bool_and: finite values to 1, infinity to 0.
  static MonoidHom annihilate_infinity();
  /// nat_add -> nat_add, x -> c*x.
  static MonoidHom scale(Natural c);
  /// nat_mul -> nat_mul, x -> x^e.
  static MonoidHom power(unsigned e);
  /// Product monoid -> its i-th factor.
  static MonoidHom projection(const Monoid& product, std::size_t i);
  /// Product of bool_and factors -> bool_and, conjunction of the parts.
  static MonoidHom meet(const Monoid& product);
  /// nat_mul -> bool_and, x -> [x != 0].
  static MonoidHom nonzero();
  /// bool_and -> nat_mul, the inclusion {0,1} in (ℕ₀, *).
  static MonoidHom bool_to_nat();
  /// nat_add_inf -> nat_mul, n -> 2^n and infinity -> 0.
  static MonoidHom exp2();

  const Monoid& source() const { return source_; }
  const Monoid& target() const { return target_; }
  const std::string& name() const { return name_; }

  Value operator()(const Value& v) const;

 private:
  enum class Rule { kTable, kAnnihilateInf, kScale, kPower, kProjection, kMeet, kNonzero,
                    kBoolToNat, kExp2 };
  MonoidHom(Monoid source, Monoid target, Rule rule, std::string name)
      : source_(std::move(source)), target_(std::move(target)), rule_(rule), name_(std::move(name)) {}

  Monoid source_;
  Monoid target_;
  Rule rule_;
  std::string name_;
  Natural param_ = 0;
  std::size_t index_ = 0;
  std::vector<Value> images_;
};

/// A commutative semiring (S, +, *, 0, 1) given by its multiplicative monoid
/// and an addition.
class Semiring {
 public:
  /// (ℕ₀, +, *), multiplicative monoid nat_mul.
  static Semiring natural();
  /// ({0,1}, or, and), multiplicative monoid bool_and.
  static Semiring boolean();
  /// Addition table over the labels of a table monoid. Validates the
  /// additive monoid axioms and distributivity.
  static Semiring table(const Monoid& multiplicative, std::vector<std::vector<int>> addition,
                        const std::string& zero);

  const Monoid& multiplicative() const { return mul_; }
  const std::string& name() const { return name_; }
  Value zero() const;
  Value add(const Value& a, const Value& b) const;

 private:
  Semiring(Monoid mul, std::string name) : mul_(std::move(mul)), name_(std::move(name)) {}
  Monoid mul_;
  std::string name_;
  std::vector<std::vector<int>> addition_;
  int zero_ = 0;
};

}  // namespace permclone
