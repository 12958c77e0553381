// Copyright 2026 The dpcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dpcert {

inline constexpr int kMaxFieldOrder = 16;

/// An element of F_t stored as an integer in [0, t). When t = p^k with k > 1
/// the value packs the polynomial representative in base p, so F_4 reads
/// 0, 1, x, x+1 as 0, 1, 2, 3.
struct Element {
  std::uint8_t value = 0;

  constexpr Element() = default;
  constexpr explicit Element(int v) : value(static_cast<std::uint8_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

enum class FieldOp { Add, Sub, Mul };

/// Finite field of prime-power order t <= kMaxFieldOrder, table driven.
///
/// The unchecked operations (add, mul, ...) assume valid elements; `arith`
/// and `element` validate their inputs.
class Field {
 public:
  /// Factors t and, when t is not prime, picks the smallest monic irreducible
  /// of degree k over F_p (ordered by its packed lower coefficients).
  static Field make(int order);

  int order() const { return order_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Coefficients c_0..c_k of the monic reduction polynomial; empty for k = 1.
  const std::vector<int>& reduction() const { return reduction_; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element add(Element a, Element b) const { return Element(add_[idx(a, b)]); }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return Element(mul_[idx(a, b)]); }
  Element neg(Element a) const { return Element(neg_[a.value]); }
  /// Multiplicative inverse, computed as a^(t-2). Throws on zero.
  Element inv(Element a) const;
  /// a^e; negative exponents go through the inverse.
  Element pow(Element a, long long e) const;

  /// Checked binary operation.
  Element arith(FieldOp op, Element a, Element b) const;

  /// Checked conversion of an encoded value.
  Element element(int value) const;
  bool contains(Element a) const { return a.value < order_; }
  /// Image of an integer in the prime subfield (so from_int(-1) = -1).
  Element from_int(long long v) const;

  /// Base-p digits c_0..c_{k-1} of the polynomial representative.
  std::vector<int> digits(Element a) const;
  Element from_digits(std::span<const int> digits) const;

  /// All elements in encoding order 0, 1, ..., t-1.
  std::vector<Element> elements() const;

  bool operator==(const Field& other) const { return order_ == other.order_; }

 private:
  Field() = default;
  static std::size_t idx(Element a, Element b) {
    return static_cast<std::size_t>(a.value) * kMaxFieldOrder + b.value;
  }
  void check(Element a) const;

  int order_ = 0;
  int p_ = 0;
  int k_ = 0;
  std::vector<int> reduction_;
  std::array<std::uint8_t, kMaxFieldOrder * kMaxFieldOrder> add_{};
  std::array<std::uint8_t, kMaxFieldOrder * kMaxFieldOrder> mul_{};
  std::array<std::uint8_t, kMaxFieldOrder> neg_{};
  std::array<std::uint8_t, kMaxFieldOrder> inv_{};
};

/// Smallest prime power >= n (n <= kMaxFieldOrder).
int smallest_prime_power_at_least(int n);

}  // namespace dpcert
