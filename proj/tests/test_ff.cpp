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

#include <doctest.h>

#include "dpcert/ff.hpp"
#include "support/oracles.hpp"

using dpcert::Element;
using dpcert::Field;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("F_4 uses the encoding 0, 1, x, x+1") {
  const Field F = Field::make(4);
  CHECK(F.characteristic() == 2);
  CHECK(F.degree() == 2);
  CHECK(F.reduction() == std::vector<int>{1, 1, 1});
  const Element x(2), x1(3);
  CHECK(F.mul(x, x) == x1);           // x^2 = x + 1
  CHECK(F.mul(x, x1) == F.one());     // x(x+1) = x^2 + x = 1
  CHECK(F.mul(x1, x1) == x);          // (x+1)^2 = x^2 + 1 = x
  CHECK(F.add(x, x1) == F.one());
  CHECK(F.add(x, x) == F.zero());
}

TEST_CASE("non prime powers and out-of-range orders are rejected") {
  CHECK_THROWS_WITH_AS(Field::make(6), doctest::Contains("6 = 2 * 3 is not a prime power"),
                       dpcert::InputError);
  CHECK_THROWS_AS(Field::make(1), dpcert::InputError);
  CHECK_THROWS_AS(Field::make(0), dpcert::InputError);
  CHECK_THROWS_AS(Field::make(12), dpcert::InputError);
  CHECK_THROWS_AS(Field::make(17), dpcert::InputError);
}

TEST_CASE("tables match polynomial-basis reference arithmetic") {
  for (int t : kOrders) {
    CAPTURE(t);
    const Field F = Field::make(t);
    const oracle::RefField R(t);
    if (F.degree() > 1) CHECK(F.reduction() == R.modulus());
    for (int a = 0; a < t; ++a) {
      CHECK(F.neg(Element(a)).value == R.neg(a));
      for (int b = 0; b < t; ++b) {
        CHECK(F.add(Element(a), Element(b)).value == R.add(a, b));
        CHECK(F.mul(Element(a), Element(b)).value == R.mul(a, b));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for t <= 9") {
  for (int t : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(t);
    const Field F = Field::make(t);
    const auto els = F.elements();
    for (Element a : els) {
      CHECK(F.add(a, F.zero()) == a);
      CHECK(F.mul(a, F.one()) == a);
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      for (Element b : els) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
        for (Element c : els) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group has order t - 1") {
  for (int t : kOrders) {
    const Field F = Field::make(t);
    for (int a = 1; a < t; ++a) {
      CHECK(F.pow(Element(a), t - 1) == F.one());
      CHECK(F.pow(Element(a), -1) == F.inv(Element(a)));
    }
    CHECK(F.pow(F.zero(), 0) == F.one());
  }
}

TEST_CASE("checked operations validate inputs") {
  const Field F = Field::make(5);
  CHECK_THROWS_AS(F.inv(F.zero()), dpcert::InputError);
  CHECK_THROWS_AS(F.element(5), dpcert::InputError);
  CHECK_THROWS_AS(F.element(-1), dpcert::InputError);
  CHECK_THROWS_AS(F.arith(dpcert::FieldOp::Add, Element(7), F.one()), dpcert::InputError);
  CHECK(F.arith(dpcert::FieldOp::Mul, Element(2), Element(3)) == F.one());
  CHECK(F.arith(dpcert::FieldOp::Sub, Element(1), Element(3)) == Element(3));
}

TEST_CASE("prime subfield embedding and digits") {
  const Field F9 = Field::make(9);
  CHECK(F9.from_int(-1) == Element(2));
  CHECK(F9.from_int(7) == Element(1));
  for (int a = 0; a < 9; ++a) {
    const auto d = F9.digits(Element(a));
    CHECK(d.size() == 2);
    CHECK(F9.from_digits(d) == Element(a));
  }
  CHECK(Field::make(3).from_int(-2) == Element(1));
}

TEST_CASE("smallest prime power at least n") {
  CHECK(dpcert::smallest_prime_power_at_least(1) == 2);
  CHECK(dpcert::smallest_prime_power_at_least(2) == 2);
  CHECK(dpcert::smallest_prime_power_at_least(6) == 7);
  CHECK(dpcert::smallest_prime_power_at_least(10) == 11);
  CHECK(dpcert::smallest_prime_power_at_least(14) == 16);
}
