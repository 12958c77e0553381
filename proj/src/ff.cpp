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

#include "dpcert/ff.hpp"

#include <sstream>
#include <string>

#include "dpcert/error.hpp"

namespace dpcert {

namespace {

using Poly = std::vector<int>;  // coefficients c_0..c_d over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, over F_p.
Poly poly_mod(Poly a, const Poly& monic, int p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * monic[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p
// digits of `code`.
Poly monic_from_code(int code, int degree, int p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[degree] = 1;
  return f;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    for (int code = 0; code < ipow(p, d); ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::make(int order) {
  if (order < 2) {
    throw InputError("field order must be at least 2, got " + std::to_string(order));
  }
  std::vector<int> factors;
  for (int n = order, d = 2; n > 1; ++d) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  for (int f : factors) {
    if (f != factors.front()) {
      std::ostringstream msg;
      msg << order << " = ";
      for (std::size_t i = 0; i < factors.size(); ++i) msg << (i ? " * " : "") << factors[i];
      msg << " is not a prime power";
      throw InputError(msg.str());
    }
  }
  if (order > kMaxFieldOrder) {
    throw InputError("field order " + std::to_string(order) + " exceeds the supported maximum " +
                     std::to_string(kMaxFieldOrder));
  }

  Field field;
  field.order_ = order;
  field.p_ = factors.front();
  field.k_ = static_cast<int>(factors.size());
  const int p = field.p_;
  const int k = field.k_;

  if (k > 1) {
    for (int code = 0; code < ipow(p, k); ++code) {
      Poly f = monic_from_code(code, k, p);
      if (is_irreducible(f, p)) {
        field.reduction_ = std::move(f);
        break;
      }
    }
  }

  for (int a = 0; a < order; ++a) {
    const std::vector<int> da = field.digits(Element(a));
    std::vector<int> neg(k);
    for (int i = 0; i < k; ++i) neg[i] = (p - da[i]) % p;
    field.neg_[a] = field.from_digits(neg).value;
    for (int b = 0; b < order; ++b) {
      const std::vector<int> db = field.digits(Element(b));
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      field.add_[idx(Element(a), Element(b))] = field.from_digits(sum).value;

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      if (k > 1) prod = poly_mod(std::move(prod), field.reduction_, p);
      prod.resize(k, 0);
      field.mul_[idx(Element(a), Element(b))] = field.from_digits(prod).value;
    }
  }
  for (int a = 1; a < order; ++a) {
    Element r(1);
    for (int e = 0; e < order - 2; ++e) r = field.mul(r, Element(a));
    field.inv_[a] = r.value;
  }
  return field;
}

void Field::check(Element a) const {
  if (!contains(a)) {
    throw InputError("element " + std::to_string(a.value) + " is outside F_" +
                     std::to_string(order_));
  }
}

Element Field::inv(Element a) const {
  check(a);
  if (a.is_zero()) throw InputError("inverse of zero");
  return Element(inv_[a.value]);
}

Element Field::pow(Element a, long long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element r = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Element Field::arith(FieldOp op, Element a, Element b) const {
  check(a);
  check(b);
  switch (op) {
    case FieldOp::Add:
      return add(a, b);
    case FieldOp::Sub:
      return sub(a, b);
    case FieldOp::Mul:
      return mul(a, b);
  }
  return zero();
}

Element Field::element(int value) const {
  if (value < 0 || value >= order_) {
    throw InputError("element " + std::to_string(value) + " is outside F_" +
                     std::to_string(order_));
  }
  return Element(value);
}

Element Field::from_int(long long v) const {
  const long long r = ((v % p_) + p_) % p_;
  return Element(static_cast<int>(r));
}

std::vector<int> Field::digits(Element a) const {
  std::vector<int> d(k_);
  int v = a.value;
  for (int i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Element Field::from_digits(std::span<const int> digits) const {
  int v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
  return Element(v);
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (int a = 0; a < order_; ++a) out.emplace_back(a);
  return out;
}

int smallest_prime_power_at_least(int n) {
  for (int t = std::max(n, 2); t <= kMaxFieldOrder; ++t) {
    int m = t;
    int d = 2;
    while (m % d != 0) ++d;
    while (m % d == 0) m /= d;
    if (m == 1 && is_prime(d)) return t;
  }
  throw InputError("no supported prime power >= " + std::to_string(n));
}

}  // namespace dpcert
