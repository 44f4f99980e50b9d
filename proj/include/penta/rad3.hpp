// Copyright 2026 The penta Authors
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

#ifndef PENTA_RAD3_HPP_
#define PENTA_RAD3_HPP_

#include <iosfwd>
#include <string>

#include "penta/numeric.hpp"

namespace penta {

// Exact p + q√3 with rational p, q, kept in lowest terms.
class Rad3 {
 public:
  Rad3() = default;
  Rad3(Rational p, Rational q = 0);  // NOLINT(google-explicit-constructor)
  Rad3(long p) : Rad3(Rational(p)) {}  // NOLINT(google-explicit-constructor)

  static Rad3 Sqrt3() { return Rad3(0, 1); }

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& radical_part() const noexcept { return q_; }

  Rad3 conjugate() const { return Rad3(p_, -q_); }
  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && p_.get_den() == 1; }
  // Throws InternalConsistencyError unless is_integer().
  BigInt to_integer() const;
  Decimal to_decimal() const;
  std::string str() const;

  Rad3& operator+=(const Rad3& o);
  Rad3& operator-=(const Rad3& o);
  Rad3& operator*=(const Rad3& o);
  // Throws std::domain_error on division by zero.
  Rad3& operator/=(const Rad3& o);

  friend Rad3 operator+(Rad3 a, const Rad3& b) { return a += b; }
  friend Rad3 operator-(Rad3 a, const Rad3& b) { return a -= b; }
  friend Rad3 operator*(Rad3 a, const Rad3& b) { return a *= b; }
  friend Rad3 operator/(Rad3 a, const Rad3& b) { return a /= b; }
  friend Rad3 operator-(const Rad3& a) { return Rad3(-a.p_, -a.q_); }
  friend bool operator==(const Rad3& a, const Rad3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  Rational p_;
  Rational q_;
};

Rad3 Pow(Rad3 base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rad3& x);

}  // namespace penta

#endif  // PENTA_RAD3_HPP_
