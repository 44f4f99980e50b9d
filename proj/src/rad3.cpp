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

#include "penta/rad3.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "penta/errors.hpp"

namespace penta {

Rad3::Rad3(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
}

BigInt Rad3::to_integer() const {
  if (!is_integer()) throw InternalConsistencyError("expected an integer, got " + str());
  return BigInt(p_.get_num());
}

Decimal Rad3::to_decimal() const {
  return ToDecimal(p_) + ToDecimal(q_) * boost::multiprecision::sqrt(Decimal(3));
}

std::string Rad3::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Rad3& Rad3::operator+=(const Rad3& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

Rad3& Rad3::operator-=(const Rad3& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

Rad3& Rad3::operator*=(const Rad3& o) {
  Rational p = p_ * o.p_ + 3 * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

Rad3& Rad3::operator/=(const Rad3& o) {
  // x / y = x * conj(y) / (y * conj(y)), and y * conj(y) = r^2 - 3 s^2 is rational.
  const Rational norm = o.p_ * o.p_ - 3 * o.q_ * o.q_;
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt 3)");
  *this *= o.conjugate();
  p_ /= norm;
  q_ /= norm;
  return *this;
}

Rad3 Pow(Rad3 base, unsigned exponent) {
  Rad3 out(1);
  while (exponent != 0) {
    if (exponent & 1u) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rad3& x) {
  os << x.rational_part();
  if (x.radical_part() >= 0) {
    os << " + " << x.radical_part();
  } else {
    os << " - " << Rational(-x.radical_part());
  }
  return os << "*sqrt3";
}

}  // namespace penta
