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

#ifndef PENTA_NUMERIC_HPP_
#define PENTA_NUMERIC_HPP_

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

namespace penta {

using BigInt = mpz_class;
using Rational = mpq_class;

// Variable-precision decimal. Precision is process-wide and is set once via
// SetWorkingPrecision() before any Decimal is created.
using Decimal = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionDigits = 60;

void SetWorkingPrecision(unsigned digits);
unsigned WorkingPrecision();

// Reads PENTA_PRECISION (decimal digits) and applies it; falls back to the
// default when unset. Throws std::invalid_argument on a malformed value.
unsigned InitPrecisionFromEnv();

BigInt Pow(const BigInt& base, unsigned long exponent);

// Narrowing with a range check; throws std::overflow_error.
std::int64_t ToInt64(const BigInt& value);

Decimal ToDecimal(const BigInt& value);
Decimal ToDecimal(const Rational& value);
// Nearest integer, halves away from zero.
BigInt RoundToBigInt(const Decimal& value);

// Scientific notation with `digits` significant digits, e.g. "5.45159641e+15".
std::string FormatSci(const Decimal& value, int digits);
// Fixed notation rounded to `digits` significant digits.
std::string FormatSig(const Decimal& value, int digits);

}  // namespace penta

#endif  // PENTA_NUMERIC_HPP_
