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

#include "penta/numeric.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace penta {

void SetWorkingPrecision(unsigned digits) {
  if (digits < 20) throw std::invalid_argument("working precision must be at least 20 digits");
  Decimal::default_precision(digits);
}

unsigned WorkingPrecision() { return Decimal::default_precision(); }

unsigned InitPrecisionFromEnv() {
  unsigned digits = kDefaultPrecisionDigits;
  if (const char* env = std::getenv("PENTA_PRECISION"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || parsed > 100000) {
      throw std::invalid_argument(std::string("PENTA_PRECISION is not a digit count: ") + env);
    }
    digits = static_cast<unsigned>(parsed);
  }
  SetWorkingPrecision(digits);
  return digits;
}

BigInt Pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::int64_t ToInt64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  return value.get_si();
}

Decimal ToDecimal(const BigInt& value) { return Decimal(value.get_str()); }

Decimal ToDecimal(const Rational& value) {
  return ToDecimal(BigInt(value.get_num())) / ToDecimal(BigInt(value.get_den()));
}

std::string FormatSci(const Decimal& value, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << value;
  return os.str();
}

std::string FormatSig(const Decimal& value, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << value;
  return os.str();
}

BigInt RoundToBigInt(const Decimal& value) {
  const Decimal rounded = boost::multiprecision::round(value);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), rounded.backend().data(), MPFR_RNDZ);
  return out;
}

}  // namespace penta
