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

#ifndef PENTA_CLOSED_FORM_HPP_
#define PENTA_CLOSED_FORM_HPP_

#include <string>
#include <vector>

#include "penta/numeric.hpp"
#include "penta/rad3.hpp"

namespace penta {

// The per-t geometric factor of a term: 1, (1+√3)^t or (1-√3)^t.
enum class RadicalBase { kOne, kPlus, kMinus };

// One term coeff * 5^{five_power * t} * base^t * (t if t_linear).
template <typename Coeff>
struct BasisTerm {
  Coeff coeff;
  int five_power = 0;
  RadicalBase base = RadicalBase::kOne;
  bool t_linear = false;
};

// A sum of basis terms with exact coefficients in Q(√3).
struct ClosedForm {
  std::string name;
  std::vector<BasisTerm<Rad3>> terms;

  Rad3 Evaluate(int t) const;
  // Evaluate and require an integer result; throws InternalConsistencyError
  // naming the form when a √3 or fractional part survives.
  BigInt EvaluateInteger(int t) const;
  // Same form with √3 replaced by -√3 in every coefficient and base.
  ClosedForm Conjugate() const;
};

// Same shape with rounded decimal coefficients.
struct DecimalForm {
  std::string name;
  std::vector<BasisTerm<Decimal>> terms;

  Decimal Evaluate(int t) const;
};

// 5^{five_power t} * base^t * (t if linear) as an exact value.
Rad3 BasisValueExact(int five_power, RadicalBase base, bool t_linear, int t);
// The same factor at working precision.
Decimal BasisValue(int five_power, RadicalBase base, bool t_linear, int t);

const ClosedForm& D12Form();
const ClosedForm& D13Form();         // (2±√3)/2 (1±√3)^t
const ClosedForm& D13ShiftedForm();  // (1±√3)^{t+2} / 4
const ClosedForm& SForm();
const ClosedForm& FForm();

BigInt D12Closed(int t);
BigInt D13Closed(int t);
BigInt SClosed(int t);
BigInt FClosed(int t);

// Total distance with the published rounded coefficients.
const DecimalForm& DTotalApproxForm();
Decimal DTotalApprox(int t);

// ln(1+√3) / ln 5.
Decimal Exponent();
// Leading term of the APL approximation, 0.9579 (1+√3)^t.
Decimal AplAsymptotic(int t);
// The same leading term written as a power of the order N.
Decimal AplAsymptoticFromOrder(const Decimal& n);
// (1+√3)^{t+2} / 4.
Decimal DiameterAsymptotic(int t);

}  // namespace penta

#endif  // PENTA_CLOSED_FORM_HPP_
