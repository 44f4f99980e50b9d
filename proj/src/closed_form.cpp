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

#include "penta/closed_form.hpp"

#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "penta/errors.hpp"

namespace penta {
namespace {

Rad3 Q(long p, long q, long den) { return Rad3(Rational(p, den), Rational(q, den)); }

Rad3 RadicalPower(RadicalBase base, int t) {
  switch (base) {
    case RadicalBase::kOne:
      return Rad3(1);
    case RadicalBase::kPlus:
      return Pow(Rad3(1, 1), static_cast<unsigned>(t));
    case RadicalBase::kMinus:
      return Pow(Rad3(1, -1), static_cast<unsigned>(t));
  }
  throw std::logic_error("unknown radical base");
}

RadicalBase Flip(RadicalBase base) {
  switch (base) {
    case RadicalBase::kPlus:
      return RadicalBase::kMinus;
    case RadicalBase::kMinus:
      return RadicalBase::kPlus;
    default:
      return base;
  }
}

void CheckT(int t) {
  if (t < 0) throw std::invalid_argument("generation must be non-negative");
}

using RT = BasisTerm<Rad3>;
using DT = BasisTerm<Decimal>;
constexpr RadicalBase kOne = RadicalBase::kOne;
constexpr RadicalBase kPlus = RadicalBase::kPlus;
constexpr RadicalBase kMinus = RadicalBase::kMinus;

}  // namespace

Rad3 BasisValueExact(int five_power, RadicalBase base, bool t_linear, int t) {
  CheckT(t);
  Rad3 v = RadicalPower(base, t);
  if (five_power != 0) {
    v *= Rad3(Rational(Pow(BigInt(5), static_cast<unsigned long>(five_power) * t)));
  }
  if (t_linear) v *= Rad3(t);
  return v;
}

Decimal BasisValue(int five_power, RadicalBase base, bool t_linear, int t) {
  CheckT(t);
  const Decimal r = boost::multiprecision::sqrt(Decimal(3));
  Decimal v = 1;
  if (base == kPlus) v = boost::multiprecision::pow(1 + r, t);
  if (base == kMinus) v = boost::multiprecision::pow(1 - r, t);
  if (five_power != 0) v *= boost::multiprecision::pow(Decimal(5), five_power * t);
  if (t_linear) v *= t;
  return v;
}

Rad3 ClosedForm::Evaluate(int t) const {
  Rad3 sum;
  for (const RT& term : terms) {
    sum += term.coeff * BasisValueExact(term.five_power, term.base, term.t_linear, t);
  }
  return sum;
}

BigInt ClosedForm::EvaluateInteger(int t) const {
  const Rad3 v = Evaluate(t);
  if (!v.is_integer()) {
    throw InternalConsistencyError(name + "(" + std::to_string(t) + ") is not an integer: " + v.str());
  }
  return v.to_integer();
}

ClosedForm ClosedForm::Conjugate() const {
  ClosedForm out{name + "*", {}};
  for (const RT& term : terms) {
    out.terms.push_back({term.coeff.conjugate(), term.five_power, Flip(term.base), term.t_linear});
  }
  return out;
}

Decimal DecimalForm::Evaluate(int t) const {
  Decimal sum = 0;
  for (const DT& term : terms) {
    sum += term.coeff * BasisValue(term.five_power, term.base, term.t_linear, t);
  }
  return sum;
}

const ClosedForm& D12Form() {
  static const ClosedForm form{"d12", {RT{Q(1, 1, 2), 0, kPlus}, RT{Q(1, -1, 2), 0, kMinus}}};
  return form;
}

const ClosedForm& D13Form() {
  static const ClosedForm form{"d13", {RT{Q(2, 1, 2), 0, kPlus}, RT{Q(2, -1, 2), 0, kMinus}}};
  return form;
}

const ClosedForm& D13ShiftedForm() {
  static const ClosedForm form{"d13_shifted", {RT{Pow(Rad3(1, 1), 2) / Rad3(4), 0, kPlus},
                                               RT{Pow(Rad3(1, -1), 2) / Rad3(4), 0, kMinus}}};
  return form;
}

const ClosedForm& SForm() {
  static const ClosedForm form{"S",
                               {RT{Q(9, 5, 4), 1, kPlus}, RT{Q(9, -5, 4), 1, kMinus},
                                RT{Q(9, 0, 13), 1, kOne}, RT{Q(21, 15, 52), 0, kPlus},
                                RT{Q(21, -15, 52), 0, kMinus}}};
  return form;
}

const ClosedForm& FForm() {
  static const ClosedForm form{"F",
                               {RT{Q(792, 485, 472), 1, kPlus}, RT{Q(792, -485, 472), 1, kMinus},
                                RT{Q(48, -1, 312), 0, kPlus}, RT{Q(48, 1, 312), 0, kMinus},
                                RT{Q(9, 0, 13), 1, kOne}, RT{Q(-21, 0, 59), 0, kOne}}};
  return form;
}

BigInt D12Closed(int t) { return D12Form().EvaluateInteger(t); }
BigInt D13Closed(int t) { return D13Form().EvaluateInteger(t); }
BigInt SClosed(int t) { return SForm().EvaluateInteger(t); }
BigInt FClosed(int t) { return FForm().EvaluateInteger(t); }

const DecimalForm& DTotalApproxForm() {
  static const DecimalForm form{[] {
    DecimalForm f;
    f.name = "D_approx";
    const auto d = [](const char* s) { return Decimal(s); };
    f.terms = {DT{d("6.7350"), 2, kPlus},    DT{d("0.8226"), 2, kMinus},
               DT{d("3.4007"), 1, kPlus},    DT{d("0.08248"), 1, kMinus},
               DT{d("-3.1636"), 0, kPlus},   DT{d("-1.8587"), 0, kMinus},
               DT{d("2.5961"), 2, kOne},     DT{d("0.859"), 1, kOne},
               DT{d("-2.71"), 1, kOne, true}, DT{d("5.526"), 0, kOne}};
    return f;
  }()};
  return form;
}

Decimal DTotalApprox(int t) { return DTotalApproxForm().Evaluate(t); }

Decimal Exponent() {
  return boost::multiprecision::log(1 + boost::multiprecision::sqrt(Decimal(3))) /
         boost::multiprecision::log(Decimal(5));
}

Decimal AplAsymptotic(int t) { return Decimal("0.9579") * BasisValue(0, kPlus, false, t); }

Decimal AplAsymptoticFromOrder(const Decimal& n) {
  const Decimal lambda = 1 + boost::multiprecision::sqrt(Decimal(3));
  const Decimal scaled = Decimal(4) / 3 * (n - Decimal(5) / 4);
  return Decimal("0.9579") / lambda * boost::multiprecision::pow(scaled, Exponent());
}

Decimal DiameterAsymptotic(int t) { return BasisValue(0, kPlus, false, t + 2) / 4; }

}  // namespace penta
