//
// Copyright 2026 The statleak Authors
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
//

#ifndef STATLEAK_CORE_RATIONAL_H_
#define STATLEAK_CORE_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace statleak {

using BigInt = mpz_class;
// Helpers here always return canonical (reduced) values.
using Rational = mpq_class;

enum class LogBase { kBase2, kNatural };

absl::StatusOr<LogBase> ParseLogBase(absl::string_view s);
std::string LogBaseName(LogBase base);

// "num/den", also for integers ("3/1").
std::string FormatRational(const Rational& q);

// Accepts "p/q", "p" and plain decimals such as "0.25".
absl::StatusOr<Rational> ParseRational(absl::string_view s);

// Exact binary value of a finite double.
Rational ExactFromDouble(double x);

Rational MakeRational(int64_t num, int64_t den = 1);

BigInt Binomial(uint64_t n, uint64_t k);

// Number of compositions of tau into d non-negative parts.
BigInt CompositionCount(int64_t tau, int64_t d);

double ToDouble(const Rational& q);

// Logarithms of exact positive values. Safe far beyond the double range.
double LogOf(const BigInt& x, LogBase base);
double LogOf(const Rational& x, LogBase base);
double LogOf(double x, LogBase base);

// Converts a natural-log quantity into the requested base.
double FromNatural(double nats, LogBase base);

Rational Pow(const Rational& q, uint64_t e);

BigInt CeilDiv(const BigInt& a, const BigInt& b);

}  // namespace statleak

#endif  // STATLEAK_CORE_RATIONAL_H_
