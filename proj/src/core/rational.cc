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

#include "statleak/core/rational.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::StatusOr<LogBase> ParseLogBase(absl::string_view s) {
  if (s == "2") return LogBase::kBase2;
  if (s == "e" || s == "ln") return LogBase::kNatural;
  return absl::InvalidArgumentError(
      absl::StrCat("log base must be 2 or e, got '", s, "'"));
}

std::string LogBaseName(LogBase base) {
  return base == LogBase::kBase2 ? "2" : "e";
}

std::string FormatRational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool ParseBigInt(absl::string_view s, BigInt* out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (!absl::ascii_isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out->set_str(digits, 10) == 0;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(absl::string_view raw) {
  absl::string_view s = absl::StripAsciiWhitespace(raw);
  auto bad = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("not a rational number: '", raw, "'"));
  };
  if (size_t slash = s.find('/'); slash != absl::string_view::npos) {
    BigInt num, den;
    if (!ParseBigInt(s.substr(0, slash), &num) ||
        !ParseBigInt(s.substr(slash + 1), &den)) {
      return bad();
    }
    if (den == 0) return absl::InvalidArgumentError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (size_t dot = s.find('.'); dot != absl::string_view::npos) {
    absl::string_view whole = s.substr(0, dot);
    absl::string_view frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      whole.remove_prefix(1);
    }
    BigInt w = 0, f = 0;
    if (!whole.empty() && !ParseBigInt(whole, &w)) return bad();
    if (!frac.empty() && !ParseBigInt(frac, &f)) return bad();
    if (whole.empty() && frac.empty()) return bad();
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) return bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(w * scale + f, scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  BigInt n;
  if (!ParseBigInt(s, &n)) return bad();
  return Rational(n);
}

Rational ExactFromDouble(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational MakeRational(int64_t num, int64_t den) {
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

BigInt Binomial(uint64_t n, uint64_t k) {
  BigInt out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt CompositionCount(int64_t tau, int64_t d) {
  if (d <= 0) return tau == 0 && d == 0 ? 1 : 0;
  if (tau < 0) return 0;
  return Binomial(static_cast<uint64_t>(tau + d - 1),
                  static_cast<uint64_t>(d - 1));
}

double ToDouble(const Rational& q) { return q.get_d(); }

namespace {

double NaturalLog(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

double FromNatural(double nats, LogBase base) {
  return base == LogBase::kNatural ? nats : nats / std::log(2.0);
}

double LogOf(const BigInt& x, LogBase base) {
  return FromNatural(NaturalLog(x), base);
}

double LogOf(const Rational& x, LogBase base) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return FromNatural(NaturalLog(x.get_num()) - NaturalLog(x.get_den()), base);
}

double LogOf(double x, LogBase base) {
  return base == LogBase::kNatural ? std::log(x) : std::log2(x);
}

Rational Pow(const Rational& q, uint64_t e) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

BigInt CeilDiv(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace statleak
