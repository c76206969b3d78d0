// Copyright 2026 The Choreo Authors
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

#ifndef CHOREO_RATIONAL_HPP
#define CHOREO_RATIONAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace choreo {

/// Exact rational number. Every cost, budget, price and payoff in the
/// library is one of these; no floating point is involved anywhere.
using Rational = mpq_class;

/// Parses "12", "-3", "0.25", "1e2"-free decimals and "p/q" fractions.
/// Returns nullopt on anything else (including exponents and whitespace).
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical exact form: "7", "-1/3", "13/4".
std::string to_exact_string(const Rational& value);

/// Decimal rendering, exact when the expansion terminates within
/// `max_digits` fractional digits, otherwise rounded half away from zero.
std::string to_decimal_string(const Rational& value, int max_digits = 6);

/// Terminating decimal if one exists, otherwise the exact "p/q" form.
/// parse_rational() inverts this exactly.
std::string to_document_string(const Rational& value);

/// A rational extended with a single +inf element, ordered above every
/// rational and absorbing under addition. Used for path costs, where
/// "no qualifying path" is +inf.
class ExtendedRational {
 public:
  ExtendedRational() : value_(0) {}
  ExtendedRational(const Rational& value) : value_(value) {}  // NOLINT
  ExtendedRational(long value) : value_(value) {}             // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.value_.reset();
    return r;
  }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  /// Precondition: is_finite().
  const Rational& value() const;

  friend ExtendedRational operator+(const ExtendedRational& a,
                                    const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  std::optional<Rational> value_;
};

/// min(a, b) where b is finite; the result is always finite.
Rational min_with(const Rational& cap, const ExtendedRational& value);

std::string to_exact_string(const ExtendedRational& value);
std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

}  // namespace choreo

#endif  // CHOREO_RATIONAL_HPP
