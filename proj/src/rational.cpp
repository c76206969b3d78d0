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

#include "choreo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace choreo {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational integer_from(std::string_view digits) {
  return Rational(mpz_class(std::string(digits), 10));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      return std::nullopt;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class numer = whole.empty() ? mpz_class(0)
                                    : mpz_class(std::string(whole), 10);
    numer *= scale;
    if (!frac.empty()) numer += mpz_class(std::string(frac), 10);
    result = Rational(numer, scale);
    result.canonicalize();
  } else {
    if (!all_digits(text)) return std::nullopt;
    result = integer_from(text);
  }
  if (negative) result = -result;
  return result;
}

std::string to_exact_string(const Rational& value) {
  return value.get_str(10);
}

std::string to_decimal_string(const Rational& value, int max_digits) {
  mpz_class num = value.get_num();
  const mpz_class& den = value.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(max_digits));
  mpz_class scaled = num * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  if (2 * r >= den) q += 1;

  std::string digits = q.get_str(10);
  if (digits.size() <= static_cast<size_t>(max_digits)) {
    digits.insert(0, static_cast<size_t>(max_digits) + 1 - digits.size(), '0');
  }
  std::string whole = digits.substr(0, digits.size() - max_digits);
  std::string frac = digits.substr(digits.size() - max_digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();

  std::string out;
  if (negative && (whole != "0" || !frac.empty())) out.push_back('-');
  out += whole;
  if (!frac.empty()) {
    out.push_back('.');
    out += frac;
  }
  return out;
}

std::string to_document_string(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_exact_string(value);
  return to_decimal_string(value, std::max(twos, fives));
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw std::logic_error("value() on infinite ExtendedRational");
  return *value_;
}

ExtendedRational operator+(const ExtendedRational& a,
                           const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedRational::infinity();
  return ExtendedRational(Rational(*a.value_ + *b.value_));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational min_with(const Rational& cap, const ExtendedRational& value) {
  if (value.is_infinite() || cap <= value.value()) return cap;
  return value.value();
}

std::string to_exact_string(const ExtendedRational& value) {
  return value.is_finite() ? to_exact_string(value.value()) : "inf";
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
  return os << to_exact_string(value);
}

}  // namespace choreo
