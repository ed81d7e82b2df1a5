// Copyright 2026 The qclone developers.
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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qclone {

// Exact rational scalar over arbitrary-precision integers.
// Canonical form is maintained at all times: denominator > 0 and
// gcd(|numerator|, denominator) = 1. All arithmetic and comparisons
// are exact; no floating point is involved until to_double().
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational(mpz_class num, mpz_class den) {
    if (den == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(std::move(num), std::move(den));
    value_.canonicalize();
  }

  explicit Rational(const mpz_class& n) : value_(n) {}

  // Parses the canonical "p/q" rendering (also accepts a bare integer).
  static Rational from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(mpz_class(text), mpz_class(1));
    }
    return Rational(mpz_class(text.substr(0, slash)),
                    mpz_class(text.substr(slash + 1)));
  }

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Exact square root if both numerator and denominator are perfect
  // squares (and the value is nonnegative); otherwise nullopt.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(num().get_mpz_t()) ||
        !mpz_perfect_square_p(den().get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rational(std::move(rn), std::move(rd));
  }

  double to_double() const { return value_.get_d(); }

  // Always renders with the '/' separator, e.g. "2/3", "1/1", "-5/6".
  std::string str() const {
    return num().get_str() + "/" + den().get_str();
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ + y.value_), canonical_tag{});
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ - y.value_), canonical_tag{});
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ * y.value_), canonical_tag{});
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(x.value_ / y.value_), canonical_tag{});
  }
  Rational operator-() const {
    return Rational(mpq_class(-value_), canonical_tag{});
  }

  Rational& operator+=(const Rational& x) { value_ += x.value_; return *this; }
  Rational& operator-=(const Rational& x) { value_ -= x.value_; return *this; }
  Rational& operator*=(const Rational& x) { value_ *= x.value_; return *this; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) == 0;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) < 0;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

 private:
  struct canonical_tag {};
  Rational(mpq_class q, canonical_tag) : value_(std::move(q)) {}

  mpq_class value_;
};

}  // namespace qclone
