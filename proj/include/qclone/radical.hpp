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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qclone/rational.hpp"

namespace qclone {

// Exact scalar of the form  sum_i q_i * sqrt(s_i)  with q_i rational and
// s_i distinct squarefree positive integers (s_i = 1 carries the rational
// part). Terms are keyed by the sorted prime factors of s_i, so the
// representation is canonical: an empty sum is exactly zero, and a
// canonically nonzero sum has nonzero value (square roots of distinct
// squarefree integers are linearly independent over the rationals).
// Zero tests, signs and comparisons are therefore exact.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(Rational r);  // NOLINT
  RadicalSum(long n) : RadicalSum(Rational(n)) {}  // NOLINT

  // sqrt of a nonnegative rational; the radicand is factored by trial
  // division, so it must be a perfect square or have only small factors.
  static RadicalSum sqrt_of(const Rational& radicand);

  // sqrt of a product of small nonnegative integer factors. Each factor is
  // factored separately; the product itself is never factored, which keeps
  // trial division cheap even when the product is large.
  static RadicalSum sqrt_of_product(std::initializer_list<std::uint64_t> factors);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Value as an exact rational; throws std::logic_error if irrational.
  Rational as_rational() const;

  // Exact sign (-1, 0, +1), decided without floating point.
  int sign() const;

  double to_double() const;
  std::string str() const;

  RadicalSum squared() const { return *this * *this; }

  RadicalSum operator-() const;
  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  friend RadicalSum operator+(RadicalSum x, const RadicalSum& y) { return x += y; }
  friend RadicalSum operator-(RadicalSum x, const RadicalSum& y) { return x -= y; }
  friend RadicalSum operator*(const RadicalSum& x, const RadicalSum& y);

  friend bool operator==(const RadicalSum& x, const RadicalSum& y) {
    return x.terms_ == y.terms_;
  }

 private:
  // Sorted distinct primes whose product is the squarefree radicand;
  // the empty key is the rational term.
  using Radicand = std::vector<std::uint64_t>;

  void add_term(const Radicand& radicand, const Rational& coefficient);

  std::map<Radicand, Rational> terms_;
};

}  // namespace qclone
