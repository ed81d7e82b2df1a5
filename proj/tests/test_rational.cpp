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

#include <doctest.h>

#include <cmath>
#include <random>

#include "qclone/cloner.hpp"
#include "qclone/rational.hpp"

using qclone::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);

  const Rational negative(1, -2);
  CHECK(negative.num() == -1);
  CHECK(negative.den() == 2);

  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK(Rational(-1, 3).abs() == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::invalid_argument);

  // no precision loss on large intermediate values
  const mpz_class big = qclone::factorial(60);
  CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
  CHECK(Rational(big + 1, big) - Rational(1) == Rational(mpz_class(1), big));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(5, 10) <= Rational(1, 2));
  CHECK(Rational(5, 10) >= Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(1, 3));
  CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("sum and difference round-trip on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::uniform_int_distribution<long> den_dist(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational x(dist(rng), den_dist(rng));
    const Rational y(dist(rng), den_dist(rng));
    CHECK(x + y - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK((x * y).den() > 0);
  }
}

TEST_CASE("sqrt_exact") {
  REQUIRE(Rational(4, 9).sqrt_exact().has_value());
  CHECK(*Rational(4, 9).sqrt_exact() == Rational(2, 3));
  CHECK(*Rational(0).sqrt_exact() == Rational(0));
  CHECK(!Rational(2).sqrt_exact().has_value());
  CHECK(!Rational(1, 2).sqrt_exact().has_value());
  CHECK(!Rational(-4, 9).sqrt_exact().has_value());
}

TEST_CASE("rendering and parsing") {
  CHECK(Rational(2, 3).str() == "2/3");
  CHECK(Rational(1).str() == "1/1");
  CHECK(Rational(-5, 6).str() == "-5/6");
  CHECK(Rational::from_string("2/3") == Rational(2, 3));
  CHECK(Rational::from_string("-5/6") == Rational(-5, 6));
  CHECK(Rational::from_string("7") == Rational(7));
  for (const Rational& r : {Rational(0), Rational(22, 7), Rational(-9, 4)}) {
    CHECK(Rational::from_string(r.str()) == r);
  }
}

TEST_CASE("to_double accuracy") {
  CHECK(std::abs(Rational(2, 3).to_double() - 2.0 / 3.0) < 1e-15);
  CHECK(Rational(1, 2).to_double() == 0.5);
}
