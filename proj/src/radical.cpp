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

#include "qclone/radical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qclone {
namespace {

// Largest divisor probed when factoring a radicand wholesale.
constexpr std::uint64_t kTrialDivisionLimit = 1u << 22;

// prime -> exponent map built by trial division of small factors.
using ExponentMap = std::map<std::uint64_t, unsigned>;

void factor_into(std::uint64_t value, ExponentMap& exponents) {
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    while (value % d == 0) {
      ++exponents[d];
      value /= d;
    }
  }
  if (value > 1) ++exponents[value];
}

// Splits a factored integer into (perfect-square root, squarefree part).
std::pair<mpz_class, std::vector<std::uint64_t>> split_square(
    const ExponentMap& exponents) {
  mpz_class square_root = 1;
  std::vector<std::uint64_t> squarefree;
  for (const auto& [prime, exp] : exponents) {
    mpz_class p(static_cast<unsigned long>(prime));
    for (unsigned i = 0; i < exp / 2; ++i) square_root *= p;
    if (exp % 2 != 0) squarefree.push_back(prime);
  }
  return {square_root, squarefree};
}

ExponentMap factor_mpz(const mpz_class& value) {
  ExponentMap exponents;
  mpz_class rest = value;
  for (std::uint64_t d = 2; d <= kTrialDivisionLimit; ++d) {
    mpz_class dd(static_cast<unsigned long>(d));
    if (dd * dd > rest) break;
    while (mpz_divisible_p(rest.get_mpz_t(), dd.get_mpz_t())) {
      ++exponents[d];
      rest /= dd;
    }
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) {
      throw std::domain_error("RadicalSum: radicand has a factor too large to process");
    }
    ++exponents[rest.get_ui()];
  }
  return exponents;
}

}  // namespace

RadicalSum::RadicalSum(Rational r) {
  add_term({}, r);
}

RadicalSum RadicalSum::sqrt_of(const Rational& radicand) {
  if (radicand.sign() < 0) {
    throw std::domain_error("RadicalSum: negative radicand");
  }
  if (radicand.is_zero()) return RadicalSum();
  // sqrt(p/q) = sqrt(p*q)/q
  const mpz_class n = radicand.num() * radicand.den();
  mpz_class root;
  RadicalSum result;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    result.add_term({}, Rational(root, radicand.den()));
    return result;
  }
  auto [square_root, squarefree] = split_square(factor_mpz(n));
  result.add_term(squarefree, Rational(square_root, radicand.den()));
  return result;
}

RadicalSum RadicalSum::sqrt_of_product(
    std::initializer_list<std::uint64_t> factors) {
  ExponentMap exponents;
  for (std::uint64_t f : factors) {
    if (f == 0) return RadicalSum();
    factor_into(f, exponents);
  }
  auto [square_root, squarefree] = split_square(exponents);
  RadicalSum result;
  result.add_term(squarefree, Rational(square_root, mpz_class(1)));
  return result;
}

void RadicalSum::add_term(const Radicand& radicand, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational RadicalSum::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) {
    throw std::logic_error("RadicalSum: value is irrational: " + str());
  }
  return terms_.begin()->second;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum result;
  for (const auto& [radicand, coefficient] : terms_) {
    result.terms_.emplace(radicand, -coefficient);
  }
  return result;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [radicand, coefficient] : other.terms_) {
    add_term(radicand, coefficient);
  }
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const auto& [radicand, coefficient] : other.terms_) {
    add_term(radicand, -coefficient);
  }
  return *this;
}

RadicalSum operator*(const RadicalSum& x, const RadicalSum& y) {
  RadicalSum result;
  for (const auto& [rx, cx] : x.terms_) {
    for (const auto& [ry, cy] : y.terms_) {
      // sqrt(s)*sqrt(t) = g*sqrt((s/g)*(t/g)) with g the shared primes
      Rational coefficient = cx * cy;
      RadicalSum::Radicand merged;
      std::set_symmetric_difference(rx.begin(), rx.end(), ry.begin(), ry.end(),
                                    std::back_inserter(merged));
      RadicalSum::Radicand shared;
      std::set_intersection(rx.begin(), rx.end(), ry.begin(), ry.end(),
                            std::back_inserter(shared));
      for (std::uint64_t p : shared) {
        coefficient *= Rational(mpz_class(static_cast<unsigned long>(p)));
      }
      result.add_term(merged, coefficient);
    }
  }
  return result;
}

double RadicalSum::to_double() const {
  double total = 0.0;
  for (const auto& [radicand, coefficient] : terms_) {
    double root = 1.0;
    if (!radicand.empty()) {
      mpz_class product = 1;
      for (std::uint64_t p : radicand) product *= mpz_class(static_cast<unsigned long>(p));
      root = std::sqrt(product.get_d());
    }
    total += coefficient.to_double() * root;
  }
  return total;
}

int RadicalSum::sign() const {
  if (terms_.empty()) return 0;
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& [radicand, coefficient] : terms_) {
    (coefficient.sign() > 0 ? any_positive : any_negative) = true;
  }
  if (!any_negative) return 1;
  if (!any_positive) return -1;

  // Mixed signs: bracket each sqrt by exact rational bounds and refine.
  // Termination is guaranteed because a canonically nonzero sum is nonzero.
  for (unsigned bits = 64; bits <= 1u << 14; bits *= 2) {
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    Rational low(0), high(0);
    for (const auto& [radicand, coefficient] : terms_) {
      if (radicand.empty()) {
        low += coefficient;
        high += coefficient;
        continue;
      }
      mpz_class product = 1;
      for (std::uint64_t p : radicand) product *= mpz_class(static_cast<unsigned long>(p));
      mpz_class scaled = product;
      mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
      mpz_class floor_root;
      mpz_sqrt(floor_root.get_mpz_t(), scaled.get_mpz_t());
      const Rational root_low(floor_root, scale);
      const Rational root_high(floor_root + 1, scale);
      if (coefficient.sign() > 0) {
        low += coefficient * root_low;
        high += coefficient * root_high;
      } else {
        low += coefficient * root_high;
        high += coefficient * root_low;
      }
    }
    if (low.sign() > 0) return 1;
    if (high.sign() < 0) return -1;
  }
  throw std::logic_error("RadicalSum: sign resolution exceeded precision cap");
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [radicand, coefficient] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << coefficient.str();
    if (!radicand.empty()) {
      mpz_class product = 1;
      for (std::uint64_t p : radicand) product *= mpz_class(static_cast<unsigned long>(p));
      out << "*sqrt(" << product.get_str() << ")";
    }
  }
  return out.str();
}

}  // namespace qclone
