// Copyright 2026 The Authors.
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

#ifndef NETAUCTION_NUMBER_HPP_
#define NETAUCTION_NUMBER_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netauction {

using Rational = mpq_class;

// Accepts "12", "0.375", "-3", "7/2". No floating point is involved.
Rational parse_rational(std::string_view text);

// Terminating decimals are printed as decimals, everything else as p/q.
std::string format_rational(const Rational& value);

// Exact element of Q(sqrt 2, sqrt 3, ...): a rational part plus rational
// multiples of square roots of squarefree integers. Critical bids of the
// sqrt-k ranked rules live here.
class Real {
 public:
  Real() = default;
  Real(const Rational& value) : rational_(value) {}  // NOLINT
  Real(long value) : rational_(value) {}             // NOLINT
  Real(int value) : rational_(value) {}              // NOLINT

  // sqrt(num / den); den > 0.
  static Real sqrt_ratio(std::uint64_t num, std::uint64_t den);

  bool is_rational() const { return surds_.empty(); }
  const Rational& rational_part() const { return rational_; }
  int sign() const;

  Real operator-() const;
  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }

  friend bool operator==(const Real& a, const Real& b);
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);

  double to_double() const;
  std::string to_string() const;

  // Largest integer n with n <= *this.
  mpz_class floor() const;

  struct Surd {
    std::uint64_t radicand;  // squarefree, > 1
    Rational coeff;          // nonzero
  };
  const std::vector<Surd>& surds() const { return surds_; }

 private:
  Rational rational_;
  std::vector<Surd> surds_;  // sorted by radicand
};

// Some rational q with lo < q < hi. Requires lo < hi.
Rational rational_between(const Real& lo, const Real& hi);

// Smallest integer strictly above value.
Rational rational_above(const Real& value);

}  // namespace netauction

#endif  // NETAUCTION_NUMBER_HPP_
