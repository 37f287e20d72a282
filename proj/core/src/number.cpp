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

#include "netauction/number.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "netauction/errors.hpp"

namespace netauction {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

// Radicand 1 carries the rational part.
using Terms = std::vector<std::pair<std::uint64_t, Rational>>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("radicand overflow");
  }
  return out;
}

Terms normalize(std::map<std::uint64_t, Rational>& acc) {
  Terms out;
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  }
  return out;
}

Terms multiply(const Terms& a, const Terms& b) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::uint64_t g = std::gcd(ma, mb);
      Rational c = ca * cb * g;
      acc[checked_mul(ma / g, mb / g)] += c;
    }
  }
  return normalize(acc);
}

Terms add(const Terms& a, const Terms& b, int sign_b) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [m, c] : a) acc[m] += c;
  for (const auto& [m, c] : b) {
    if (sign_b > 0) {
      acc[m] += c;
    } else {
      acc[m] -= c;
    }
  }
  return normalize(acc);
}

std::uint64_t largest_prime_factor(std::uint64_t m) {
  std::uint64_t best = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      best = p;
      m /= p;
    }
  }
  return m > 1 ? std::max(best, m) : best;
}

// Split on the largest prime p: t = x + sqrt(p) * y, where neither x nor y
// mentions p. Then sign(t) follows from sign(x), sign(y) and sign(x^2 - p y^2).
int sign_of(const Terms& t) {
  if (t.empty()) return 0;
  if (t.size() == 1) return sgn(t.front().second);
  std::uint64_t p = 1;
  for (const auto& term : t) p = std::max(p, largest_prime_factor(term.first));
  Terms x, y;
  for (const auto& [m, c] : t) {
    if (m % p == 0) {
      y.emplace_back(m / p, c);
    } else {
      x.emplace_back(m, c);
    }
  }
  const int sx = sign_of(x);
  const int sy = sign_of(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  Terms py2 = multiply(y, y);
  for (auto& term : py2) term.second *= static_cast<unsigned long>(p);
  const int sd = sign_of(add(multiply(x, x), py2, -1));
  if (sd > 0) return sx;
  if (sd < 0) return sy;
  return 0;
}

Terms to_terms(const Real& r) {
  Terms t;
  if (sgn(r.rational_part()) != 0) t.emplace_back(1, r.rational_part());
  for (const auto& s : r.surds()) t.emplace_back(s.radicand, s.coeff);
  return t;
}

std::string format_coeff_surd(const Rational& c, std::uint64_t m, bool leading) {
  std::string out;
  Rational a = abs(c);
  if (sgn(c) < 0) {
    out += leading ? "-" : " - ";
  } else if (!leading) {
    out += " + ";
  }
  if (m == 1) return out + format_rational(a);
  if (a != 1) out += format_rational(a) + "*";
  return out + "sqrt(" + std::to_string(m) + ")";
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    out = Rational(parse_integer(num), d);
    out.canonicalize();
  } else {
    std::string_view whole = s;
    std::string_view frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      whole = s.substr(0, dot);
      frac = s.substr(dot + 1);
      if (!frac.empty() && !all_digits(frac)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
      }
      if (whole.empty() && frac.empty()) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
      }
    }
    if (!whole.empty() && !all_digits(whole)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    if (whole.empty() && frac.empty()) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = whole.empty() ? mpz_class(0) : parse_integer(whole);
    num = num * scale + (frac.empty() ? mpz_class(0) : parse_integer(frac));
    out = Rational(num, scale);
    out.canonicalize();
  }
  return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str();
  const unsigned places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = abs(value.get_num()) * (scale / value.get_den());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return sgn(value) < 0 ? "-" + digits : digits;
}

Real Real::sqrt_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("sqrt_ratio: zero denominator");
  // sqrt(num/den) = sqrt(num*den) / den, then pull square factors out.
  std::uint64_t m = checked_mul(num, den);
  Real out;
  if (m == 0) return out;
  std::uint64_t outside = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      outside *= p;
    }
  }
  Rational c(static_cast<unsigned long>(outside), static_cast<unsigned long>(den));
  c.canonicalize();
  if (m == 1) {
    out.rational_ = c;
  } else {
    out.surds_.push_back({m, c});
  }
  return out;
}

int Real::sign() const {
  if (surds_.empty()) return sgn(rational_);
  return sign_of(to_terms(*this));
}

Real Real::operator-() const {
  Real out(*this);
  out.rational_ = -out.rational_;
  for (auto& s : out.surds_) s.coeff = -s.coeff;
  return out;
}

Real& Real::operator+=(const Real& other) {
  rational_ += other.rational_;
  if (other.surds_.empty()) return *this;
  std::map<std::uint64_t, Rational> acc;
  for (const auto& s : surds_) acc[s.radicand] += s.coeff;
  for (const auto& s : other.surds_) acc[s.radicand] += s.coeff;
  surds_.clear();
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) surds_.push_back({m, std::move(c)});
  }
  return *this;
}

Real& Real::operator-=(const Real& other) { return *this += -other; }

Real& Real::operator*=(const Real& other) {
  if (surds_.empty() && other.surds_.empty()) {
    rational_ *= other.rational_;
    return *this;
  }
  Terms a = to_terms(*this);
  Terms b = to_terms(other);
  Terms prod = multiply(a, b);
  rational_ = 0;
  surds_.clear();
  for (auto& [m, c] : prod) {
    if (m == 1) {
      rational_ = std::move(c);
    } else {
      surds_.push_back({m, std::move(c)});
    }
  }
  return *this;
}

bool operator==(const Real& a, const Real& b) {
  if (a.rational_ != b.rational_ || a.surds_.size() != b.surds_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.surds_.size(); ++i) {
    if (a.surds_[i].radicand != b.surds_[i].radicand ||
        a.surds_[i].coeff != b.surds_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  int s;
  if (a.surds_.empty() && b.surds_.empty()) {
    s = cmp(a.rational_, b.rational_);
  } else {
    s = (a - b).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Real::to_double() const {
  double out = rational_.get_d();
  for (const auto& s : surds_) {
    out += s.coeff.get_d() * std::sqrt(static_cast<double>(s.radicand));
  }
  return out;
}

std::string Real::to_string() const {
  if (surds_.empty()) return format_rational(rational_);
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : to_terms(*this)) {
    out += format_coeff_surd(c, m, leading);
    leading = false;
  }
  return out;
}

mpz_class Real::floor() const {
  mpz_class n;
  if (surds_.empty()) {
    mpz_fdiv_q(n.get_mpz_t(), rational_.get_num_mpz_t(), rational_.get_den_mpz_t());
    return n;
  }
  n = mpz_class(std::floor(to_double()));
  while (Real(Rational(n)) > *this) n -= 1;
  while (Real(Rational(n + 1)) <= *this) n += 1;
  return n;
}

Rational rational_between(const Real& lo, const Real& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rational_between: empty interval");
  if (lo.is_rational() && hi.is_rational()) {
    return (lo.rational_part() + hi.rational_part()) / 2;
  }
  for (mpz_class scale = 1;; scale *= 2) {
    Real scaled = lo * Real(Rational(scale));
    Rational q(scaled.floor() + 1, scale);
    q.canonicalize();
    if (Real(q) < hi) return q;
  }
}

Rational rational_above(const Real& value) { return Rational(value.floor() + 1); }

}  // namespace netauction
