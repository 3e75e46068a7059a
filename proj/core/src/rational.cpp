// Copyright 2026 The approachlab Authors
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

#include "approachlab/rational.hpp"

#include <climits>
#include <ostream>

#include "approachlab/error.hpp"

namespace approachlab {
namespace {

using u128 = unsigned __int128;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

int ctz128(u128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

mpz_class mpz_from_u128(u128 magnitude, bool negative) {
  const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(magnitude),
                                  static_cast<std::uint64_t>(magnitude >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (negative) z = -z;
  return z;
}

bool fits_small(const mpq_class& q) {
  return mpz_fits_slong_p(q.get_num_mpz_t()) != 0 && mpz_fits_slong_p(q.get_den_mpz_t()) != 0 &&
         mpz_cmp_si(q.get_num_mpz_t(), LONG_MIN) != 0;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

mpz_class Rational::mpz_from_int64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZeroError();
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) : rep_(value) {
  std::get<mpq_class>(rep_).canonicalize();
  normalize_big();
}

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) throw DivisionByZeroError();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const bool negative = num < 0;
  u128 mag = negative ? static_cast<u128>(-num) : static_cast<u128>(num);
  u128 d = static_cast<u128>(den);
  if (mag == 0) return Rational();
  const u128 g = gcd128(mag, d);
  mag /= g;
  d /= g;
  Rational out;
  if (mag <= static_cast<u128>(kMaxInt64) && d <= static_cast<u128>(kMaxInt64)) {
    const auto n64 = static_cast<std::int64_t>(mag);
    out.rep_ = Small{negative ? -n64 : n64, static_cast<std::int64_t>(d)};
  } else {
    mpq_class q(mpz_from_u128(mag, negative), mpz_from_u128(d, false));
    out.rep_ = std::move(q);
  }
  return out;
}

void Rational::normalize_big() {
  auto* q = std::get_if<mpq_class>(&rep_);
  if (q == nullptr || !fits_small(*q)) return;
  rep_ = Small{mpz_get_si(q->get_num_mpz_t()), mpz_get_si(q->get_den_mpz_t())};
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (const auto* s = small()) {
    if (s->den == 1) return std::to_string(s->num);
    return std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  return std::get<mpq_class>(rep_).get_str();
}

double Rational::to_double() const {
  if (const auto* s = small()) {
    return static_cast<double>(s->num) / static_cast<double>(s->den);
  }
  return std::get<mpq_class>(rep_).get_d();
}

mpq_class Rational::to_mpq() const {
  if (const auto* s = small()) {
    return mpq_class(mpz_from_int64(s->num), mpz_from_int64(s->den));
  }
  return std::get<mpq_class>(rep_);
}

mpz_class Rational::numerator() const {
  if (const auto* s = small()) return mpz_from_int64(s->num);
  return std::get<mpq_class>(rep_).get_num();
}

mpz_class Rational::denominator() const {
  if (const auto* s = small()) return mpz_from_int64(s->den);
  return std::get<mpq_class>(rep_).get_den();
}

int Rational::sign() const {
  if (const auto* s = small()) return (s->num > 0) - (s->num < 0);
  return sgn(std::get<mpq_class>(rep_));
}

bool Rational::is_integer() const {
  if (const auto* s = small()) return s->den == 1;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

bool Rational::is_one() const {
  const auto* s = small();
  return s != nullptr && s->num == 1 && s->den == 1;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError();
  if (const auto* s = small()) {
    Rational out;
    out.rep_ = s->num < 0 ? Small{-s->den, -s->num} : Small{s->den, s->num};
    return out;
  }
  mpq_class inv = 1 / std::get<mpq_class>(rep_);
  return Rational(inv);
}

Rational Rational::operator-() const {
  if (const auto* s = small()) {
    Rational out;
    out.rep_ = Small{-s->num, s->den};
    return out;
  }
  return Rational(mpq_class(-std::get<mpq_class>(rep_)));
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const auto* a = small();
  const auto* b = rhs.small();
  if (a != nullptr && b != nullptr) {
    if (a->den == b->den) {
      return *this = from_i128(static_cast<__int128>(a->num) + b->num, a->den);
    }
    const __int128 num = static_cast<__int128>(a->num) * b->den + static_cast<__int128>(b->num) * a->den;
    const __int128 den = static_cast<__int128>(a->den) * b->den;
    return *this = from_i128(num, den);
  }
  return *this = Rational(mpq_class(to_mpq() + rhs.to_mpq()));
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (rhs.is_one()) return *this;
  if (is_one()) return *this = rhs;
  const auto* a = small();
  const auto* b = rhs.small();
  if (a != nullptr && b != nullptr) {
    const auto mag = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
    const auto g1 = static_cast<std::int64_t>(gcd64(mag(a->num), static_cast<std::uint64_t>(b->den)));
    const auto g2 = static_cast<std::int64_t>(gcd64(mag(b->num), static_cast<std::uint64_t>(a->den)));
    const __int128 num = static_cast<__int128>(a->num / g1) * (b->num / g2);
    const __int128 den = static_cast<__int128>(a->den / g2) * (b->den / g1);
    return *this = from_i128(num, den);
  }
  return *this = Rational(mpq_class(to_mpq() * rhs.to_mpq()));
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.reciprocal(); }

bool operator==(const Rational& lhs, const Rational& rhs) {
  const auto* a = lhs.small();
  const auto* b = rhs.small();
  if (a != nullptr && b != nullptr) return a->num == b->num && a->den == b->den;
  if (a != nullptr || b != nullptr) return false;
  return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const auto* a = lhs.small();
  const auto* b = rhs.small();
  if (a != nullptr && b != nullptr) {
    const __int128 l = static_cast<__int128>(a->num) * b->den;
    const __int128 r = static_cast<__int128>(b->num) * a->den;
    return l <=> r;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace approachlab
