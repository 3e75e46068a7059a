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

#ifndef APPROACHLAB_RATIONAL_HPP_
#define APPROACHLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace approachlab {

namespace detail {
struct SmallRational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
}  // namespace detail

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are kept inline and
// combined with 128-bit intermediates; anything larger is promoted to a GMP
// rational and demoted again as soon as it fits. Both representations are
// canonical, so equality and ordering never depend on which one is active.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : rep_(Small{static_cast<std::int64_t>(value), 1}) {
    if (static_cast<std::int64_t>(value) == kMinInt64) rep_ = mpq_class(mpz_from_int64(kMinInt64));
  }
  template <std::unsigned_integral U>
  Rational(U value) {
    if (value <= static_cast<std::uint64_t>(kMaxInt64)) {
      rep_ = Small{static_cast<std::int64_t>(value), 1};
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &value);
      rep_ = mpq_class(z);
    }
  }

  // num / den, reduced. Throws DivisionByZeroError when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  // Accepts "n", "-n", "n/d" and "-n/d" with decimal digits; d must be nonzero.
  // Non-canonical input such as "2/4" is accepted and reduced.
  static Rational parse(std::string_view text);

  // Canonical text: "n/d" in lowest terms, or "n" when the denominator is 1.
  std::string str() const;
  double to_double() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_one() const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  // Throws DivisionByZeroError for zero.
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // Inline representation, exposed for the accumulation kernels in linalg.
  using Small = detail::SmallRational;
  const Small* small() const { return std::get_if<Small>(&rep_); }

  // Builds a canonical value from a 128-bit fraction (den != 0).
  static Rational from_i128(__int128 num, __int128 den);

 private:
  static constexpr std::int64_t kMaxInt64 = INT64_MAX;
  static constexpr std::int64_t kMinInt64 = INT64_MIN;
  static mpz_class mpz_from_int64(std::int64_t v);

  void normalize_big();

  std::variant<Small, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace approachlab

#endif  // APPROACHLAB_RATIONAL_HPP_
