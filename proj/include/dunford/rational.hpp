/*
   Copyright 2026 The dunford authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dunford {

using BigInt = mpz_class;

/**
 * Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
 *
 * Thin value wrapper over GMP's mpq. Operators return concrete Rationals rather than
 * gmpxx expression templates so the type composes cleanly with Eigen.
 */
class Rational {
 public:
  Rational() = default;

  template <std::integral Int>
  Rational(Int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& integer) : value_(integer) {}

  /// Throws PreconditionError(DivisionByZero) when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts an optionally signed integer or "p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws PreconditionError(DivisionByZero).
  Rational& operator/=(const Rational& rhs);

  Rational operator-() const;

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace dunford

namespace Eigen {

template <>
struct NumTraits<dunford::Rational> : GenericNumTraits<dunford::Rational> {
  using Real = dunford::Rational;
  using NonInteger = dunford::Rational;
  using Literal = dunford::Rational;
  using Nested = dunford::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40,
  };

  // Exact arithmetic: no rounding, no precision threshold.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
