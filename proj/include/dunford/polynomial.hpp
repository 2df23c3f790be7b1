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

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored constant term first. The representation is canonical: the
 * highest stored coefficient is nonzero, and the zero polynomial stores nothing. Its
 * degree is Degree::minus_infinity(), which is not an integer and cannot be used in
 * arithmetic by accident.
 *
 * Besides ring arithmetic this header provides Euclidean division, monic gcd, the
 * extended gcd (Bezout cofactors), squarefree part, composition modulo a polynomial,
 * and the Chinese remainder solver for pairwise coprime moduli.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dunford/errors.hpp"

namespace dunford {

class Degree {
 public:
  static constexpr Degree minus_infinity() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t value) noexcept : value_(value) {}

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }

  /// Throws std::bad_optional_access for minus infinity.
  constexpr std::size_t value() const { return value_.value(); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (a.is_minus_infinity() || b.is_minus_infinity()) {
      return b.is_minus_infinity() <=> a.is_minus_infinity();
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  constexpr Degree() noexcept = default;
  std::optional<std::size_t> value_;
};

template <typename Scalar>
class Polynomial {
 public:
  using Coefficients = std::vector<Scalar>;

  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }
  explicit Polynomial(Coefficients coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(Coefficients{c}); }

  static Polynomial monomial(const Scalar& c, std::size_t power) {
    Coefficients coeffs(power + 1, Scalar(0));
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
  }

  /// The indeterminate X.
  static Polynomial x() { return monomial(Scalar(1), 1); }

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const { return coeffs_.size() <= 1; }

  const Scalar& leading() const {
    if (is_zero()) throw PreconditionError(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
    return coeffs_.back();
  }

  Scalar coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Scalar(0);
  }

  std::span<const Scalar> coefficients() const { return coeffs_; }

  /// Horner evaluation at a scalar.
  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  /// Throws PreconditionError(DivisionByZero) for c == 0.
  Polynomial& operator/=(const Scalar& c) {
    if (c == Scalar(0)) throw PreconditionError(ErrorKind::DivisionByZero, "polynomial divided by zero scalar");
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    Coefficients out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend Polynomial operator/(Polynomial p, const Scalar& c) { return p /= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  Coefficients coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  typename Polynomial<Scalar>::Coefficients out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(out));
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, std::size_t exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  Polynomial<Scalar> base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

template <typename Scalar>
struct DivRem {
  Polynomial<Scalar> quotient;
  Polynomial<Scalar> remainder;
};

/// Euclidean division: dividend = divisor * quotient + remainder, deg(remainder) < deg(divisor).
template <typename Scalar>
DivRem<Scalar> divrem(const Polynomial<Scalar>& dividend, const Polynomial<Scalar>& divisor) {
  if (divisor.is_zero()) {
    throw PreconditionError(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
  }
  const std::size_t dv = divisor.degree().value();
  if (dividend.degree() < divisor.degree()) return {{}, dividend};

  auto rem = std::vector<Scalar>(dividend.coefficients().begin(), dividend.coefficients().end());
  const auto d = divisor.coefficients();
  const Scalar& lead = divisor.leading();
  std::vector<Scalar> quot(rem.size() - dv, Scalar(0));
  for (std::size_t k = rem.size(); k-- > dv;) {
    if (rem[k] == Scalar(0)) continue;
    const Scalar factor = rem[k] / lead;
    quot[k - dv] = factor;
    for (std::size_t j = 0; j <= dv; ++j) rem[k - dv + j] -= factor * d[j];
  }
  rem.resize(dv);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Remainder of the Euclidean division of p by modulus.
template <typename Scalar>
Polynomial<Scalar> mod(const Polynomial<Scalar>& p, const Polynomial<Scalar>& modulus) {
  if (p.degree() < modulus.degree() && !modulus.is_zero()) return p;
  return divrem(p, modulus).remainder;
}

/// Monic greatest common divisor. Throws BothZero when both inputs vanish.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Polynomial<Scalar> r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename Scalar>
struct Bezout {
  Polynomial<Scalar> gcd;  ///< monic
  Polynomial<Scalar> u;
  Polynomial<Scalar> v;
};

/// Extended Euclid: u*a + v*b = gcd(a, b), with the gcd monic.
template <typename Scalar>
Bezout<Scalar> extended_gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  using Poly = Polynomial<Scalar>;
  if (a.is_zero() && b.is_zero()) throw PreconditionError(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar(1)), s1;
  Poly t0, t1 = Poly::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar lead = r0.leading();
  return {r0 / lead, s0 / lead, t0 / lead};
}

/// P / gcd(P, P'), monic. Same roots as P, each simple.
template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw PreconditionError(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  const auto g = gcd(p, derivative(p));
  return divrem(p, g).quotient.monic();
}

/**
 * F(G) mod M by Horner's scheme, reducing after every step so intermediate degrees
 * stay below 2 deg(M).
 */
template <typename Scalar>
Polynomial<Scalar> compose_mod(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g,
                               const Polynomial<Scalar>& modulus) {
  if (modulus.is_constant()) {
    throw PreconditionError(ErrorKind::ZeroModulus, "composition modulus must have degree >= 1");
  }
  const Polynomial<Scalar> inner = mod(g, modulus);
  const auto c = f.coefficients();
  Polynomial<Scalar> acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mod(acc * inner + Polynomial<Scalar>::constant(*it), modulus);
  }
  return acc;
}

/**
 * Idempotents of the Chinese remainder decomposition for pairwise coprime moduli P_1..P_k.
 *
 * Returns E_i = U_i Q_i with Q_i = prod_{j != i} P_j, where U_i inverts Q_i modulo P_i.
 * Then E_i = 1 mod P_i, E_i = 0 mod P_j (j != i), deg E_i < sum deg P_j and
 * E_1 + ... + E_k = 1 exactly.
 */
template <typename Scalar>
std::vector<Polynomial<Scalar>> crt_idempotents(std::span<const Polynomial<Scalar>> moduli) {
  using Poly = Polynomial<Scalar>;
  if (moduli.empty()) throw PreconditionError(ErrorKind::LengthMismatch, "no moduli");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i].is_zero()) throw PreconditionError(ErrorKind::ZeroModulus, "zero modulus");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (gcd(moduli[i], moduli[j]) != Poly::constant(Scalar(1))) throw NotCoprimeError(i, j);
    }
  }

  std::vector<Poly> out;
  out.reserve(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    Poly cofactor = Poly::constant(Scalar(1));
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      if (j != i) cofactor *= moduli[j];
    }
    // u * cofactor + v * P_i = 1, and deg u < deg P_i keeps the product reduced.
    const auto bez = extended_gcd(cofactor, moduli[i]);
    out.push_back(mod(bez.u, moduli[i]) * cofactor);
  }
  return out;
}

/// The unique R with deg R < sum deg(moduli) and R = residues[i] mod moduli[i] for all i.
template <typename Scalar>
Polynomial<Scalar> crt_solve(std::span<const Polynomial<Scalar>> residues,
                             std::span<const Polynomial<Scalar>> moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw PreconditionError(ErrorKind::LengthMismatch, "residue and modulus lists must have the same nonzero length");
  }
  const auto idempotents = crt_idempotents(moduli);
  Polynomial<Scalar> product = Polynomial<Scalar>::constant(Scalar(1));
  for (const auto& m : moduli) product *= m;

  Polynomial<Scalar> solution;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    solution += idempotents[i] * mod(residues[i], moduli[i]);
  }
  return mod(solution, product);
}

template <typename Scalar>
Polynomial<Scalar> crt_solve(const std::vector<Polynomial<Scalar>>& residues,
                             const std::vector<Polynomial<Scalar>>& moduli) {
  return crt_solve(std::span<const Polynomial<Scalar>>(residues), std::span<const Polynomial<Scalar>>(moduli));
}

}  // namespace dunford
