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
 * @file decomposition.hpp
 * @brief Jordan-Chevalley (Dunford) decomposition A = D + N over an exact field.
 *
 * Three routes to the same unique pair:
 *
 * - dunford_newton: Newton iteration A <- A - P(A) P'(A)^{-1} on matrices, with P the
 *   squarefree part of the characteristic polynomial. Needs no eigenvalues.
 * - dunford_chevalley: the same fixed point computed on polynomials modulo chi_A,
 *   Q <- Q_0(Q) mod chi_A with Q_0 = X - P V and U P + V P' = 1. Needs no eigenvalues and
 *   yields a generator Q with D = Q(A).
 * - dunford_spectral: D = sum lambda_i pi_i from known eigenvalues and the spectral
 *   projectors pi_i, which are Chinese remainder idempotents evaluated at A.
 *
 * verify_decomposition checks a candidate pair independently of how it was produced.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dunford/matrix.hpp"
#include "dunford/polynomial.hpp"

namespace dunford {

enum class Method { newton, chevalley, spectral };

inline const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::newton: return "newton";
    case Method::chevalley: return "chevalley";
    case Method::spectral: return "spectral";
  }
  return "unknown";
}

template <typename Scalar>
struct DunfordResult {
  Matrix<Scalar> diagonalizable;  ///< D
  Matrix<Scalar> nilpotent;       ///< N = A - D
  std::optional<Polynomial<Scalar>> generator;  ///< Q with D = Q(A), deg Q < n
  Method method = Method::newton;
  std::size_t iterations = 0;
};

template <typename Scalar>
struct Eigenvalue {
  Scalar value;
  std::size_t multiplicity = 1;
};

template <typename Scalar>
using Spectrum = std::vector<Eigenvalue<Scalar>>;

struct VerificationReport {
  bool sum_ok = false;           ///< A = D + N
  bool commute_ok = false;       ///< DN = ND
  bool nilpotent_ok = false;     ///< char_poly(N) = X^n
  bool semisimple_ok = false;    ///< squarefree_part(char_poly(D)) annihilates D
  bool commutes_with_a = false;  ///< AD = DA
  std::optional<bool> generator_ok;  ///< generator(A) = D and deg < n, when a generator is given

  bool all() const {
    return sum_ok && commute_ok && nilpotent_ok && semisimple_ok && commutes_with_a && generator_ok.value_or(true);
  }
};

/// Hard cap on refinement steps: floor(log2 n) + 2. The proven need is at most floor(log2 n) + 1.
inline std::size_t iteration_cap(Index n) {
  return static_cast<std::size_t>(std::bit_width(static_cast<std::size_t>(n))) - 1 + 2;
}

/**
 * Newton iteration A_{m+1} = A_m - P(A_m) P'(A_m)^{-1}, P = squarefree_part(chi_A),
 * stopped at the first exact fixed point. `iterations` counts the updates that changed
 * the iterate. The result carries no generator.
 *
 * Throws InternalError(IterationBoundExceeded) past iteration_cap(n) updates and
 * InternalError(SingularMatrix) if P'(A_m) is singular; both are impossible for a
 * correct implementation.
 */
template <typename Derived>
DunfordResult<typename Derived::Scalar> dunford_newton(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "dunford_newton");
  const Matrix<Scalar> am = a;
  const auto p = squarefree_part(characteristic_polynomial(am));
  const auto dp = derivative(p);
  const std::size_t cap = iteration_cap(n);

  Matrix<Scalar> current = am;
  std::size_t iterations = 0;
  for (;;) {
    const Matrix<Scalar> residual = evaluate(p, current);
    if (is_zero(residual)) break;
    if (++iterations > cap) {
      throw InternalError(ErrorKind::IterationBoundExceeded,
                          "Newton iteration did not become stationary within " + std::to_string(cap) + " steps");
    }
    Matrix<Scalar> slope_inverse;
    try {
      slope_inverse = inverse(evaluate(dp, current));
    } catch (const PreconditionError&) {
      throw InternalError(ErrorKind::SingularMatrix, "P'(A_m) is singular during Newton iteration");
    }
    current -= residual.lazyProduct(slope_inverse);
  }

  DunfordResult<Scalar> result;
  result.nilpotent = am - current;
  result.diagonalizable = std::move(current);
  result.method = Method::newton;
  result.iterations = iterations;
  return result;
}

/**
 * The polynomial version of the Newton step, reduced modulo chi_A.
 *
 * Starting from X mod chi_A, iterates Q <- Q_0(Q) mod chi_A with Q_0 = X - P V, where
 * P = squarefree_part(chi_A) and U P + V P' = 1. Stops when two consecutive reduced
 * iterates agree; that remainder is the generator and D = generator(A). `iterations`
 * counts the compositions that changed the remainder (the step X -> Q_0 included).
 */
template <typename Derived>
DunfordResult<typename Derived::Scalar> dunford_chevalley(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Poly = Polynomial<Scalar>;
  const Index n = detail::require_square(a, "dunford_chevalley");
  const Matrix<Scalar> am = a;
  const Poly chi = characteristic_polynomial(am);
  const Poly p = squarefree_part(chi);
  const auto bez = extended_gcd(p, derivative(p));
  if (bez.gcd != Poly::constant(Scalar(1))) {
    throw InternalError(ErrorKind::InvariantBreach, "squarefree part is not coprime to its derivative");
  }
  const Poly q0 = Poly::x() - p * bez.v;
  const std::size_t cap = iteration_cap(n);

  Poly current = mod(Poly::x(), chi);
  std::size_t iterations = 0;
  for (;;) {
    Poly next = compose_mod(q0, current, chi);
    if (next == current) break;
    if (++iterations > cap) {
      throw InternalError(ErrorKind::IterationBoundExceeded,
                          "Chevalley iteration did not become stationary within " + std::to_string(cap) + " steps");
    }
    current = std::move(next);
  }

  DunfordResult<Scalar> result;
  result.diagonalizable = evaluate(current, am);
  result.nilpotent = am - result.diagonalizable;
  result.generator = std::move(current);
  result.method = Method::chevalley;
  result.iterations = iterations;
  return result;
}

namespace detail {

/// (X - lambda_i)^{alpha_i} for each eigenvalue, after validating the spectrum against chi_A.
template <typename Scalar>
std::vector<Polynomial<Scalar>> primary_moduli(const Polynomial<Scalar>& chi, const Spectrum<Scalar>& spectrum) {
  using Poly = Polynomial<Scalar>;
  if (spectrum.empty()) throw PreconditionError(ErrorKind::SpectrumMismatch, "empty spectrum");
  std::vector<Poly> moduli;
  Poly product = Poly::constant(Scalar(1));
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i].multiplicity == 0) {
      throw PreconditionError(ErrorKind::SpectrumMismatch, "eigenvalue multiplicity must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spectrum[j].value == spectrum[i].value) {
        throw PreconditionError(ErrorKind::SpectrumMismatch, "eigenvalues must be pairwise distinct");
      }
    }
    moduli.push_back(pow(Poly{-spectrum[i].value, Scalar(1)}, spectrum[i].multiplicity));
    product *= moduli.back();
  }
  if (product != chi) {
    throw PreconditionError(ErrorKind::SpectrumMismatch,
                            "prod (X - lambda_i)^alpha_i does not equal the characteristic polynomial");
  }
  return moduli;
}

}  // namespace detail

/**
 * Spectral projectors pi_i = (U_i Q_i)(A), one per eigenvalue, in the order given.
 * They satisfy pi_i^2 = pi_i, pi_i pi_j = 0 for i != j and sum pi_i = I.
 * Throws PreconditionError(SpectrumMismatch) unless prod (X - lambda_i)^alpha_i = chi_A.
 */
template <typename Derived>
std::vector<Matrix<typename Derived::Scalar>> spectral_projectors(const Eigen::MatrixBase<Derived>& a,
                                                                  const Spectrum<typename Derived::Scalar>& spectrum) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(a, "spectral_projectors");
  const Matrix<Scalar> am = a;
  const auto moduli = detail::primary_moduli(characteristic_polynomial(am), spectrum);
  const auto idempotents = crt_idempotents(std::span<const Polynomial<Scalar>>(moduli));
  std::vector<Matrix<Scalar>> out;
  out.reserve(idempotents.size());
  for (const auto& e : idempotents) out.push_back(evaluate(e, am));
  return out;
}

/// D = sum lambda_i pi_i with generator sum lambda_i U_i Q_i. Rational eigenvalues only.
template <typename Derived>
DunfordResult<typename Derived::Scalar> dunford_spectral(const Eigen::MatrixBase<Derived>& a,
                                                         const Spectrum<typename Derived::Scalar>& spectrum) {
  using Scalar = typename Derived::Scalar;
  using Poly = Polynomial<Scalar>;
  const Index n = detail::require_square(a, "dunford_spectral");
  const Matrix<Scalar> am = a;
  const Poly chi = characteristic_polynomial(am);
  const auto moduli = detail::primary_moduli(chi, spectrum);
  const auto idempotents = crt_idempotents(std::span<const Poly>(moduli));

  Matrix<Scalar> d = Matrix<Scalar>::Zero(n, n);
  Poly generator;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    d += evaluate(idempotents[i], am) * spectrum[i].value;
    generator += idempotents[i] * spectrum[i].value;
  }

  DunfordResult<Scalar> result;
  result.nilpotent = am - d;
  result.diagonalizable = std::move(d);
  result.generator = mod(generator, chi);
  result.method = Method::spectral;
  result.iterations = 0;
  return result;
}

/// Checks the defining properties of a Dunford pair without recomputing it.
template <typename Derived, typename Scalar = typename Derived::Scalar>
VerificationReport verify_decomposition(const Eigen::MatrixBase<Derived>& a, const DunfordResult<Scalar>& result) {
  using Poly = Polynomial<Scalar>;
  const Index n = detail::require_square(a, "verify_decomposition");
  detail::require_same_shape(a, result.diagonalizable, "verify_decomposition (D)");
  detail::require_same_shape(a, result.nilpotent, "verify_decomposition (N)");
  const Matrix<Scalar> am = a;
  const auto& d = result.diagonalizable;
  const auto& nil = result.nilpotent;

  VerificationReport report;
  report.sum_ok = exactly_equal(am, d + nil);
  report.commute_ok = exactly_equal(d.lazyProduct(nil), nil.lazyProduct(d));
  report.nilpotent_ok = is_nilpotent(nil);
  report.semisimple_ok = is_zero(evaluate(squarefree_part(characteristic_polynomial(d)), d));
  report.commutes_with_a = exactly_equal(am.lazyProduct(d), d.lazyProduct(am));
  if (result.generator) {
    const Poly& g = *result.generator;
    report.generator_ok = g.degree() < Degree(static_cast<std::size_t>(n)) && exactly_equal(evaluate(g, am), d);
  }
  return report;
}

}  // namespace dunford
