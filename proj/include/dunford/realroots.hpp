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
 * @file realroots.hpp
 * @brief Sturm sequences, Cauchy root bounds and real-diagonalizability of the
 * semisimple part of a matrix.
 *
 * All counts are of distinct real roots: the chain is divided by gcd(P, P'), which
 * collapses multiplicities.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "dunford/matrix.hpp"
#include "dunford/polynomial.hpp"

namespace dunford {

template <typename Scalar>
struct SturmChain {
  /// T_0 .. T_p: the sequence S_0 = P, S_1 = P', S_{i+1} = -rem(S_{i-1}, S_i), each divided by S_p.
  std::vector<Polynomial<Scalar>> divided;
  Polynomial<Scalar> original;
};

template <typename Scalar>
SturmChain<Scalar> sturm_chain(const Polynomial<Scalar>& p) {
  if (p.is_constant()) {
    throw PreconditionError(ErrorKind::ConstantPolynomial, "Sturm chain needs a polynomial of degree >= 1");
  }
  std::vector<Polynomial<Scalar>> s{p, derivative(p)};
  for (;;) {
    auto next = -mod(s[s.size() - 2], s.back());
    if (next.is_zero()) break;
    s.push_back(std::move(next));
  }
  const Polynomial<Scalar> last = s.back();  // gcd(P, P') up to a constant

  SturmChain<Scalar> chain;
  chain.original = p;
  chain.divided.reserve(s.size());
  for (const auto& si : s) {
    auto [q, r] = divrem(si, last);
    if (!r.is_zero()) throw InternalError(ErrorKind::InvariantBreach, "Sturm element not divisible by gcd(P, P')");
    chain.divided.push_back(std::move(q));
  }
  return chain;
}

/// Sign alternations of T_0(x) .. T_p(x), zero values skipped.
template <typename Scalar>
std::size_t sign_variations(const SturmChain<Scalar>& chain, const Scalar& x) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& t : chain.divided) {
    const Scalar v = t(x);
    const int sign = v < Scalar(0) ? -1 : (v > Scalar(0) ? 1 : 0);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

/**
 * Number of distinct real roots of p in (a, b), as V(a) - V(b).
 * Throws EmptyInterval when a >= b and EndpointIsRoot when p(a) = 0 or p(b) = 0.
 */
template <typename Scalar>
std::size_t count_real_roots(const Polynomial<Scalar>& p, const Scalar& a, const Scalar& b) {
  if (p.is_constant()) {
    throw PreconditionError(ErrorKind::ConstantPolynomial, "root counting needs a polynomial of degree >= 1");
  }
  if (!(a < b)) throw PreconditionError(ErrorKind::EmptyInterval, "interval endpoints must satisfy a < b");
  if (p(a) == Scalar(0) || p(b) == Scalar(0)) {
    throw PreconditionError(ErrorKind::EndpointIsRoot, "an interval endpoint is a root of the polynomial");
  }
  const auto chain = sturm_chain(p);
  const std::size_t va = sign_variations(chain, a);
  const std::size_t vb = sign_variations(chain, b);
  if (vb > va) throw InternalError(ErrorKind::InvariantBreach, "sign variations increased along the interval");
  return va - vb;
}

/// M = 1 + max_{0 <= i < k} |a_i| / |a_k|. Every complex root satisfies |z| < M.
template <typename Scalar>
Scalar cauchy_bound(const Polynomial<Scalar>& p) {
  if (p.is_constant()) {
    throw PreconditionError(ErrorKind::ConstantPolynomial, "Cauchy bound needs a polynomial of degree >= 1");
  }
  const auto c = p.coefficients();
  const Scalar lead = abs(c.back());
  Scalar largest(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Scalar ratio = abs(c[i]) / lead;
    if (largest < ratio) largest = ratio;
  }
  return Scalar(1) + largest;
}

/// Distinct real roots on the whole line, counted on (-M, M) with M the Cauchy bound.
template <typename Scalar>
std::size_t count_real_roots_global(const Polynomial<Scalar>& p) {
  const Scalar m = cauchy_bound(p);
  return count_real_roots(p, -m, m);
}

template <typename Scalar>
struct RealDiagonalizabilityReport {
  bool diagonalizable_over_reals = false;
  Polynomial<Scalar> squarefree;  ///< P = chi_A / gcd(chi_A, chi_A')
  Scalar cauchy_bound;
  std::size_t real_root_count = 0;
  std::size_t degree = 0;
};

/**
 * Decides whether the semisimple part of A is diagonalizable over the reals, i.e. whether
 * every root of chi_A is real. A itself is real-diagonalizable when additionally its
 * nilpotent part vanishes.
 */
template <typename Derived>
RealDiagonalizabilityReport<typename Derived::Scalar> is_diagonalizable_over_reals(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RealDiagonalizabilityReport<Scalar> report;
  report.squarefree = squarefree_part(characteristic_polynomial(a));
  report.degree = report.squarefree.degree().value();
  report.cauchy_bound = cauchy_bound(report.squarefree);
  report.real_root_count = count_real_roots(report.squarefree, Scalar(-report.cauchy_bound), report.cauchy_bound);
  report.diagonalizable_over_reals = report.real_root_count == report.degree;
  return report;
}

}  // namespace dunford
