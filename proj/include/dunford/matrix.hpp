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

#include <Eigen/Core>
#include <string>
#include <utility>

#include "dunford/errors.hpp"
#include "dunford/polynomial.hpp"
#include "dunford/rational.hpp"

namespace dunford {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;
using RationalPolynomial = Polynomial<Rational>;

using Index = Eigen::Index;

namespace detail {

template <typename Derived>
Index require_square(const Eigen::MatrixBase<Derived>& a, const char* where) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw PreconditionError(ErrorKind::DimensionMismatch,
                            std::string(where) + ": expected a non-empty square matrix, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return a.rows();
}

template <typename A, typename B>
void require_same_shape(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError(ErrorKind::DimensionMismatch,
                            std::string(where) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace detail

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  if (n < 1) throw PreconditionError(ErrorKind::DimensionMismatch, "identity: n must be >= 1");
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> zero(Index n) {
  if (n < 1) throw PreconditionError(ErrorKind::DimensionMismatch, "zero: n must be >= 1");
  return Matrix<Scalar>::Zero(n, n);
}

// Checked arithmetic. Eigen's own operators assert on shape mismatch only in debug
// builds; these throw DimensionMismatch unconditionally.

template <typename A, typename B>
auto add(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  detail::require_same_shape(a, b, "add");
  return Matrix<typename A::Scalar>(a + b);
}

template <typename A, typename B>
auto subtract(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  detail::require_same_shape(a, b, "subtract");
  return Matrix<typename A::Scalar>(a - b);
}

template <typename A, typename B>
auto multiply(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.cols() != b.rows()) {
    throw PreconditionError(ErrorKind::DimensionMismatch, "multiply: inner dimensions differ");
  }
  return Matrix<typename A::Scalar>(a.lazyProduct(b));
}

template <typename A>
auto scale(const Eigen::MatrixBase<A>& a, const typename A::Scalar& c) {
  return Matrix<typename A::Scalar>(a * c);
}

/// Exact test for the zero matrix (Eigen's isZero() is tolerance based).
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == Scalar(0))) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.cwiseEqual(b).all();
}

/**
 * Gauss-Jordan inverse. Any nonzero entry serves as pivot since arithmetic is exact.
 * Throws PreconditionError(SingularMatrix) when a pivot column has no nonzero entry.
 */
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "inverse");
  Matrix<Scalar> work = a;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw PreconditionError(ErrorKind::SingularMatrix, "matrix is singular");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar p = work(col, col);
    work.row(col) /= p;
    inv.row(col) /= p;
    for (Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == Scalar(0)) continue;
      const Scalar f = work(r, col);
      work.row(r) -= f * work.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

/// Determinant by fraction-producing Gaussian elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "determinant");
  Matrix<Scalar> work = a;
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    const Scalar p = work(col, col);
    det *= p;
    for (Index r = col + 1; r < n; ++r) {
      if (work(r, col) == Scalar(0)) continue;
      const Scalar f = work(r, col) / p;
      work.row(r).tail(n - col) -= f * work.row(col).tail(n - col);
    }
  }
  return det;
}

/**
 * Monic characteristic polynomial det(X I - A) by the Faddeev-LeVerrier recurrence:
 * M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
 * Only divisions by the integers 1..n occur.
 */
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "characteristic_polynomial");
  const Matrix<Scalar> am = a;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar(0));
  coeffs[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    Matrix<Scalar> am_k = am.lazyProduct(m);
    const Scalar c = -am_k.trace() / Scalar(static_cast<long>(k));
    coeffs[static_cast<std::size_t>(n - k)] = c;
    if (k < n) {
      am_k.diagonal().array() += c;
      m = std::move(am_k);
    }
  }
  return Polynomial<Scalar>(std::move(coeffs));
}

/// P(A) by Horner's scheme. The zero polynomial maps to the zero matrix.
template <typename Derived>
Matrix<typename Derived::Scalar> evaluate(const Polynomial<typename Derived::Scalar>& p,
                                          const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "evaluate");
  const Matrix<Scalar> am = a;
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it != c.rbegin()) acc = am.lazyProduct(acc).eval();
    acc.diagonal().array() += *it;
  }
  return acc;
}

/// A^n = 0, decided by char_poly(A) = X^n.
template <typename Derived>
bool is_nilpotent(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = detail::require_square(a, "is_nilpotent");
  return characteristic_polynomial(a) == Polynomial<Scalar>::monomial(Scalar(1), static_cast<std::size_t>(n));
}

}  // namespace dunford
