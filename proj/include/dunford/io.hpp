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
 * @file io.hpp
 * @brief Text and JSON encodings of rationals, polynomials, matrices and decomposition results.
 *
 * Polynomial text: comma-separated coefficients, constant term first, each an integer or
 * "p/q". Whitespace is ignored. "0" is the zero polynomial.
 *
 * Matrix text: one row per line, entries separated by spaces. Blank lines are ignored.
 *
 * Matrix JSON: an array of arrays of strings such as [["1", "-1/2"], ["0", "3"]].
 * Rationals are always strings in JSON so that nothing passes through a float.
 */

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "dunford/decomposition.hpp"
#include "dunford/matrix.hpp"
#include "dunford/realroots.hpp"

namespace dunford::io {

using nlohmann::json;

/// Throws ParseError (line 1) on malformed input.
Rational parse_rational(std::string_view text);

RationalPolynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const RationalPolynomial& p);
/// Conventional rendering for humans, e.g. "x^2 - 1/2*x + 3".
std::string pretty_polynomial(const RationalPolynomial& p);

RationalMatrix parse_matrix_text(std::string_view text);
RationalMatrix parse_matrix_json(std::string_view text);
/// JSON when the first non-blank character is '[', text otherwise.
RationalMatrix parse_matrix(std::string_view text);
std::string format_matrix(const RationalMatrix& m);

json to_json(const Rational& r);
json to_json(const RationalPolynomial& p);
json to_json(const RationalMatrix& m);
json to_json(const VerificationReport& report);

/// Top-level object: method, iterations, D, N, generator (or null), verification.
json to_json(const DunfordResult<Rational>& result, const VerificationReport& report);

/// Inverse of to_json for a decomposition result. Throws ParseError on schema violations.
DunfordResult<Rational> result_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
RationalPolynomial polynomial_from_json(const json& j);

}  // namespace dunford::io
