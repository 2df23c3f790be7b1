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

#include "dunford/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dunford/errors.hpp"

namespace dunford::io {

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Rational rational_at(std::string_view token, std::size_t line, std::size_t column) {
  try {
    return Rational::parse(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, column, e.what());
  }
}

// Byte offset -> (line, column), both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_string()) return rational_at(j.get<std::string>(), 1, 1);
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError(1, 1, std::string(what) + ": expected a rational encoded as a string");
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(1, 1, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!is_blank(c)) compact.push_back(c);
  return rational_at(compact, 1, 1);
}

RationalPolynomial parse_polynomial(std::string_view text) {
  std::vector<Rational> coeffs;
  std::string token;
  std::size_t token_column = 1;
  std::size_t line = 1, column = 0;
  auto flush = [&]() {
    if (token.empty()) throw ParseError(line, token_column, "empty coefficient");
    coeffs.push_back(rational_at(token, line, token_column));
    token.clear();
  };
  for (char c : text) {
    ++column;
    if (c == '\n') {
      ++line;
      column = 0;
      continue;
    }
    if (is_blank(c)) continue;
    if (c == ',') {
      flush();
      continue;
    }
    if (token.empty()) token_column = column;
    token.push_back(c);
  }
  if (token.empty() && coeffs.empty()) throw ParseError(1, 1, "empty polynomial");
  flush();
  return RationalPolynomial(std::move(coeffs));
}

std::string format_polynomial(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ',';
    out += c.to_string();
  }
  return out;
}

std::string pretty_polynomial(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto c = p.coefficients();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational& a = c[k];
    if (a.is_zero()) continue;
    const Rational mag = a.abs();
    if (out.empty()) {
      if (a.sign() < 0) out += "-";
    } else {
      out += a.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RationalMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Rational> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_blank(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      row.push_back(rational_at(line.substr(i, j - i), line_no, i + 1));
      i = j;
    }
    if (!row.empty()) {
      if (rows.empty()) first_row_line = line_no;
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError(line_no, 1,
                         "row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError(1, 1, "empty matrix");
  if (rows.size() != rows.front().size()) {
    throw ParseError(first_row_line, 1,
                     "matrix must be square, got " + std::to_string(rows.size()) + "x" +
                         std::to_string(rows.front().size()));
  }
  const auto n = static_cast<Index>(rows.size());
  RationalMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

RationalMatrix parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, "invalid JSON");
  }
  return matrix_from_json(j);
}

RationalMatrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (is_blank(c)) continue;
    return c == '[' ? parse_matrix_json(text) : parse_matrix_text(text);
  }
  throw ParseError(1, 1, "empty input");
}

std::string format_matrix(const RationalMatrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const VerificationReport& report) {
  json out = {
      {"sum_ok", report.sum_ok},
      {"commute_ok", report.commute_ok},
      {"nilpotent_ok", report.nilpotent_ok},
      {"semisimple_ok", report.semisimple_ok},
      {"commutes_with_A", report.commutes_with_a},
  };
  out["generator_ok"] = report.generator_ok ? json(*report.generator_ok) : json(nullptr);
  out["all_ok"] = report.all();
  return out;
}

json to_json(const DunfordResult<Rational>& result, const VerificationReport& report) {
  json out;
  out["method"] = to_string(result.method);
  out["iterations"] = result.iterations;
  out["D"] = to_json(result.diagonalizable);
  out["N"] = to_json(result.nilpotent);
  out["generator"] = result.generator ? to_json(*result.generator) : json(nullptr);
  out["verification"] = to_json(report);
  return out;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError(1, 1, "matrix: expected a non-empty array of rows");
  const auto n = static_cast<Index>(j.size());
  RationalMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw ParseError(1, 1, "matrix: row " + std::to_string(i + 1) + " must be an array of " + std::to_string(n) +
                                 " entries");
    }
    for (Index k = 0; k < n; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  return m;
}

RationalPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(1, 1, "polynomial: expected an array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c, "coefficient"));
  return RationalPolynomial(std::move(coeffs));
}

DunfordResult<Rational> result_from_json(const json& j) {
  DunfordResult<Rational> result;
  const json& method = member(j, "method");
  if (!method.is_string()) throw ParseError(1, 1, "method must be a string");
  const auto name = method.get<std::string>();
  if (name == "newton") {
    result.method = Method::newton;
  } else if (name == "chevalley") {
    result.method = Method::chevalley;
  } else if (name == "spectral") {
    result.method = Method::spectral;
  } else {
    throw ParseError(1, 1, "unknown method '" + name + "'");
  }
  const json& iterations = member(j, "iterations");
  if (!iterations.is_number_unsigned()) {
    throw ParseError(1, 1, "iterations must be a non-negative integer");
  }
  result.iterations = iterations.get<std::size_t>();
  result.diagonalizable = matrix_from_json(member(j, "D"));
  result.nilpotent = matrix_from_json(member(j, "N"));
  if (j.contains("generator") && !j.at("generator").is_null()) {
    result.generator = polynomial_from_json(j.at("generator"));
  }
  return result;
}

}  // namespace dunford::io
