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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunford/decomposition.hpp"
#include "dunford/rational.hpp"

namespace dunford::cli {

enum class Command { decompose, projectors, check_real_diag, roots, charpoly, verify };
enum class OutputFormat { text, json };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInternal = 3;

struct CliConfig {
  Command command = Command::decompose;
  Method method = Method::chevalley;
  std::optional<std::string> input_path;  ///< stdin when empty
  OutputFormat output_format = OutputFormat::text;
  Spectrum<Rational> spectrum;
  std::optional<std::pair<Rational, Rational>> interval;
  std::optional<std::string> result_path;  ///< verify: decomposition JSON to check
};

/// Executes one command. Input is read from config.input_path or, if unset, from `in`.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the command.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Convenience for tests: arguments without the program name.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dunford::cli
