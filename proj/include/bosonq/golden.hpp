// Copyright 2026 The bosonq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference expansions stored as text. Two forms are understood:
//
//   form pauli                     form ladder
//   scale <expr>                   component <i> <atom>...
//   term <re> <im> <letters>       erratum <i> <atom>...
//
// Coefficients are arithmetic expressions over numbers, + - * /, parentheses
// and sqrt(). Atoms are I+, I-, s+, s-, I, X, Y, Z. Every file also carries
// `name` and `target <creation|number|number_squared|squeeze> <t>`.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bosonq/pauli.hpp"

namespace bosonq {

/** Evaluates a coefficient expression; throws std::invalid_argument on bad input. */
double evaluate_expression(std::string_view expr);

struct GoldenComponent {
  int index = 0;
  std::vector<std::string> atoms;
  PauliSum op;  // unweighted tensor product of the atoms
};

struct GoldenEntry {
  enum class Form { pauli, ladder };

  std::string name;
  std::string source;  // file the entry came from
  std::string target;  // creation, number, number_squared or squeeze
  int t = 0;
  Form form = Form::pauli;
  Complex scale{1.0, 0.0};
  PauliSum printed;                             // scaled sum as written
  std::vector<GoldenComponent> components;      // ladder form only
  std::map<int, GoldenComponent> errata;        // ladder form only
};

/** Throws std::runtime_error naming the file and line on malformed input. */
GoldenEntry parse_golden(std::string_view text, const std::string& source = "<memory>");
GoldenEntry load_golden(const std::filesystem::path& path);
/** All *.golden files in a directory, sorted by file name. */
std::vector<GoldenEntry> load_golden_dir(const std::filesystem::path& dir);

/** Operator the entry describes, computed by the encodings module. */
PauliSum golden_target(const GoldenEntry& entry);

struct GoldenCheck {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;  // largest coefficient gap after errata are applied
  std::vector<std::string> notes;
};

/**
 * Compares an entry with its target within tol per coefficient. Ladder
 * entries are also compared component by component; a component that differs
 * is accepted only when a matching erratum is recorded, and an erratum whose
 * printed component already matches is itself reported as a failure.
 */
GoldenCheck check_golden(const GoldenEntry& entry, double tol = 1e-12);

/** Directory of the bundled golden files, as configured at build time. */
std::filesystem::path default_golden_dir();

}  // namespace bosonq
