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

// Self-checks run by `bosonq verify`: golden expansions, recurrence against
// the dense ladder matrix, unary against binary, the two Hamiltonian
// constructions, and statevector against MPS.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bosonq/dynamics.hpp"
#include "bosonq/golden.hpp"
#include "bosonq/yukawa.hpp"

namespace bosonq {

struct VerifyOptions {
  std::filesystem::path golden_dir = default_golden_dir();
  int max_t = 6;            // recurrence suite covers t = 1 … max_t
  int max_truncation = 15;  // unary suite covers N = 1 … max_truncation
  int hamiltonian_draws = 100;
  int backend_steps = 300;
  std::vector<double> backend_couplings{1.0, 34.75};
  YukawaParams params;  // register used by the backend suite
  std::uint64_t seed = kDefaultSeed;
};

enum class CheckStatus { pass, fail, skip };

struct VerifyRow {
  std::string suite;
  std::string check;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool ok() const;
  int count(CheckStatus s) const;
};

VerifyReport verify_golden(const std::filesystem::path& dir);
VerifyReport verify_recurrence(int max_t);
VerifyReport verify_unary(int max_truncation);
VerifyReport verify_hamiltonians(int draws, std::uint64_t seed);
VerifyReport verify_backends(const YukawaParams& params, const std::vector<double>& couplings,
                             int n_steps);

VerifyReport run_verification(const VerifyOptions& options);

/** Fixed-width table, one row per check, followed by a summary line. */
std::string format_report(const VerifyReport& report);

}  // namespace bosonq
