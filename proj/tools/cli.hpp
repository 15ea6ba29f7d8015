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

// Configuration resolution and subcommand dispatch for the `bosonq` tool.
//
// Precedence, lowest to highest: built-in defaults, the --config file,
// command-line flags. BOSONQ_OUTPUT_DIR only relocates relative output paths.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bosonq/dynamics.hpp"
#include "bosonq/yukawa.hpp"

namespace bosonq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitRuntime = 2,
  kExitVerification = 3,
};

enum class OutputFormat { csv, json };

struct RunConfig {
  YukawaParams params;
  EvolutionConfig evolution;
  std::string output;  // empty picks a default name, "-" is stdout
  OutputFormat format = OutputFormat::csv;
};

/** Invalid configuration; what() starts with the offending key. */
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& key, const std::string& why)
      : std::invalid_argument(key + ": " + why), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

using ConfigValues = std::map<std::string, std::string>;

/** Keys a config file must define. */
const std::vector<std::string>& required_file_keys();

/**
 * Reads `key = value` lines (TOML-style; `#` comments, optional quotes).
 * Also accepts the metadata header of a CSV written by this tool and the
 * JSON mirror, so a run can be repeated from its own output.
 */
ConfigValues parse_config_text(std::string_view text, const std::string& source);
ConfigValues load_config_file(const std::filesystem::path& path);

/** Sets one key; throws ConfigError naming the key. */
void apply_value(RunConfig& config, const std::string& key, const std::string& value);

/** Defaults, then file values (all required keys present), then flags; validated. */
RunConfig resolve_config(const ConfigValues* file_values, const ConfigValues& flag_values);

/** Ordered key/value echo of every setting that affects results. */
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);

std::string trajectory_csv(const RunConfig& config, const Trajectory& trajectory);
std::string trajectory_json(const RunConfig& config, const Trajectory& trajectory);
std::string band_csv(const RunConfig& config, const SampledRun& run);
std::string band_json(const RunConfig& config, const SampledRun& run);

/** Relative paths are placed under BOSONQ_OUTPUT_DIR when it is set. */
std::filesystem::path resolve_output_path(const std::string& output, const std::string& default_name);

/** Entry point shared by main() and the tests. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bosonq::cli
