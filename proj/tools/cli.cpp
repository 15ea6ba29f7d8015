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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bosonq/circuit.hpp"
#include "bosonq/encodings.hpp"
#include "bosonq/verify.hpp"

namespace bosonq::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/** Drops a trailing `# comment` that is not inside quotes, then surrounding quotes. */
std::string clean_value(std::string_view raw) {
  std::string v;
  char quote = 0;
  for (char c : raw) {
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      break;
    }
    v += c;
  }
  v = trim(v);
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    v = v.substr(1, v.size() - 2);
  }
  return v;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError(key, fmt::format("expected a number, got '{}'", v));
  return out;
}

long long parse_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError(key, fmt::format("expected an integer, got '{}'", v));
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  const long long x = parse_integer(key, v);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw ConfigError(key, "out of range");
  }
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(key, fmt::format("expected true or false, got '{}'", v));
}

template <typename F>
auto rethrow_as_config(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    std::string what = ex.what();
    // Library messages already start with "key: ".
    if (what.starts_with(key + ": ")) what = what.substr(key.size() + 2);
    throw ConfigError(key, what);
  }
}

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

std::string number(double x) { return fmt::format("{}", x); }

std::string csv_header(const RunConfig& config, const char* command) {
  std::string out = fmt::format("# bosonq {} {}\n", command, kVersion);
  for (const auto& [k, v] : config_entries(config)) out += fmt::format("# {} = {}\n", k, v);
  return out;
}

json config_json(const RunConfig& config) {
  json c = json::object();
  for (const auto& [k, v] : config_entries(config)) c[k] = v;
  return c;
}

void write_output(const std::filesystem::path& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw std::runtime_error(fmt::format("cannot create directory {}: {}", path.parent_path().string(), ec.message()));
    }
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
  f << text;
  f.close();
  if (!f) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
}

/** Registers a string-valued flag that records into `flags` under `key`. */
void add_flag(CLI::App* app, ConfigValues& flags, const std::string& names, const std::string& key,
              const std::string& help) {
  app->add_option_function<std::string>(names, [&flags, key](const std::string& v) { flags[key] = v; }, help);
}

void add_physics_flags(CLI::App* app, ConfigValues& flags) {
  add_flag(app, flags, "-g,--g", "g", "coupling constant (default 1)");
  add_flag(app, flags, "--kappa", "kappa", "lattice spacing (default 0.5)");
  add_flag(app, flags, "--omega", "omega", "fermion mass (default 6.95)");
  add_flag(app, flags, "--omega0", "omega0", "boson mass (default 1)");
  add_flag(app, flags, "-t,--t", "t", "boson qubits per site (default 2)");
  add_flag(app, flags, "--n-x,--n_x", "n_x", "lattice sites (default 1)");
}

void add_evolution_flags(CLI::App* app, ConfigValues& flags) {
  add_flag(app, flags, "--delta-t,--delta_t", "delta_t", "time step (default 0.1)");
  add_flag(app, flags, "--n-t,--n_t", "n_t", "number of steps (default 300)");
  add_flag(app, flags, "--policy", "policy", "t' policy: left, midpoint or random");
  add_flag(app, flags, "--samples", "samples", "random-t' samples (default 50)");
  add_flag(app, flags, "--seed", "seed", fmt::format("RNG seed (default {})", kDefaultSeed));
  add_flag(app, flags, "--backend", "backend", "statevector or mps");
  add_flag(app, flags, "--initial", "initial", "fermion_pair, bosons:K or bits:0101...");
  add_flag(app, flags, "--chi-max,--chi_max", "chi_max", "MPS bond dimension cap (default 64)");
  add_flag(app, flags, "--cutoff", "cutoff", "MPS singular value cutoff (default 1e-13)");
  add_flag(app, flags, "--mps-strict,--mps_strict", "mps_strict", "fail instead of truncating at chi_max");
  add_flag(app, flags, "--threads", "threads", "sampling threads, 0 = all cores");
  add_flag(app, flags, "-o,--output", "output", "output file, '-' for stdout");
  add_flag(app, flags, "--format", "format", "csv or json");
}

RunConfig resolve_from(const std::string& config_path, const ConfigValues& flags) {
  if (config_path.empty()) return resolve_config(nullptr, flags);
  const ConfigValues file = load_config_file(config_path);
  return resolve_config(&file, flags);
}

std::string default_name(const char* stem, OutputFormat f) {
  return fmt::format("{}.{}", stem, to_string(f));
}

int cmd_evolve(const std::string& config_path, const ConfigValues& flags, std::ostream& out) {
  const RunConfig config = resolve_from(config_path, flags);
  if (const auto w = register_warning(config.params)) out << "warning: " << *w << '\n';
  const Trajectory traj = evolve(config.evolution, config.params);
  const auto path = resolve_output_path(config.output, default_name("trajectory", config.format));
  write_output(path, config.format == OutputFormat::json ? trajectory_json(config, traj)
                                                         : trajectory_csv(config, traj),
               out);
  if (path != "-") {
    out << fmt::format("wrote {} records to {} (max norm drift {:.2e})\n", traj.records.size(),
                       path.string(), traj.max_norm_drift);
  }
  return kExitOk;
}

int cmd_sample(const std::string& config_path, const ConfigValues& flags, std::ostream& out) {
  ConfigValues f = flags;
  if (!f.contains("policy")) f["policy"] = "random";
  const RunConfig config = resolve_from(config_path, f);
  if (config.evolution.policy != TPrimePolicy::random) {
    throw ConfigError("policy", "sample needs the random t' policy");
  }
  const SampledRun run = sample_error_band(config.evolution, config.params);
  const auto path = resolve_output_path(config.output, default_name("band", config.format));
  write_output(path, config.format == OutputFormat::json ? band_json(config, run) : band_csv(config, run), out);
  if (path != "-") {
    out << fmt::format("wrote {} records ({} samples) to {}\n", run.band.records.size(),
                       run.band.samples, path.string());
    out << fmt::format("time-averaged std: rho_P={} rho_N={} rho_b={}\n",
                       time_averaged_std(run.band, Observable::rho_P),
                       time_averaged_std(run.band, Observable::rho_N),
                       time_averaged_std(run.band, Observable::rho_b));
  }
  return kExitOk;
}

PauliSum encode_operator(const std::string& op, int t, int n_max) {
  if (op == "creation") return binary_creation(t).op;
  if (op == "annihilation") return binary_annihilation(t);
  if (op == "number") return binary_number(t);
  if (op == "number_squared") return number_squared(t);
  if (op == "squeeze") return squeeze_block(t);
  if (op == "unary_creation") return unary_creation(n_max).op;
  if (op == "unary_number") return unary_number(n_max);
  throw ConfigError("operator", fmt::format("unknown operator '{}'", op));
}

}  // namespace

const std::vector<std::string>& required_file_keys() {
  static const std::vector<std::string> keys{"g", "kappa", "omega", "omega0", "t", "n_x"};
  return keys;
}

ConfigValues parse_config_text(std::string_view text, const std::string& source) {
  ConfigValues values;
  const std::string body = trim(text);
  if (body.starts_with("{")) {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& ex) {
      throw ConfigError("config", fmt::format("{}: {}", source, ex.what()));
    }
    const json& c = j.contains("config") ? j.at("config") : j;
    if (!c.is_object()) throw ConfigError("config", fmt::format("{}: expected an object", source));
    for (const auto& [k, v] : c.items()) {
      values[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return values;
  }

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool metadata = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (line_no == 1 && s.starts_with("# bosonq")) {
      metadata = true;
      continue;
    }
    if (metadata) {
      // Header of a file written by this tool: "# key = value" until the data starts.
      if (!s.starts_with("#")) break;
      s = trim(s.substr(1));
      if (s.find('=') == std::string::npos) continue;
    } else if (s.empty() || s.starts_with("#")) {
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", fmt::format("{}:{}: expected 'key = value'", source, line_no));
    }
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError("config", fmt::format("{}:{}: empty key", source, line_no));
    if (values.contains(key)) throw ConfigError(key, fmt::format("{}:{}: defined twice", source, line_no));
    values[key] = metadata ? trim(s.substr(eq + 1)) : clean_value(s.substr(eq + 1));
  }
  return values;
}

ConfigValues load_config_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", fmt::format("cannot read {}", path.string()));
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

void apply_value(RunConfig& c, const std::string& key, const std::string& value) {
  YukawaParams& p = c.params;
  EvolutionConfig& e = c.evolution;
  if (key == "g") {
    p.g = parse_double(key, value);
  } else if (key == "kappa") {
    p.kappa = parse_double(key, value);
  } else if (key == "omega") {
    p.omega = parse_double(key, value);
  } else if (key == "omega0") {
    p.omega0 = parse_double(key, value);
  } else if (key == "t") {
    p.t = parse_int(key, value);
  } else if (key == "n_x") {
    p.n_x = parse_int(key, value);
  } else if (key == "delta_t") {
    e.delta_t = parse_double(key, value);
  } else if (key == "n_t") {
    e.n_t = parse_int(key, value);
  } else if (key == "policy") {
    e.policy = rethrow_as_config(key, [&] { return parse_policy(value); });
  } else if (key == "samples") {
    e.samples = parse_int(key, value);
  } else if (key == "seed") {
    const long long s = parse_integer(key, value);
    if (s < 0) throw ConfigError(key, "must be >= 0");
    e.seed = static_cast<std::uint64_t>(s);
  } else if (key == "backend") {
    e.backend = rethrow_as_config(key, [&] { return parse_backend(value); });
  } else if (key == "initial") {
    e.initial = rethrow_as_config(key, [&] { return InitialState::parse(value); });
  } else if (key == "chi_max") {
    e.mps.chi_max = parse_int(key, value);
  } else if (key == "cutoff") {
    e.mps.cutoff = parse_double(key, value);
    if (!(e.mps.cutoff >= 0.0)) throw ConfigError(key, "must be >= 0");
  } else if (key == "mps_strict") {
    e.mps.strict = parse_bool(key, value);
  } else if (key == "threads") {
    e.threads = parse_int(key, value);
  } else if (key == "output") {
    c.output = value;
  } else if (key == "format") {
    if (value == "csv") {
      c.format = OutputFormat::csv;
    } else if (value == "json") {
      c.format = OutputFormat::json;
    } else {
      throw ConfigError(key, fmt::format("expected csv or json, got '{}'", value));
    }
  } else {
    throw ConfigError(key, "unknown key");
  }
}

RunConfig resolve_config(const ConfigValues* file_values, const ConfigValues& flag_values) {
  RunConfig c;
  if (file_values) {
    for (const auto& k : required_file_keys()) {
      if (!file_values->contains(k)) throw ConfigError(k, "missing from config file");
    }
    for (const auto& [k, v] : *file_values) apply_value(c, k, v);
  }
  for (const auto& [k, v] : flag_values) apply_value(c, k, v);
  try {
    c.evolution.validate(c.params);
  } catch (const std::invalid_argument& ex) {
    // Validation messages start with the field name.
    const std::string what = ex.what();
    const auto colon = what.find(": ");
    std::string key = colon == std::string::npos ? "config" : what.substr(0, colon);
    if (key.find(' ') != std::string::npos) key = "config";
    throw ConfigError(key, key == "config" ? what : what.substr(colon + 2));
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
  const YukawaParams& p = c.params;
  const EvolutionConfig& e = c.evolution;
  return {
      {"g", number(p.g)},
      {"kappa", number(p.kappa)},
      {"omega", number(p.omega)},
      {"omega0", number(p.omega0)},
      {"t", std::to_string(p.t)},
      {"n_x", std::to_string(p.n_x)},
      {"delta_t", number(e.delta_t)},
      {"n_t", std::to_string(e.n_t)},
      {"policy", to_string(e.policy)},
      {"samples", std::to_string(e.samples)},
      {"seed", std::to_string(e.seed)},
      {"backend", to_string(e.backend)},
      {"initial", e.initial.to_string()},
      {"chi_max", std::to_string(e.mps.chi_max)},
      {"cutoff", number(e.mps.cutoff)},
      {"mps_strict", e.mps.strict ? "true" : "false"},
      {"format", to_string(c.format)},
  };
}

std::string trajectory_csv(const RunConfig& config, const Trajectory& traj) {
  std::string out = csv_header(config, "evolve");
  out += "l,time,rho_P,rho_N,rho_b\n";
  for (const auto& r : traj.records) {
    out += fmt::format("{},{},{},{},{}\n", r.l, r.time, r.rho.rho_P, r.rho.rho_N, r.rho.rho_b);
  }
  return out;
}

std::string trajectory_json(const RunConfig& config, const Trajectory& traj) {
  json j;
  j["tool"] = fmt::format("bosonq evolve {}", kVersion);
  j["config"] = config_json(config);
  json records = json::array();
  for (const auto& r : traj.records) {
    records.push_back({{"l", r.l}, {"time", r.time}, {"rho_P", r.rho.rho_P},
                       {"rho_N", r.rho.rho_N}, {"rho_b", r.rho.rho_b}});
  }
  j["records"] = std::move(records);
  j["summary"] = {{"max_norm_drift", traj.max_norm_drift},
                  {"discarded_weight", traj.mps_report.discarded_weight},
                  {"max_bond", traj.mps_report.max_bond}};
  return j.dump(2) + "\n";
}

std::string band_csv(const RunConfig& config, const SampledRun& run) {
  std::string out = csv_header(config, "sample");
  out += "l,time";
  for (const char* o : {"rho_P", "rho_N", "rho_b"}) out += fmt::format(",{0}_mean,{0}_std,{0}_min,{0}_max", o);
  out += '\n';
  const auto stats = [](const Stats& s) { return fmt::format(",{},{},{},{}", s.mean, s.std, s.min, s.max); };
  for (const auto& r : run.band.records) {
    out += fmt::format("{},{}", r.l, r.time) + stats(r.rho_P) + stats(r.rho_N) + stats(r.rho_b) + '\n';
  }
  return out;
}

std::string band_json(const RunConfig& config, const SampledRun& run) {
  json j;
  j["tool"] = fmt::format("bosonq sample {}", kVersion);
  j["config"] = config_json(config);
  const auto stats = [](const Stats& s) {
    return json{{"mean", s.mean}, {"std", s.std}, {"min", s.min}, {"max", s.max}};
  };
  json records = json::array();
  for (const auto& r : run.band.records) {
    records.push_back({{"l", r.l}, {"time", r.time}, {"rho_P", stats(r.rho_P)},
                       {"rho_N", stats(r.rho_N)}, {"rho_b", stats(r.rho_b)}});
  }
  j["records"] = std::move(records);
  j["summary"] = {{"samples", run.band.samples},
                  {"time_averaged_std_rho_P", time_averaged_std(run.band, Observable::rho_P)},
                  {"time_averaged_std_rho_N", time_averaged_std(run.band, Observable::rho_N)},
                  {"time_averaged_std_rho_b", time_averaged_std(run.band, Observable::rho_b)}};
  return j.dump(2) + "\n";
}

std::filesystem::path resolve_output_path(const std::string& output, const std::string& default_name) {
  if (output == "-") return "-";
  std::filesystem::path p = output.empty() ? std::filesystem::path(default_name) : std::filesystem::path(output);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BOSONQ_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit encodings, real-time dynamics and circuits for a lattice Yukawa model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  ConfigValues flags;

  auto* encode = app.add_subcommand("encode", "print the Pauli expansion of a boson operator");
  std::string op = "creation";
  int enc_t = 2;
  int n_max = 3;
  bool components = false;
  encode->add_option("--operator", op,
                     "creation, annihilation, number, number_squared, squeeze, unary_creation, unary_number")
      ->capture_default_str();
  encode->add_option("-t,--t", enc_t, "boson qubits")->capture_default_str();
  encode->add_option("--n-max,--n_max", n_max, "truncation of the unary operators")->capture_default_str();
  encode->add_flag("--components", components, "print the weighted ladder components of the creation operator");

  auto* evolve_cmd = app.add_subcommand("evolve", "run one trajectory and write rho_P, rho_N, rho_b per step");
  auto* sample_cmd = app.add_subcommand("sample", "random-t' error bands over several trajectories");
  for (auto* sub : {evolve_cmd, sample_cmd}) {
    sub->add_option("-c,--config", config_path, "key = value file; flags override it");
    add_physics_flags(sub, flags);
    add_evolution_flags(sub, flags);
  }

  auto* compile = app.add_subcommand("compile", "compile one first-order step into CNOT-ladder gates");
  double time = 0.0;
  double dt = 0.1;
  std::string ordering = "lex";
  std::string compile_out = "-";
  compile->add_option("-c,--config", config_path, "key = value file; flags override it");
  add_physics_flags(compile, flags);
  compile->add_option("--time", time, "evaluation time of the Hamiltonian")->capture_default_str();
  compile->add_option("--delta-t,--delta_t", dt, "step length")->capture_default_str();
  compile->add_option("--ordering", ordering, "lex or ladder")->capture_default_str();
  compile->add_option("-o,--output", compile_out, "QASM destination, '-' for stdout")->capture_default_str();

  auto* fidelity = app.add_subcommand("fidelity", "per-CNOT fidelity needed for a total circuit fidelity");
  double total = 0.70;
  int cnot = 117;
  int steps = 10;
  fidelity->add_option("--total", total, "target fidelity of the whole circuit")->capture_default_str();
  fidelity->add_option("--cnot", cnot, "CNOT gates per step")->capture_default_str();
  fidelity->add_option("--steps", steps, "number of steps")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the built-in golden and oracle checks");
  VerifyOptions vo;
  std::string golden_dir = vo.golden_dir.string();
  verify->add_option("--golden-dir", golden_dir, "directory of .golden files")->capture_default_str();
  verify->add_option("--max-t", vo.max_t, "recurrence check covers t = 1 ... max-t")->capture_default_str();
  verify->add_option("--max-truncation", vo.max_truncation, "unary check covers N = 1 ... max")->capture_default_str();
  verify->add_option("--draws", vo.hamiltonian_draws, "random parameter draws for the Hamiltonian check")->capture_default_str();
  verify->add_option("--steps", vo.backend_steps, "steps of the backend comparison")->capture_default_str();
  verify->add_option("--n-x,--n_x", vo.params.n_x, "sites of the backend comparison")->capture_default_str();
  verify->add_option("-t,--t", vo.params.t, "boson qubits of the backend comparison")->capture_default_str();
  verify->add_option("--seed", vo.seed, "seed of the Hamiltonian draws")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*encode) {
      if (components) {
        const BinaryCreation bc = binary_creation(enc_t);
        for (const auto& c : bc.components) {
          out << fmt::format("# component {} weight {}\n", c.index, c.weight) << to_text(c.op);
        }
      } else {
        out << to_text(encode_operator(op, enc_t, n_max));
      }
      return kExitOk;
    }
    if (*evolve_cmd) return cmd_evolve(config_path, flags, out);
    if (*sample_cmd) return cmd_sample(config_path, flags, out);
    if (*compile) {
      const RunConfig config = resolve_from(config_path, flags);
      if (!(dt > 0.0)) throw ConfigError("delta_t", "must be > 0");
      const TermOrdering ord = rethrow_as_config("ordering", [&] { return parse_ordering(ordering); });
      const CompiledStep step = compile_step(hamiltonian_general(config.params, time), dt, ord);
      const auto path = resolve_output_path(compile_out, "step.qasm");
      write_output(path, export_text(step.circuit), out);
      const CompilationStats& s = step.stats;
      out << fmt::format("terms={} cnot_naive={} cnot_cancelled={} single_qubit={} global_phase={} ordering={}\n",
                         s.term_count, s.cnot_count_naive, s.cnot_count_after_cancellation,
                         s.single_qubit_count, s.global_phase, to_string(ord));
      return kExitOk;
    }
    if (*fidelity) {
      out << fmt::format("{:.6g}\n", fidelity_threshold(total, cnot, steps));
      return kExitOk;
    }
    if (*verify) {
      vo.golden_dir = golden_dir;
      for (const double g : vo.backend_couplings) {
        YukawaParams p = vo.params;
        p.g = g;
        p.validate();
      }
      const VerifyReport report = run_verification(vo);
      out << format_report(report);
      return report.ok() ? kExitOk : kExitVerification;
    }
  } catch (const std::length_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitRuntime;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace bosonq::cli
