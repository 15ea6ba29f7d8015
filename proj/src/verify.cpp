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

#include "bosonq/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <random>

#include <fmt/format.h>

#include "bosonq/encodings.hpp"

namespace bosonq {

namespace {

constexpr double kTol = 1e-12;
constexpr double kBackendTol = 1e-8;

void add(VerifyReport& r, std::string suite, std::string check, bool passed, std::string detail) {
  r.rows.push_back({std::move(suite), std::move(check),
                    passed ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void skip(VerifyReport& r, std::string suite, std::string check, std::string why) {
  r.rows.push_back({std::move(suite), std::move(check), CheckStatus::skip, std::move(why)});
}

void append(VerifyReport& into, VerifyReport from) {
  into.rows.insert(into.rows.end(), std::make_move_iterator(from.rows.begin()),
                   std::make_move_iterator(from.rows.end()));
}

const char* status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

}  // namespace

bool VerifyReport::ok() const { return count(CheckStatus::fail) == 0; }

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [s](const VerifyRow& r) { return r.status == s; }));
}

VerifyReport verify_golden(const std::filesystem::path& dir) {
  VerifyReport r;
  std::vector<std::filesystem::path> files;
  try {
    if (!std::filesystem::is_directory(dir)) {
      add(r, "golden", dir.string(), false, "directory not found");
      return r;
    }
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".golden") files.push_back(e.path());
    }
  } catch (const std::exception& ex) {
    add(r, "golden", dir.string(), false, ex.what());
    return r;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) add(r, "golden", dir.string(), false, "no .golden files");
  for (const auto& f : files) {
    try {
      const GoldenEntry entry = load_golden(f);
      const GoldenCheck c = check_golden(entry, kTol);
      std::string detail = fmt::format("max dev {:.1e}", c.max_deviation);
      for (const auto& n : c.notes) detail += "; " + n;
      add(r, "golden", entry.name, c.passed, detail);
    } catch (const std::exception& ex) {
      add(r, "golden", f.filename().string(), false, ex.what());
    }
  }
  return r;
}

VerifyReport verify_recurrence(int max_t) {
  VerifyReport r;
  for (int t = 1; t <= max_t; ++t) {
    const std::string name = fmt::format("t={}", t);
    if (t > kMaxBosonQubits || t > kDenseQubitCap) {
      skip(r, "recurrence", name, fmt::format("t exceeds the cap of {}", std::min(kMaxBosonQubits, kDenseQubitCap)));
      continue;
    }
    const BinaryCreation bc = binary_creation(t);
    const double dev = (to_dense(bc.op) - dense_creation(t)).cwiseAbs().maxCoeff();

    // Each component must be the single ladder element |i><i-1|.
    double comp_dev = 0.0;
    bool indices_ok = static_cast<int>(bc.components.size()) == (1 << t) - 1;
    for (std::size_t k = 0; k < bc.components.size(); ++k) {
      const LadderComponent& c = bc.components[k];
      indices_ok = indices_ok && c.index == static_cast<int>(k) + 1 &&
                   std::abs(c.weight - std::sqrt(static_cast<double>(c.index))) < kTol;
      DenseMatrix expected = DenseMatrix::Zero(Eigen::Index{1} << t, Eigen::Index{1} << t);
      expected(c.index, c.index - 1) = 1.0;
      comp_dev = std::max(comp_dev, (to_dense(c.op) - expected).cwiseAbs().maxCoeff());
    }

    // <m|[a, a†]|m> is 1 below the top state and 1 - 2^t on it.
    const PauliSum a = binary_annihilation(t);
    const PauliSum comm = a * bc.op - bc.op * a;
    double comm_dev = 0.0;
    const int top = (1 << t) - 1;
    for (int m = 0; m <= top; ++m) {
      const double want = m < top ? 1.0 : 1.0 - static_cast<double>(1 << t);
      const auto idx = static_cast<std::uint64_t>(m);
      comm_dev = std::max(comm_dev, std::abs(matrix_element(comm, idx, idx) - Complex{want, 0.0}));
    }
    // Absolute 1e-12 through t = 6; beyond that the entries grow like 2^t.
    const double tol = kTol * std::max(1.0, static_cast<double>(1 << t) / 64.0);
    add(r, "recurrence", name, dev < tol && comp_dev < tol && comm_dev < tol && indices_ok,
        fmt::format("dense {:.1e}, components {:.1e}, commutator {:.1e}", dev, comp_dev, comm_dev));
  }
  return r;
}

VerifyReport verify_unary(int max_truncation) {
  VerifyReport r;
  for (int n = 1; n <= max_truncation; ++n) {
    const std::string name = fmt::format("N={}", n);
    if (n + 1 > kMaxQubits) {
      skip(r, "unary", name, fmt::format("one-hot register exceeds {} qubits", kMaxQubits));
      continue;
    }
    const int t = std::bit_width(static_cast<unsigned>(n));
    const UnaryCreation u = unary_creation(n);
    const PauliSum b = binary_creation(t).op;
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex want{std::sqrt(static_cast<double>(i + 1)), 0.0};
      const Complex got_u = matrix_element(u.op, unary_basis_index(i + 1, n), unary_basis_index(i, n));
      const Complex got_b = matrix_element(b, static_cast<std::uint64_t>(i + 1), static_cast<std::uint64_t>(i));
      dev = std::max({dev, std::abs(got_u - want), std::abs(got_b - want)});
    }
    const bool counts = u.ladder_terms == n && u.op.n_qubits() == n + 1 && t == static_cast<int>(std::ceil(std::log2(n + 1.0)));
    add(r, "unary", name, dev < kTol && counts,
        fmt::format("dev {:.1e}, unary qubits {}, ladder terms {}, binary qubits {}", dev,
                    u.op.n_qubits(), u.ladder_terms, t));
  }
  return r;
}

VerifyReport verify_hamiltonians(int draws, std::uint64_t seed) {
  VerifyReport r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> g(0.0, 40.0), kappa(0.1, 2.0), omega(0.5, 10.0),
      omega0(0.5, 3.0), time(0.0, 30.0);
  double worst = 0.0;
  int failures = 0;
  for (int k = 0; k < draws; ++k) {
    YukawaParams p;
    p.g = g(rng);
    p.kappa = kappa(rng);
    p.omega = omega(rng);
    p.omega0 = omega0(rng);
    const double tt = time(rng);
    const double dev = max_coefficient_deviation(hamiltonian_t2(p, tt), hamiltonian_general(p, tt));
    worst = std::max(worst, dev);
    if (!(dev < kTol)) ++failures;
  }
  add(r, "hamiltonian", fmt::format("t2 vs general ({} draws)", draws), failures == 0 && draws > 0,
      fmt::format("max dev {:.1e}, {} failing", worst, failures));
  return r;
}

VerifyReport verify_backends(const YukawaParams& params, const std::vector<double>& couplings,
                             int n_steps) {
  VerifyReport r;
  const int n = params.n_x * (2 + params.t);
  for (double g : couplings) {
    const std::string name = fmt::format("g={} n_x={} t={}", g, params.n_x, params.t);
    if (n > kDenseQubitCap) {
      skip(r, "backend", name, fmt::format("register of {} qubits exceeds the dense cap of {}", n, kDenseQubitCap));
      continue;
    }
    YukawaParams p = params;
    p.g = g;
    EvolutionConfig cfg;
    cfg.n_t = n_steps;
    const Trajectory sv = evolve(cfg, p);
    cfg.backend = Backend::mps;
    const Trajectory mps = evolve(cfg, p);
    double dev = 0.0;
    for (std::size_t l = 0; l < sv.records.size(); ++l) {
      const Observables& a = sv.records[l].rho;
      const Observables& b = mps.records[l].rho;
      dev = std::max({dev, std::abs(a.rho_P - b.rho_P), std::abs(a.rho_N - b.rho_N),
                      std::abs(a.rho_b - b.rho_b)});
    }
    add(r, "backend", name, dev < kBackendTol && sv.records.size() == mps.records.size(),
        fmt::format("max dev {:.1e} over {} steps", dev, n_steps));
  }
  return r;
}

VerifyReport run_verification(const VerifyOptions& o) {
  VerifyReport r;
  const auto guarded = [&](const char* suite, auto&& fn) {
    try {
      append(r, fn());
    } catch (const std::exception& ex) {
      add(r, suite, "suite", false, ex.what());
    }
  };
  guarded("golden", [&] { return verify_golden(o.golden_dir); });
  guarded("recurrence", [&] { return verify_recurrence(o.max_t); });
  guarded("unary", [&] { return verify_unary(o.max_truncation); });
  guarded("hamiltonian", [&] { return verify_hamiltonians(o.hamiltonian_draws, o.seed); });
  guarded("backend", [&] { return verify_backends(o.params, o.backend_couplings, o.backend_steps); });
  return r;
}

std::string format_report(const VerifyReport& report) {
  std::size_t w_suite = 5, w_check = 5;
  for (const auto& row : report.rows) {
    w_suite = std::max(w_suite, row.suite.size());
    w_check = std::max(w_check, row.check.size());
  }
  std::string out = fmt::format("{:<{}}  {:<{}}  {:<6}{}\n", "suite", w_suite, "check", w_check,
                                "result", "  detail");
  for (const auto& row : report.rows) {
    out += fmt::format("{:<{}}  {:<{}}  {:<6}  {}\n", row.suite, w_suite, row.check, w_check,
                       status_text(row.status), row.detail);
  }
  out += fmt::format("{} passed, {} failed, {} skipped\n", report.count(CheckStatus::pass),
                     report.count(CheckStatus::fail), report.count(CheckStatus::skip));
  return out;
}

}  // namespace bosonq
