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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bosonq/circuit.hpp"
#include "bosonq/dynamics.hpp"
#include "bosonq/encodings.hpp"
#include "bosonq/golden.hpp"
#include "bosonq/pauli.hpp"
#include "bosonq/verify.hpp"
#include "bosonq/yukawa.hpp"

namespace py = pybind11;
using namespace bosonq;

namespace {

py::dict trajectory_dict(const Trajectory& tr) {
  std::vector<double> time, p, n, b;
  for (const auto& r : tr.records) {
    time.push_back(r.time);
    p.push_back(r.rho.rho_P);
    n.push_back(r.rho.rho_N);
    b.push_back(r.rho.rho_b);
  }
  py::dict d;
  d["time"] = time;
  d["rho_P"] = p;
  d["rho_N"] = n;
  d["rho_b"] = b;
  d["max_norm_drift"] = tr.max_norm_drift;
  d["discarded_weight"] = tr.mps_report.discarded_weight;
  d["max_bond"] = tr.mps_report.max_bond;
  return d;
}

py::dict band_dict(const ErrorBand& band) {
  py::dict d;
  std::vector<double> time;
  for (const auto& r : band.records) time.push_back(r.time);
  d["time"] = time;
  d["samples"] = band.samples;
  const auto column = [&](const char* name, Stats BandRecord::*field) {
    std::vector<double> mean, std, lo, hi;
    for (const auto& r : band.records) {
      const Stats& s = r.*field;
      mean.push_back(s.mean);
      std.push_back(s.std);
      lo.push_back(s.min);
      hi.push_back(s.max);
    }
    py::dict c;
    c["mean"] = mean;
    c["std"] = std;
    c["min"] = lo;
    c["max"] = hi;
    d[name] = c;
  };
  column("rho_P", &BandRecord::rho_P);
  column("rho_N", &BandRecord::rho_N);
  column("rho_b", &BandRecord::rho_b);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qubit encodings and real-time dynamics of a boson-fermion lattice model.";

  py::class_<PauliString>(m, "PauliString")
      .def_static("from_letters", &PauliString::from_letters)
      .def_property_readonly("n_qubits", &PauliString::n_qubits)
      .def("letters", &PauliString::letters)
      .def("weight", &PauliString::weight)
      .def("support", &PauliString::support)
      .def("__repr__", [](const PauliString& s) { return "PauliString('" + s.letters() + "')"; });

  py::class_<PauliSum>(m, "PauliSum")
      .def(py::init<int>())
      .def_static("identity", &PauliSum::identity)
      .def_static("from_text", [](const std::string& text, int n) { return parse_text(text, n); },
                  py::arg("text"), py::arg("n_qubits") = -1)
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def("__len__", &PauliSum::size)
      .def("coefficient", py::overload_cast<std::string_view>(&PauliSum::coefficient, py::const_))
      .def("terms",
           [](const PauliSum& a) {
             std::vector<std::pair<std::string, Complex>> out;
             for (const auto& [s, c] : a.terms()) out.emplace_back(s.letters(), c);
             return out;
           })
      .def("to_text", [](const PauliSum& a) { return to_text(a); })
      .def("to_dense", [](const PauliSum& a) { return to_dense(a); })
      .def("is_hermitian", [](const PauliSum& a) { return is_hermitian(a); })
      .def("matrix_element", &matrix_element)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__rmul__", [](const PauliSum& a, Complex c) { return c * a; })
      .def("__mul__", [](const PauliSum& a, Complex c) { return c * a; });

  m.def("approx_equal", &approx_equal, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12);
  m.def("max_coefficient_deviation", &max_coefficient_deviation);

  py::class_<LadderComponent>(m, "LadderComponent")
      .def_readonly("index", &LadderComponent::index)
      .def_readonly("weight", &LadderComponent::weight)
      .def_readonly("op", &LadderComponent::op);
  py::class_<BinaryCreation>(m, "BinaryCreation")
      .def_readonly("t", &BinaryCreation::t)
      .def_readonly("op", &BinaryCreation::op)
      .def_readonly("components", &BinaryCreation::components);
  py::class_<UnaryCreation>(m, "UnaryCreation")
      .def_readonly("n_max", &UnaryCreation::n_max)
      .def_readonly("op", &UnaryCreation::op)
      .def_readonly("ladder_terms", &UnaryCreation::ladder_terms);

  m.def("binary_creation", &binary_creation, py::arg("t"));
  m.def("binary_annihilation", &binary_annihilation, py::arg("t"));
  m.def("binary_number", &binary_number, py::arg("t"));
  m.def("number_squared", &number_squared, py::arg("t"));
  m.def("squeeze_block", &squeeze_block, py::arg("t"));
  m.def("dense_creation", &dense_creation, py::arg("t"));
  m.def("unary_creation", &unary_creation, py::arg("n_max"));
  m.def("unary_number", &unary_number, py::arg("n_max"));
  m.def("unary_basis_index", &unary_basis_index, py::arg("occupation"), py::arg("n_max"));

  py::class_<YukawaParams>(m, "YukawaParams")
      .def(py::init([](double g, double kappa, double omega, double omega0, int t, int n_x) {
             YukawaParams p;
             p.g = g;
             p.kappa = kappa;
             p.omega = omega;
             p.omega0 = omega0;
             p.t = t;
             p.n_x = n_x;
             p.validate();
             return p;
           }),
           py::arg("g") = 1.0, py::arg("kappa") = 0.5, py::arg("omega") = 6.95, py::arg("omega0") = 1.0,
           py::arg("t") = 2, py::arg("n_x") = 1)
      .def_readwrite("g", &YukawaParams::g)
      .def_readwrite("kappa", &YukawaParams::kappa)
      .def_readwrite("omega", &YukawaParams::omega)
      .def_readwrite("omega0", &YukawaParams::omega0)
      .def_readwrite("t", &YukawaParams::t)
      .def_readwrite("n_x", &YukawaParams::n_x)
      .def("validate", &YukawaParams::validate);

  m.def("site_hamiltonian", &site_hamiltonian, py::arg("params"), py::arg("time"));
  m.def("hamiltonian_general", &hamiltonian_general, py::arg("params"), py::arg("time"));
  m.def("hamiltonian_t2", &hamiltonian_t2, py::arg("params"), py::arg("time"));

  m.def(
      "evolve",
      [](const YukawaParams& p, double delta_t, int n_t, const std::string& policy, const std::string& backend,
         const std::string& initial, std::uint64_t seed, int chi_max) {
        EvolutionConfig cfg;
        cfg.delta_t = delta_t;
        cfg.n_t = n_t;
        cfg.policy = parse_policy(policy);
        cfg.backend = parse_backend(backend);
        cfg.initial = InitialState::parse(initial);
        cfg.seed = seed;
        cfg.mps.chi_max = chi_max;
        Trajectory tr;
        {
          py::gil_scoped_release release;
          tr = evolve(cfg, p);
        }
        return trajectory_dict(tr);
      },
      py::arg("params"), py::arg("delta_t") = 0.1, py::arg("n_t") = 300, py::arg("policy") = "left",
      py::arg("backend") = "statevector", py::arg("initial") = "fermion_pair", py::arg("seed") = kDefaultSeed,
      py::arg("chi_max") = 64);

  m.def(
      "sample_error_band",
      [](const YukawaParams& p, int samples, std::uint64_t seed, double delta_t, int n_t, const std::string& initial,
         int threads) {
        EvolutionConfig cfg;
        cfg.policy = TPrimePolicy::random;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.delta_t = delta_t;
        cfg.n_t = n_t;
        cfg.initial = InitialState::parse(initial);
        cfg.threads = threads;
        SampledRun run;
        {
          py::gil_scoped_release release;
          run = sample_error_band(cfg, p);
        }
        return band_dict(run.band);
      },
      py::arg("params"), py::arg("samples") = 50, py::arg("seed") = kDefaultSeed, py::arg("delta_t") = 0.1,
      py::arg("n_t") = 300, py::arg("initial") = "fermion_pair", py::arg("threads") = 0);

  m.def(
      "time_averaged_std",
      [](const YukawaParams& p, int samples, std::uint64_t seed, int n_t) {
        EvolutionConfig cfg;
        cfg.policy = TPrimePolicy::random;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.n_t = n_t;
        py::gil_scoped_release release;
        return time_averaged_std(sample_error_band(cfg, p).band, Observable::rho_P);
      },
      py::arg("params"), py::arg("samples") = 50, py::arg("seed") = kDefaultSeed, py::arg("n_t") = 300);

  m.def(
      "compile_step",
      [](const PauliSum& h, double delta_t, const std::string& ordering) {
        const CompiledStep cs = compile_step(h, delta_t, parse_ordering(ordering));
        py::dict d;
        d["term_count"] = cs.stats.term_count;
        d["cnot_count_naive"] = cs.stats.cnot_count_naive;
        d["cnot_count_after_cancellation"] = cs.stats.cnot_count_after_cancellation;
        d["single_qubit_count"] = cs.stats.single_qubit_count;
        d["global_phase"] = cs.stats.global_phase;
        d["qasm"] = export_text(cs.circuit);
        return d;
      },
      py::arg("hamiltonian"), py::arg("delta_t"), py::arg("ordering") = "lex");
  m.def(
      "pauli_exponential_unitary",
      [](const std::string& letters, double theta) {
        return circuit_unitary(compile_pauli_exponential(PauliString::from_letters(letters), theta));
      },
      py::arg("letters"), py::arg("theta"));
  m.def("fidelity_threshold", &fidelity_threshold, py::arg("total_fidelity"), py::arg("cnot_per_step"),
        py::arg("n_steps"));

  m.def(
      "verify",
      [](int max_t, int draws, int steps) {
        VerifyOptions vo;
        vo.max_t = max_t;
        vo.hamiltonian_draws = draws;
        vo.backend_steps = steps;
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_verification(vo);
        }
        py::dict d;
        d["ok"] = r.ok();
        d["passed"] = r.count(CheckStatus::pass);
        d["failed"] = r.count(CheckStatus::fail);
        d["skipped"] = r.count(CheckStatus::skip);
        d["report"] = format_report(r);
        return d;
      },
      py::arg("max_t") = 6, py::arg("draws") = 100, py::arg("steps") = 300);
  m.def("default_golden_dir", &default_golden_dir);
}
