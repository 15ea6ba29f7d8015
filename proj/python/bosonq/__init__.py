# Copyright 2026 The bosonq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Qubit encodings and real-time dynamics of a boson-fermion lattice model."""

from bosonq._core import (
    BinaryCreation,
    LadderComponent,
    PauliString,
    PauliSum,
    UnaryCreation,
    YukawaParams,
    approx_equal,
    binary_annihilation,
    binary_creation,
    binary_number,
    compile_step,
    default_golden_dir,
    dense_creation,
    evolve,
    fidelity_threshold,
    hamiltonian_general,
    hamiltonian_t2,
    max_coefficient_deviation,
    number_squared,
    pauli_exponential_unitary,
    sample_error_band,
    site_hamiltonian,
    squeeze_block,
    time_averaged_std,
    unary_basis_index,
    unary_creation,
    unary_number,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
