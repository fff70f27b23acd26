# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Path-integral (Suzuki-Trotter) Monte Carlo of the transverse-field Ising model."""

from griffiths_sim.qmc.chain import ChainParams, run_chain
from griffiths_sim.qmc.couplings import EffectiveCouplings, effective_couplings, trotter_coupling
from griffiths_sim.qmc.grid import CellFailure, GridCell, GridRunner, run_grid
from griffiths_sim.qmc.hamiltonian import Hamiltonian, IsingProblem
from griffiths_sim.qmc.records import MomentRecord
from griffiths_sim.qmc.state import InitKind, PathState, init_state
from griffiths_sim.qmc.sweep import SweepEngine, UpdateScheme, sweep

__all__ = [
    "CellFailure",
    "ChainParams",
    "EffectiveCouplings",
    "GridCell",
    "GridRunner",
    "Hamiltonian",
    "InitKind",
    "IsingProblem",
    "MomentRecord",
    "PathState",
    "SweepEngine",
    "UpdateScheme",
    "effective_couplings",
    "init_state",
    "run_chain",
    "run_grid",
    "sweep",
    "trotter_coupling",
]
