# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Quench distortion.

With probability q a read-out relaxes towards a local minimum of the classical energy by greedy
single-spin descent in a random site order before it is read out. The descent only resolves flips
that lower the energy by more than ``min_gain`` (QMC units); smaller gains are frozen in, so a
qubit whose local field vanishes keeps its thermal read-out.
"""

import numpy as np
import numpy.typing as npt

from griffiths_sim.qmc._kernels import greedy_descent
from griffiths_sim.qmc.hamiltonian import IsingProblem
from griffiths_sim.qmc.sweep import adjacency_csr

# Energy gain a flip needs during the quench; a free qubit is pulled along when |h_dev| > 0.025.
DEFAULT_MIN_GAIN = 0.1


def _check_min_gain(min_gain: float) -> None:
    if min_gain < 0.0:
        err_msg = f"min_gain must be non-negative, got {min_gain}."
        raise ValueError(err_msg)


def apply_quench(
    spins: npt.NDArray[np.int8],
    problem: IsingProblem,
    strength: float,
    rng: np.random.Generator,
    *,
    min_gain: float = DEFAULT_MIN_GAIN,
) -> int:
    """
    Relax each row of ``spins`` in place with probability ``strength`` and return the number of flips.

    Raises:
        ValueError: If the strength is outside [0, 1], ``min_gain`` is negative or the rows do not match the problem.

    """
    if not 0.0 <= strength <= 1.0:
        err_msg = f"quench strength must lie in [0, 1], got {strength}."
        raise ValueError(err_msg)
    _check_min_gain(min_gain)
    if spins.ndim != 2 or spins.shape[1] != problem.n_sites:  # noqa: PLR2004
        err_msg = f"expected samples of {problem.n_sites} spins, got shape {spins.shape}."
        raise ValueError(err_msg)
    n_samples = spins.shape[0]
    selected = rng.random(n_samples) < strength
    orders = np.argsort(rng.random((n_samples, problem.n_sites)), axis=1).astype(np.int64)
    if not selected.any():
        return 0
    indptr, indices, couplings = adjacency_csr(problem.n_sites, problem.edge_array(), problem.couplings.as_array())
    return int(greedy_descent(spins, indptr, indices, couplings, problem.fields.as_array(), orders, selected, float(min_gain)))


def quenched_expected_spins(
    expected: npt.NDArray[np.float64],
    problem: IsingProblem,
    strength: float,
    *,
    min_gain: float = DEFAULT_MIN_GAIN,
) -> npt.NDArray[np.float64]:
    """
    ⟨σ_i⟩ after the quench for a decoupled problem.

    A qubit with 2|h_i| > ``min_gain`` reads q·sign(h_i) + (1 − q)·⟨σ_i⟩, any other qubit keeps ⟨σ_i⟩.
    The read-out is therefore continuous at h_i = 0.

    Raises:
        ValueError: For coupled problems, whose quenched expectation has no closed form.

    """
    _check_min_gain(min_gain)
    if strength == 0.0:
        return expected
    if not problem.is_decoupled():
        err_msg = "quenched expectations are only available for decoupled problems."
        raise ValueError(err_msg)
    fields = problem.fields.as_array()
    direction = np.sign(fields)
    pulled = np.where(2.0 * np.abs(fields) > min_gain, direction * (1.0 - direction * expected), 0.0)
    return expected + strength * pulled
