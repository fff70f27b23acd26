# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Estimators averaged over disorder instances, written [·] below.

Two global susceptibilities are kept apart on purpose: ``global_susceptibility`` is βN[⟨m²⟩],
while ``global_nl_susceptibility`` returns the per-instance pair (⟨m²⟩, 3⟨m²⟩² − ⟨m⁴⟩) used for
histograms.
"""

import math
from collections.abc import Sequence
from typing import Protocol

import numpy as np
import numpy.typing as npt
from pydantic import Field, PositiveInt

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.logging import logger
from griffiths_sim.observables.resampling import ResamplingMethod, resample
from griffiths_sim.qmc.records import MomentRecord


class MomentLike(Protocol):
    """Anything carrying global magnetization moments: QMC and device moment records."""

    @property
    def L(self) -> int: ...  # noqa: N802

    @property
    def m_abs(self) -> float: ...

    @property
    def m2(self) -> float: ...

    @property
    def m4(self) -> float: ...


class EnsembleEstimate(BaseModel):
    """
    A disorder-averaged observable with its resampling error.

    The tag identifies the ensemble: (β, Γ, L) for QMC data, (s*, L) for device data.
    """

    observable: str
    value: float
    error: float = Field(ge=0.0)
    n_instances: PositiveInt
    L: PositiveInt
    beta: float | None = None
    gamma: float | None = None
    s_star: float | None = None


class BinderRatio(BaseModel):
    """
    The Binder ratio g and, when defined, −ln(1 − g).

    ``log_scale`` is None when g (or one of its resampling replicas) reaches 1.
    """

    g: EnsembleEstimate
    log_scale: EnsembleEstimate | None


class LocalSusceptibilities(BaseModel):
    """Per-site χ_loc = ⟨m_i²⟩ and χ_nlloc = −(⟨m_i⁴⟩ − 3⟨m_i²⟩²) of one record."""

    chi_loc: FloatVector
    chi_nlloc: FloatVector


class GlobalSusceptibilities(BaseModel):
    """χ = ⟨m²⟩ and χ_nl = −(⟨m⁴⟩ − 3⟨m²⟩²) of one instance."""

    chi: float
    chi_nl: float


def _tags(records: Sequence[MomentLike]) -> dict[str, float | int | None]:
    if not records:
        err_msg = "need at least one record."
        raise ValueError(err_msg)
    tag_names = ("L", "beta", "gamma", "s_star")
    tags = {name: getattr(records[0], name, None) for name in tag_names}
    for record in records[1:]:
        for name in tag_names:
            if getattr(record, name, None) != tags[name]:
                err_msg = f"records mix different {name} values ({tags[name]} and {getattr(record, name, None)})."
                raise ValueError(err_msg)
    return tags


def _estimate(observable: str, value: float, error: float, records: Sequence[MomentLike]) -> EnsembleEstimate:
    return EnsembleEstimate(observable=observable, value=value, error=error, n_instances=len(records), **_tags(records))  # type: ignore[arg-type]


def _instance_binder(record: MomentLike) -> float:
    if record.m2 <= 0.0:
        err_msg = "the Binder ratio needs ⟨m²⟩ > 0 for every instance."
        raise ValueError(err_msg)
    return 0.5 * (3.0 - record.m4 / (record.m2 * record.m2))


def _log_scale(mean_g: npt.NDArray[np.float64]) -> float:
    g = float(mean_g[0])
    return -math.log(1.0 - g) if g < 1.0 else math.nan


def binder_ratio(records: Sequence[MomentLike], method: ResamplingMethod = ResamplingMethod.JACKKNIFE) -> BinderRatio:
    """
    g = [(1/2)(3 − ⟨m⁴⟩/⟨m²⟩²)] over the instances of one ensemble.

    Raises:
        ValueError: If an instance has ⟨m²⟩ = 0 or the records belong to different ensembles.

    """
    per_instance = np.array([_instance_binder(record) for record in records])
    g_value, g_error = resample(per_instance, method=method)
    g = _estimate("binder", g_value, g_error, records)

    log_value, log_error = resample(per_instance, _log_scale, method)
    if math.isnan(log_value) or math.isnan(log_error):
        logger.warning("OBSERVABLES - Binder ratio g=%.6f reaches 1, excluded from the -ln(1-g) stream", g_value)
        return BinderRatio(g=g, log_scale=None)
    return BinderRatio(g=g, log_scale=_estimate("binder_log", log_value, log_error, records))


def device_binder_ratio(records: Sequence[MomentLike], method: ResamplingMethod = ResamplingMethod.JACKKNIFE) -> BinderRatio:
    """The Binder ratio of device moment records for one (s*, L)."""
    return binder_ratio(records, method)


def global_susceptibility(
    records: Sequence[MomentLike],
    beta: float,
    n_sites: int,
    method: ResamplingMethod = ResamplingMethod.JACKKNIFE,
) -> EnsembleEstimate:
    """χ = βN[⟨m²⟩]."""
    if beta <= 0.0 or n_sites <= 0:
        err_msg = f"need β > 0 and N > 0, got β={beta}, N={n_sites}."
        raise ValueError(err_msg)
    scale = beta * n_sites
    value, error = resample([record.m2 for record in records], method=method)
    return _estimate("chi_global", scale * value, scale * error, records)


def magnetization_average(records: Sequence[MomentLike], method: ResamplingMethod = ResamplingMethod.JACKKNIFE) -> EnsembleEstimate:
    """[⟨|m|⟩]."""
    value, error = resample([record.m_abs for record in records], method=method)
    return _estimate("m_abs", value, error, records)


def local_susceptibilities(record: MomentRecord) -> LocalSusceptibilities:
    mi2 = record.mi2.as_array()
    mi4 = record.mi4.as_array()
    return LocalSusceptibilities(chi_loc=mi2, chi_nlloc=3.0 * mi2 * mi2 - mi4)


def global_nl_susceptibility(record: MomentLike) -> GlobalSusceptibilities:
    return GlobalSusceptibilities(chi=record.m2, chi_nl=3.0 * record.m2 * record.m2 - record.m4)


def pool_local_susceptibilities(records: Sequence[MomentRecord]) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Concatenate the per-site susceptibilities of all records: N × N_rand samples each."""
    pairs = [local_susceptibilities(record) for record in records]
    if not pairs:
        return np.empty(0), np.empty(0)
    return np.concatenate([p.chi_loc.as_array() for p in pairs]), np.concatenate([p.chi_nlloc.as_array() for p in pairs])


def pool_global_susceptibilities(records: Sequence[MomentLike]) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """One (χ, χ_nl) sample per instance."""
    pairs = [global_nl_susceptibility(record) for record in records]
    return np.array([p.chi for p in pairs]), np.array([p.chi_nl for p in pairs])
