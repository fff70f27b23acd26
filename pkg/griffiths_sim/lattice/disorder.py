# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Quenched disorder: random ferromagnetic couplings on a Chimera graph."""

from enum import StrEnum
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.errors import UnknownDistributionError
from griffiths_sim.lattice.chimera import ChimeraGraph, Edge
from griffiths_sim.logging import logger

MAX_SEED = 2**64 - 1

_SUPPORT_TOLERANCE = 1e-12


class DisorderDistribution(StrEnum):
    """The coupling laws; each value of the support is drawn with probability 1/6."""

    QMC_SIX_LEVEL = "qmc-six-level"
    DWAVE_SIX_LEVEL = "dwave-six-level"

    @classmethod
    def _missing_(cls, value: object) -> "DisorderDistribution":
        err_msg = f"unknown disorder distribution {value!r}, expected one of {[m.value for m in cls]}."
        raise UnknownDistributionError(err_msg)

    @property
    def support(self) -> tuple[float, ...]:
        """The equiprobable coupling values."""
        return _SUPPORTS[self]


class DisorderInstance(BaseModel):
    """
    One realization of the quenched randomness.

    Attributes:
        graph: The coupling graph. J = 0 bonds stay in its edge list.
        couplings: One coupling per graph edge, in the graph's edge order.
        seed: The 64-bit seed the couplings were drawn with.
        distribution_id: The law the couplings were drawn from.
        instance_id: The index of the instance within its ensemble.

    """

    graph: ChimeraGraph
    couplings: FloatVector
    seed: int = Field(ge=0, le=MAX_SEED)
    distribution_id: DisorderDistribution
    instance_id: NonNegativeInt = 0

    @model_validator(mode="after")
    def couplings_follow_law(self) -> Self:
        """Validate that every edge has one coupling taken from the declared support."""
        if len(self.couplings) != self.graph.n_edges:
            err_msg = f"expected {self.graph.n_edges} couplings, one per edge, got {len(self.couplings)}."
            raise ValueError(err_msg)
        support = np.asarray(self.distribution_id.support)
        values = self.couplings.as_array()
        off_support = np.min(np.abs(values[:, None] - support[None, :]), axis=1, initial=np.inf) > _SUPPORT_TOLERANCE
        if values.size and np.any(off_support):
            bad = int(np.flatnonzero(off_support)[0])
            err_msg = f"coupling {values[bad]} of edge {self.graph.edges[bad]} is not in the support of {self.distribution_id}."
            raise ValueError(err_msg)
        return self

    @property
    def n_sites(self) -> int:
        return self.graph.n_sites

    @property
    def label(self) -> str:
        """A stable, human-readable identifier used in checkpoint paths and record logs."""
        return f"L{self.graph.L}-{self.instance_id:04d}"

    def coupling_map(self) -> dict[Edge, float]:
        """Return the couplings keyed by edge."""
        return dict(zip(self.graph.edges, self.couplings, strict=True))

    def coupling_array(self) -> npt.NDArray[np.float64]:
        return self.couplings.as_array()


def sample_disorder(
    graph: ChimeraGraph,
    distribution_id: DisorderDistribution | str,
    seed: int,
    instance_id: int = 0,
) -> DisorderInstance:
    """
    Draw one coupling per edge, i.i.d. and uniformly from the support of the distribution.

    The draw is a pure function of ``(graph, distribution_id, seed)``.

    Raises:
        UnknownDistributionError: If the distribution identifier is not known.

    """
    distribution = DisorderDistribution(distribution_id)
    rng = np.random.default_rng(seed)
    levels = rng.integers(0, len(distribution.support), size=graph.n_edges)
    couplings = np.asarray(distribution.support)[levels]
    logger.debug("LATTICE - sampled %s disorder for %d edges with seed %d", distribution, graph.n_edges, seed)
    return DisorderInstance(
        graph=graph,
        couplings=couplings,
        seed=seed,
        distribution_id=distribution,
        instance_id=instance_id,
    )


_SUPPORTS: dict[DisorderDistribution, tuple[float, ...]] = {
    DisorderDistribution.QMC_SIX_LEVEL: (0.0, -0.2, -0.4, -0.6, -0.8, -1.0),
    DisorderDistribution.DWAVE_SIX_LEVEL: (0.0, -0.1, -0.2, -0.3, -0.4, -0.5),
}
