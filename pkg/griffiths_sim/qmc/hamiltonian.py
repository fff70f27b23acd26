# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The transverse-field Ising Hamiltonian.

H = Σ_edges J_ij σᶻ_i σᶻ_j − Γ Σ_i σˣ_i − Σ_i h_i σᶻ_i. Disorder instances carry ferromagnetic
couplings (J ≤ 0); gauge-transformed device frames may carry either sign, so the problem type
itself does not restrict the sign of J.
"""

from typing import Self

import networkx as nx
import numpy as np
import numpy.typing as npt
from pydantic import Field, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.lattice.chimera import Edge
from griffiths_sim.lattice.disorder import DisorderInstance


def _bipartite_colors(n_sites: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    graph = nx.Graph()
    graph.add_nodes_from(range(n_sites))
    graph.add_edges_from(edges)
    if not nx.is_bipartite(graph):
        err_msg = "the coupling graph is not bipartite; pass an explicit two-coloring."
        raise ValueError(err_msg)
    coloring = nx.bipartite.color(graph)
    return tuple(int(coloring[i]) for i in range(n_sites))


class IsingProblem(BaseModel):
    """
    The classical (σᶻ) part of the Hamiltonian on an explicit coupling graph.

    Attributes:
        n_sites: The number of spins.
        edges: Sorted site pairs.
        couplings: J_ij per edge.
        fields: The longitudinal field h_i per site.
        colors: A proper two-coloring of the graph, used to order sweeps. Derived when omitted.
        label: An identifier carried into records.

    """

    n_sites: PositiveInt
    edges: tuple[Edge, ...]
    couplings: FloatVector
    fields: FloatVector
    colors: tuple[int, ...] = ()
    label: str = "problem"

    @model_validator(mode="before")
    @classmethod
    def derive_colors(cls, data: object) -> object:
        """Derive a two-coloring from the edges when none is given."""
        if isinstance(data, dict) and not data.get("colors"):
            edges = tuple(tuple(edge) for edge in data.get("edges", ()))
            data = {**data, "colors": _bipartite_colors(int(data["n_sites"]), edges)}
        return data

    @model_validator(mode="after")
    def shapes_are_consistent(self) -> Self:
        """Validate vector lengths, site ranges and the coloring."""
        if len(self.couplings) != len(self.edges):
            err_msg = f"expected {len(self.edges)} couplings, got {len(self.couplings)}."
            raise ValueError(err_msg)
        if len(self.fields) != self.n_sites or len(self.colors) != self.n_sites:
            err_msg = f"fields and colors must have one entry per site ({self.n_sites})."
            raise ValueError(err_msg)
        for i, j in self.edges:
            if not (0 <= i < self.n_sites and 0 <= j < self.n_sites) or i == j:
                err_msg = f"edge ({i}, {j}) is out of range or a self edge."
                raise ValueError(err_msg)
            if self.colors[i] == self.colors[j]:
                err_msg = f"edge ({i}, {j}) joins two sites of the same color."
                raise ValueError(err_msg)
        return self

    @classmethod
    def from_instance(cls, instance: DisorderInstance, fields: npt.ArrayLike | None = None) -> "IsingProblem":
        """Build the classical problem of a disorder instance, with zero longitudinal fields unless given."""
        field_values = np.zeros(instance.n_sites) if fields is None else np.broadcast_to(np.asarray(fields, dtype=np.float64), (instance.n_sites,))
        return cls(
            n_sites=instance.n_sites,
            edges=instance.graph.edges,
            couplings=instance.couplings,
            fields=field_values,
            colors=tuple(int(c) for c in instance.graph.site_colors()),
            label=instance.label,
        )

    def with_couplings(self, couplings: npt.ArrayLike) -> "IsingProblem":
        return self.model_copy(update={"couplings": FloatVector(np.asarray(couplings, dtype=np.float64).tolist())})

    def with_fields(self, fields: npt.ArrayLike) -> "IsingProblem":
        values = np.broadcast_to(np.asarray(fields, dtype=np.float64), (self.n_sites,))
        return self.model_copy(update={"fields": FloatVector(values.tolist())})

    def edge_array(self) -> npt.NDArray[np.int64]:
        return np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)

    def is_decoupled(self) -> bool:
        """Whether every coupling vanishes, so that the spins are independent."""
        return not np.any(self.couplings.as_array())

    def classical_energies(self, spins: npt.NDArray[np.integer]) -> npt.NDArray[np.float64]:
        """Return the classical energy of each configuration (rows of ``spins``)."""
        configurations = np.atleast_2d(spins).astype(np.float64)
        edges = self.edge_array()
        bond_terms = configurations[:, edges[:, 0]] * configurations[:, edges[:, 1]] @ self.couplings.as_array()
        return bond_terms - configurations @ self.fields.as_array()


class Hamiltonian(BaseModel):
    """The transverse-field Ising Hamiltonian: a classical problem plus a transverse field Γ ≥ 0."""

    problem: IsingProblem
    gamma: float = Field(ge=0.0)

    @classmethod
    def from_instance(cls, instance: DisorderInstance, gamma: float, fields: npt.ArrayLike | None = None) -> "Hamiltonian":
        return cls(problem=IsingProblem.from_instance(instance, fields), gamma=gamma)

    @property
    def n_sites(self) -> int:
        return self.problem.n_sites
