# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Construction of (diluted) Chimera graphs.

Sites are indexed cell-major: the flat index of (cell_row, cell_col, partition, leg) is
``((cell_row * L + cell_col) * 2 + partition) * 4 + leg``. Partition 0 is the left half of a
unit cell and carries the vertical inter-cell couplers, partition 1 is the right half and
carries the horizontal ones. This is the linear indexing of ``dwave_networkx.chimera_graph``.
"""

from enum import StrEnum
from typing import Self

import dwave_networkx as dnx
import numpy as np
import numpy.typing as npt
from pydantic import PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.logging import logger

CELL_SIZE = 8
LEGS = 4

type Edge = tuple[int, int]


class DilutionKind(StrEnum):
    """The supported dilution patterns."""

    NONE = "none"
    DEFAULT = "default-diluted"
    MASK = "mask"


class DilutionPattern(BaseModel):
    """
    A dilution specification.

    Attributes:
        kind: Which pattern to apply.
        kept_edges: The explicit edge mask, required for and only allowed with ``kind == mask``.

    """

    kind: DilutionKind = DilutionKind.DEFAULT
    kept_edges: tuple[Edge, ...] | None = None

    @model_validator(mode="after")
    def mask_matches_kind(self) -> Self:
        """Validate that an explicit edge mask is given exactly when the kind asks for one."""
        if self.kind is DilutionKind.MASK and self.kept_edges is None:
            err_msg = "a mask dilution pattern requires kept_edges."
            raise ValueError(err_msg)
        if self.kind is not DilutionKind.MASK and self.kept_edges is not None:
            err_msg = f"kept_edges is only allowed with the mask pattern, not {self.kind}."
            raise ValueError(err_msg)
        return self


def site_coordinates(index: int, L: int) -> tuple[int, int, int, int]:
    """
    Return the (cell_row, cell_col, partition, leg) coordinates of a flat site index.

    >>> site_coordinates(13, 2)
    (0, 1, 1, 1)
    """
    cell, rest = divmod(index, CELL_SIZE)
    partition, leg = divmod(rest, LEGS)
    cell_row, cell_col = divmod(cell, L)
    return cell_row, cell_col, partition, leg


def _is_chimera_edge(i: int, j: int, L: int) -> bool:
    ri, ci, ui, ki = site_coordinates(i, L)
    rj, cj, uj, kj = site_coordinates(j, L)
    if (ri, ci) == (rj, cj):
        return ui != uj
    if ui != uj or ki != kj:
        return False
    if ui == 0:
        return ci == cj and abs(ri - rj) == 1
    return ri == rj and abs(ci - cj) == 1


class ChimeraGraph(BaseModel):
    """
    A Chimera graph of L x L unit cells of 4 + 4 sites, possibly diluted.

    Edges are stored as sorted ``(i, j)`` pairs with ``i < j``, in ascending order.
    """

    L: PositiveInt
    edges: tuple[Edge, ...]
    pattern: DilutionKind

    @model_validator(mode="after")
    def edges_are_chimera_edges(self) -> Self:
        """Validate that every edge is an in-range, non-duplicate coupler of the full Chimera graph."""
        n_sites = self.n_sites
        seen: set[Edge] = set()
        for i, j in self.edges:
            if not (0 <= i < n_sites and 0 <= j < n_sites):
                err_msg = f"edge ({i}, {j}) has a site index outside [0, {n_sites})."
                raise ValueError(err_msg)
            if i >= j:
                err_msg = f"edge ({i}, {j}) must be stored with i < j and may not be a self edge."
                raise ValueError(err_msg)
            if (i, j) in seen:
                err_msg = f"duplicate edge ({i}, {j})."
                raise ValueError(err_msg)
            if not _is_chimera_edge(i, j, self.L):
                err_msg = f"edge ({i}, {j}) is not a coupler of the {self.L}x{self.L} Chimera graph."
                raise ValueError(err_msg)
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            err_msg = "edges must be sorted in ascending order."
            raise ValueError(err_msg)
        return self

    @property
    def n_sites(self) -> int:
        """The number of sites, 8L²."""
        return CELL_SIZE * self.L * self.L

    @property
    def n_edges(self) -> int:
        """The number of couplers kept by the dilution pattern."""
        return len(self.edges)

    def is_intra_cell(self, edge: Edge) -> bool:
        """Whether the edge couples the two partitions of one unit cell."""
        return edge[0] // CELL_SIZE == edge[1] // CELL_SIZE

    def site_colors(self) -> npt.NDArray[np.int8]:
        """
        A proper two-coloring of the sites.

        Within a cell both partitions form the bipartition, and adjacent cells swap colors, so no
        edge (intra-cell or inter-cell) joins two sites of the same color.
        """
        index = np.arange(self.n_sites)
        cell, rest = np.divmod(index, CELL_SIZE)
        row, col = np.divmod(cell, self.L)
        return ((row + col + rest // LEGS) % 2).astype(np.int8)

    def edge_array(self) -> npt.NDArray[np.int64]:
        """Return the edges as an (n_edges, 2) integer array."""
        return np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)


def _full_chimera_edges(L: int) -> list[Edge]:
    graph = dnx.chimera_graph(L, L, LEGS)
    return sorted((min(u, v), max(u, v)) for u, v in graph.edges())


def _default_diluted_edges(L: int) -> list[Edge]:
    """Keep couplers (left k, right k) and (left k, right k+1 mod 4) inside each cell, and every inter-cell coupler."""
    kept: list[Edge] = []
    for i, j in _full_chimera_edges(L):
        if i // CELL_SIZE != j // CELL_SIZE:
            kept.append((i, j))
            continue
        left_leg = i % LEGS
        right_leg = j % LEGS
        if right_leg in (left_leg, (left_leg + 1) % LEGS):
            kept.append((i, j))
    return kept


def build_diluted_chimera(L: int, pattern: DilutionPattern | DilutionKind | str = DilutionKind.DEFAULT) -> ChimeraGraph:
    """
    Build a Chimera graph of L x L unit cells with the given dilution pattern.

    The construction is deterministic. The default pattern keeps two staggered couplers for every
    left-partition site of a cell and all inter-cell couplers.

    Args:
        L: The linear number of unit cells.
        pattern: The dilution pattern, either a full specification or the name of a built-in pattern.

    Raises:
        pydantic.ValidationError: If an explicit edge mask holds an out-of-range or non-Chimera edge.

    """
    if not isinstance(pattern, DilutionPattern):
        pattern = DilutionPattern(kind=DilutionKind(pattern))

    match pattern.kind:
        case DilutionKind.NONE:
            edges = _full_chimera_edges(L)
        case DilutionKind.DEFAULT:
            edges = _default_diluted_edges(L)
        case DilutionKind.MASK:
            edges = sorted((min(i, j), max(i, j)) for i, j in pattern.kept_edges or ())

    logger.debug("LATTICE - built %s Chimera graph with L=%d and %d edges", pattern.kind, L, len(edges))
    return ChimeraGraph(L=L, edges=tuple(edges), pattern=pattern.kind)
