# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim.lattice.chimera import ChimeraGraph, DilutionKind, DilutionPattern, build_diluted_chimera, site_coordinates


@pytest.mark.parametrize("L", [1, 2, 4])
def test_full_chimera_edge_count(L: int) -> None:
    """Test that verifies that the undiluted graph has 16 couplers per cell plus 8 per pair of adjacent cells."""
    graph = build_diluted_chimera(L, DilutionKind.NONE)
    assert graph.n_sites == 8 * L * L
    assert graph.n_edges == 16 * L * L + 8 * L * (L - 1)


@pytest.mark.parametrize("L", [1, 2, 4])
def test_default_dilution_keeps_two_couplers_per_left_site(L: int) -> None:
    """Test that verifies that the default pattern keeps half of the intra-cell and all inter-cell couplers."""
    graph = build_diluted_chimera(L)
    intra = [edge for edge in graph.edges if graph.is_intra_cell(edge)]
    assert len(intra) == 8 * L * L
    assert graph.n_edges - len(intra) == 8 * L * (L - 1)
    assert graph.pattern is DilutionKind.DEFAULT


def test_build_is_deterministic() -> None:
    """Test that verifies that building the same graph twice gives equal graphs."""
    assert build_diluted_chimera(3) == build_diluted_chimera(3)


def test_edges_are_sorted_pairs() -> None:
    """Test that verifies that edges are stored with i < j in ascending order."""
    graph = build_diluted_chimera(2, DilutionKind.NONE)
    assert all(i < j for i, j in graph.edges)
    assert list(graph.edges) == sorted(graph.edges)


def test_site_colors_are_a_proper_coloring() -> None:
    """Test that verifies that no edge joins two sites of the same color."""
    graph = build_diluted_chimera(3, DilutionKind.NONE)
    colors = graph.site_colors()
    edges = graph.edge_array()
    assert np.all(colors[edges[:, 0]] != colors[edges[:, 1]])


def test_site_coordinates_round_trip_to_index() -> None:
    """Test that verifies the (row, col, partition, leg) decomposition of a flat index."""
    row, col, partition, leg = site_coordinates(45, 3)
    assert (row * 3 + col) * 8 + partition * 4 + leg == 45


def test_mask_pattern_keeps_listed_edges() -> None:
    """Test that verifies that an explicit mask keeps exactly its edges."""
    graph = build_diluted_chimera(1, DilutionPattern(kind=DilutionKind.MASK, kept_edges=((4, 0), (1, 5))))
    assert graph.edges == ((0, 4), (1, 5))


def test_mask_pattern_requires_edges() -> None:
    """Test that verifies that a mask pattern without edges is rejected."""
    with pytest.raises(ValidationError, match="requires kept_edges"):
        _ = DilutionPattern(kind=DilutionKind.MASK)


def test_kept_edges_only_with_mask() -> None:
    """Test that verifies that kept edges cannot be combined with a built-in pattern."""
    with pytest.raises(ValidationError, match="only allowed with the mask pattern"):
        _ = DilutionPattern(kind=DilutionKind.NONE, kept_edges=((0, 4),))


def test_mask_with_non_chimera_edge_fails() -> None:
    """Test that verifies that an edge inside one partition is not accepted as a coupler."""
    with pytest.raises(ValidationError, match="is not a coupler"):
        _ = build_diluted_chimera(1, DilutionPattern(kind=DilutionKind.MASK, kept_edges=((0, 1),)))


def test_out_of_range_edge_fails() -> None:
    """Test that verifies that site indices beyond 8L² are rejected."""
    with pytest.raises(ValidationError, match="outside"):
        _ = ChimeraGraph(L=1, edges=((0, 12),), pattern=DilutionKind.MASK)


def test_duplicate_edge_fails() -> None:
    """Test that verifies that duplicate edges are rejected."""
    with pytest.raises(ValidationError, match="duplicate edge"):
        _ = ChimeraGraph(L=1, edges=((0, 4), (0, 4)), pattern=DilutionKind.MASK)


def test_unknown_pattern_name_fails() -> None:
    """Test that verifies that an unknown pattern name is rejected."""
    with pytest.raises(ValueError, match="is not a valid DilutionKind"):
        _ = build_diluted_chimera(2, "checkerboard")
