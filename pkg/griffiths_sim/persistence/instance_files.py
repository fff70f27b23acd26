# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Disorder instance files.

One JSON document per instance with the keys, in this order: ``L``, ``pattern``, ``seed``,
``distribution_id``, ``edges`` (``[[i, j, J], ...]``), followed by ``instance_id`` and the
``provenance`` block.
"""

import json
from pathlib import Path
from typing import Any

from griffiths_sim.lattice.chimera import ChimeraGraph
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.persistence.provenance import Provenance, atomic_write_text


def instance_to_document(instance: DisorderInstance, provenance: Provenance | None = None) -> dict[str, Any]:
    document: dict[str, Any] = {
        "L": instance.graph.L,
        "pattern": instance.graph.pattern.value,
        "seed": instance.seed,
        "distribution_id": instance.distribution_id.value,
        "edges": [[i, j, coupling] for (i, j), coupling in zip(instance.graph.edges, instance.couplings, strict=True)],
        "instance_id": instance.instance_id,
    }
    if provenance is not None:
        document["provenance"] = provenance.model_dump()
    return document


def instance_from_document(document: dict[str, Any]) -> DisorderInstance:
    """
    Rebuild an instance from its JSON document.

    Raises:
        pydantic.ValidationError: If the graph or couplings are malformed.

    """
    edges = document["edges"]
    graph = ChimeraGraph(L=document["L"], edges=tuple((int(i), int(j)) for i, j, _ in edges), pattern=document["pattern"])
    return DisorderInstance(
        graph=graph,
        couplings=[float(coupling) for _, _, coupling in edges],
        seed=document["seed"],
        distribution_id=document["distribution_id"],
        instance_id=document.get("instance_id", 0),
    )


def write_instance(path: Path, instance: DisorderInstance, provenance: Provenance | None = None) -> Path:
    atomic_write_text(path, json.dumps(instance_to_document(instance, provenance)) + "\n")
    return path


def read_instance(path: Path) -> DisorderInstance:
    return instance_from_document(json.loads(path.read_text(encoding="utf-8")))


def instance_path(directory: Path, instance: DisorderInstance) -> Path:
    """The canonical location of an instance file below an output directory."""
    return directory / "instances" / f"L{instance.graph.L}" / f"instance_{instance.instance_id:04d}.json"
