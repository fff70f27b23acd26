# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Device state files.

One JSON document per device: the instance label, biases, flux corrections, temperature, quench
strength, seed and gauge, followed by the ``provenance`` block. The instance itself lives in its
own instance file.
"""

import json
from pathlib import Path
from typing import Any

from griffiths_sim.annealer.device import DeviceModel
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.persistence.provenance import Provenance, atomic_write_text

_STATE_FIELDS = ("biases", "flux_corrections", "temperature_k", "quench_strength", "seed", "gauge")


def device_to_document(device: DeviceModel, provenance: Provenance | None = None) -> dict[str, Any]:
    document: dict[str, Any] = {"instance": device.instance.label, **device.model_dump(mode="json", include=set(_STATE_FIELDS))}
    if provenance is not None:
        document["provenance"] = provenance.model_dump()
    return document


def device_from_document(document: dict[str, Any], instance: DisorderInstance) -> DeviceModel:
    """
    Rebuild a device for ``instance`` from its state document.

    Raises:
        ValueError: If the document belongs to another instance.
        pydantic.ValidationError: If the state is malformed.

    """
    if document.get("instance") != instance.label:
        err_msg = f"device state of {document.get('instance')!r} does not belong to instance {instance.label!r}."
        raise ValueError(err_msg)
    return DeviceModel(instance=instance, **{name: document[name] for name in _STATE_FIELDS if name in document})


def write_device_state(path: Path, device: DeviceModel, provenance: Provenance | None = None) -> Path:
    atomic_write_text(path, json.dumps(device_to_document(device, provenance), indent=2) + "\n")
    return path


def read_device_state(path: Path, instance: DisorderInstance) -> DeviceModel:
    return device_from_document(json.loads(path.read_text(encoding="utf-8")), instance)


def device_state_path(directory: Path, instance: DisorderInstance) -> Path:
    return directory / "devices" / f"L{instance.graph.L}" / f"device_{instance.instance_id:04d}.json"
