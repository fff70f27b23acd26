# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from typing import Any

import pytest
from pydantic import ValidationError

from griffiths_sim.qmc.records import MomentRecord


def _record(**overrides: Any) -> MomentRecord:  # noqa: ANN401
    fields: dict[str, Any] = {
        "instance": "L1-0000",
        "L": 1,
        "beta": 2.0,
        "gamma": 1.0,
        "M": 8,
        "n_meas": 100,
        "m_abs": 0.5,
        "m2": 0.3,
        "m4": 0.12,
        "mi2": [0.6, 0.5],
        "mi4": [0.4, 0.3],
    }
    return MomentRecord.model_validate({**fields, **overrides})


def test_record_uses_the_instance_alias() -> None:
    """Test that verifies that the instance label is read from and written to the ``instance`` key."""
    record = _record()
    assert record.instance_id == "L1-0000"
    assert record.n_sites == 2
    assert record.model_dump(by_alias=True)["instance"] == "L1-0000"
    assert record.jensen_gap() == pytest.approx(0.12 - 0.09)


def test_fourth_moment_cannot_exceed_second() -> None:
    """Test that verifies the bound ⟨m⁴⟩ ≤ ⟨m²⟩."""
    with pytest.raises(ValidationError, match="exceeds ⟨m²⟩"):
        _ = _record(m4=0.5)


def test_site_moments_are_bounded() -> None:
    """Test that verifies the per-site bounds ⟨m_i⁴⟩ ≤ ⟨m_i²⟩ ≤ 1."""
    with pytest.raises(ValidationError, match="per-site moments violate"):
        _ = _record(mi4=[0.7, 0.3])


def test_site_error_bars_need_one_entry_per_site() -> None:
    """Test that verifies that partial per-site error vectors are rejected."""
    with pytest.raises(ValidationError, match="must be empty or have one entry per site"):
        _ = _record(mi2_err=[0.01])


def test_record_survives_json() -> None:
    """Test that verifies that a record read back from its JSON form is equal to the original."""
    record = _record(mi2_err=[0.01, 0.02], seed=17)
    assert MomentRecord.model_validate_json(record.model_dump_json(by_alias=True)) == record
