# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import pickle

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.figure_point import FigurePoint
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim._models.common.session_guarded import SessionGuarded
from griffiths_sim.errors import SessionError


class _Vectors(BaseModel):
    values: FloatVector
    scale: float = 1.0


class _Guarded(SessionGuarded):
    name: str


def test_float_vector_accepts_lists_tuples_and_arrays() -> None:
    """Test that verifies that lists, tuples and 1-D arrays all validate to the same vector."""
    from_list = _Vectors(values=[1.0, 2.0])
    from_tuple = _Vectors(values=(1.0, 2.0))
    from_array = _Vectors(values=np.array([1.0, 2.0]))
    assert from_list == from_tuple == from_array
    assert isinstance(from_array.values, FloatVector)
    np.testing.assert_array_equal(from_array.values.as_array(), [1.0, 2.0])


def test_float_vector_rejects_matrices() -> None:
    """Test that verifies that two-dimensional arrays are rejected."""
    with pytest.raises(ValidationError, match="one-dimensional"):
        _ = _Vectors(values=np.zeros((2, 2)))


def test_float_vector_serializes_to_a_list() -> None:
    """Test that verifies the JSON form of a vector."""
    assert _Vectors(values=[0.5]).model_dump_json() == '{"values":[0.5],"scale":1.0}'


def test_models_are_frozen() -> None:
    """Test that verifies that domain models are immutable."""
    model = _Vectors(values=[1.0])
    with pytest.raises(ValidationError, match="frozen"):
        model.scale = 2.0


def test_models_reject_nan() -> None:
    """Test that verifies that NaN scalars are rejected."""
    with pytest.raises(ValidationError, match="must not be NaN"):
        _ = _Vectors(values=[1.0], scale=float("nan"))


def test_models_reject_unknown_fields() -> None:
    """Test that verifies that extra fields are rejected."""
    with pytest.raises(ValidationError, match="Extra inputs are not permitted"):
        _ = _Vectors(values=[1.0], offset=2.0)


def test_exclusive_session_rejects_a_second_session() -> None:
    """Test that verifies that a guarded model cannot be driven by two sessions at once."""
    guarded = _Guarded(name="device")
    with guarded.exclusive_session(), pytest.raises(SessionError, match="already owned"), guarded.exclusive_session():
        pass


def test_exclusive_session_is_released_after_an_error() -> None:
    """Test that verifies that the guard is released when the session raises."""
    guarded = _Guarded(name="device")
    with pytest.raises(RuntimeError, match="boom"), guarded.exclusive_session():
        raise RuntimeError("boom")  # noqa: EM101, TRY003
    with guarded.exclusive_session():
        pass


def test_guarded_models_pickle_outside_a_session() -> None:
    """Test that verifies that a guarded model survives pickling and starts free of any session."""
    guarded = _Guarded(name="device")
    with guarded.exclusive_session():
        copy = pickle.loads(pickle.dumps(guarded))  # noqa: S301
    assert copy.name == guarded.name
    with copy.exclusive_session():
        pass


def test_figure_point_rejects_negative_errors() -> None:
    """Test that verifies that figure points carry non-negative errors."""
    with pytest.raises(ValidationError, match="greater than or equal to 0"):
        _ = FigurePoint(recipe="fig4", series="L=4", x=1.0, y=2.0, y_err=-0.1)
