# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Iterator
from contextlib import contextmanager
from threading import Lock
from typing import Any

from pydantic import PrivateAttr

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.errors import SessionError


class SessionGuarded(BaseModel):
    """
    A class which implements an exclusive-session guard pattern.

    A session-guarded model (a simulated device) may be driven by at most one sampling or calibration
    session at a time. Independent models can be used in parallel.
    """

    _in_session: bool = PrivateAttr(default=False)
    _lock: Lock = PrivateAttr(default_factory=Lock)

    def __getstate__(self) -> dict[Any, Any]:
        # Locks do not pickle; a copy sent to another process starts outside any session.
        return {**super().__getstate__(), "__pydantic_private__": {"_in_session": False}}

    def __setstate__(self, state: dict[Any, Any]) -> None:
        private = state.get("__pydantic_private__") or {}
        super().__setstate__({**state, "__pydantic_private__": {"_in_session": False, **private, "_lock": Lock()}})

    @contextmanager
    def exclusive_session(self) -> Iterator[None]:
        """
        A guard which enforces that only one session drives this object at a time.

        The guard is released when the session ends, also when it ends with an exception.

        Raises:
            SessionError: Raised if another session currently owns the object.

        """
        with self._lock:
            if self._in_session:
                err_msg = f"{self.__class__.__name__} is already owned by another session."
                raise SessionError(err_msg)
            self._in_session = True
        try:
            yield
        finally:
            with self._lock:
                self._in_session = False
