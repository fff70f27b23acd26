# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Exception hierarchy of the package."""


class GriffithsSimError(Exception):
    """Base class for all errors raised by griffiths-sim."""


class CapabilityError(GriffithsSimError):
    """Raised when a request exceeds what a backend or oracle can compute (e.g. too many spins)."""


class UnknownDistributionError(GriffithsSimError, ValueError):
    """Raised when a disorder distribution identifier is not known."""


class UnknownRecipeError(GriffithsSimError, ValueError):
    """Raised when no figure recipe is registered under a name."""


class FitError(GriffithsSimError):
    """Raised when a fit cannot be performed on the given data."""


class CheckpointError(GriffithsSimError):
    """Raised when a checkpointed grid cell cannot be read back."""


class SessionError(GriffithsSimError):
    """Raised when a device model is already owned by another sampling or calibration session."""


class CalibrationError(GriffithsSimError):
    """
    Raised when the flux-bias search cannot bracket the zero-magnetization point.

    Args:
        message: The error message.
        unbracketed_qubits: The qubit indices that could not be bracketed.

    """

    def __init__(self, message: str, unbracketed_qubits: tuple[int, ...]) -> None:
        super().__init__(message)
        self.unbracketed_qubits = unbracketed_qubits
