"""Input validation helpers used by every public entry point."""

from __future__ import annotations

import os

import numpy as np

from .errors import CapacityError, ValidationError

# Hard ceiling on simulated qubits; 2^26 amplitudes = 1 GiB of complex128.
DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = "MDQFT_MAX_QUBITS"

# Dense matrices (verification only) are capped at 2^12 per side.
MAX_DENSE_QUBITS = 12


def qubit_capacity() -> int:
    """Return the qubit cap, overridable via the MDQFT_MAX_QUBITS env var."""
    raw = os.environ.get(MAX_QUBITS_ENV)
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValidationError(f"{MAX_QUBITS_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValidationError(f"{MAX_QUBITS_ENV} must be >= 1, got {cap}")
    return cap


def check_num_qubits(num_qubits: int) -> int:
    """Validate a qubit count against [1, qubit_capacity()]."""
    if num_qubits < 1:
        raise ValidationError(f"num_qubits must be >= 1, got {num_qubits}")
    cap = qubit_capacity()
    if num_qubits > cap:
        raise CapacityError(f"num_qubits={num_qubits} exceeds the cap of {cap} qubits")
    return int(num_qubits)


def check_qubit_index(qubit: int, num_qubits: int) -> int:
    if not 0 <= qubit < num_qubits:
        raise ValidationError(f"qubit index {qubit} out of range for {num_qubits} qubits")
    return int(qubit)


def exponent_of_two(n: int, *, name: str = "size") -> int:
    """Return k such that n == 2^k, or raise ValidationError."""
    if n < 1 or n & (n - 1):
        raise ValidationError(f"{name} must be a power of two, got {n}")
    return n.bit_length() - 1


def as_complex_vector(data, *, name: str = "data") -> np.ndarray:
    """Coerce to a 1-D complex128 array and reject NaN/Inf entries.

    Multi-dimensional input is rejected rather than flattened: the caller
    must fix the flattening order explicitly.
    """
    arr = np.asarray(data, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be 1-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValidationError(f"{name} contains non-finite entries")
    return arr


def check_finite_angle(angle: float) -> float:
    angle = float(angle)
    if not np.isfinite(angle):
        raise ValidationError(f"gate angle must be finite, got {angle}")
    return angle
