"""Statevectors and small dense-matrix utilities.

Amplitude index convention: qubit 0 is the least significant bit of the
basis-state index, so a gate on qubit 0 pairs adjacent amplitudes.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, ValidationError
from .validation import MAX_DENSE_QUBITS, as_complex_vector, check_num_qubits


class Statevector:
    """Dense vector of 2^num_qubits complex amplitudes.

    Mutating operations (the simulator's gate kernels) require exclusive
    access; read-only use is safe to share.
    """

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int, amplitudes) -> None:
        self.num_qubits = check_num_qubits(num_qubits)
        amps = as_complex_vector(amplitudes, name="amplitudes")
        if amps.shape[0] != 1 << self.num_qubits:
            raise ValidationError(
                f"expected {1 << self.num_qubits} amplitudes for "
                f"{self.num_qubits} qubits, got {amps.shape[0]}"
            )
        self.amplitudes = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        """|amplitude|^2 per basis index, reported raw (no clamping)."""
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> "Statevector":
        return Statevector(self.num_qubits, self.amplitudes.copy())

    def __len__(self) -> int:
        return self.amplitudes.shape[0]

    def __repr__(self) -> str:
        return f"Statevector(num_qubits={self.num_qubits})"


def zero_state(num_qubits: int) -> Statevector:
    """|0...0>: amplitude 1 at index 0."""
    n = check_num_qubits(num_qubits)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(n, amps)


def norm(state) -> float:
    """Euclidean norm of a Statevector or raw amplitude sequence."""
    if isinstance(state, Statevector):
        return state.norm()
    return float(np.linalg.norm(np.asarray(state, dtype=np.complex128)))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the dense-size cap enforced.

    (A otimes B)[i*rb+k, j*cb+l] = A[i,j] * B[k,l].
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    limit = 1 << MAX_DENSE_QUBITS
    if a.shape[0] * b.shape[0] > limit or a.shape[-1] * b.shape[-1] > limit:
        raise CapacityError(
            f"kron result would exceed {limit} x {limit} (test-scale cap)"
        )
    return np.kron(a, b)
