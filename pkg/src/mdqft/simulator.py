"""Statevector simulation by strided in-place amplitude updates.

No gate unitary is ever materialized: each gate touches the amplitude array
through reshaped views keyed on its operand bits, costing O(2^num_qubits)
per gate. dense_unitary() exists only as a small-scale verification bridge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import circuits
from .circuits import Circuit, Gate
from .encoding import MdArray, encode
from .errors import CapacityError, ValidationError
from .qft import QftPlan, mdqft, mdqft_no_swap
from .states import Statevector
from .validation import MAX_DENSE_QUBITS

_SQRT1_2 = 1.0 / np.sqrt(2.0)


def _paired_view(amps: np.ndarray, qubit: int) -> np.ndarray:
    # axes: (higher bits, target bit, lower bits)
    return amps.reshape(-1, 2, 1 << qubit)


def _controlled_view(amps: np.ndarray, qa: int, qb: int) -> np.ndarray:
    lo, hi = sorted((qa, qb))
    # axes: (above hi, bit hi, between, bit lo, below lo)
    return amps.reshape(-1, 2, 1 << (hi - lo - 1), 2, 1 << lo)


def _apply_gate_raw(amps: np.ndarray, gate: Gate, num_qubits: int) -> None:
    for q in gate.qubits:
        if q >= num_qubits:
            raise ValidationError(
                f"gate {gate.kind} on {gate.qubits} exceeds {num_qubits} qubits"
            )
    if gate.kind == circuits.H:
        view = _paired_view(amps, gate.qubits[0])
        a = view[:, 0, :].copy()
        b = view[:, 1, :]
        view[:, 0, :] = (a + b) * _SQRT1_2
        view[:, 1, :] = (a - b) * _SQRT1_2
    elif gate.kind == circuits.X:
        view = _paired_view(amps, gate.qubits[0])
        a = view[:, 0, :].copy()
        view[:, 0, :] = view[:, 1, :]
        view[:, 1, :] = a
    elif gate.kind == circuits.PHASE:
        view = _paired_view(amps, gate.qubits[0])
        view[:, 1, :] *= np.exp(1j * gate.angle)
    elif gate.kind == circuits.CPHASE:
        view = _controlled_view(amps, *gate.qubits)
        view[:, 1, :, 1, :] *= np.exp(1j * gate.angle)
    else:  # swap
        view = _controlled_view(amps, *gate.qubits)
        a = view[:, 0, :, 1, :].copy()
        view[:, 0, :, 1, :] = view[:, 1, :, 0, :]
        view[:, 1, :, 0, :] = a


def apply_gate(state: Statevector, gate: Gate) -> None:
    """Apply one gate to the state in place."""
    _apply_gate_raw(state.amplitudes, gate, state.num_qubits)


def apply_circuit(state: Statevector, circuit: Circuit) -> None:
    """Apply every gate of the circuit in order, in place."""
    if circuit.num_qubits > state.num_qubits:
        raise ValidationError(
            f"{circuit.num_qubits}-qubit circuit cannot run on "
            f"{state.num_qubits}-qubit state"
        )
    amps = state.amplitudes
    n = state.num_qubits
    for gate in circuit.gates:
        _apply_gate_raw(amps, gate, n)


def dense_unitary(circuit: Circuit, num_qubits: int | None = None) -> np.ndarray:
    """Matrix of the circuit: column j is the circuit applied to basis |j>.

    Verification-only; capped at MAX_DENSE_QUBITS. Evolves all basis columns
    at once by treating the flattened identity as one big statevector whose
    high bits are the row (output) index.
    """
    if num_qubits is None:
        num_qubits = circuit.num_qubits
    if num_qubits < circuit.num_qubits:
        raise ValidationError("num_qubits smaller than the circuit")
    if num_qubits > MAX_DENSE_QUBITS:
        raise CapacityError(
            f"dense unitary limited to {MAX_DENSE_QUBITS} qubits, got {num_qubits}"
        )
    dim = 1 << num_qubits
    flat = np.eye(dim, dtype=np.complex128).reshape(-1)
    for gate in circuit.gates:
        shifted = Gate(gate.kind, tuple(q + num_qubits for q in gate.qubits), gate.angle)
        _apply_gate_raw(flat, shifted, 2 * num_qubits)
    return flat.reshape(dim, dim)


def probabilities(state: Statevector) -> np.ndarray:
    """Measurement distribution |amplitude|^2, unclamped."""
    return state.probabilities()


@dataclass(frozen=True)
class SampleHistogram:
    """Shot counts per outcome index; only observed outcomes are stored."""

    shots: int
    counts: dict[int, int]

    def frequency(self, outcome: int) -> float:
        return self.counts.get(outcome, 0) / self.shots


# splitmix64: counter-based generator with period 2^64. Output i depends only
# on seed + i*GAMMA pushed through a fixed finalizer, so the shot stream is
# reproducible on any platform independent of numpy's RNG internals.
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _splitmix64(seed: int, count: int) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + _GAMMA * np.arange(
            1, count + 1, dtype=np.uint64
        )
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def _uniform_doubles(seed: int, count: int) -> np.ndarray:
    # top 53 bits -> [0, 1)
    return (_splitmix64(seed, count) >> np.uint64(11)) * (2.0**-53)


def sample(state: Statevector, shots: int, seed: int) -> SampleHistogram:
    """Draw iid measurement outcomes; identical (state, shots, seed) always
    reproduce the same histogram."""
    if shots < 1:
        raise ValidationError(f"shots must be >= 1, got {shots}")
    cdf = np.cumsum(probabilities(state))
    draws = np.searchsorted(cdf, _uniform_doubles(seed, shots), side="right")
    draws = np.minimum(draws, len(cdf) - 1)
    outcomes, counts = np.unique(draws, return_counts=True)
    return SampleHistogram(shots, {int(o): int(c) for o, c in zip(outcomes, counts)})


def run_mdqft(array: MdArray, *, no_swap: bool = False) -> tuple[Statevector, QftPlan, float]:
    """encode -> build plan -> apply circuit; returns everything needed to
    decode or sample the result.

    With no_swap the returned state is in raw (span-bit-reversed) order;
    read it through plan.output_permutation / permuted_amplitudes.
    """
    state, factor = encode(array)
    plan = mdqft_no_swap(array.layout) if no_swap else mdqft(array.layout)
    apply_circuit(state, plan.circuit)
    return state, plan, factor
