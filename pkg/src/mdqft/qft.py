"""Builders for the 1-D QFT and its multidimensional composition.

The transform sign is e^{+2*pi*i/N} throughout (forward direction), so the
circuit on an isolated n-qubit span equals vandermonde(2^n)/sqrt(2^n) under
the qubit-0-least-significant convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, Gate, cphase, h, swap
from .encoding import ArrayLayout, register_map
from .errors import ValidationError


@dataclass(frozen=True)
class QftPlan:
    """A built circuit plus the classical bookkeeping needed to read it out.

    output_permutation maps measured (raw) outcome indices to logical array
    indices; it is the identity except for the swap-elided variant, where it
    reverses the bit order inside each dimension's qubit span. The mapping is
    an involution, and it covers the full outcome space of the circuit
    (including batch qubits, which pass through untouched).
    """

    layout: ArrayLayout
    registers: tuple[range, ...]
    circuit: Circuit
    output_permutation: np.ndarray
    batch_qubits: int = 0

    def permuted_amplitudes(self, amplitudes: np.ndarray) -> np.ndarray:
        """Amplitudes re-indexed so entry j is the logical outcome j."""
        inverse = np.argsort(self.output_permutation)
        return amplitudes[inverse]


def _qft_span_gates(span: range, include_swaps: bool = True) -> list[Gate]:
    """Textbook QFT gates on a qubit span.

    Targets run from the most significant qubit down; each target gets H and
    then a controlled phase 2*pi/2^(d+1) from every less significant qubit at
    distance d. Terminal swaps reverse the span's bit order.
    """
    qubits = list(span)
    n = len(qubits)
    if n < 1:
        raise ValidationError("QFT span must contain at least one qubit")
    gates: list[Gate] = []
    for i in reversed(range(n)):
        target = qubits[i]
        gates.append(h(target))
        for j in reversed(range(i)):
            distance = i - j
            gates.append(cphase(2.0 * math.pi / (1 << (distance + 1)), qubits[j], target))
    if include_swaps:
        for i in range(n // 2):
            gates.append(swap(qubits[i], qubits[n - 1 - i]))
    return gates


def qft_register(span: range, num_qubits: int | None = None) -> Circuit:
    """QFT circuit on the given qubit span of a num_qubits-wide circuit."""
    if not isinstance(span, range):
        span = range(*span)
    if len(span) < 1 or span.step != 1 or span.start < 0:
        raise ValidationError(
            f"span must be a non-empty contiguous ascending qubit range, got {span}"
        )
    if num_qubits is None:
        num_qubits = span.stop
    return Circuit(num_qubits, tuple(_qft_span_gates(span)))


def _span_bit_reversal(layout: ArrayLayout, batch_qubits: int = 0) -> np.ndarray:
    """Permutation reversing the bit order within each dimension's span.

    Batch bits (above the layout's qubits) are left in place. This is its own
    inverse: reversing twice restores every span.
    """
    total = layout.total_qubits + batch_qubits
    indices = np.arange(1 << total, dtype=np.int64)
    out = indices.copy()
    for span in register_map(layout):
        n = len(span)
        if n < 2:
            continue
        mask = ((1 << n) - 1) << span.start
        value = (indices >> span.start) & ((1 << n) - 1)
        reversed_value = np.zeros_like(value)
        for bit in range(n):
            reversed_value |= ((value >> bit) & 1) << (n - 1 - bit)
        out = (out & ~mask) | (reversed_value << span.start)
    return out


def _build_plan(
    layout: ArrayLayout,
    *,
    include_swaps: bool,
    batch_qubits: int = 0,
    order=None,
) -> QftPlan:
    registers = register_map(layout)
    if order is None:
        order = range(layout.ndim)
    else:
        order = tuple(order)
        if sorted(order) != list(range(layout.ndim)):
            raise ValidationError(
                f"order must permute 0..{layout.ndim - 1}, got {order}"
            )
    if batch_qubits < 0:
        raise ValidationError(f"batch_qubits must be >= 0, got {batch_qubits}")
    gates: list[Gate] = []
    for dim in order:
        gates.extend(_qft_span_gates(registers[dim], include_swaps=include_swaps))
    total = layout.total_qubits + batch_qubits
    circuit = Circuit(total, tuple(gates))
    if include_swaps:
        permutation = np.arange(1 << total, dtype=np.int64)
    else:
        permutation = _span_bit_reversal(layout, batch_qubits)
    return QftPlan(layout, registers, circuit, permutation, batch_qubits)


def mdqft(layout: ArrayLayout, order=None) -> QftPlan:
    """d-dimensional QFT: one register QFT per dimension, dimension 1 first.

    The per-dimension blocks act on disjoint qubits and commute, so ``order``
    (a permutation of dimension positions) changes the gate sequence but not
    the unitary; it exists for order-invariance checks and stays ascending by
    default to keep exports deterministic.
    """
    return _build_plan(layout, include_swaps=True, order=order)


def mdqft_no_swap(layout: ArrayLayout, order=None) -> QftPlan:
    """Swap-elided variant: terminal swaps dropped, outcomes re-indexed
    classically through output_permutation instead."""
    return _build_plan(layout, include_swaps=False, order=order)


def batched_mdqft(layout: ArrayLayout, batch_qubits: int) -> QftPlan:
    """Transform 2^batch_qubits stacked arrays with one circuit.

    The QFT blocks sit on the low-order qubits only; the batch qubits above
    them are untouched, so the dense unitary is I_{2^b} (x) U_mdqft and each
    stacked array is transformed independently.
    """
    return _build_plan(layout, include_swaps=True, batch_qubits=batch_qubits)


def predicted_gate_count(layout: ArrayLayout) -> dict[str, int]:
    """Closed-form gate inventory of mdqft: per dimension n H gates,
    n(n-1)/2 controlled phases and floor(n/2) swaps."""
    counts = {"h": 0, "x": 0, "phase": 0, "cphase": 0, "swap": 0}
    for n in layout.qubit_counts:
        counts["h"] += n
        counts["cphase"] += n * (n - 1) // 2
        counts["swap"] += n // 2
    return counts
