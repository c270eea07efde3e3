"""Shared random generators for the test suite."""

import numpy as np

from mdqft import ArrayLayout, Circuit, MdArray
from mdqft.circuits import cphase, h, phase, swap, x


def random_layout(rng, d_choices=(1, 2, 3), n_choices=(1, 2, 3)) -> ArrayLayout:
    d = int(rng.choice(d_choices))
    counts = [int(rng.choice(n_choices)) for _ in range(d)]
    return ArrayLayout(tuple(1 << n for n in counts))


def random_mdarray(rng, layout: ArrayLayout) -> MdArray:
    m = layout.total_elements
    return MdArray(layout, rng.standard_normal(m) + 1j * rng.standard_normal(m))


def random_state_vector(rng, num_qubits: int) -> np.ndarray:
    dim = 1 << num_qubits
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def random_gate(rng, num_qubits: int):
    kind = rng.integers(0, 5)
    q = int(rng.integers(0, num_qubits))
    if kind == 0:
        return h(q)
    if kind == 1:
        return x(q)
    if kind == 2:
        return phase(float(rng.uniform(-np.pi, np.pi)), q)
    other = int(rng.integers(0, num_qubits - 1))
    other = other if other != q else num_qubits - 1
    if kind == 3:
        return cphase(float(rng.uniform(-np.pi, np.pi)), q, other)
    return swap(q, other)


def random_circuit(rng, num_qubits: int, num_gates: int) -> Circuit:
    assert num_qubits >= 2
    return Circuit(num_qubits, tuple(random_gate(rng, num_qubits) for _ in range(num_gates)))
