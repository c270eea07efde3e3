"""Amplitude encoding of d-dimensional arrays.

Flattening order: dimension 1 varies fastest, so a multi-index
(k_1, ..., k_d) maps to k_1 + N_1*k_2 + N_1*N_2*k_3 + ... and dimension i's
index digits occupy one contiguous qubit span (dimension 1 on the lowest
qubits).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DegenerateInputError, LayoutError, ValidationError
from .states import Statevector
from .validation import as_complex_vector, exponent_of_two, qubit_capacity


class ScaleConvention(enum.Enum):
    """Scale of a decoded spectrum.

    RAW returns amplitudes as stored. UNITARY multiplies by the input norm,
    undoing only the encoding normalization. CLASSICAL additionally multiplies
    by sqrt(M), which turns the unitary transform (1/sqrt(N_i) per dimension)
    into the unnormalized classical DFT of the original data.
    """

    RAW = "raw"
    CLASSICAL = "classical"
    UNITARY = "unitary"


@dataclass(frozen=True)
class ArrayLayout:
    """Dimension sizes (N_1..N_d), all powers of two >= 2."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        if not dims:
            raise ValidationError("layout needs at least one dimension")
        object.__setattr__(self, "dims", dims)
        for n in dims:
            if exponent_of_two(n, name="dimension size") < 1:
                raise ValidationError(
                    f"dimension size must be >= 2 (a size-1 dimension carries "
                    f"no qubits), got {n}"
                )
        if self.total_qubits > qubit_capacity():
            raise CapacityError(
                f"layout {dims} needs {self.total_qubits} qubits, "
                f"cap is {qubit_capacity()}"
            )

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def qubit_counts(self) -> tuple[int, ...]:
        return tuple(n.bit_length() - 1 for n in self.dims)

    @property
    def total_qubits(self) -> int:
        return sum(self.qubit_counts)

    @property
    def total_elements(self) -> int:
        return math.prod(self.dims)


def register_map(layout: ArrayLayout) -> tuple[range, ...]:
    """Qubit span of each dimension: dimension i occupies
    [sum(n_j, j<i), sum(n_j, j<=i)), dimension 1 on the lowest qubits."""
    spans = []
    offset = 0
    for n in layout.qubit_counts:
        spans.append(range(offset, offset + n))
        offset += n
    return tuple(spans)


def flat_index(indices, layout: ArrayLayout) -> int:
    """Flatten a multi-index, dimension 1 fastest-varying."""
    indices = tuple(int(k) for k in indices)
    if len(indices) != layout.ndim:
        raise ValidationError(
            f"expected {layout.ndim} indices for dims {layout.dims}, got {indices}"
        )
    flat = 0
    stride = 1
    for k, n in zip(indices, layout.dims):
        if not 0 <= k < n:
            raise ValidationError(f"index {k} out of range for dimension size {n}")
        flat += k * stride
        stride *= n
    return flat


def unflatten(flat: int, layout: ArrayLayout) -> tuple[int, ...]:
    """Inverse of flat_index."""
    if not 0 <= flat < layout.total_elements:
        raise ValidationError(
            f"flat index {flat} out of range for {layout.total_elements} elements"
        )
    digits = []
    for n in layout.dims:
        digits.append(flat % n)
        flat //= n
    return tuple(digits)


class MdArray:
    """d-dimensional complex array stored flat in encoding order."""

    __slots__ = ("layout", "data")

    def __init__(self, layout: ArrayLayout, data) -> None:
        self.layout = layout
        self.data = as_complex_vector(data)
        if self.data.shape[0] != layout.total_elements:
            raise LayoutError(
                f"layout {layout.dims} holds {layout.total_elements} elements, "
                f"data has {self.data.shape[0]}"
            )

    @classmethod
    def from_values(cls, dims, values) -> "MdArray":
        return cls(ArrayLayout(tuple(dims)), values)

    def reshaped(self) -> np.ndarray:
        """View with numpy axes ordered (k_d, ..., k_1); dimension 1 is the
        last (fastest) axis, matching the flat layout."""
        return self.data.reshape(tuple(reversed(self.layout.dims)))

    def __getitem__(self, indices) -> complex:
        if isinstance(indices, (int, np.integer)):
            return complex(self.data[int(indices)])
        return complex(self.data[flat_index(indices, self.layout)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.data))

    def copy(self) -> "MdArray":
        return MdArray(self.layout, self.data.copy())

    def __repr__(self) -> str:
        return f"MdArray(dims={self.layout.dims})"


def encode(array: MdArray) -> tuple[Statevector, float]:
    """Normalize the flat array into statevector amplitudes.

    Returns the state and the norm that was divided out, which decode()
    needs to restore classical scaling.
    """
    factor = array.norm()
    if factor == 0.0:
        raise DegenerateInputError("cannot encode an all-zero array")
    state = Statevector(array.layout.total_qubits, array.data / factor)
    return state, factor


def decode(
    state: Statevector,
    norm_factor: float,
    layout: ArrayLayout,
    convention: ScaleConvention = ScaleConvention.RAW,
) -> MdArray:
    """Read a statevector back as an MdArray at the requested scale."""
    if state.num_qubits != layout.total_qubits:
        raise LayoutError(
            f"state has {state.num_qubits} qubits, layout {layout.dims} "
            f"needs {layout.total_qubits}"
        )
    if convention is ScaleConvention.RAW:
        scale = 1.0
    elif convention is ScaleConvention.UNITARY:
        scale = norm_factor
    else:
        scale = norm_factor * math.sqrt(layout.total_elements)
    return MdArray(layout, state.amplitudes * scale)
