"""Classical reference transforms the simulator is checked against.

The forward root is omega_N = e^{+2*pi*i/N}. Most classical FFT libraries
put the minus sign in the forward pass, so comparing against a third-party
FFT requires conjugation (numpy's ifft times N matches this convention).

The O(N^2) naive engine is kept permanently as the trust anchor: simulator,
radix-2 FFT and naive DFT are checked pairwise so a failure localizes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import MdArray, unflatten
from .errors import CapacityError, ValidationError
from .validation import MAX_DENSE_QUBITS, exponent_of_two

_ENGINES = ("naive", "fft")


def _unit_roots(n: int) -> np.ndarray:
    """The N distinct powers of omega_N, computed once for exactness."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def vandermonde(n: int) -> np.ndarray:
    """Matrix with entries omega_N^(r*c); the unnormalized DFT matrix."""
    exponent_of_two(n, name="vandermonde size")
    if n > 1 << MAX_DENSE_QUBITS:
        raise CapacityError(f"vandermonde capped at {1 << MAX_DENSE_QUBITS}, got {n}")
    if n == 1:
        return np.ones((1, 1), dtype=np.complex128)
    indices = np.arange(n)
    return _unit_roots(n)[np.outer(indices, indices) % n]


def _dft_lines_naive(lines: np.ndarray) -> np.ndarray:
    """Naive DFT along the last axis of (..., N); O(N^2) per line."""
    n = lines.shape[-1]
    if n <= 1024:
        return lines @ vandermonde(n)
    # row-at-a-time to keep memory O(N) for large N
    roots = _unit_roots(n)
    m = np.arange(n)
    out = np.empty_like(lines)
    for k in range(n):
        out[..., k] = lines @ roots[(k * m) % n]
    return out


def dft_1d_naive(vec) -> np.ndarray:
    """x_hat[k] = sum_m omega^{k*m} x[m], straight from the definition."""
    vec = np.asarray(vec, dtype=np.complex128)
    exponent_of_two(vec.shape[-1], name="input length")
    return _dft_lines_naive(vec)


def _fft_lines(lines: np.ndarray) -> np.ndarray:
    """Radix-2 decimation-in-time along the last axis, +i sign."""
    n = lines.shape[-1]
    if n == 1:
        return lines.copy()
    even = _fft_lines(lines[..., 0::2])
    odd = _fft_lines(lines[..., 1::2])
    twiddle = np.exp(2j * np.pi * np.arange(n // 2) / n)
    t = twiddle * odd
    return np.concatenate([even + t, even - t], axis=-1)


def fft_radix2(vec) -> np.ndarray:
    """Cooley-Tukey FFT, same convention and result as dft_1d_naive."""
    vec = np.asarray(vec, dtype=np.complex128)
    exponent_of_two(vec.shape[-1], name="input length")
    return _fft_lines(vec)


def md_dft(array: MdArray, engine: str = "fft") -> MdArray:
    """Row-column multidimensional DFT: 1-D transform along dimension 1 for
    every fixed choice of the other indices, then dimension 2, and so on."""
    if engine not in _ENGINES:
        raise ValidationError(f"engine must be one of {_ENGINES}, got {engine!r}")
    transform = _dft_lines_naive if engine == "naive" else _fft_lines
    # numpy axes run (k_d, ..., k_1); dimension i is axis ndim - i
    grid = array.reshaped().copy()
    for dim in range(array.layout.ndim):
        axis = array.layout.ndim - 1 - dim
        moved = np.moveaxis(grid, axis, -1)
        moved[...] = transform(np.ascontiguousarray(moved))
    return MdArray(array.layout, grid.reshape(-1))


@dataclass(frozen=True)
class ComparisonReport:
    """Elementwise spectrum comparison; passes iff every entry satisfies
    |a - b| <= abs_tol + rel_tol*|b| with b as the reference."""

    max_abs_err: float
    max_rel_err: float
    passed: bool
    worst_index: tuple[int, ...]

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL at index {self.worst_index}"
        return (
            f"max_abs_err={self.max_abs_err:.3e} "
            f"max_rel_err={self.max_rel_err:.3e} [{status}]"
        )


def compare_spectra(
    a: MdArray,
    b: MdArray,
    abs_tol: float = 1e-9,
    rel_tol: float = 1e-9,
) -> ComparisonReport:
    """Compare a against reference b; the worst index is reported in
    multi-index digits."""
    if a.layout.dims != b.layout.dims:
        raise ValidationError(
            f"layout mismatch: {a.layout.dims} vs {b.layout.dims}"
        )
    abs_err = np.abs(a.data - b.data)
    magnitude = np.abs(b.data)
    margin = abs_tol + rel_tol * magnitude
    failing = abs_err > margin
    worst = int(np.argmax(abs_err - margin))
    nonzero = magnitude > 0
    max_rel = float(np.max(abs_err[nonzero] / magnitude[nonzero])) if nonzero.any() else 0.0
    return ComparisonReport(
        max_abs_err=float(abs_err.max()),
        max_rel_err=max_rel,
        passed=not bool(failing.any()),
        worst_index=unflatten(worst, a.layout),
    )
