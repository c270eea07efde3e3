"""One-call array transforms: encode, simulate, decode at a chosen scale."""

from __future__ import annotations

import math

from .encoding import MdArray, ScaleConvention, decode, encode
from .qft import mdqft, mdqft_no_swap
from .simulator import apply_circuit, run_mdqft
from .states import Statevector


def transform_array(
    array: MdArray,
    *,
    convention: ScaleConvention = ScaleConvention.CLASSICAL,
    inverse: bool = False,
    no_swap: bool = False,
) -> MdArray:
    """Multidimensional Fourier transform of an array via the simulator.

    The inverse path runs the adjoint circuit and rescales so that
    transform followed by inverse transform is the identity in every
    convention (for CLASSICAL that means dividing by sqrt(M) where the
    forward pass multiplied by it, absorbing the classical 1/M).
    """
    layout = array.layout
    if not inverse:
        state, plan, factor = run_mdqft(array, no_swap=no_swap)
        amps = plan.permuted_amplitudes(state.amplitudes) if no_swap else state.amplitudes
        return decode(Statevector(layout.total_qubits, amps), factor, layout, convention)

    state, factor = encode(array)
    plan = mdqft_no_swap(layout) if no_swap else mdqft(layout)
    if no_swap:
        # adjoint of the elided swap layer, applied classically up front
        state = Statevector(layout.total_qubits, state.amplitudes[plan.output_permutation])
    apply_circuit(state, plan.circuit.adjoint())
    if convention is ScaleConvention.RAW:
        scale = 1.0
    elif convention is ScaleConvention.UNITARY:
        scale = factor
    else:
        scale = factor / math.sqrt(layout.total_elements)
    return MdArray(layout, state.amplitudes * scale)
