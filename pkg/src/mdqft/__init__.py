"""Statevector simulator and circuit builder for the multidimensional QFT.

Quantum results are checked against an independent classical DFT (naive and
radix-2 engines), so everything is machine-verifiable at desk scale. See
QftTransformer for the sklearn-style entry point and the ``mdqft`` CLI for
file-based use.
"""

from .circuits import Circuit, Gate, cphase, export_qasm, h, phase, swap, x
from .demo import DemoReport, example_image, example_init_circuit, run_demo
from .encoding import (
    ArrayLayout,
    MdArray,
    ScaleConvention,
    decode,
    encode,
    flat_index,
    register_map,
    unflatten,
)
from .errors import (
    CapacityError,
    DegenerateInputError,
    LayoutError,
    MdqftError,
    ValidationError,
)
from .estimator import QftTransformer
from .pipeline import transform_array
from .qft import QftPlan, batched_mdqft, mdqft, mdqft_no_swap, predicted_gate_count, qft_register
from .reference import (
    ComparisonReport,
    compare_spectra,
    dft_1d_naive,
    fft_radix2,
    md_dft,
    vandermonde,
)
from .simulator import (
    SampleHistogram,
    apply_circuit,
    apply_gate,
    dense_unitary,
    probabilities,
    run_mdqft,
    sample,
)
from .states import Statevector, kron, norm, zero_state

__version__ = "0.1.0"

__all__ = [
    "ArrayLayout",
    "CapacityError",
    "Circuit",
    "ComparisonReport",
    "DegenerateInputError",
    "DemoReport",
    "Gate",
    "LayoutError",
    "MdArray",
    "MdqftError",
    "QftPlan",
    "QftTransformer",
    "SampleHistogram",
    "ScaleConvention",
    "Statevector",
    "ValidationError",
    "apply_circuit",
    "apply_gate",
    "batched_mdqft",
    "compare_spectra",
    "cphase",
    "decode",
    "dense_unitary",
    "dft_1d_naive",
    "encode",
    "example_image",
    "example_init_circuit",
    "export_qasm",
    "fft_radix2",
    "flat_index",
    "h",
    "kron",
    "md_dft",
    "mdqft",
    "mdqft_no_swap",
    "norm",
    "phase",
    "predicted_gate_count",
    "probabilities",
    "qft_register",
    "register_map",
    "run_demo",
    "run_mdqft",
    "sample",
    "swap",
    "transform_array",
    "unflatten",
    "vandermonde",
    "x",
    "zero_state",
]
