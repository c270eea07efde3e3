"""Command-line interface.

Exit codes: 0 success, 2 input/validation error, 3 degenerate input
(all-zero array), 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import io
from .demo import DEFAULT_SEED, DEFAULT_SHOTS, run_demo
from .encoding import ArrayLayout, ScaleConvention, unflatten
from .errors import CapacityError, DegenerateInputError, LayoutError, ValidationError
from .pipeline import transform_array
from .qft import mdqft, mdqft_no_swap, predicted_gate_count
from .reference import compare_spectra, md_dft
from .simulator import SampleHistogram, run_mdqft, sample
from .validation import MAX_QUBITS_ENV

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_INCONSISTENT = 4


def _parse_dims(text: str) -> ArrayLayout:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"dims must be comma-separated integers, got {text!r}") from exc
    return ArrayLayout(dims)


def _cmd_transform(args) -> int:
    array = io.read_array(args.input)
    result = transform_array(
        array,
        convention=ScaleConvention(args.convention),
        inverse=args.inverse,
        no_swap=args.no_swap,
    )
    io.write_array(args.output, result)
    return EXIT_OK


def _cmd_sample(args) -> int:
    array = io.read_array(args.input)
    state, plan, _ = run_mdqft(array, no_swap=args.no_swap)
    histogram = sample(state, args.shots, args.seed)
    if args.no_swap:
        counts = {
            int(plan.output_permutation[outcome]): count
            for outcome, count in histogram.counts.items()
        }
        histogram = SampleHistogram(histogram.shots, dict(sorted(counts.items())))
    io.write_histogram(args.output, histogram, array.layout)
    return EXIT_OK


def _cmd_verify(args) -> int:
    array = io.read_array(args.input)
    quantum = transform_array(array, convention=ScaleConvention.CLASSICAL)
    naive = md_dft(array, engine="naive")
    fast = md_dft(array, engine="fft")
    checks = [
        ("simulator vs naive DFT", quantum, naive),
        ("simulator vs radix-2 FFT", quantum, fast),
        ("radix-2 FFT vs naive DFT", fast, naive),
    ]
    all_pass = True
    for label, a, b in checks:
        report = compare_spectra(a, b, abs_tol=args.abs_tol, rel_tol=args.rel_tol)
        print(f"{label}: {report}")
        all_pass = all_pass and report.passed
    return EXIT_OK if all_pass else EXIT_INCONSISTENT


def _cmd_export(args) -> int:
    layout = _parse_dims(args.dims)
    plan = mdqft_no_swap(layout) if args.no_swap else mdqft(layout)
    Path(args.output).write_text(plan.circuit.to_qasm(), encoding="utf-8")
    return EXIT_OK


def _cmd_demo(args) -> int:
    report = run_demo(shots=args.shots, seed=args.seed)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    layout = report.image.layout

    image_lines = ["# x y value"]
    spectrum_lines = ["# k_x k_y re im abs"]
    ideal_lines = ["# k_x k_y probability"]
    for flat in range(layout.total_elements):
        kx, ky = unflatten(flat, layout)
        image_lines.append(f"{kx} {ky} {float(report.image.data[flat].real)!r}")
        coef = report.classical_spectrum.data[flat]
        spectrum_lines.append(
            f"{kx} {ky} {float(coef.real)!r} {float(coef.imag)!r} {float(abs(coef))!r}"
        )
        ideal_lines.append(f"{kx} {ky} {float(report.ideal_probabilities[flat])!r}")
    (out / "image.tsv").write_text("\n".join(image_lines) + "\n", encoding="utf-8")
    (out / "classical_spectrum.tsv").write_text(
        "\n".join(spectrum_lines) + "\n", encoding="utf-8"
    )
    (out / "ideal_spectrum.tsv").write_text("\n".join(ideal_lines) + "\n", encoding="utf-8")
    io.write_histogram(out / "histogram.txt", report.histogram, layout)

    peak_freqs = [report.histogram.frequency(i) for i in report.peak_indices]
    off_peak = [
        count / report.shots
        for outcome, count in report.histogram.counts.items()
        if outcome not in set(report.peak_indices)
    ]
    report_lines = [
        f"shots: {report.shots}",
        f"seed: {report.seed}",
        f"peaks: {' '.join(str(i) for i in report.peak_indices)}",
        f"peak_frequency_min: {min(peak_freqs)!r}",
        f"offpeak_frequency_max: {(max(off_peak) if off_peak else 0.0)!r}",
        f"peak_check: {'PASS' if report.peak_check else 'FAIL'}",
    ]
    (out / "report.txt").write_text("\n".join(report_lines) + "\n", encoding="utf-8")
    print("\n".join(report_lines))
    return EXIT_OK if report.peak_check else EXIT_INCONSISTENT


def _cmd_gatecount(args) -> int:
    rows = []
    consistent = True
    for text in args.dims:
        layout = _parse_dims(text)
        predicted = predicted_gate_count(layout)
        actual = mdqft(layout).circuit.gate_count()
        match = predicted == actual
        consistent = consistent and match
        m = layout.total_elements
        rows.append(
            (
                "x".join(str(n) for n in layout.dims),
                predicted["h"],
                predicted["cphase"],
                predicted["swap"],
                sum(actual.values()),
                round(m * math.log2(m)),
                "ok" if match else "MISMATCH",
            )
        )
    print(f"{'dims':>12} {'H':>5} {'CP':>5} {'Swap':>5} {'total':>6} {'M*log2(M)':>10} check")
    for row in rows:
        print(f"{row[0]:>12} {row[1]:>5} {row[2]:>5} {row[3]:>5} {row[4]:>6} {row[5]:>10} {row[6]}")
    return EXIT_OK if consistent else EXIT_INCONSISTENT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdqft",
        description="Multidimensional QFT statevector simulator and circuit builder. "
        f"Set {MAX_QUBITS_ENV} to change the qubit capacity cap (default 26).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="Fourier-transform an array file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument(
        "--convention",
        choices=[c.value for c in ScaleConvention],
        default=ScaleConvention.CLASSICAL.value,
    )
    p.add_argument("--no-swap", action="store_true", help="use swap-elided circuits")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("sample", help="simulate measurement shots of the spectrum")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--no-swap", action="store_true")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("verify", help="three-way check: simulator vs naive DFT vs FFT")
    p.add_argument("input")
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.add_argument("--rel-tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write the transform circuit as OpenQASM 2.0")
    p.add_argument("dims", help="comma-separated sizes, e.g. 8,8")
    p.add_argument("output")
    p.add_argument("--no-swap", action="store_true")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("demo", help="run the built-in 8x8 four-peak example")
    p.add_argument("output_dir")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_demo)

    p = sub.add_parser("gatecount", help="predicted vs actual gate counts per layout")
    p.add_argument("dims", nargs="+", help="one or more comma-separated size lists")
    p.set_defaults(func=_cmd_gatecount)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValidationError, LayoutError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
