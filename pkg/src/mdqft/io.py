"""File formats for arrays and histograms.

Arrays are JSON documents with two fields: "dims" (the layout) and "data"
(flat [re, im] pairs in encoding order, one per line for diff-ability).
Histograms are plain text: a shots line, then one row per observed outcome
sorted by index.
"""

from __future__ import annotations

import json
from pathlib import Path

from .encoding import ArrayLayout, MdArray, unflatten
from .errors import MdqftError, ValidationError
from .simulator import SampleHistogram


def array_to_text(array: MdArray) -> str:
    pairs = ",\n".join(
        f"    [{float(z.real)!r}, {float(z.imag)!r}]" for z in array.data
    )
    return (
        "{\n"
        f'  "dims": {json.dumps(list(array.layout.dims))},\n'
        '  "data": [\n'
        f"{pairs}\n"
        "  ]\n"
        "}\n"
    )


def array_from_text(text: str, *, source: str = "<string>") -> MdArray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "dims" not in doc or "data" not in doc:
        raise ValidationError(f'{source}: expected an object with "dims" and "data"')
    dims = doc["dims"]
    data = doc["data"]
    if not isinstance(dims, list) or not all(isinstance(n, int) for n in dims):
        raise ValidationError(f"{source}: dims must be a list of integers")
    try:
        values = [complex(pair[0], pair[1]) for pair in data]
    except (TypeError, IndexError) as exc:
        raise ValidationError(f"{source}: data rows must be [re, im] pairs") from exc
    try:
        return MdArray(ArrayLayout(tuple(dims)), values)
    except MdqftError as exc:
        raise ValidationError(f"{source}: {exc}") from exc


def write_array(path, array: MdArray) -> None:
    Path(path).write_text(array_to_text(array), encoding="utf-8")


def read_array(path) -> MdArray:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    return array_from_text(text, source=str(path))


def histogram_to_text(histogram: SampleHistogram, layout: ArrayLayout) -> str:
    """Rows: outcome index, its per-dimension digits, count, frequency."""
    digit_names = " ".join(f"k_{i + 1}" for i in range(layout.ndim))
    lines = [
        f"shots: {histogram.shots}",
        f"# outcome {digit_names} count frequency",
    ]
    for outcome in sorted(histogram.counts):
        count = histogram.counts[outcome]
        digits = " ".join(str(d) for d in unflatten(outcome, layout))
        lines.append(f"{outcome} {digits} {count} {count / histogram.shots!r}")
    return "\n".join(lines) + "\n"


def write_histogram(path, histogram: SampleHistogram, layout: ArrayLayout) -> None:
    Path(path).write_text(histogram_to_text(histogram, layout), encoding="utf-8")
