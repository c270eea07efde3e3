"""Gate-level circuit representation with adjoint, composition and QASM export.

Circuits are immutable; every structural operation returns a new Circuit.
Gates apply left to right, so the dense matrix of ``a.compose(b)`` is
``U_b @ U_a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .validation import check_finite_angle

H = "h"
X = "x"
PHASE = "phase"
CPHASE = "cphase"
SWAP = "swap"

GATE_KINDS = (H, X, PHASE, CPHASE, SWAP)

_ARITY = {H: 1, X: 1, PHASE: 1, CPHASE: 2, SWAP: 2}
_HAS_ANGLE = {PHASE, CPHASE}


@dataclass(frozen=True)
class Gate:
    """One gate: kind, operand qubits, and a phase angle in radians.

    For ``cphase`` the operands are (control, target); the unitary is
    symmetric in them but both roles are kept for faithful serialization.
    """

    kind: str
    qubits: tuple[int, ...]
    angle: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValidationError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != _ARITY[self.kind]:
            raise ValidationError(
                f"{self.kind} takes {_ARITY[self.kind]} qubit(s), got {self.qubits}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValidationError(f"gate operands must be distinct, got {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValidationError(f"negative qubit index in {self.qubits}")
        object.__setattr__(self, "angle", check_finite_angle(self.angle))
        if self.angle != 0.0 and self.kind not in _HAS_ANGLE:
            raise ValidationError(f"{self.kind} gate takes no angle")

    def adjoint(self) -> "Gate":
        if self.kind in _HAS_ANGLE:
            return Gate(self.kind, self.qubits, -self.angle)
        return self  # h, x, swap are self-inverse


def h(qubit: int) -> Gate:
    return Gate(H, (qubit,))


def x(qubit: int) -> Gate:
    return Gate(X, (qubit,))


def phase(angle: float, qubit: int) -> Gate:
    return Gate(PHASE, (qubit,), angle)


def cphase(angle: float, control: int, target: int) -> Gate:
    return Gate(CPHASE, (control, target), angle)


def swap(a: int, b: int) -> Gate:
    return Gate(SWAP, (a, b))


def _format_angle(angle: float) -> str:
    # shortest round-trip repr, adjusted so the literal always carries a
    # decimal point (strict OpenQASM 2.0 reals require one, e.g. 1e-05 -> 1.0e-05)
    text = repr(float(angle))
    if "e" in text:
        mantissa, _, exponent = text.partition("e")
        if "." not in mantissa:
            mantissa += ".0"
        return f"{mantissa}e{exponent}"
    if "." not in text:
        text += ".0"
    return text


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence on ``num_qubits`` named qubit indices."""

    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValidationError(f"num_qubits must be >= 1, got {self.num_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if max(gate.qubits) >= self.num_qubits:
                raise ValidationError(
                    f"gate {gate.kind} on {gate.qubits} exceeds "
                    f"{self.num_qubits}-qubit circuit"
                )

    def append(self, gate: Gate) -> "Circuit":
        return Circuit(self.num_qubits, self.gates + (gate,))

    def compose(self, other: "Circuit") -> "Circuit":
        """Concatenate: self runs first, then other."""
        if other.num_qubits != self.num_qubits:
            raise ValidationError(
                f"cannot compose {self.num_qubits}-qubit and "
                f"{other.num_qubits}-qubit circuits"
            )
        return Circuit(self.num_qubits, self.gates + other.gates)

    def adjoint(self) -> "Circuit":
        """Inverse circuit: reversed order, phase angles negated."""
        return Circuit(self.num_qubits, tuple(g.adjoint() for g in reversed(self.gates)))

    def gate_count(self) -> dict[str, int]:
        counts = {kind: 0 for kind in GATE_KINDS}
        for gate in self.gates:
            counts[gate.kind] += 1
        return counts

    def __len__(self) -> int:
        return len(self.gates)

    def to_qasm(self) -> str:
        """OpenQASM 2.0 text: one register ``q``, qelib1 gate names, LF newlines.

        Byte-deterministic for a given circuit (angles printed with repr).
        """
        lines = [
            "OPENQASM 2.0;",
            'include "qelib1.inc";',
            f"qreg q[{self.num_qubits}];",
        ]
        for gate in self.gates:
            if gate.kind == H:
                lines.append(f"h q[{gate.qubits[0]}];")
            elif gate.kind == X:
                lines.append(f"x q[{gate.qubits[0]}];")
            elif gate.kind == PHASE:
                lines.append(f"u1({gate.angle!r}) q[{gate.qubits[0]}];")
            elif gate.kind == CPHASE:
                c, t = gate.qubits
                lines.append(f"cu1({gate.angle!r}) q[{c}],q[{t}];")
            else:  # swap
                a, b = gate.qubits
                lines.append(f"swap q[{a}],q[{b}];")
        return "\n".join(lines) + "\n"


def export_qasm(circuit: Circuit) -> str:
    return circuit.to_qasm()
