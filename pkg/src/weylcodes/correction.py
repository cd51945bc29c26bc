"""Correctable sets, recovery-map synthesis, KL verification and decoders.

The recovery follows the standard construction: for each occupied syndrome k
with designated correctable error C_k,

    R_k = |0_L><v_k^0| + |1_L><v_k^1|,   |v_k^i> = C_k |i_L>.

Orthonormality of the full {|v_k^i>} family is verified numerically before a
map is returned; for the four codes here the families tile the whole Hilbert
space (9x2=18, 25x2=50, 16x2=32, 64x2=128), so sum_k R_k^dag R_k = I.

Decoders:
* qudit nearest-shift: balanced residues of the syndrome pair;
* five-qubit: lookup over the 16 weight<=1 errors (perfect code);
* seven-qubit CSS: the two 3-bit syndrome halves are Hamming-decoded
  independently, naming one phase-flipped and one bit-flipped qubit each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .codes import (
    FIVE_QUBIT,
    SEVEN_QUBIT,
    StabilizerCode,
    Syndrome,
    build_five_qubit_code,
    centered_residue,
    syndrome,
)
from .paulialg import QubitPauliString, QuditPauli, qubit_string_mul
from .phasespace import StateVector, apply_pauli, restrict_to_codespace

Pauli = Union[QuditPauli, QubitPauliString]


class DegenerateCodeError(ValueError):
    """Raised when correctable-error images fail the orthonormality guard."""


@dataclass(frozen=True)
class RecoveryEntry:
    syndrome: Syndrome
    representative: Pauli
    v0: StateVector
    v1: StateVector


@dataclass(frozen=True, eq=False)
class RecoveryMap:
    code: StabilizerCode
    entries: tuple[RecoveryEntry, ...]

    def by_syndrome(self) -> dict[Syndrome, RecoveryEntry]:
        return {entry.syndrome: entry for entry in self.entries}


def correctable_set(code: StabilizerCode) -> list[Pauli]:
    """Designated correctable errors, one per occupied syndrome.

    QuditShift: balanced shifts |a| <= (r1-1)/2, |b| <= (r2-1)/2.
    FiveQubit: the 16 errors of weight <= 1.
    SevenQubitCSS: the 64 products {X(a)Z(b): weight(a) <= 1, weight(b) <= 1}.
    """
    if code.is_qudit:
        half1 = (code.r1 - 1) // 2
        half2 = (code.r2 - 1) // 2
        return [
            QuditPauli(code.hilbert_dim, x=a, z=b)
            for a in range(-half1, half1 + 1)
            for b in range(-half2, half2 + 1)
        ]
    if code.kind == FIVE_QUBIT:
        errors: list[Pauli] = [QubitPauliString.identity(5)]
        errors += [
            QubitPauliString.single(5, q, kind) for q in range(1, 6) for kind in "XYZ"
        ]
        return errors
    n = code.n_qubits
    errors = []
    for a_pos in range(0, n + 1):  # 0 means no bit flip
        for b_pos in range(0, n + 1):
            label = ["I"] * n
            if a_pos:
                label[a_pos - 1] = "X"
            if b_pos:
                label[b_pos - 1] = "Y" if b_pos == a_pos else "Z"
            errors.append(QubitPauliString.from_label("".join(label)))
    return errors


def build_recovery(code: StabilizerCode, correctable: Sequence[Pauli]) -> RecoveryMap:
    entries = []
    seen: dict[Syndrome, Pauli] = {}
    for error in correctable:
        s = syndrome(code, error)
        if s in seen:
            raise ValueError(f"syndrome collision: {error} vs {seen[s]}")
        seen[s] = error
        entries.append(
            RecoveryEntry(
                syndrome=s,
                representative=error,
                v0=apply_pauli(error, code.codeword0),
                v1=apply_pauli(error, code.codeword1),
            )
        )
    _check_orthonormal(entries)
    return RecoveryMap(code=code, entries=tuple(entries))


def _check_orthonormal(entries: list[RecoveryEntry], tolerance: float = 1e-10) -> None:
    vectors = [v.amplitudes for entry in entries for v in (entry.v0, entry.v1)]
    stack = np.array(vectors)
    gram = stack.conj() @ stack.T
    if not np.allclose(gram, np.eye(len(vectors)), rtol=0.0, atol=tolerance):
        raise DegenerateCodeError(
            "correctable-error images are not orthonormal; the KL construction "
            "does not apply to this error set"
        )


def recovery_completeness_defect(recovery: RecoveryMap) -> float:
    """Max-norm distance of sum_k R_k^dag R_k from the identity."""
    dim = recovery.code.hilbert_dim
    total = np.zeros((dim, dim), dtype=np.complex128)
    for entry in recovery.entries:
        for v in (entry.v0, entry.v1):
            total += np.outer(v.amplitudes, v.amplitudes.conj())
    return float(np.max(np.abs(total - np.eye(dim))))


def verify_kl(code: StabilizerCode, e1: Pauli, e2: Pauli) -> complex | None:
    """Proportionality constant c with P e1^dag e2 P = c P, or None if violated."""
    restricted = restrict_to_codespace(code, [e1.adjoint(), e2])
    c = (restricted[0, 0] + restricted[1, 1]) / 2
    if np.allclose(restricted, c * np.eye(2), rtol=0.0, atol=1e-10):
        return complex(c)
    return None


def decode(code: StabilizerCode, s: Syndrome) -> Pauli:
    """Correction operator for a syndrome."""
    if code.is_qudit:
        if len(s) != 2 or not (0 <= s[0] < code.r1 and 0 <= s[1] < code.r2):
            raise ValueError(f"invalid qudit syndrome {s!r}")
        a_hat = centered_residue(s[0], code.r1)
        b_hat = centered_residue(s[1], code.r2)
        return QuditPauli(code.hilbert_dim, x=-a_hat, z=-b_hat)
    if code.kind == FIVE_QUBIT:
        table = _five_qubit_table()
        try:
            return table[tuple(s)]
        except KeyError:
            raise ValueError(f"unknown five-qubit syndrome {s!r}")
    if code.kind == SEVEN_QUBIT:
        if len(s) != 6 or any(bit not in (0, 1) for bit in s):
            raise ValueError(f"invalid seven-qubit syndrome {s!r}")
        # generators are ordered X-type then Z-type; X-type generators flag
        # phase flips, Z-type generators flag bit flips
        z_pos = s[0] * 4 + s[1] * 2 + s[2]
        x_pos = s[3] * 4 + s[4] * 2 + s[5]
        label = ["I"] * 7
        if x_pos:
            label[x_pos - 1] = "X"
        if z_pos:
            label[z_pos - 1] = "Y" if z_pos == x_pos else "Z"
        return QubitPauliString.from_label("".join(label))
    raise ValueError(f"no decoder for code kind {code.kind!r}")


_FIVE_TABLE: dict[tuple, Pauli] | None = None


def _five_qubit_table() -> dict[tuple, Pauli]:
    global _FIVE_TABLE
    if _FIVE_TABLE is None:
        code_five = build_five_qubit_code()
        _FIVE_TABLE = {
            tuple(syndrome(code_five, e)): e for e in correctable_set(code_five)
        }
    return _FIVE_TABLE


def net_operator_after_decode(code: StabilizerCode, error: Pauli) -> Pauli:
    """decode(syndrome(e)) composed with e; identity on the code space iff recovered."""
    correction = decode(code, syndrome(code, error))
    if code.is_qudit:
        from .paulialg import qudit_pauli_mul

        return qudit_pauli_mul(correction, error)
    return qubit_string_mul(correction, error)
