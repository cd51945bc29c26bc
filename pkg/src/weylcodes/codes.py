"""Constructors and syndrome machinery for the four stabilizer codes.

* ``QuditShift(r1, r2)``: a qubit embedded in a d = 2*r1*r2 level system,
  stabilized by X^(2*r1) and Z^(2*r2).  Codewords are combs of kets at
  multiples of r1.  Only odd r1, r2 >= 3 are accepted: balanced residues are
  then unique, so nearest-shift decoding has no ties.
* ``FiveQubit``: the [[5,1,3]] perfect code.
* ``SevenQubitCSS``: the [[7,1,3]] CSS code built from the Hamming [7,4] code.

Block-code codewords are hard-coded from their standard printed
superpositions and machine-verified against the generators by the test
suite rather than derived by projector construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .paulialg import (
    QubitPauliString,
    QuditPauli,
    symplectic_product,
    symplectic_vector,
)
from .phasespace import StateVector, fourier_matrix, state_from_kets

Pauli = Union[QuditPauli, QubitPauliString]
Syndrome = tuple[int, ...]

QUDIT_SHIFT = "qudit-shift"
FIVE_QUBIT = "five-qubit"
SEVEN_QUBIT = "seven-qubit-css"


@dataclass(frozen=True, eq=False)
class StabilizerCode:
    kind: str
    name: str
    hilbert_dim: int
    codeword0: StateVector
    codeword1: StateVector
    generators: tuple[Pauli, ...]
    syndrome_space_size: int
    r1: int | None = None
    r2: int | None = None
    parity_check: np.ndarray | None = None

    @property
    def is_qudit(self) -> bool:
        return self.kind == QUDIT_SHIFT

    @property
    def n_qubits(self) -> int:
        if self.is_qudit:
            raise ValueError("qudit codes have no qubit count")
        return self.generators[0].n_qubits


def build_qudit_code(r1: int, r2: int) -> StabilizerCode:
    """Shift-resistant code with d = 2*r1*r2 and generators X^(2 r1), Z^(2 r2)."""
    for r in (r1, r2):
        if r < 3 or r % 2 == 0:
            raise ValueError(f"r parameters must be odd and >= 3, got {r}")
    d = 2 * r1 * r2
    amp = 1.0 / math.sqrt(r2)
    word0 = state_from_kets(d, [(amp, 2 * j * r1) for j in range(r2)])
    word1 = state_from_kets(d, [(amp, (2 * j + 1) * r1) for j in range(r2)])
    generators = (QuditPauli(d, x=2 * r1), QuditPauli(d, z=2 * r2))
    return StabilizerCode(
        kind=QUDIT_SHIFT,
        name=f"d{d}",
        hilbert_dim=d,
        codeword0=word0,
        codeword1=word1,
        generators=generators,
        syndrome_space_size=r1 * r2,
        r1=r1,
        r2=r2,
    )


def _block_codeword(n: int, plus: list[str], minus: list[str], norm: float) -> StateVector:
    kets = [(norm, int(bits, 2)) for bits in plus]
    kets += [(-norm, int(bits, 2)) for bits in minus]
    return state_from_kets(2**n, kets)


_FIVE_GENERATORS = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")

# Joint +1 eigenvectors of the four generators above, with the conventional
# 16-ket support and 1/4 amplitudes.  The widely reprinted sign variant with
# + on the adjacent-pair kets (11000, 01100, ...) belongs to the X<->Z
# swapped generator family ZXXZI,... and is NOT fixed by these generators;
# the test suite machine-checks this pairing at 1e-12.
_FIVE_WORD0_PLUS = ["00000", "00101", "01001", "01010", "10010", "10100"]
_FIVE_WORD0_MINUS = [
    "00011", "00110", "01100", "01111", "10001",
    "10111", "11000", "11011", "11101", "11110",
]
_FIVE_WORD1_PLUS = ["11111", "11010", "10110", "10101", "01101", "01011"]
_FIVE_WORD1_MINUS = [
    "11100", "11001", "10011", "10000", "01110",
    "01000", "00111", "00100", "00010", "00001",
]


def build_five_qubit_code() -> StabilizerCode:
    generators = tuple(QubitPauliString.from_label(g) for g in _FIVE_GENERATORS)
    word0 = _block_codeword(5, _FIVE_WORD0_PLUS, _FIVE_WORD0_MINUS, 0.25)
    word1 = _block_codeword(5, _FIVE_WORD1_PLUS, _FIVE_WORD1_MINUS, 0.25)
    return StabilizerCode(
        kind=FIVE_QUBIT,
        name="five",
        hilbert_dim=32,
        codeword0=word0,
        codeword1=word1,
        generators=generators,
        syndrome_space_size=16,
        parity_check=_parity_check(generators),
    )


_SEVEN_GENERATORS = (
    "IIIXXXX", "IXXIIXX", "XIXIXIX",
    "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ",
)

_SEVEN_WORD0 = [
    "0000000", "0110011", "1010101", "1100110",
    "0001111", "0111100", "1011010", "1101001",
]
_SEVEN_WORD1 = [
    "1111111", "1001100", "0101010", "0011001",
    "1110000", "1000011", "0100101", "0010110",
]


def build_seven_qubit_code() -> StabilizerCode:
    generators = tuple(QubitPauliString.from_label(g) for g in _SEVEN_GENERATORS)
    norm = 1.0 / math.sqrt(8.0)
    word0 = _block_codeword(7, _SEVEN_WORD0, [], norm)
    word1 = _block_codeword(7, _SEVEN_WORD1, [], norm)
    return StabilizerCode(
        kind=SEVEN_QUBIT,
        name="seven",
        hilbert_dim=128,
        codeword0=word0,
        codeword1=word1,
        generators=generators,
        syndrome_space_size=64,
        parity_check=_parity_check(generators),
    )


def _parity_check(generators: tuple[QubitPauliString, ...]) -> np.ndarray:
    rows = [symplectic_vector(g) for g in generators]
    matrix = np.array(rows, dtype=np.int8)
    matrix.flags.writeable = False
    return matrix


def balanced_residue(value: int, r: int) -> int:
    """Representative of value mod 2r in the window [-(r-1), r]."""
    return (value + r - 1) % (2 * r) - (r - 1)


def centered_residue(value: int, r: int) -> int:
    """Representative of value mod r in [-(r-1)/2, (r-1)/2]; r must be odd."""
    half = (r - 1) // 2
    return (value + half) % r - half


def syndrome(code: StabilizerCode, e: Pauli) -> Syndrome:
    """Commutation data of the error with each stabilizer generator.

    Qudit codes: measuring Z^(2 r2) pins the shift n mod r1 and X^(2 r1) pins
    the phase power m mod r2, so the syndrome is the residue pair.  Block
    codes: one symplectic-product bit per generator.
    """
    if code.is_qudit:
        if not isinstance(e, QuditPauli) or e.d != code.hilbert_dim:
            raise ValueError("error does not act on this code's qudit")
        return (e.x % code.r1, e.z % code.r2)
    if not isinstance(e, QubitPauliString) or e.n_qubits != code.n_qubits:
        raise ValueError("error does not act on this code's qubits")
    v = symplectic_vector(e)
    return tuple(symplectic_product(symplectic_vector(g), v) for g in code.generators)


def reduce_to_class(code: StabilizerCode, e: QuditPauli) -> QuditPauli:
    """Code-space equivalence class representative of X^n Z^m.

    On the code space X^(2 r1) and Z^(2 r2) act as the identity, so exponents
    are reduced to balanced residues; the extreme classes X^(r1) == X^(-r1)
    and Z^(r2) == Z^(-r2) are self-conjugate.  The phase is dropped (classes
    quotient it away).
    """
    if not code.is_qudit:
        raise ValueError("class reduction applies to qudit codes only")
    n_bar = balanced_residue(e.x, code.r1)
    m_bar = balanced_residue(e.z, code.r2)
    return QuditPauli(code.hilbert_dim, x=n_bar, z=m_bar)


def dual_codewords(code: StabilizerCode) -> tuple[StateVector, StateVector]:
    """Both codewords pushed through the Fourier matrix w^(-ij)/sqrt(d)."""
    if not code.is_qudit:
        raise ValueError("dual codewords are defined for qudit codes only")
    fourier = fourier_matrix(code.hilbert_dim)
    return (
        StateVector(fourier @ code.codeword0.amplitudes),
        StateVector(fourier @ code.codeword1.amplitudes),
    )


CODE_BUILDERS = {
    "d18": lambda: build_qudit_code(3, 3),
    "d50": lambda: build_qudit_code(5, 5),
    "five": build_five_qubit_code,
    "seven": build_seven_qubit_code,
}


def build_code(name: str) -> StabilizerCode:
    try:
        return CODE_BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown code {name!r}; expected one of {sorted(CODE_BUILDERS)}")
