"""Dense complex linear algebra on the physical Hilbert space.

This is the brute-force layer every symbolic module is checked against:
Pauli monomials act on amplitude vectors as permutations plus diagonal
phases, without ever materialising a full d x d matrix (except in the
explicit ``dense_matrix`` helper used by oracle tests).

Qubit basis convention: the ket |b1 b2 ... bn> maps to the integer index
whose most significant bit is qubit 1, so |10000> on five qubits is index 16.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .paulialg import QubitPauliString, QuditPauli

if TYPE_CHECKING:  # pragma: no cover
    from .codes import StabilizerCode

MAX_DIM = 1024


@dataclass(frozen=True, eq=False)
class StateVector:
    """Immutable complex amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise ValueError("amplitudes must be one-dimensional")
        if amps.size > MAX_DIM:
            raise ValueError(f"dimension {amps.size} exceeds the {MAX_DIM} guard")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def basis_state(dim: int, index: int) -> StateVector:
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(amps)


def state_from_kets(dim: int, kets: Sequence[tuple[complex, int]]) -> StateVector:
    """Superposition sum(coeff * |index>), normalised by the caller's coefficients."""
    amps = np.zeros(dim, dtype=np.complex128)
    for coeff, index in kets:
        amps[index] += coeff
    return StateVector(amps)


def apply_qudit_pauli(e: QuditPauli, v: StateVector) -> StateVector:
    """w^l X^n Z^m |v> via a cyclic shift and a diagonal phase ramp."""
    if e.d != v.dim:
        raise ValueError(f"dimension mismatch: operator d={e.d}, state dim={v.dim}")
    angles = (e.z * np.arange(e.d)) % e.d
    phases = np.exp(2j * np.pi * angles / e.d)
    shifted = np.roll(v.amplitudes * phases, e.x)
    global_phase = cmath.exp(2j * cmath.pi * e.phase / e.d)
    return StateVector(global_phase * shifted)


def apply_qubit_string(e: QubitPauliString, v: StateVector) -> StateVector:
    """(-1)^sign X(a) Z(b) |v>: bit-flip permutation plus parity signs."""
    n = e.n_qubits
    if v.dim != 2**n:
        raise ValueError(f"dimension mismatch: 2^{n} != {v.dim}")
    a_mask = int("".join(map(str, e.a)), 2) if n else 0
    b_mask = int("".join(map(str, e.b)), 2) if n else 0
    indices = np.arange(v.dim)
    src = indices ^ a_mask
    parities = np.bitwise_count(src & b_mask) & 1
    signs = 1.0 - 2.0 * ((parities + e.sign) & 1)
    return StateVector(signs * v.amplitudes[src])


def apply_pauli(e, v: StateVector) -> StateVector:
    if isinstance(e, QuditPauli):
        return apply_qudit_pauli(e, v)
    return apply_qubit_string(e, v)


def inner_product(u: StateVector, v: StateVector) -> complex:
    """<u|v>, conjugate-linear in the first argument."""
    if u.dim != v.dim:
        raise ValueError("dimension mismatch")
    return complex(np.vdot(u.amplitudes, v.amplitudes))


def restrict_to_codespace(code: "StabilizerCode", operators: Sequence) -> np.ndarray:
    """2x2 matrix <i_L| O |j_L> for O = operators[0] . operators[1] . ...

    Operators are composed right-to-left, i.e. the last entry acts first,
    matching ordinary operator-product notation.
    """
    words = (code.codeword0, code.codeword1)
    out = np.zeros((2, 2), dtype=np.complex128)
    for j, ket in enumerate(words):
        image = ket
        for op in reversed(operators):
            image = apply_pauli(op, image)
        for i, bra in enumerate(words):
            out[i, j] = inner_product(bra, image)
    return out


def fourier_matrix(d: int) -> np.ndarray:
    """F[i, j] = w^(-ij) / sqrt(d); maps the Z eigenbasis to the X eigenbasis."""
    grid = np.outer(np.arange(d), np.arange(d)) % d
    return np.exp(-2j * np.pi * grid / d) / np.sqrt(d)


def dense_matrix(e, dim: int) -> np.ndarray:
    """Full matrix of a Pauli monomial, column by column (oracle use only)."""
    cols = [apply_pauli(e, basis_state(dim, j)).amplitudes for j in range(dim)]
    return np.array(cols).T
