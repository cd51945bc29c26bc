"""Symbolic error-operator algebra.

Two flavours of Pauli monomial live here:

* ``QuditPauli`` -- w^l X^n Z^m on a single d-level system, where
  w = exp(2*pi*i/d), X|k> = |k+1 mod d>, Z|k> = w^k |k>.  Products are
  normalised with Z-factors pushed to the right via X^a Z^b = w^(-ab) Z^b X^a,
  so the phase exponent l lives in Z_d.

* ``QubitPauliString`` -- (-1)^lambda X(a) Z(b) on n qubits with bit vectors
  a, b.  The local Y is defined as XZ (a real matrix with Y^2 = -I), so a
  single sign bit suffices and the string corresponds, sign aside, to the
  symplectic vector (a|b) in F_2^{2n}.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

Bits = tuple[int, ...]


@dataclass(frozen=True)
class QuditPauli:
    """w^phase * X^x * Z^z on a d-dimensional system; exponents reduced mod d."""

    d: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "x", self.x % self.d)
        object.__setattr__(self, "z", self.z % self.d)
        object.__setattr__(self, "phase", self.phase % self.d)

    @staticmethod
    def identity(d: int) -> "QuditPauli":
        return QuditPauli(d)

    def adjoint(self) -> "QuditPauli":
        # (w^l X^n Z^m)^dag = w^{-l} Z^{-m} X^{-n} = w^{nm-l} X^{-n} Z^{-m}
        return QuditPauli(self.d, -self.x, -self.z, self.x * self.z - self.phase)

    def __str__(self) -> str:
        parts = []
        if self.phase:
            parts.append(f"w^{self.phase}")
        if self.x:
            parts.append("X" if self.x == 1 else f"X^{self.x}")
        if self.z:
            parts.append("Z" if self.z == 1 else f"Z^{self.z}")
        return " ".join(parts) if parts else "I"


def qudit_pauli_mul(e1: QuditPauli, e2: QuditPauli) -> QuditPauli:
    """Product e1*e2 in canonical form.

    Moving the Z^m1 of e1 past the X^n2 of e2 costs w^(m1*n2), from
    Z^b X^a = w^(ab) X^a Z^b.
    """
    if e1.d != e2.d:
        raise ValueError(f"dimension mismatch: {e1.d} != {e2.d}")
    return QuditPauli(
        e1.d,
        e1.x + e2.x,
        e1.z + e2.z,
        e1.phase + e2.phase + e1.z * e2.x,
    )


def commutation_phase(e1: QuditPauli, e2: QuditPauli) -> int:
    """The t in e1*e2 = w^t * e2*e1, namely n2*m1 - n1*m2 mod d."""
    if e1.d != e2.d:
        raise ValueError(f"dimension mismatch: {e1.d} != {e2.d}")
    return (e2.x * e1.z - e1.x * e2.z) % e1.d


@dataclass(frozen=True)
class QubitPauliString:
    """(-1)^sign X(a) Z(b) on len(a) qubits; Y = XZ sets both bits of a slot."""

    sign: int
    a: Bits
    b: Bits

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have equal length")
        if any(bit not in (0, 1) for bit in self.a + self.b) or self.sign not in (0, 1):
            raise ValueError("bits and sign must be 0 or 1")

    @property
    def n_qubits(self) -> int:
        return len(self.a)

    @staticmethod
    def identity(n: int) -> "QubitPauliString":
        return QubitPauliString(0, (0,) * n, (0,) * n)

    @staticmethod
    def from_label(label: str) -> "QubitPauliString":
        """Parse strings like "XZZXI"; Y means the local product XZ."""
        a = tuple(1 if ch in "XY" else 0 for ch in label)
        b = tuple(1 if ch in "ZY" else 0 for ch in label)
        if any(ch not in "IXYZ" for ch in label):
            raise ValueError(f"bad Pauli label: {label!r}")
        return QubitPauliString(0, a, b)

    @staticmethod
    def single(n: int, qubit: int, kind: str) -> "QubitPauliString":
        """kind in {X, Y, Z} acting on the 1-based qubit index."""
        label = ["I"] * n
        label[qubit - 1] = kind
        return QubitPauliString.from_label("".join(label))

    def adjoint(self) -> "QubitPauliString":
        # (X(a)Z(b))^dag = Z(b)X(a) = (-1)^(a.b) X(a)Z(b)
        overlap = sum(x & z for x, z in zip(self.a, self.b)) & 1
        return QubitPauliString((self.sign + overlap) & 1, self.a, self.b)

    def __str__(self) -> str:
        prefix = "-" if self.sign else "+"
        return f"{prefix}X({''.join(map(str, self.a))})Z({''.join(map(str, self.b))})"

    def label(self) -> str:
        """Letter form, ignoring the sign: e.g. XZZXI."""
        table = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
        return "".join(table[(x, z)] for x, z in zip(self.a, self.b))


def qubit_string_mul(e1: QubitPauliString, e2: QubitPauliString) -> QubitPauliString:
    """Product with the sign tracking Z(b1) moving past X(a2)."""
    if e1.n_qubits != e2.n_qubits:
        raise ValueError("qubit count mismatch")
    crossings = sum(z & x for z, x in zip(e1.b, e2.a)) & 1
    return QubitPauliString(
        (e1.sign + e2.sign + crossings) & 1,
        tuple(x1 ^ x2 for x1, x2 in zip(e1.a, e2.a)),
        tuple(z1 ^ z2 for z1, z2 in zip(e1.b, e2.b)),
    )


def symplectic_vector(e: QubitPauliString) -> Bits:
    """(a|b) in F_2^{2n}; the sign is discarded (quotient by +-I)."""
    return e.a + e.b


def symplectic_product(u: Bits, v: Bits) -> int:
    """a_u.b_v + a_v.b_u mod 2; equals 1 iff the operators anticommute."""
    if len(u) != len(v) or len(u) % 2:
        raise ValueError("vectors must have equal even length")
    n = len(u) // 2
    total = 0
    for i in range(n):
        total ^= (u[i] & v[n + i]) ^ (v[i] & u[n + i])
    return total


def weight(e: QubitPauliString) -> int:
    """Number of tensor slots where the string acts non-trivially."""
    return sum(1 for x, z in zip(e.a, e.b) if x or z)
