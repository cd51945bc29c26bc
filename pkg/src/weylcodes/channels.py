"""Weyl-channel noise models as symbolic (operator, probability) pairs.

Probabilities are exact polynomials in p (phase-shift rate), kappa (shift
asymmetry: amplitude shifts occur at rate kappa*p) and mu (shift/phase
correlation, qudit codes only).  Completeness is a polynomial identity:
every enumeration sums to the constant 1.

Qudit codes are enumerated over their 4*r1*r2 code-space classes, one Kraus
term per balanced-residue pair, with the marginal pattern pi(+-j) = q^|j|
for 0 < |j| < r and a single self-conjugate class pi(r) = q^r.  The d=50
marginal is the same pattern extended (the source states it only implicitly);
it is pinned downstream by exact agreement of the resulting fidelity
polynomial with its published form.

Block codes are enumerated over all 4^n Pauli strings with per-qubit product
weights pi(I) = (1-kp)(1-p), pi(X) = kp(1-p), pi(Z) = (1-kp)p, pi(Y) = kp*p.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .codes import StabilizerCode
from .exactpoly import KAPPA, MU, ONE, ZERO, P, RationalPolynomial, poly_sum
from .paulialg import QubitPauliString, QuditPauli

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"
CORRELATED = "correlated"
FAMILIES = (SYMMETRIC, ASYMMETRIC, CORRELATED)

Pauli = Union[QuditPauli, QubitPauliString]


@dataclass(frozen=True)
class ChannelSpec:
    """Which probability family to attach to the error enumeration.

    kappa appears in the weights only for the asymmetric family, mu only for
    the correlated one; numeric values enter later, at evaluation points.
    """

    family: str

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown channel family {self.family!r}")


@dataclass(frozen=True)
class KrausTerm:
    operator: Pauli
    weight: RationalPolynomial


def shift_marginal(r: int, q: RationalPolynomial) -> dict[int, RationalPolynomial]:
    """Marginal over balanced residues mod 2r: q^|j| per shift, q^r once for j=r."""
    marginal: dict[int, RationalPolynomial] = {}
    total = ZERO
    for j in range(1, r):
        marginal[j] = q**j
        marginal[-j] = q**j
        total = total + 2 * q**j
    marginal[r] = q**r
    total = total + q**r
    marginal[0] = ONE - total
    return marginal


def _qudit_classes(code: StabilizerCode) -> list[tuple[int, int]]:
    residues1 = list(range(-(code.r1 - 1), code.r1 + 1))
    residues2 = list(range(-(code.r2 - 1), code.r2 + 1))
    return [(n, m) for n in residues1 for m in residues2]


def enumerate_qudit_kraus(code: StabilizerCode, spec: ChannelSpec) -> list[KrausTerm]:
    """One term per code-space class: 36 for (3,3), 100 for (5,5)."""
    if not code.is_qudit:
        raise ValueError("qudit enumeration needs a qudit-shift code")
    shift_rate = KAPPA * P if spec.family == ASYMMETRIC else P
    pi_x = shift_marginal(code.r1, shift_rate)
    pi_z = shift_marginal(code.r2, P)
    terms = []
    for n, m in _qudit_classes(code):
        independent = pi_x[n] * pi_z[m]
        if spec.family == CORRELATED:
            weight = (ONE - MU) * independent
            if n == m:
                weight = weight + MU * pi_z[m]
        else:
            weight = independent
        terms.append(KrausTerm(QuditPauli(code.hilbert_dim, x=n, z=m), weight))
    return terms


def qubit_marginals(spec: ChannelSpec) -> dict[str, RationalPolynomial]:
    """Single-qubit error probabilities for the product channel."""
    if spec.family == CORRELATED:
        raise ValueError("correlated weights are defined for qudit codes only")
    px1 = KAPPA * P if spec.family == ASYMMETRIC else P
    pz1 = P
    return {
        "I": (ONE - px1) * (ONE - pz1),
        "X": px1 * (ONE - pz1),
        "Z": (ONE - px1) * pz1,
        "Y": px1 * pz1,
    }


def enumerate_block_kraus(code: StabilizerCode, spec: ChannelSpec) -> list[KrausTerm]:
    """All 4^n Pauli strings with product weights, ordered by (a, b) bit masks.

    Weights depend only on the (X, Z, Y) slot counts, so the polynomial
    products are computed once per count profile and shared.
    """
    if code.is_qudit:
        raise ValueError("block enumeration needs a block code")
    marginals = qubit_marginals(spec)
    n = code.n_qubits
    profile_cache: dict[tuple[int, int, int], RationalPolynomial] = {}

    def profile_weight(nx: int, nz: int, ny: int) -> RationalPolynomial:
        key = (nx, nz, ny)
        if key not in profile_cache:
            profile_cache[key] = (
                marginals["X"] ** nx
                * marginals["Z"] ** nz
                * marginals["Y"] ** ny
                * marginals["I"] ** (n - nx - nz - ny)
            )
        return profile_cache[key]

    terms = []
    for a_bits in itertools.product((0, 1), repeat=n):
        for b_bits in itertools.product((0, 1), repeat=n):
            nx = sum(1 for x, z in zip(a_bits, b_bits) if x and not z)
            nz = sum(1 for x, z in zip(a_bits, b_bits) if z and not x)
            ny = sum(1 for x, z in zip(a_bits, b_bits) if x and z)
            terms.append(
                KrausTerm(QubitPauliString(0, a_bits, b_bits), profile_weight(nx, nz, ny))
            )
    return terms


@dataclass(frozen=True)
class DistributionReport:
    valid: bool
    total: float
    offending: tuple[str, ...]
    valid_p_max: float


def validate_distribution(
    terms: list[KrausTerm],
    point: dict | None = None,
    scan_resolution: float = 1e-4,
) -> DistributionReport:
    """Check weights lie in [0,1] and sum to 1 at the point; scan the p-domain.

    The scan substitutes the point's kappa and mu exactly, then sweeps p on a
    uniform grid to report the largest p below which every weight stays
    non-negative.  Report-only: nothing is clamped.
    """
    point = dict(point or {})
    p = float(point.get("p", 0.0))
    kappa = float(point.get("kappa", 1.0))
    mu = float(point.get("mu", 0.0))

    offending = []
    values = []
    for term in terms:
        value = term.weight.evaluate(p=p, kappa=kappa, mu=mu)
        values.append(value)
        if value < -1e-12 or value > 1 + 1e-12:
            offending.append(str(term.operator))
    total = math.fsum(values)
    valid = not offending and abs(total - 1.0) <= 1e-12

    grid = np.arange(0.0, 1.0 + scan_resolution, scan_resolution)
    valid_p_max = 1.0
    for weight in {term.weight for term in terms}:
        univariate = weight.substitute(kappa=Fraction(kappa), mu=Fraction(mu))
        coeffs = univariate.univariate_coefficients()
        values = np.polynomial.polynomial.polyval(grid, coeffs)
        negative = np.nonzero(values < -1e-12)[0]
        if negative.size:
            valid_p_max = min(valid_p_max, float(grid[negative[0] - 1]) if negative[0] else 0.0)
    return DistributionReport(valid, total, tuple(offending), valid_p_max)


def trace_preservation_check(
    terms: list[KrausTerm],
    code: StabilizerCode,
    points: list[dict] | None = None,
    tolerance: float = 1e-10,
) -> bool:
    """Sum_k pi_k A_k^dag A_k = I at sample points of the validity domain.

    Pauli monomials act as phase-permutations, so A^dag A is assembled from
    the permutation and phase arrays column-by-column; off-diagonal entries
    vanish structurally and the diagonal carries |phase|^2.
    """
    if points is None:
        rng = np.random.default_rng(2024)
        points = [
            {"p": float(p), "kappa": 1.0, "mu": 0.0} for p in rng.uniform(0.01, 0.2, size=5)
        ]
    dim = code.hilbert_dim
    for point in points:
        diag = np.zeros(dim)
        for term in terms:
            perm, phases = _phase_permutation(term.operator, dim)
            weight = term.weight.evaluate(**point)
            # (A^dag A)[i, j] = conj(phase_i) phase_j delta(perm_i = perm_j) = delta_ij |phase_i|^2
            if len(set(perm.tolist())) != dim:
                return False
            diag += weight * np.abs(phases) ** 2
        if not np.allclose(diag, 1.0, rtol=0.0, atol=tolerance):
            return False
    return True


def _phase_permutation(op: Pauli, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (perm, phase) with A|j> = phase[j] |perm[j]>."""
    indices = np.arange(dim)
    if isinstance(op, QuditPauli):
        if op.d != dim:
            raise ValueError("dimension mismatch")
        perm = (indices + op.x) % dim
        angles = (op.z * indices + op.phase) % dim
        phases = np.exp(2j * np.pi * angles / dim)
        return perm, phases
    n = op.n_qubits
    if dim != 2**n:
        raise ValueError("dimension mismatch")
    a_mask = int("".join(map(str, op.a)), 2)
    b_mask = int("".join(map(str, op.b)), 2)
    perm = indices ^ a_mask
    parities = np.bitwise_count(indices & b_mask) & 1
    phases = (1.0 - 2.0 * ((parities + op.sign) & 1)).astype(complex)
    return perm, phases


def completeness_polynomial(terms: list[KrausTerm]) -> RationalPolynomial:
    """Exact sum of all term weights; must equal the constant polynomial 1."""
    return poly_sum([term.weight for term in terms])
