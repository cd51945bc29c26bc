"""Symbolic Pauli algebra checked against the dense matrix oracle."""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcodes.paulialg import (
    QubitPauliString,
    QuditPauli,
    commutation_phase,
    qubit_string_mul,
    qudit_pauli_mul,
    symplectic_product,
    symplectic_vector,
    weight,
)
from weylcodes.phasespace import dense_matrix

qudit_dims = st.sampled_from([2, 3, 5, 18, 50])


def qudit_paulis(d):
    return st.builds(
        QuditPauli,
        st.just(d),
        st.integers(0, d - 1),
        st.integers(0, d - 1),
        st.integers(0, d - 1),
    )


# ------------------------------------------------------------------ qudit side


def test_mul_recovers_qubit_anticommutation():
    z = QuditPauli(2, x=0, z=1)
    x = QuditPauli(2, x=1, z=0)
    zx = qudit_pauli_mul(z, x)
    # Z X = w^1 X Z = -XZ for d=2
    assert (zx.x, zx.z, zx.phase) == (1, 1, 1)


def test_mul_identity():
    e = QuditPauli(18, x=2, z=3, phase=5)
    assert qudit_pauli_mul(e, QuditPauli.identity(18)) == e
    assert qudit_pauli_mul(QuditPauli.identity(18), e) == e


def test_mul_d18_example_against_dense_oracle():
    e1 = QuditPauli(18, x=2, z=3)
    e2 = QuditPauli(18, x=1, z=2)
    product = qudit_pauli_mul(e1, e2)
    # frozen oracle value: moving Z^3 past X^1 costs w^3
    assert (product.x, product.z, product.phase) == (3, 5, 3)
    lhs = dense_matrix(e1, 18) @ dense_matrix(e2, 18)
    assert np.allclose(lhs, dense_matrix(product, 18), atol=1e-12)


def test_mul_rejects_dimension_mismatch():
    with pytest.raises(ValueError):
        qudit_pauli_mul(QuditPauli(2), QuditPauli(3))
    with pytest.raises(ValueError):
        commutation_phase(QuditPauli(2), QuditPauli(3))


@given(qudit_dims.flatmap(lambda d: st.tuples(qudit_paulis(d), qudit_paulis(d), qudit_paulis(d))))
@settings(max_examples=60, deadline=None)
def test_mul_associative(triple):
    e1, e2, e3 = triple
    assert qudit_pauli_mul(qudit_pauli_mul(e1, e2), e3) == qudit_pauli_mul(
        e1, qudit_pauli_mul(e2, e3)
    )


def test_mul_matches_dense_oracle_random_sample():
    rng = random.Random(20240917)
    for d in (2, 18, 50):
        for _ in range(50):
            e1 = QuditPauli(d, rng.randrange(d), rng.randrange(d), rng.randrange(d))
            e2 = QuditPauli(d, rng.randrange(d), rng.randrange(d), rng.randrange(d))
            product = qudit_pauli_mul(e1, e2)
            lhs = dense_matrix(e1, d) @ dense_matrix(e2, d)
            assert np.allclose(lhs, dense_matrix(product, d), atol=1e-11)


def test_commutation_phase_examples():
    d2x = QuditPauli(2, x=1)
    d2z = QuditPauli(2, z=1)
    assert commutation_phase(d2x, d2z) == 1
    assert commutation_phase(d2x, d2x) == 0
    # X^1 vs Z^6 at d=18: X Z^6 = w^{-6} Z^6 X, frozen from the dense commutator
    x1 = QuditPauli(18, x=1)
    z6 = QuditPauli(18, z=6)
    assert commutation_phase(x1, z6) == 12
    assert commutation_phase(z6, x1) == 6


@given(qudit_dims.flatmap(lambda d: st.tuples(qudit_paulis(d), qudit_paulis(d))))
@settings(max_examples=80, deadline=None)
def test_commutation_phase_antisymmetric_and_consistent(pair):
    e1, e2 = pair
    t = commutation_phase(e1, e2)
    assert (t + commutation_phase(e2, e1)) % e1.d == 0
    lhs = qudit_pauli_mul(e1, e2)
    rhs = qudit_pauli_mul(e2, e1)
    assert (lhs.x, lhs.z) == (rhs.x, rhs.z)
    assert (rhs.phase + t) % e1.d == lhs.phase


@given(qudit_dims.flatmap(qudit_paulis))
@settings(max_examples=60, deadline=None)
def test_dth_power_is_phase_times_identity(e):
    acc = QuditPauli.identity(e.d)
    for _ in range(e.d):
        acc = qudit_pauli_mul(acc, e)
    assert acc.x == 0 and acc.z == 0


def test_adjoint_inverts():
    e = QuditPauli(18, x=5, z=11, phase=7)
    assert qudit_pauli_mul(e.adjoint(), e) == QuditPauli.identity(18)
    assert qudit_pauli_mul(e, e.adjoint()) == QuditPauli.identity(18)


# ------------------------------------------------------------------ qubit side


def test_x_times_z_gives_y():
    x1 = QubitPauliString.single(5, 1, "X")
    z1 = QubitPauliString.single(5, 1, "Z")
    y1 = qubit_string_mul(x1, z1)
    assert y1 == QubitPauliString.single(5, 1, "Y")
    assert y1.sign == 0


def test_square_is_identity_up_to_sign():
    for label in ("XZZXI", "YIIIY", "IZYXI"):
        e = QubitPauliString.from_label(label)
        sq = qubit_string_mul(e, e)
        assert sq.a == (0,) * 5 and sq.b == (0,) * 5


def test_two_qubit_product_against_dense_oracle():
    e1 = QubitPauliString.from_label("XZ")
    e2 = QubitPauliString.from_label("ZX")
    product = qubit_string_mul(e1, e2)
    assert product.sign == 1
    assert product.a == (1, 1) and product.b == (1, 1)
    lhs = dense_matrix(e1, 4) @ dense_matrix(e2, 4)
    assert np.allclose(lhs, dense_matrix(product, 4), atol=1e-12)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.sampled_from("IXYZ"), min_size=n, max_size=n),
    st.lists(st.sampled_from("IXYZ"), min_size=n, max_size=n),
)))
@settings(max_examples=60, deadline=None)
def test_qubit_mul_matches_dense_oracle(args):
    n, l1, l2 = args
    e1 = QubitPauliString.from_label("".join(l1))
    e2 = QubitPauliString.from_label("".join(l2))
    product = qubit_string_mul(e1, e2)
    lhs = dense_matrix(e1, 2**n) @ dense_matrix(e2, 2**n)
    assert np.allclose(lhs, dense_matrix(product, 2**n), atol=1e-12)


def test_symplectic_vector_examples():
    assert symplectic_vector(QubitPauliString.single(5, 1, "X")) == (
        1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    )
    assert symplectic_vector(QubitPauliString.identity(5)) == (0,) * 10
    assert symplectic_vector(QubitPauliString.single(5, 3, "Y")) == (
        0, 0, 1, 0, 0, 0, 0, 1, 0, 0,
    )


def test_symplectic_product_examples():
    u = symplectic_vector(QubitPauliString.single(5, 1, "X"))
    v = symplectic_vector(QubitPauliString.single(5, 1, "Z"))
    assert symplectic_product(u, u) == 0
    assert symplectic_product(u, v) == 1
    g = symplectic_vector(QubitPauliString.from_label("XZZXI"))
    assert symplectic_product(u, g) == 0
    with pytest.raises(ValueError):
        symplectic_product(u, v[:-2])


def test_symplectic_product_detects_anticommutation_exhaustively():
    # all weight <= 2 strings on 4 qubits, checked against dense commutators
    singles = [(i, k) for i in range(1, 5) for k in "XYZ"]
    strings = [QubitPauliString.identity(4)]
    strings += [QubitPauliString.single(4, i, k) for i, k in singles]
    for (i1, k1), (i2, k2) in itertools.combinations(singles, 2):
        if i1 != i2:
            strings.append(
                qubit_string_mul(
                    QubitPauliString.single(4, i1, k1), QubitPauliString.single(4, i2, k2)
                )
            )
    mats = {e: dense_matrix(e, 16) for e in strings}
    for e1, e2 in itertools.product(strings, repeat=2):
        commutes = np.allclose(mats[e1] @ mats[e2], mats[e2] @ mats[e1], atol=1e-12)
        assert symplectic_product(symplectic_vector(e1), symplectic_vector(e2)) == (
            0 if commutes else 1
        )


def test_weight_examples():
    assert weight(QubitPauliString.identity(5)) == 0
    assert weight(QubitPauliString.from_label("XZZXI")) == 4
    assert weight(QubitPauliString.single(5, 2, "Y")) == 1


def test_label_round_trip_and_str():
    e = QubitPauliString.from_label("XYZIZ")
    assert e.label() == "XYZIZ"
    assert str(e) == "+X(11000)Z(01101)"
