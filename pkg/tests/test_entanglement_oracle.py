"""Definition-level oracle: evolve a maximally entangled purification.

F is defined as <psi| (R o Lambda (x) id)(|psi><psi|) |psi> for the
purification |psi> = (|0_L>|0> + |1_L>|1>)/sqrt(2) with a two-level
reference.  This test builds that state, pushes the density matrix through
the channel Kraus terms and the recovery operators with dense matrix
algebra, and compares against the trace-engine value.  It is independent of
the |tr([R_k E_l]|_C)|^2 shortcut the engine uses.
"""

import numpy as np
import pytest

from weylcodes.channels import ChannelSpec, enumerate_qudit_kraus
from weylcodes.codes import build_code
from weylcodes.correction import build_recovery, correctable_set
from weylcodes.fidelity import (
    build_pipeline,
    entanglement_fidelity_value,
    scheme_fidelity_polynomial,
)
from weylcodes.phasespace import dense_matrix


def purification(code):
    dim = code.hilbert_dim
    psi = np.zeros(dim * 2, dtype=complex)
    psi += np.kron(code.codeword0.amplitudes, np.array([1.0, 0.0]))
    psi += np.kron(code.codeword1.amplitudes, np.array([0.0, 1.0]))
    return psi / np.sqrt(2.0)


def recovery_matrices(code, recovery):
    dim = code.hilbert_dim
    mats = []
    for entry in recovery.entries:
        r = np.outer(code.codeword0.amplitudes, entry.v0.amplitudes.conj())
        r += np.outer(code.codeword1.amplitudes, entry.v1.amplitudes.conj())
        mats.append(r)
    return mats


def fidelity_from_definition(code, terms, recovery, point):
    dim = code.hilbert_dim
    psi = purification(code)
    rho = np.outer(psi, psi.conj())
    eye_ref = np.eye(2)

    after_noise = np.zeros_like(rho)
    for term in terms:
        a = np.kron(dense_matrix(term.operator, dim), eye_ref)
        weight = term.weight.evaluate(**point)
        after_noise += weight * (a @ rho @ a.conj().T)

    after_recovery = np.zeros_like(rho)
    for r in recovery_matrices(code, recovery):
        rk = np.kron(r, eye_ref)
        after_recovery += rk @ after_noise @ rk.conj().T

    return float(np.real(psi.conj() @ after_recovery @ psi))


@pytest.mark.parametrize(
    "family,point",
    [
        ("symmetric", {"p": 0.08, "kappa": 1.0, "mu": 0.0}),
        ("asymmetric", {"p": 0.05, "kappa": 1.7, "mu": 0.0}),
        ("correlated", {"p": 0.08, "kappa": 1.0, "mu": 0.6}),
    ],
)
def test_d18_engine_matches_density_matrix_evolution(family, point):
    # full class enumeration: the engine value IS the entanglement fidelity
    code = build_code("d18")
    terms = enumerate_qudit_kraus(code, ChannelSpec(family))
    recovery = build_recovery(code, correctable_set(code))
    from_definition = fidelity_from_definition(code, terms, recovery, point)
    from_engine = entanglement_fidelity_value(code, terms, recovery, point)
    assert from_engine == pytest.approx(from_definition, abs=1e-12)
    assert scheme_fidelity_polynomial("d18", family).evaluate(**point) == pytest.approx(
        from_definition, abs=1e-12
    )


def test_five_credited_terms_match_density_matrix_evolution():
    # same identity over the credited sublist (a substochastic truncation)
    pipeline = build_pipeline("five", "symmetric")
    point = {"p": 0.03, "kappa": 1.0, "mu": 0.0}
    from_definition = fidelity_from_definition(
        pipeline.code, pipeline.analysed_terms, pipeline.recovery, point
    )
    from_engine = entanglement_fidelity_value(
        pipeline.code, pipeline.analysed_terms, pipeline.recovery, point
    )
    assert from_engine == pytest.approx(from_definition, abs=1e-12)
