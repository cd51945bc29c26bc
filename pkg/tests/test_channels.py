"""Channel enumerations: completeness, family reductions, distribution checks."""

import pytest

from weylcodes.channels import (
    ChannelSpec,
    KrausTerm,
    completeness_polynomial,
    enumerate_block_kraus,
    enumerate_qudit_kraus,
    qubit_marginals,
    shift_marginal,
    trace_preservation_check,
    validate_distribution,
)
from weylcodes.codes import build_code
from weylcodes.exactpoly import KAPPA, ONE, P
from weylcodes.paulialg import QuditPauli


@pytest.fixture(scope="module")
def codes():
    return {name: build_code(name) for name in ("d18", "d50", "five", "seven")}


def term_map(terms):
    return {t.operator: t.weight for t in terms}


# ------------------------------------------------------------------ marginals


def test_d18_zero_shift_marginal():
    assert shift_marginal(3, P)[0] == 1 - 2 * P - 2 * P**2 - P**3


def test_d50_zero_shift_marginal():
    assert shift_marginal(5, P)[0] == (
        1 - 2 * P - 2 * P**2 - 2 * P**3 - 2 * P**4 - P**5
    )


def test_marginal_sums_to_one():
    for r in (3, 5, 7):
        assert sum(shift_marginal(r, P).values(), -ONE) == 0


# ---------------------------------------------------------------- qudit terms


def test_qudit_class_counts(codes):
    assert len(enumerate_qudit_kraus(codes["d18"], ChannelSpec("symmetric"))) == 36
    assert len(enumerate_qudit_kraus(codes["d50"], ChannelSpec("symmetric"))) == 100


def test_completeness_identity_every_family(codes):
    for name in ("d18", "d50"):
        for family in ("symmetric", "asymmetric", "correlated"):
            terms = enumerate_qudit_kraus(codes[name], ChannelSpec(family))
            assert completeness_polynomial(terms) == ONE
    for name in ("five", "seven"):
        for family in ("symmetric", "asymmetric"):
            terms = enumerate_block_kraus(codes[name], ChannelSpec(family))
            assert completeness_polynomial(terms) == ONE


def test_class_1_minus_1_has_weight_p_squared(codes):
    terms = term_map(enumerate_qudit_kraus(codes["d18"], ChannelSpec("symmetric")))
    assert terms[QuditPauli(18, x=1, z=-1)] == P**2


def test_asymmetric_kappa_one_reduces_to_symmetric(codes):
    for name in ("d18", "d50"):
        sym = term_map(enumerate_qudit_kraus(codes[name], ChannelSpec("symmetric")))
        asym = enumerate_qudit_kraus(codes[name], ChannelSpec("asymmetric"))
        for term in asym:
            assert term.weight.substitute(kappa=1) == sym[term.operator]


def test_asymmetric_raises_shift_rate_to_shift_power(codes):
    terms = term_map(enumerate_qudit_kraus(codes["d18"], ChannelSpec("asymmetric")))
    assert terms[QuditPauli(18, x=2)] == (KAPPA * P) ** 2 * (1 - 2 * P - 2 * P**2 - P**3)


def test_correlated_mu_zero_is_symmetric_mu_one_is_diagonal(codes):
    for name in ("d18", "d50"):
        sym = term_map(enumerate_qudit_kraus(codes[name], ChannelSpec("symmetric")))
        corr = enumerate_qudit_kraus(codes[name], ChannelSpec("correlated"))
        for term in corr:
            assert term.weight.substitute(mu=0) == sym[term.operator]
            diagonal_only = term.weight.substitute(mu=1)
            if term.operator.x != term.operator.z:
                assert diagonal_only == 0
        diag_total = sum(
            (t.weight.substitute(mu=1) for t in corr if t.operator.x == t.operator.z),
            -ONE,
        )
        assert diag_total == 0


def test_qudit_enumeration_rejects_block_codes(codes):
    with pytest.raises(ValueError):
        enumerate_qudit_kraus(codes["five"], ChannelSpec("symmetric"))


# ---------------------------------------------------------------- block terms


def test_block_term_counts(codes):
    assert len(enumerate_block_kraus(codes["five"], ChannelSpec("symmetric"))) == 4**5
    assert len(enumerate_block_kraus(codes["seven"], ChannelSpec("symmetric"))) == 4**7


def test_five_qubit_weights_examples(codes):
    terms = enumerate_block_kraus(codes["five"], ChannelSpec("symmetric"))
    by_label = {t.operator.label(): t.weight for t in terms}
    assert by_label["IIIII"] == (1 - P) ** 10
    assert by_label["XIIII"] == P * (1 - P) ** 9
    assert by_label["YIIII"] == P**2 * (1 - P) ** 8
    assert by_label["ZIIII"] == P * (1 - P) ** 9


def test_block_asymmetric_marginals(codes):
    marg = qubit_marginals(ChannelSpec("asymmetric"))
    assert marg["I"] == (1 - KAPPA * P) * (1 - P)
    assert marg["X"] == KAPPA * P * (1 - P)
    assert marg["Z"] == (1 - KAPPA * P) * P
    assert marg["Y"] == KAPPA * P**2
    sym = enumerate_block_kraus(codes["five"], ChannelSpec("symmetric"))
    asym = enumerate_block_kraus(codes["five"], ChannelSpec("asymmetric"))
    for s, a in zip(sym, asym):
        assert a.weight.substitute(kappa=1) == s.weight


def test_block_rejects_correlated(codes):
    with pytest.raises(ValueError):
        enumerate_block_kraus(codes["five"], ChannelSpec("correlated"))
    with pytest.raises(ValueError):
        enumerate_block_kraus(codes["d18"], ChannelSpec("symmetric"))


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        ChannelSpec("depolarizing")


# ------------------------------------------------------------------ validation


def test_validate_at_p_zero(codes):
    terms = enumerate_qudit_kraus(codes["d18"], ChannelSpec("symmetric"))
    report = validate_distribution(terms, {"p": 0.0})
    assert report.valid and report.total == pytest.approx(1.0, abs=1e-12)


def test_validate_d18_positivity_bound(codes):
    # frozen: the root of 1 - 2p - 2p^2 - p^3 = 0 is ~0.35325
    terms = enumerate_qudit_kraus(codes["d18"], ChannelSpec("symmetric"))
    report = validate_distribution(terms, {"p": 0.1})
    assert report.valid
    assert report.valid_p_max == pytest.approx(0.3532, abs=2e-4)


def test_validate_d50_positivity_bound(codes):
    # frozen: the root of the d=50 zero-shift marginal is ~0.33525
    terms = enumerate_qudit_kraus(codes["d50"], ChannelSpec("symmetric"))
    report = validate_distribution(terms, {"p": 0.1})
    assert report.valid_p_max == pytest.approx(0.3352, abs=2e-4)


def test_validate_flags_kappa_p_above_one(codes):
    terms = enumerate_block_kraus(codes["five"], ChannelSpec("asymmetric"))
    report = validate_distribution(terms, {"p": 0.3, "kappa": 4.0})
    assert not report.valid
    assert report.offending


def test_trace_preservation(codes):
    for name, family in (("d18", "symmetric"), ("seven", "symmetric")):
        code = codes[name]
        enumerate_fn = enumerate_qudit_kraus if code.is_qudit else enumerate_block_kraus
        terms = enumerate_fn(code, ChannelSpec(family))
        assert trace_preservation_check(terms, code, [{"p": 0.1}, {"p": 0.01}])


def test_trace_preservation_negative_control(codes):
    code = codes["d18"]
    terms = enumerate_qudit_kraus(code, ChannelSpec("symmetric"))
    doubled = [KrausTerm(terms[5].operator, 2 * terms[5].weight)] + terms[6:] + terms[:5]
    assert not trace_preservation_check(doubled, code, [{"p": 0.1}])
