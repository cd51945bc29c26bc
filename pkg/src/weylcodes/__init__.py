"""Exact simulator and verifier for qubit-into-qudit and block stabilizer codes
on Weyl channels, with entanglement fidelity as exact polynomials in
(p, kappa, mu)."""

from .channels import (
    ChannelSpec,
    KrausTerm,
    enumerate_block_kraus,
    enumerate_qudit_kraus,
    trace_preservation_check,
    validate_distribution,
)
from .codes import (
    StabilizerCode,
    build_code,
    build_five_qubit_code,
    build_qudit_code,
    build_seven_qubit_code,
    dual_codewords,
    reduce_to_class,
    syndrome,
)
from .correction import (
    RecoveryMap,
    build_recovery,
    correctable_set,
    decode,
    verify_kl,
)
from .exactpoly import (
    KAPPA,
    MU,
    P,
    RationalPolynomial,
    rational_reconstruct,
)
from .fidelity import (
    FidelityResult,
    analyse,
    crossover_kappa,
    effectiveness_threshold,
    effectiveness_threshold_bracket,
    entanglement_fidelity_polynomial,
    entanglement_fidelity_value,
    leading_order,
    scheme_fidelity_polynomial,
    threshold_report,
)
from .paulialg import (
    QubitPauliString,
    QuditPauli,
    commutation_phase,
    qubit_string_mul,
    qudit_pauli_mul,
    symplectic_product,
    symplectic_vector,
    weight,
)

__all__ = [
    "ChannelSpec",
    "FidelityResult",
    "KrausTerm",
    "KAPPA",
    "MU",
    "P",
    "analyse",
    "QubitPauliString",
    "QuditPauli",
    "RationalPolynomial",
    "RecoveryMap",
    "StabilizerCode",
    "build_code",
    "build_five_qubit_code",
    "build_qudit_code",
    "build_recovery",
    "build_seven_qubit_code",
    "commutation_phase",
    "correctable_set",
    "crossover_kappa",
    "decode",
    "dual_codewords",
    "effectiveness_threshold",
    "effectiveness_threshold_bracket",
    "entanglement_fidelity_polynomial",
    "entanglement_fidelity_value",
    "enumerate_block_kraus",
    "enumerate_qudit_kraus",
    "leading_order",
    "qubit_string_mul",
    "qudit_pauli_mul",
    "rational_reconstruct",
    "reduce_to_class",
    "scheme_fidelity_polynomial",
    "symplectic_product",
    "symplectic_vector",
    "syndrome",
    "threshold_report",
    "trace_preservation_check",
    "validate_distribution",
    "verify_kl",
    "weight",
]
