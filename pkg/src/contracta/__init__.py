"""Exact arithmetic for characters of contraction groups over Laurent series:
the self-duality pairing, dual shift actions, finite-field cocycles and their
central extensions, projective multipliers with their radicals, and the
Heisenberg group over F_p((t)).

Everything is integer-exact; verification sweeps live in `suites` and behind
the `contracta` command line.
"""

from .cocycles import CocycleSpec, check_cocycle_laws, eta, theta
from .errors import (
    ContractaError,
    DepthExceeded,
    InvalidParams,
    InvariantViolation,
    MixedModulus,
    MixedPrime,
    MixedShape,
    ParseError,
    SchemaError,
    UnknownSuite,
    UnsupportedOperands,
)
from .duality import (
    BlockElem,
    BlockSpec,
    EBlock,
    TBlock,
    chi_char,
    contraction_time,
    dual_action_E,
    dual_action_T,
    nonclosed_orbit_witness,
)
from .extensions import (
    ExtElem,
    derived_witness,
    ext_alpha,
    ext_commutator,
    ext_elem,
    ext_identity,
    ext_inv,
    ext_mul,
    predicted_monomial_commutator,
)
from .heisenberg import (
    HeisElem,
    OrbitDesc,
    heis_char,
    heis_dual_action,
    heis_elem,
    heis_identity,
    heis_inv,
    heis_mul,
    lau_div,
    n_slice,
    orbit_description,
)
from .laurent import (
    LaurentElem,
    lau_add,
    lau_monomial,
    lau_mul,
    lau_neg,
    lau_scale,
    lau_shift,
    lau_sub,
    lau_valuation,
    lau_zero,
    laurent,
    series_from_json,
    series_to_json,
    series_to_text,
    text_to_series,
)
from .multipliers import (
    MultiplierSpec,
    SOmegaReport,
    check_multiplier_axioms,
    h_omega,
    in_s_omega,
    mackey_identity_check,
    omega,
    omega2,
    omega2_closed_form,
    s_omega_window,
    tail_character_index,
    type_i_verdict,
)
from .padic import (
    PadicElem,
    PolyData,
    companion_matrix,
    contractivity_certificate,
    dual_companion,
    frac_part,
    int_part,
    padic,
    poly,
    psi_char,
)
from .scalars import (
    Modulus,
    TorusElem,
    gf_rank,
    is_prime,
    torus_from_fraction,
    torus_identity,
    torus_inv,
    torus_mul,
)
from .suites import run_suite, suite_names
from .sweep import window_elements, window_id

__version__ = "0.1.0"

__all__ = [
    "BlockElem",
    "BlockSpec",
    "CocycleSpec",
    "ContractaError",
    "DepthExceeded",
    "EBlock",
    "ExtElem",
    "HeisElem",
    "InvalidParams",
    "InvariantViolation",
    "LaurentElem",
    "MixedModulus",
    "MixedPrime",
    "MixedShape",
    "Modulus",
    "ParseError",
    "SchemaError",
    "UnknownSuite",
    "UnsupportedOperands",
    "MultiplierSpec",
    "OrbitDesc",
    "PadicElem",
    "PolyData",
    "SOmegaReport",
    "TBlock",
    "TorusElem",
    "check_cocycle_laws",
    "check_multiplier_axioms",
    "chi_char",
    "companion_matrix",
    "contraction_time",
    "contractivity_certificate",
    "derived_witness",
    "dual_action_E",
    "dual_action_T",
    "dual_companion",
    "eta",
    "ext_alpha",
    "ext_commutator",
    "ext_elem",
    "ext_identity",
    "ext_inv",
    "ext_mul",
    "frac_part",
    "gf_rank",
    "h_omega",
    "heis_char",
    "heis_dual_action",
    "heis_elem",
    "heis_identity",
    "heis_inv",
    "heis_mul",
    "in_s_omega",
    "int_part",
    "is_prime",
    "lau_add",
    "lau_div",
    "lau_monomial",
    "lau_mul",
    "lau_neg",
    "lau_scale",
    "lau_shift",
    "lau_sub",
    "lau_valuation",
    "lau_zero",
    "laurent",
    "mackey_identity_check",
    "n_slice",
    "nonclosed_orbit_witness",
    "omega",
    "omega2",
    "omega2_closed_form",
    "orbit_description",
    "padic",
    "poly",
    "predicted_monomial_commutator",
    "psi_char",
    "run_suite",
    "s_omega_window",
    "series_from_json",
    "series_to_json",
    "series_to_text",
    "suite_names",
    "tail_character_index",
    "text_to_series",
    "theta",
    "torus_from_fraction",
    "torus_identity",
    "torus_inv",
    "torus_mul",
    "type_i_verdict",
    "window_elements",
    "window_id",
]
