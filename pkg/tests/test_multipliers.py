"""Projective multipliers: axioms, the skew pairing, its radical, the verdict."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contracta import (
    CocycleSpec,
    Modulus,
    MultiplierSpec,
    check_multiplier_axioms,
    h_omega,
    in_s_omega,
    lau_add,
    lau_monomial,
    laurent,
    mackey_identity_check,
    omega,
    omega2,
    omega2_closed_form,
    s_omega_window,
    tail_character_index,
    torus_from_fraction,
    torus_inv,
    torus_mul,
    type_i_verdict,
)
from contracta.errors import WitnessWindowTooSmall

M2 = Modulus(2, 1)
M3 = Modulus(3, 1)

# simple pole index: z = t^-1 over F_2, support {1}
POLE = MultiplierSpec(CocycleSpec(2, (1,)), lau_monomial(M2, -1, 1))
# tail index: z = sum of t^j for j >= 1
TAIL = MultiplierSpec(CocycleSpec(2, (1,)), tail_character_index(2, 1))
THREE = MultiplierSpec(CocycleSpec(3, (1, 2)), lau_monomial(M3, -1, 2))


def finite_series(modulus=M2, lo=-2, hi=3):
    return st.dictionaries(
        st.integers(lo, hi - 1),
        st.integers(0, modulus.card - 1),
        max_size=hi - lo,
    ).map(lambda d: laurent(modulus, d))


def test_omega_reference_value():
    # the running example: omega(1, t^2) picks up chi_{t^-1}(t) = 1/2
    one = lau_monomial(M2, 0, 1)
    t2 = lau_monomial(M2, 2, 1)
    assert omega(POLE, one, t2).turns == Fraction(1, 2)
    assert omega(POLE, t2, one).is_identity()
    assert omega2(POLE, one, t2).turns == Fraction(1, 2)


def test_omega_identity_slots():
    zero = laurent(M2, {})
    x = laurent(M2, {0: 1, 1: 1})
    assert omega(POLE, x, zero).is_identity()
    assert omega(POLE, zero, x).is_identity()


@given(finite_series(M2, -2, 3), finite_series(M2, -2, 3))
def test_omega2_two_paths_agree(x, y):
    assert omega2(POLE, x, y) == omega2_closed_form(POLE, x, y)


@given(finite_series(M3, -2, 2), finite_series(M3, -2, 2))
def test_omega2_two_paths_agree_p3(x, y):
    assert omega2(THREE, x, y) == omega2_closed_form(THREE, x, y)


@given(finite_series(M2, -1, 3), finite_series(M2, -1, 3), finite_series(M2, -1, 3))
def test_omega2_bicharacter(x, y, z):
    lhs = omega2(POLE, lau_add(x, y), z)
    rhs = torus_mul(omega2(POLE, x, z), omega2(POLE, y, z))
    assert lhs == rhs


@given(finite_series(M2, -1, 3), finite_series(M2, -1, 3))
def test_omega2_skew(x, y):
    assert omega2(POLE, x, y) == torus_inv(omega2(POLE, y, x))
    assert omega2(POLE, x, x).is_identity()


def test_multiplier_axioms_report():
    rep = check_multiplier_axioms(POLE, -1, 2)
    assert rep["pass"] is True
    assert rep["m1"] == "pass" and rep["m2"] == "pass"
    assert rep["elements"] == 8
    assert rep["triples_checked"] == 512


def test_mackey_identity_direct_and_table_agree():
    direct = mackey_identity_check(TAIL, -1, 2, method="direct")
    table = mackey_identity_check(TAIL, -1, 2, method="table")
    assert direct["pass"] is True
    assert table["pass"] is True
    assert direct["pairs_checked"] == table["pairs_checked"]


# ------------------------------------------------------------- the radical

def test_h_omega_frozen_values():
    # for the tail index starting at 1 with support {1}
    assert h_omega(TAIL, lau_monomial(M2, 0, 1)) == lau_monomial(M2, 2, 1)
    assert h_omega(TAIL, lau_monomial(M2, -1, 1)) == lau_monomial(M2, 3, 1)
    assert h_omega(TAIL, lau_monomial(M2, 1, 1)).is_zero()
    assert h_omega(TAIL, laurent(M2, {})).is_zero()


def test_in_s_omega_matches_h_omega():
    assert in_s_omega(TAIL, lau_monomial(M2, 1, 1))
    assert not in_s_omega(TAIL, lau_monomial(M2, 0, 1))


@given(finite_series(M2, -2, 3))
def test_h_omega_is_the_omega2_profile(x):
    # chi_{h(x)} reproduces omega2(x, .) against every monomial probe
    from contracta import chi_char

    h = h_omega(TAIL, x)
    for j in range(-4, 4):
        probe = lau_monomial(M2, j, 1)
        assert chi_char(h, probe) == omega2(TAIL, x, probe)


def test_s_omega_window_frozen_members():
    members = s_omega_window(TAIL, (-2, 3), (-4, 3))
    texts = sorted(x.as_text() for x in members)
    assert texts == [
        "0 @ p=2^1",
        "1*t^1 + 1*t^2 @ p=2^1",
        "1*t^1 @ p=2^1",
        "1*t^2 @ p=2^1",
    ]


def test_s_omega_window_agrees_with_literal_double_loop():
    from contracta import window_elements

    members = s_omega_window(TAIL, (-1, 2), (-3, 2))
    brute = {
        x
        for x in window_elements(M2, -1, 2)
        if all(
            omega2(TAIL, x, y).is_identity()
            for y in window_elements(M2, -3, 2)
        )
    }
    assert members == brute


def test_s_omega_window_rejects_short_witness_window():
    with pytest.raises(WitnessWindowTooSmall):
        s_omega_window(TAIL, (-2, 3), (-3, 3))


def test_s_omega_members_agree_with_exact_membership():
    members = s_omega_window(TAIL, (-2, 3), (-4, 3))
    from contracta import window_elements

    for x in window_elements(M2, -2, 3):
        assert (x in members) == in_s_omega(TAIL, x)


# ------------------------------------------------------------- the verdict

def test_type_i_verdict_frozen():
    rep = type_i_verdict(TAIL, 12)
    data = rep.to_json()
    assert data["verdict"] == "NotTypeI_witnessed"
    assert data["K"] == 0
    assert len(data["witnesses"]) == 13
    assert data["witnesses"][0] == {"q": 0, "h_image": "1*t^2 @ p=2^1"}
    assert data["witnesses"][1] == {"q": -1, "h_image": "1*t^3 @ p=2^1"}


def test_verdict_witnesses_are_independent_nonmembers():
    rep = type_i_verdict(TAIL, 12)
    for entry in rep.to_json()["witnesses"]:
        x = lau_monomial(M2, entry["q"], 1)
        assert not in_s_omega(TAIL, x)


def test_displayed_witness_value():
    # x = c*t^q with q at the radical boundary, y = a*t^{q-2*max(S)}:
    # omega2(y, x) realizes exactly a*c / p turns
    p = 3
    spec = MultiplierSpec(CocycleSpec(p, (1,)), tail_character_index(p, 1))
    q = 0  # boundary: max(S) - k0 = 0
    for a in range(1, p):
        for c in range(1, p):
            x = lau_monomial(M3, q, c)
            y = lau_monomial(M3, q - 2, a)
            got = omega2(spec, y, x)
            assert got == torus_from_fraction(a * c, 1, p)
            assert omega2(spec, x, y) == torus_inv(got)
