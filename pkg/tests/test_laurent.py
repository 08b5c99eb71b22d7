"""Canonical-form Laurent series: construction, arithmetic, text/JSON codecs."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contracta import (
    InvariantViolation,
    Modulus,
    ParseError,
    UnsupportedOperands,
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
from contracta.laurent import lau_equal_modulo_window

M2 = Modulus(2, 1)
M3 = Modulus(3, 1)
M4 = Modulus(2, 2)


def finite_series(modulus=M2, lo=-3, hi=4):
    """Strategy: a finitely supported element with exponents in [lo, hi)."""
    return st.dictionaries(
        st.integers(lo, hi - 1),
        st.integers(0, modulus.card - 1),
        max_size=hi - lo,
    ).map(lambda d: laurent(modulus, d))


def tailed_series(modulus=M2):
    """Strategy: an eventually-periodic element (possibly with finite head)."""
    return st.tuples(
        st.dictionaries(st.integers(-3, 2), st.integers(0, modulus.card - 1), max_size=4),
        st.integers(-1, 3),
        st.lists(st.integers(0, modulus.card - 1), min_size=1, max_size=3),
    ).map(lambda t: laurent(modulus, t[0], tail=(t[1], tuple(t[2]))))


# ---------------------------------------------------------------- construction

def test_zero_coefficients_are_dropped():
    x = laurent(M2, {0: 2, 1: 4, 5: 0})
    assert x.is_zero()
    assert x.valuation == math.inf


def test_coefficients_reduce_mod_card():
    x = laurent(M3, {0: 5, 1: -1})
    assert x.coeff(0) == 2
    assert x.coeff(1) == 2
    assert x.coeff(99) == 0


def test_tail_of_zeros_collapses():
    x = laurent(M2, {0: 1}, tail=(3, (0, 0)))
    assert not x.has_tail()
    assert x == lau_monomial(M2, 0, 1)


def test_tail_pattern_reduced_to_primitive_period():
    x = laurent(M2, {}, tail=(0, (1, 1)))
    y = laurent(M2, {}, tail=(0, (1,)))
    assert x == y
    assert len(x.tail[1]) == 1


def test_tail_absorbs_matching_head_coefficients():
    # 1*t^0 followed by the all-ones tail from 1 is the all-ones tail from 0
    x = laurent(M2, {0: 1}, tail=(1, (1,)))
    y = laurent(M2, {}, tail=(0, (1,)))
    assert x == y
    assert x.valuation == 0


def test_tail_merge_when_finite_support_overlaps():
    # an explicit entry inside the tail region overrides the pattern there
    x = laurent(M4, {2: 3}, tail=(1, (1,)))
    assert x.coeff(1) == 1
    assert x.coeff(2) == 3
    assert x.coeff(3) == 1
    assert x.coeff(100) == 1


def test_tail_merge_does_not_leave_zero_entries():
    # a zero-containing pattern must not deposit dead entries in the finite part
    x = laurent(M2, {0: 1, 2: 1}, tail=(-1, (0,)))
    assert x == laurent(M2, {0: 1, 2: 1})
    y = laurent(M2, {2: 1}, tail=(0, (1, 0)))
    assert all(c != 0 for _, c in y.finite)
    assert [y.coeff(i) for i in range(5)] == [1, 0, 1, 0, 1]


def test_strict_mode_rejects_overlap():
    with pytest.raises(InvariantViolation):
        laurent(M2, {2: 1}, tail=(1, (1,)), strict=True)


def test_non_integer_index_rejected():
    with pytest.raises(InvariantViolation):
        laurent(M2, {"0": 1})


@given(finite_series(M3))
def test_valuation_is_min_of_support(x):
    if x.is_zero():
        assert x.valuation == math.inf
    else:
        support = [i for i in range(-10, 10) if x.coeff(i)]
        assert x.valuation == min(support)
        assert x.support_max() == max(support)


# ---------------------------------------------------------------- arithmetic

def test_add_hand_values():
    one_plus_t = laurent(M2, {0: 1, 1: 1})
    assert lau_add(one_plus_t, one_plus_t).is_zero()
    a = laurent(M3, {0: 2})
    b = laurent(M3, {0: 2})
    assert lau_add(a, b) == laurent(M3, {0: 1})


def test_add_merges_two_tails():
    # per[1] from 0 plus per[1,0] from 0 has period lcm(1,2)=2: pattern (0,1)
    x = laurent(M2, {}, tail=(0, (1,)))
    y = laurent(M2, {}, tail=(0, (1, 0)))
    z = lau_add(x, y)
    assert z.has_tail()
    assert [z.coeff(i) for i in range(6)] == [0, 1, 0, 1, 0, 1]


def test_mul_freshman_dream():
    one_plus_t = laurent(M2, {0: 1, 1: 1})
    sq = lau_mul(one_plus_t, one_plus_t)
    assert sq == laurent(M2, {0: 1, 2: 1})


def test_mul_with_tail_telescopes():
    # (1 + t) * (1 + t + t^2 + ...) = 1 over F_2
    one_plus_t = laurent(M2, {0: 1, 1: 1})
    geom = laurent(M2, {}, tail=(0, (1,)))
    assert lau_mul(one_plus_t, geom) == lau_monomial(M2, 0, 1)
    assert lau_mul(geom, one_plus_t) == lau_monomial(M2, 0, 1)


def test_mul_two_tails_unsupported():
    geom = laurent(M2, {}, tail=(0, (1,)))
    with pytest.raises(UnsupportedOperands):
        lau_mul(geom, geom)


def test_shift_and_scale():
    x = laurent(M3, {-1: 2, 0: 1})
    assert lau_shift(x, 2) == laurent(M3, {1: 2, 2: 1})
    assert lau_scale(x, 2) == laurent(M3, {-1: 1, 0: 2})
    assert lau_scale(x, 0).is_zero()
    assert lau_valuation(lau_shift(x, 5)) == 4


def test_shift_moves_tail_start():
    # canonical form starts the tail as early as possible: per[1,0] from 1
    # is stored as per[0,1] from 0, and shifting translates the start
    x = laurent(M2, {}, tail=(1, (1, 0)))
    assert x.tail == (0, (0, 1))
    y = lau_shift(x, -3)
    assert y.tail == (-3, (0, 1))
    assert [y.coeff(i) for i in (-3, -2, -1, 0)] == [0, 1, 0, 1]


@given(finite_series(M3), finite_series(M3))
def test_add_commutes(x, y):
    assert lau_add(x, y) == lau_add(y, x)


@given(finite_series(M2), finite_series(M2), finite_series(M2))
def test_add_associates(x, y, z):
    assert lau_add(lau_add(x, y), z) == lau_add(x, lau_add(y, z))


@given(finite_series(M3))
def test_neg_cancels(x):
    assert lau_add(x, lau_neg(x)).is_zero()
    assert lau_sub(x, x).is_zero()


@given(finite_series(M3), finite_series(M3))
def test_mul_commutes_on_finite(x, y):
    assert lau_mul(x, y) == lau_mul(y, x)


@given(finite_series(M2), finite_series(M2), finite_series(M2))
def test_mul_distributes(x, y, z):
    lhs = lau_mul(x, lau_add(y, z))
    rhs = lau_add(lau_mul(x, y), lau_mul(x, z))
    assert lhs == rhs


@given(tailed_series(M2), finite_series(M2))
def test_tailed_add_agrees_coefficientwise(x, y):
    z = lau_add(x, y)
    for i in range(-6, 12):
        assert z.coeff(i) == (x.coeff(i) + y.coeff(i)) % 2


@given(tailed_series(M3))
def test_tailed_self_subtraction(x):
    assert lau_sub(x, x).is_zero()


def test_valuation_of_products_adds():
    x = lau_monomial(M3, 2, 2)
    y = lau_monomial(M3, -5, 1)
    assert lau_mul(x, y).valuation == -3


def test_equal_modulo_window():
    x = laurent(M2, {0: 1, 7: 1})
    y = laurent(M2, {0: 1})
    assert lau_equal_modulo_window(x, y, -2, 5)
    assert not lau_equal_modulo_window(x, y, -2, 8)


# ---------------------------------------------------------------- codecs

def test_text_hand_examples():
    assert series_to_text(lau_zero(M2)) == "0 @ p=2^1"
    x = laurent(M3, {-1: 2, 3: 1})
    assert series_to_text(x) == "2*t^-1 + 1*t^3 @ p=3^1"
    geom = laurent(M2, {}, tail=(0, (1,)))
    assert series_to_text(geom) == "per[1]*t^{>=0} @ p=2^1"


def test_parse_hand_examples():
    x = text_to_series("2*t^-1 + 1*t^3 @ p=3^1")
    assert x == laurent(M3, {-1: 2, 3: 1})
    y = text_to_series("1*t^0 + per[1,0]*t^{>=2} @ p=2^1")
    assert y.coeff(0) == 1 and y.coeff(2) == 1 and y.coeff(3) == 0 and y.coeff(4) == 1


def test_parse_rejects_malformed():
    for bad in ["", "1*t^ @ p=2^1", "1*t^0", "per[]*t^{>=0} @ p=2^1"]:
        with pytest.raises(ParseError):
            text_to_series(bad)
    # syntactically fine but the modulus itself is invalid
    with pytest.raises(InvariantViolation):
        text_to_series("1*t^0 @ p=4^1")


@given(finite_series(M4, -4, 5))
def test_text_round_trip_finite(x):
    assert text_to_series(series_to_text(x)) == x


@given(tailed_series(M3))
def test_text_round_trip_tailed(x):
    assert text_to_series(series_to_text(x)) == x


@given(tailed_series(M2))
def test_json_round_trip(x):
    assert series_from_json(series_to_json(x)) == x


def test_json_shape():
    x = laurent(M2, {0: 1}, tail=(2, (1,)))
    obj = series_to_json(x)
    assert obj["p"] == 2 and obj["n"] == 1
    assert obj["finite"] == {"0": 1}
    assert obj["tail"] == {"start": 2, "pattern": [1]}
