"""Shift-pairing cocycles on mod-p Laurent series.

theta(n, x, y) pairs each coefficient of x with the coefficient n slots up in
y.  A cocycle spec selects a finite set of shifts; eta sums the corresponding
pairings, with the n-th one translated by t^n.  Everything here lives over
C_p (exponent-one coefficients): the pairing is only a cocycle there.
"""

import numpy as np
from dataclasses import dataclass

from .errors import (
    InvariantViolation,
    MixedModulus,
    MixedPrime,
    SchemaError,
    UnsupportedOperands,
)
from .laurent import laurent, lau_add, lau_shift, series_to_text
from .scalars import Modulus, is_prime
from .sweep import window_elements


@dataclass(frozen=True)
class CocycleSpec:
    """A prime together with the finite set of shifts entering eta."""

    p: int
    support: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvariantViolation(f"p must be prime, got {self.p}")
        supp = tuple(sorted(set(self.support)))
        for n in supp:
            if not isinstance(n, int) or n < 1:
                raise InvariantViolation(f"support entries must be integers >= 1, got {n!r}")
        object.__setattr__(self, "support", supp)

    @classmethod
    def from_prefix(cls, p, word):
        """Build a spec from a 0/1 indicator word over shifts 1, 2, ..., len(word).

        Accepts a string like "1011" or any iterable of 0/1 values.
        """
        bits = [int(ch) for ch in word]
        if any(b not in (0, 1) for b in bits):
            raise InvariantViolation(f"indicator word must be over {{0,1}}, got {word!r}")
        return cls(p, tuple(n + 1 for n, b in enumerate(bits) if b))

    @property
    def modulus(self):
        return Modulus(self.p, 1)

    def indicator(self, n: int) -> int:
        return 1 if n in self.support else 0

    @property
    def max_shift(self):
        return max(self.support) if self.support else 0

    @property
    def min_shift(self):
        if not self.support:
            raise InvariantViolation("empty support has no minimal shift")
        return self.support[0]


def cocycle_to_json(spec):
    return {"p": spec.p, "support": list(spec.support)}


def cocycle_from_json(data):
    if not isinstance(data, dict) or set(data) != {"p", "support"}:
        raise SchemaError(f"cocycle spec needs exactly keys p, support, got {data!r}")
    if not isinstance(data["p"], int) or isinstance(data["p"], bool):
        raise SchemaError(f"p must be an integer, got {data['p']!r}")
    supp = data["support"]
    if not isinstance(supp, list) or any(isinstance(n, bool) or not isinstance(n, int) for n in supp):
        raise SchemaError(f"support must be a list of integers, got {supp!r}")
    return CocycleSpec(data["p"], tuple(supp))


def theta(n, x, y):
    """The n-shift pairing: coefficient i is x_i * y_{i+n}.

    x must be finitely supported; y may carry a periodic tail.
    """
    if n < 1:
        raise InvariantViolation(f"shift must be >= 1, got {n}")
    if x.modulus != y.modulus:
        raise MixedModulus(f"{x.modulus} vs {y.modulus}")
    if x.has_tail():
        raise UnsupportedOperands("first pairing argument must be finitely supported")
    return laurent(x.modulus, {i: c * y.coeff(i + n) for i, c in x.finite})


def eta(spec, x, y):
    """Sum over the spec's shifts n of t^n * theta(2n, x, y)."""
    if x.modulus != y.modulus:
        raise MixedModulus(f"{x.modulus} vs {y.modulus}")
    if x.modulus.p != spec.p:
        raise MixedPrime(f"series over p={x.modulus.p}, cocycle over p={spec.p}")
    if x.modulus.n != 1:
        raise UnsupportedOperands("cocycles are defined over exponent-one coefficients only")
    acc = laurent(x.modulus, {})
    for n in spec.support:
        acc = lau_add(acc, lau_shift(theta(2 * n, x, y), n))
    return acc


def _law_report(name, status, cx=None):
    return {"law": name, "status": status, "counterexample": cx}


def check_cocycle_laws(spec, lo, hi):
    """Exhaustively verify the cocycle laws on the window W(lo, hi).

    Checks two-sided additivity, shift equivariance, and the cocycle identity
    over every pair / triple from the window.  Returns a JSON-ready report with
    the first counterexample (in enumeration order) when a law fails.
    """
    modulus = spec.modulus
    p = spec.p
    elems = window_elements(modulus, lo, hi)
    size = len(elems)
    width = hi - lo

    # eta values on the window live inside [lo+1, hi-1+max_shift]
    e_lo = lo + 1
    e_width = max(1, width + spec.max_shift - 1)

    digits = np.zeros((size, width), dtype=np.int64)
    for i in range(size):
        code = i
        for k in range(width):
            code, digits[i, k] = divmod(code, p)
    powers = p ** np.arange(width, dtype=np.int64)
    add_id = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers

    eta_tab = np.zeros((size, size, e_width), dtype=np.uint8)
    equiv_cx = None
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            e = eta(spec, x, y)
            for idx, c in e.finite:
                eta_tab[i, j, idx - e_lo] = c
            if equiv_cx is None:
                shifted = eta(spec, lau_shift(x, 1), lau_shift(y, 1))
                if shifted != lau_shift(e, 1):
                    equiv_cx = {
                        "x": series_to_text(x),
                        "y": series_to_text(y),
                        "lhs": series_to_text(shifted),
                        "rhs": series_to_text(lau_shift(e, 1)),
                    }

    laws = []

    # additivity in each slot: eta(x+x', y) and eta(x, y+y') split termwise
    lhs = eta_tab[add_id]  # [i, i2, j]
    rhs = (eta_tab[:, None, :, :] + eta_tab[None, :, :, :]) % p
    bad = lhs != rhs
    cx = None
    if bad.any():
        i, i2, j = (int(v) for v in np.argwhere(bad)[0][:3])
        cx = {
            "x": series_to_text(elems[i]),
            "x2": series_to_text(elems[i2]),
            "y": series_to_text(elems[j]),
            "lhs": series_to_text(eta(spec, lau_add(elems[i], elems[i2]), elems[j])),
            "rhs": series_to_text(
                lau_add(eta(spec, elems[i], elems[j]), eta(spec, elems[i2], elems[j]))
            ),
        }
    laws.append(_law_report("additivity-first", "fail" if cx else "pass", cx))

    lhs = eta_tab[:, add_id]  # [i, j, j2]
    rhs = (eta_tab[:, :, None, :] + eta_tab[:, None, :, :]) % p
    bad = lhs != rhs
    cx = None
    if bad.any():
        i, j, j2 = (int(v) for v in np.argwhere(bad)[0][:3])
        cx = {
            "x": series_to_text(elems[i]),
            "y": series_to_text(elems[j]),
            "y2": series_to_text(elems[j2]),
            "lhs": series_to_text(eta(spec, elems[i], lau_add(elems[j], elems[j2]))),
            "rhs": series_to_text(
                lau_add(eta(spec, elems[i], elems[j]), eta(spec, elems[i], elems[j2]))
            ),
        }
    laws.append(_law_report("additivity-second", "fail" if cx else "pass", cx))

    laws.append(_law_report("shift-equivariance", "fail" if equiv_cx else "pass", equiv_cx))

    # eta(x,y) + eta(x+y,z) == eta(x,y+z) + eta(y,z) over all triples
    lhs = (eta_tab[:, :, None, :] + eta_tab[add_id]) % p
    rhs = (eta_tab[:, add_id] + eta_tab[None, :, :, :]) % p
    bad = lhs != rhs
    cx = None
    if bad.any():
        i, j, k = (int(v) for v in np.argwhere(bad)[0][:3])
        x, y, z = elems[i], elems[j], elems[k]
        cx = {
            "x": series_to_text(x),
            "y": series_to_text(y),
            "z": series_to_text(z),
            "lhs": series_to_text(lau_add(eta(spec, x, y), eta(spec, lau_add(x, y), z))),
            "rhs": series_to_text(lau_add(eta(spec, x, lau_add(y, z)), eta(spec, y, z))),
        }
    laws.append(_law_report("cocycle-identity", "fail" if cx else "pass", cx))

    failed = [l for l in laws if l["status"] == "fail"]
    return {
        "cocycle": cocycle_to_json(spec),
        "window": [lo, hi],
        "pairs_checked": size * size,
        "triples_checked": size * size * size,
        "laws": laws,
        "pass": not failed,
    }
