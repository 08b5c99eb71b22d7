"""Exact arithmetic in Z/p^n and in the p-power roots of unity inside the circle group."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, MixedModulus, MixedPrime


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvariantViolation(f"p must be prime, got {self.p}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvariantViolation(f"exponent n must be >= 1, got {self.n}")

    @property
    def card(self):
        return self.p ** self.n

    def scalar(self, value):
        return Scalar(self, value % self.card)

    def __str__(self):
        return f"{self.p}^{self.n}"


@dataclass(frozen=True)
class Scalar:
    modulus: Modulus
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.card:
            raise InvariantViolation(
                f"scalar value {self.value} out of range [0, {self.modulus.card})"
            )

    def _check(self, other):
        if self.modulus != other.modulus:
            raise MixedModulus(f"{self.modulus} vs {other.modulus}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.modulus, (self.value + other.value) % self.modulus.card)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.modulus, (self.value - other.value) % self.modulus.card)

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.modulus, (self.value * other.value) % self.modulus.card)

    def __neg__(self):
        return Scalar(self.modulus, -self.value % self.modulus.card)

    def is_zero(self):
        return self.value == 0

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class TorusElem:
    """The root of unity e^{2*pi*i*num/p^exp}, normalized so (num, exp) is unique."""

    p: int
    num: int
    exp: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvariantViolation(f"p must be prime, got {self.p}")
        if (self.num, self.exp) == (0, 0):
            return
        if self.exp < 1 or not 0 < self.num < self.p ** self.exp or self.num % self.p == 0:
            raise InvariantViolation(f"non-normal torus fraction {self.num}/{self.p}^{self.exp}")

    def is_identity(self):
        return self.num == 0

    @property
    def turns(self):
        return Fraction(self.num, self.p ** self.exp)

    def inv(self):
        return torus_from_fraction(-self.num, self.exp, self.p)

    def pow(self, k):
        return torus_from_fraction(self.num * k, self.exp, self.p)

    def as_text(self):
        if self.is_identity():
            return "1"
        return f"{self.num}/{self.p}^{self.exp}"

    def __str__(self):
        return self.as_text()


def torus_from_fraction(num, exp, p):
    """Normalize num/p^exp mod 1: reduce mod p^exp, then strip shared powers of p."""
    if exp < 0:
        raise InvariantViolation(f"exponent must be >= 0, got {exp}")
    num %= p ** exp
    while exp > 0 and num % p == 0:
        num //= p
        exp -= 1
    if num == 0:
        exp = 0
    return TorusElem(p, num, exp)


def torus_mul(a, b):
    if a.p != b.p:
        raise MixedPrime(f"p={a.p} vs p={b.p}")
    e = max(a.exp, b.exp)
    p = a.p
    num = a.num * p ** (e - a.exp) + b.num * p ** (e - b.exp)
    return torus_from_fraction(num, e, p)


def torus_inv(a):
    return a.inv()


TORUS_ONE = {}


def torus_identity(p):
    if p not in TORUS_ONE:
        TORUS_ONE[p] = TorusElem(p, 0, 0)
    return TORUS_ONE[p]


def gf_rank(rows, p):
    """Rank over Z/p of an integer matrix given as a list of rows."""
    rows = [[v % p for v in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = (rows[i][c] * inv) % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
