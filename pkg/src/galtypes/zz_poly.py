"""Exact arithmetic on integer polynomials.

Discriminants are computed from the resultant ``Res(c, c')`` obtained with the
fraction-free subresultant polynomial remainder sequence, so every intermediate
value is an exact Python integer.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exceptions import UnsupportedDegreeError
from .fp_poly import _ddf_degrees, _derivative as _mod_derivative, _gcd as _mod_gcd
from .primes import iter_primes

__all__ = [
    "IntPoly",
    "derivative",
    "resultant",
    "discriminant",
    "cauchy_root_bound",
    "IrreducibilityResult",
    "is_irreducible",
]


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending, no trailing zeros.

    >>> IntPoly.from_descending([1, 0, 0, -2])
    IntPoly('x^3 - 2')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) for c in coeffs])))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(list(coeffs)[::-1])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def descending(self) -> list[int]:
        return list(self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly(out)

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a monic divisor, exact over the integers."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        q, r = _divmod_monic(self.coeffs, divisor.coeffs)
        return IntPoly(q), IntPoly(r)

    def __str__(self) -> str:
        from .parsing import format_coeffs

        return format_coeffs(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def _divmod_monic(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        coef = r[k]
        if coef:
            q[k - db] = coef
            for j in range(db + 1):
                r[k - db + j] -= coef * b[j]
    return _trim(q), _trim(r[:db])


def derivative(c: IntPoly) -> IntPoly:
    return IntPoly(i * c.coeffs[i] for i in range(1, len(c.coeffs)))


# ---------------------------------------------------------------------------
# resultant and discriminant


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x]."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        coef = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= coef * b[j]
        _trim(r)
        e -= 1
    return [x * lb**e for x in r]


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) by the subresultant PRS (Collins; Cohen, Alg. 3.3.7)."""
    A, B = list(a.coeffs), list(b.coeffs)
    if not A or not B:
        return 0
    da, db = len(A) - 1, len(B) - 1
    s = 1
    if da < db:
        A, B, da, db = B, A, db, da
        if da % 2 and db % 2:
            s = -1
    if db == 0:
        return s * B[0] ** da
    ca, cb = _content(A), _content(B)
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = ca**db * cb**da
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        divisor = g * h**delta
        B = [x // divisor for x in R]
        g = A[-1]
        h = g**delta // h ** (delta - 1) if delta >= 1 else h
        if len(B) == 1:
            da = len(A) - 1
            h = B[0] ** da // h ** (da - 1) if da >= 1 else h
            return s * t * h


def discriminant(c: IntPoly) -> int:
    """(-1)^(n(n-1)/2) Res(c, c') / lc(c)."""
    n = c.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(c, derivative(c))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, c.leading)
    assert r == 0
    return q


def cauchy_root_bound(c: IntPoly) -> Fraction:
    """1 + max |c_i| / |lc| over the non-leading coefficients."""
    if c.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(c.leading)
    return 1 + Fraction(max(abs(x) for x in c.coeffs[:-1]), lead)


# ---------------------------------------------------------------------------
# irreducibility for degree <= 5


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    method: str  # "mod-p" | "search" | "trivial"
    prime: Optional[int] = None
    witness: Optional[IntPoly] = None
    searched: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.irreducible


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    ds = sorted(set(small + [n // d for d in small]))
    return [s * d for d in ds for s in (-1, 1)]


def factor_coefficient_bound(c: IntPoly) -> int:
    """2^n (1 + max|c_i|): bounds every coefficient of a monic integer factor of c."""
    return 2**c.degree * (1 + max(abs(x) for x in c.coeffs[:-1]))


def _factor_search(c: IntPoly) -> tuple[Optional[IntPoly], int]:
    """Exhaustive search for a monic factor of degree 1..n//2.

    The constant term of a monic factor divides c(0), which prunes the search;
    all other coefficients range over the full certified bound.
    """
    n = c.degree
    bound = factor_coefficient_bound(c)
    c0 = c.coeffs[0]
    tried = 0
    if c0 == 0:
        return IntPoly([0, 1]), 1
    consts = [d for d in _divisors(c0) if abs(d) <= bound]
    for d in range(1, n // 2 + 1):
        for b0 in consts:
            for middle in itertools.product(range(-bound, bound + 1), repeat=d - 1):
                f = (b0, *middle, 1)
                tried += 1
                _, r = _divmod_monic(c.coeffs, f)
                if not r:
                    return IntPoly(f), tried
    return None, tried


def is_irreducible(c: IntPoly, prime_budget: int = 50) -> IrreducibilityResult:
    """Decide irreducibility over Q of a monic integer polynomial of degree <= 5.

    The first ``prime_budget`` primes not dividing the discriminant are tried
    for a mod-p certificate (factorization type ``{n}``). Polynomials without
    one, x^4 + 1 being the classic example, fall back to an exhaustive bounded
    factor search.
    """
    n = c.degree
    if n > 5:
        raise UnsupportedDegreeError(f"irreducibility testing supports degree <= 5, got {n}")
    if not c.is_monic():
        raise ValueError("is_irreducible expects a monic polynomial")
    if n == 1:
        return IrreducibilityResult(True, "trivial")
    disc = discriminant(c)
    if disc != 0:
        tried = 0
        for p in iter_primes(10**7):
            if disc % p == 0:
                continue
            tried += 1
            if tried > prime_budget:
                break
            red = [x % p for x in c.coeffs]
            if len(_mod_gcd(red, _mod_derivative(red, p), p)) != 1:
                continue
            if _ddf_degrees(red, p) == [n]:
                return IrreducibilityResult(True, "mod-p", prime=p)
    witness, searched = _factor_search(c)
    if witness is not None:
        return IrreducibilityResult(False, "search", witness=witness, searched=searched)
    return IrreducibilityResult(True, "search", searched=searched)
