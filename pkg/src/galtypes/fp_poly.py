"""Polynomials over prime fields F_p and their factorization types.

Only the *degrees* of the irreducible factors are ever needed downstream, so the
factorizer here is plain distinct-degree factorization: for d = 1, 2, ... the
gcd of the remaining polynomial with x^(p^d) - x collects every irreducible
factor of degree exactly d.

Coefficient sequences are ascending (constant term first) and normalized, so the
zero polynomial is the empty tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import ModulusMismatchError, NotPrimeError, NotSquarefreeError
from .primes import is_prime

__all__ = [
    "FactorType",
    "ModPoly",
    "reduce_mod_p",
    "gcd_mod",
    "is_squarefree_mod",
    "distinct_degree_type",
]


class FactorType(tuple):
    """Multiset of positive integers, stored sorted ascending.

    Used for factorization types, cycle types and splitting types alike.

    >>> FactorType([2, 1])
    {1,2}
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted(int(k) for k in parts)
        if parts and parts[0] < 1:
            raise ValueError(f"factor type parts must be >= 1, got {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"

    __str__ = __repr__

    @classmethod
    def parse(cls, text: str) -> "FactorType":
        """Inverse of ``str``: accepts ``{1,2}``, ``[1, 2]`` or ``1,2``."""
        body = text.strip().strip("{}[]()")
        return cls(int(tok) for tok in body.replace(" ", ",").split(",") if tok)


# ---------------------------------------------------------------------------
# list-level kernels; everything below works on normalized ascending lists


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        coef = r[k] * inv % p
        if coef:
            q[k - db] = coef
            off = k - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - coef * b[j]) % p
    return _trim(q), _trim(r[:db])


def _mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    db = len(b) - 1
    if len(a) - 1 < db:
        return list(a)
    r = list(a)
    inv = pow(b[-1], -1, p)
    for k in range(len(r) - 1, db - 1, -1):
        coef = r[k] * inv % p
        if coef:
            off = k - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - coef * b[j]) % p
    return _trim(r[:db])


def _monic(a: Sequence[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    """base**e mod f by left-to-right square-and-multiply."""
    result = [1]
    base = _mod(base, f, p)
    for bit in bin(e)[2:]:
        result = _mod(_mul(result, result, p), f, p)
        if bit == "1":
            result = _mod(_mul(result, base, p), f, p)
    return result


def _derivative(a: Sequence[int], p: int) -> list[int]:
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _ddf_degrees(f: Sequence[int], p: int) -> list[int]:
    """Degrees of the irreducible factors of a monic squarefree ``f``."""
    parts: list[int] = []
    rem = list(f)
    h = [0, 1]
    d = 0
    while len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, rem, p)  # x^(p^d) mod rem
        g = _gcd(rem, _sub(h, [0, 1], p), p)
        dg = len(g) - 1
        if dg > 0:
            parts.extend([d] * (dg // d))
            rem, _ = _divmod(rem, g, p)
            h = _mod(h, rem, p)
    if len(rem) > 1:
        parts.append(len(rem) - 1)
    return parts


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModPoly:
    """Element of F_p[x]; ``coeffs`` ascending with no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        p = int(p)
        if not is_prime(p):
            raise NotPrimeError(f"modulus {p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % p for c in coeffs])))

    @classmethod
    def _raw(cls, p: int, coeffs: Sequence[int]) -> "ModPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "ModPoly":
        return ModPoly._raw(self.p, _monic(self.coeffs, self.p))

    def derivative(self) -> "ModPoly":
        return ModPoly._raw(self.p, _derivative(self.coeffs, self.p))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def _check(self, other: "ModPoly") -> None:
        if not isinstance(other, ModPoly):
            raise TypeError(f"expected ModPoly, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatchError(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        return ModPoly._raw(self.p, _add(self.coeffs, other.coeffs, self.p))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        return ModPoly._raw(self.p, _sub(self.coeffs, other.coeffs, self.p))

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        return ModPoly._raw(self.p, _mul(self.coeffs, other.coeffs, self.p))

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.p)
        return ModPoly._raw(self.p, q), ModPoly._raw(self.p, r)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def __str__(self) -> str:
        from .parsing import format_coeffs

        return f"{format_coeffs(self.coeffs)} (mod {self.p})"


def reduce_mod_p(c, p: int) -> ModPoly:
    """Reduce an integer polynomial (``IntPoly`` or ascending coefficients) mod ``p``."""
    coeffs = getattr(c, "coeffs", c)
    return ModPoly(p, coeffs)


def gcd_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd; ``gcd_mod(a, 0)`` is ``a`` made monic and ``gcd_mod(0, 0)`` is 0."""
    a._check(b)
    return ModPoly._raw(a.p, _gcd(a.coeffs, b.coeffs, a.p))


def is_squarefree_mod(c: ModPoly) -> bool:
    if c.is_zero():
        raise ValueError("the zero polynomial has no squarefree decomposition")
    g = _gcd(c.coeffs, _derivative(c.coeffs, c.p), c.p)
    return len(g) == 1


def distinct_degree_type(c: ModPoly) -> FactorType:
    """Degrees of the irreducible factors of a squarefree polynomial over F_p.

    Raises ``NotSquarefreeError`` if ``c`` has a repeated factor; constants give
    the empty type.
    """
    if not is_squarefree_mod(c):
        raise NotSquarefreeError(f"{c} is not squarefree")
    return FactorType(_ddf_degrees(_monic(c.coeffs, c.p), c.p))
