"""Certified upper bound for the discriminant of the splitting field.

The chain, for a monic c of degree n with roots a_1..a_n:

* every root satisfies |a_i| <= B_c (Cauchy bound);
* some beta = a_1 + z_2 a_2 + ... + z_n a_n with integers |z_i| < (n!)^2/2
  generates the splitting field, so every conjugate of beta has modulus at most
  B_beta = B_c (1 + (n-1)(n!)^2/2);
* the minimal polynomial h of beta has degree m <= n!, and
  |disc(h)| = prod_{i<j} |beta_i - beta_j|^2 <= (2 ceil(B_beta))^(m(m-1));
* the field discriminant d_L divides disc(h).

A prime with any prescribed Frobenius class exists below 2 d_L^A, where A is an
absolute but unspecified constant; it is therefore a parameter here.

For small n the module can also build the integer matrix of multiplication by
beta on the monomials a_1^i1 ... a_n^in (0 <= i_j < n) and take its exact
characteristic polynomial, which has beta as a root.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exceptions import ReducibleError, UnsupportedDegreeError
from .primes import is_prime
from .zz_poly import IntPoly, cauchy_root_bound, is_irreducible

__all__ = [
    "BoundReport",
    "compute_bound_chain",
    "build_beta_matrix",
    "charpoly",
    "beta_residual",
    "verify_beta_root",
]

EXACT_BITS_LIMIT = 10**6
MAX_MATRIX_DEGREE = 4


@dataclass(frozen=True)
class BoundReport:
    n: int
    root_bound: Fraction
    z_bound: Fraction
    beta_bound: Fraction
    h_degree_bound: int
    disc_bound_base: int
    disc_bound_exponent: int
    disc_bound: Optional[int]  # None when the exact value would exceed EXACT_BITS_LIMIT bits
    A: Optional[Fraction] = None

    @property
    def disc_bound_log2(self) -> float:
        return self.disc_bound_exponent * math.log2(self.disc_bound_base)

    @property
    def prime_bound_log2(self) -> Optional[float]:
        """log2 of 2 * disc_bound^A, or None while A is unset."""
        if self.A is None:
            return None
        return 1 + float(self.A) * self.disc_bound_log2

    def prime_bound_expression(self) -> str:
        if self.A is None:
            return f"1 + A * {self.disc_bound_log2:.6f}"
        return f"{self.prime_bound_log2:.6f}"


def _require_irreducible(c: IntPoly) -> None:
    # irreducibility is only decidable here up to degree 5; larger inputs are taken on trust
    if c.degree <= 5:
        res = is_irreducible(c)
        if not res.irreducible:
            raise ReducibleError(f"{c} is reducible (factor {res.witness})", witness=res.witness)


def compute_bound_chain(c: IntPoly, A=None) -> BoundReport:
    n = c.degree
    if n < 2:
        raise UnsupportedDegreeError("the bound chain needs degree >= 2")
    if not c.is_monic():
        raise ValueError("the bound chain expects a monic polynomial")
    _require_irreducible(c)
    if A is not None:
        A = Fraction(A)
        if A <= 0:
            raise ValueError("A must be positive")
    root_bound = cauchy_root_bound(c)
    z_bound = Fraction(math.factorial(n) ** 2, 2)
    beta_bound = root_bound * (1 + (n - 1) * z_bound)
    m = math.factorial(n)
    base = 2 * math.ceil(beta_bound)
    exponent = m * (m - 1)
    exact = base**exponent if exponent * base.bit_length() <= EXACT_BITS_LIMIT else None
    return BoundReport(n, root_bound, z_bound, beta_bound, m, base, exponent, exact, A)


# ---------------------------------------------------------------------------
# multiplication-by-beta matrix


def build_beta_matrix(c: IntPoly, z: Sequence[int]) -> list[list[int]]:
    """Integer matrix M with beta * G = M G on the monomial basis G.

    The basis is {a_1^i1 ... a_n^in : 0 <= i_j < n} in lexicographic order of
    the exponent vectors; row k expands beta times the k-th monomial.
    """
    n = c.degree
    if n > MAX_MATRIX_DEGREE:
        raise UnsupportedDegreeError(f"beta matrix is limited to n <= {MAX_MATRIX_DEGREE} (dimension n^n)")
    if n < 1 or not c.is_monic():
        raise ValueError("beta matrix needs a monic polynomial of degree >= 1")
    _require_irreducible(c)
    z = [int(v) for v in z]
    if len(z) != n - 1:
        raise ValueError(f"need {n - 1} multipliers, got {len(z)}")
    limit = Fraction(math.factorial(n) ** 2, 2)
    if any(abs(v) >= limit for v in z):
        raise ValueError(f"multipliers must satisfy |z_i| < {limit}")
    weights = [1] + z
    basis = list(itertools.product(range(n), repeat=n))
    index = {v: k for k, v in enumerate(basis)}
    low = c.coeffs[:-1]  # a^n = -sum_k low[k] a^k
    M = [[0] * len(basis) for _ in basis]
    for row, v in enumerate(basis):
        for j, w in enumerate(weights):
            if w == 0:
                continue
            if v[j] < n - 1:
                u = v[:j] + (v[j] + 1,) + v[j + 1 :]
                M[row][index[u]] += w
            else:
                for k, a in enumerate(low):
                    if a:
                        u = v[:j] + (k,) + v[j + 1 :]
                        M[row][index[u]] -= w * a
    return M


# ---------------------------------------------------------------------------
# exact characteristic polynomial: Hessenberg reduction mod word-sized primes + CRT

_MODULUS_BITS = 26  # products of two residues stay < 2^52; sums of 256 of them < 2^60


def _charpoly_mod(M: np.ndarray, p: int) -> list[int]:
    N = M.shape[0]
    H = M % p
    for m in range(1, N - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m], :] = H[[m, i], :]
            H[:, [i, m]] = H[:, [m, i]]
        tinv = pow(int(H[m, m - 1]), -1, p)
        u = H[m + 1 :, m - 1] * tinv % p
        if not u.any():
            continue
        H[m + 1 :, :] = (H[m + 1 :, :] - (u[:, None] * H[m, :][None, :]) % p) % p
        H[:, m] = (H[:, m] + H[:, m + 1 :] @ u) % p
    # p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    P = np.zeros((N + 1, N + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, N + 1):
        col = m - 1
        prev = P[m - 1]
        cur = np.zeros(N + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - int(H[col, col]) * prev) % p
        if m > 1:
            coefs = np.zeros(m - 1, dtype=np.int64)
            prod = 1
            for i in range(m - 1, 0, -1):  # 1-based row i, multiplier uses rows i+1..m
                prod = prod * int(H[i, i - 1]) % p
                coefs[i - 1] = int(H[i - 1, col]) * prod % p
            cur = (cur - (coefs @ P[: m - 1]) % p) % p
        P[m] = cur
    return [int(v) for v in P[N]]


def _word_primes(count_bits: int):
    q = (1 << _MODULUS_BITS) - 1
    got = 0
    while got < count_bits:
        q -= 2
        if is_prime(q):
            got += q.bit_length() - 1
            yield q


def charpoly(M: Sequence[Sequence[int]]) -> IntPoly:
    """Exact characteristic polynomial det(xI - M) of an integer matrix."""
    N = len(M)
    if N == 0:
        return IntPoly([1])
    if any(len(row) != N for row in M):
        raise ValueError("matrix must be square")
    R = max(sum(abs(int(x)) for x in row) for row in M)
    # every eigenvalue is at most R in modulus (Gershgorin)
    bound = max(math.comb(N, k) * R**k for k in range(N + 1))
    A = np.array([[int(x) for x in row] for row in M], dtype=object)
    residues, moduli = [], []
    for p in _word_primes((2 * bound + 1).bit_length() + 1):
        Ap = np.array(A % p, dtype=np.int64)
        residues.append(_charpoly_mod(Ap, p))
        moduli.append(p)
    coeffs = residues[0]
    modulus = moduli[0]
    for r, p in zip(residues[1:], moduli[1:]):
        inv = pow(modulus, -1, p)
        coeffs = [a + modulus * ((b - a) * inv % p) for a, b in zip(coeffs, r)]
        modulus *= p
    half = modulus // 2
    return IntPoly(a - modulus if a > half else a for a in coeffs)


# ---------------------------------------------------------------------------
# numerical cross-check


def beta_residual(c: IntPoly, z: Sequence[int], k: IntPoly, dps: int = 60) -> float:
    """Relative residual |k(beta)| / sum |k_i| max(1, |beta|)^i at high precision."""
    import mpmath

    with mpmath.workdps(dps):
        roots = mpmath.polyroots(c.descending(), maxsteps=200, extraprec=4 * dps)
        beta = roots[0] + sum(int(zi) * r for zi, r in zip(z, roots[1:]))
        value = mpmath.polyval(k.descending(), beta)
        r = max(abs(beta), 1)
        scale = sum(abs(ci) * r**i for i, ci in enumerate(k.coeffs))
        return float(abs(value) / scale)


def verify_beta_root(c: IntPoly, z: Sequence[int], k: IntPoly, tol: float = 1e-6) -> bool:
    return beta_residual(c, z, k) < tol
