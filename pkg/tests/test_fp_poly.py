import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from galtypes.exceptions import ModulusMismatchError, NotPrimeError, NotSquarefreeError
from galtypes.fp_poly import (
    FactorType,
    ModPoly,
    distinct_degree_type,
    gcd_mod,
    is_squarefree_mod,
    reduce_mod_p,
)
from galtypes.parsing import parse_poly

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def mp(p, *descending):
    return ModPoly(p, list(reversed(descending)))


# --- brute-force oracle: trial division by every monic polynomial of low degree


def monics(p, d):
    for tail in itertools.product(range(p), repeat=d):
        yield ModPoly(p, list(tail) + [1])


def brute_type(f):
    """Degrees of the irreducible factors by trial division, smallest degree first."""
    parts = []
    d = 1
    while f.degree > 0:
        if 2 * d > f.degree:
            parts.append(f.degree)
            break
        for g in monics(f.p, d):
            q, r = divmod(f, g)
            if r.is_zero():
                parts.append(d)
                f = q
                break
        else:
            d += 1
    return FactorType(parts)


def test_reduce_examples():
    c = parse_poly("x^3-2")
    assert reduce_mod_p(c, 5) == mp(5, 1, 0, 0, 3)
    assert reduce_mod_p(c, 2) == mp(2, 1, 0, 0, 0)
    assert reduce_mod_p(parse_poly("x^4+1"), 3) == mp(3, 1, 0, 0, 0, 1)


def test_reduce_rejects_composite():
    with pytest.raises(NotPrimeError):
        reduce_mod_p(parse_poly("x^3-2"), 9)


def test_gcd_examples():
    assert gcd_mod(mp(5, 1, 0, 0, 3), mp(5, 3, 0, 0)) == mp(5, 1)
    f = mp(7, 3, 1, 4)
    assert gcd_mod(f, f) == f.monic()
    assert gcd_mod(mp(2, 1, 0, 0, 0), mp(2, 1, 0, 0)) == mp(2, 1, 0, 0)
    assert gcd_mod(f, ModPoly(7, [])) == f.monic()


def test_gcd_moduli_must_match():
    with pytest.raises(ModulusMismatchError):
        gcd_mod(mp(5, 1, 1), mp(7, 1, 1))


def test_squarefree_examples():
    c = parse_poly("x^3-2")
    assert is_squarefree_mod(reduce_mod_p(c, 5))
    assert not is_squarefree_mod(reduce_mod_p(c, 3))
    assert not is_squarefree_mod(reduce_mod_p(c, 2))


def test_squarefree_fails_exactly_at_disc_primes_for_x3_minus_2():
    c = parse_poly("x^3-2")
    bad = [p for p in sympy.primerange(2, 200) if not is_squarefree_mod(reduce_mod_p(c, p))]
    assert bad == [2, 3]


def test_ddf_examples():
    c = parse_poly("x^3-2")
    assert distinct_degree_type(reduce_mod_p(c, 5)) == FactorType([1, 2])
    assert distinct_degree_type(reduce_mod_p(c, 31)) == FactorType([1, 1, 1])
    assert distinct_degree_type(reduce_mod_p(c, 7)) == FactorType([3])


def test_ddf_rejects_repeated_factors():
    with pytest.raises(NotSquarefreeError):
        distinct_degree_type(mp(5, 1, 2, 1))


def test_factor_type_repr_and_parse():
    t = FactorType([2, 1, 2])
    assert repr(t) == "{1,2,2}" and t.degree == 5
    assert FactorType.parse(repr(t)) == t
    with pytest.raises(ValueError):
        FactorType([0, 1])


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ddf_matches_trial_division_exhaustively(p, n):
    for f in monics(p, n):
        if is_squarefree_mod(f):
            assert distinct_degree_type(f) == brute_type(f), str(f)


@settings(max_examples=300, deadline=None)
@given(p=st.sampled_from(SMALL_PRIMES), tail=st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_ddf_matches_trial_division_random(p, tail):
    f = ModPoly(p, tail + [1])
    if is_squarefree_mod(f):
        t = distinct_degree_type(f)
        assert t == brute_type(f)
        assert t.degree == f.degree


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from(SMALL_PRIMES + [101, 65521]), tail=st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=7))
def test_ddf_matches_sympy(p, tail):
    f = ModPoly(p, tail + [1])
    if is_squarefree_mod(f):
        x = sympy.Symbol("x")
        fl = sympy.Poly(list(reversed(f.coeffs)), x, modulus=p).factor_list()[1]
        assert distinct_degree_type(f) == FactorType(g.degree() for g, e in fl for _ in range(e))


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from(SMALL_PRIMES),
       a=st.lists(st.integers(0, 12), max_size=6), b=st.lists(st.integers(0, 12), max_size=6))
def test_gcd_divides_both_and_is_monic(p, a, b):
    A, B = ModPoly(p, a), ModPoly(p, b)
    g = gcd_mod(A, B)
    if A.is_zero() and B.is_zero():
        assert g.is_zero()
        return
    assert g.is_monic()
    assert (A % g).is_zero() and (B % g).is_zero()


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from(SMALL_PRIMES),
       a=st.lists(st.integers(0, 12), max_size=6), b=st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_divmod_identity(p, a, b):
    A, B = ModPoly(p, a), ModPoly(p, b)
    if B.is_zero():
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@given(p=st.sampled_from(SMALL_PRIMES), coeffs=st.lists(st.integers(-50, 50), max_size=6))
def test_modpoly_normalized(p, coeffs):
    f = ModPoly(p, coeffs)
    assert all(0 <= c < p for c in f.coeffs)
    assert not f.coeffs or f.coeffs[-1] != 0
