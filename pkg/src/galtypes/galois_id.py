"""Galois group determination from factorization types modulo primes.

Every prime p not dividing disc(c) contributes the factorization type of c mod p,
which is always a cycle type of the Galois group. Candidates are the transitive
groups whose cycle-type set contains every observed type; the list can only
shrink as more primes are scanned.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exceptions import ReducibleError, UnsupportedDegreeError
from .fp_poly import FactorType, _ddf_degrees, _derivative, _gcd
from .perm_groups import expected_type_densities, transitive_group
from .primes import is_prime, iter_primes
from .tables import SUPPORTED_DEGREES, table
from .zz_poly import IntPoly, discriminant, is_irreducible

__all__ = [
    "SKIP_DIVIDES_DISC",
    "SKIP_NOT_SQUAREFREE",
    "MODES",
    "TypeObservation",
    "TypeTally",
    "Verdict",
    "DeterminationReport",
    "FrequencyReport",
    "observe",
    "scan",
    "candidates_for",
    "determine",
    "frequency_report",
    "disc_square_refinement",
]

SKIP_DIVIDES_DISC = "divides-disc"
SKIP_NOT_SQUAREFREE = "not-squarefree"
MODES = ("strict", "assume-complete")


@dataclass(frozen=True)
class TypeObservation:
    prime: int
    ftype: Optional[FactorType] = None
    skip_reason: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.skip_reason is not None


def _observe(coeffs: Sequence[int], disc: int, p: int) -> TypeObservation:
    if disc % p == 0:
        return TypeObservation(p, skip_reason=SKIP_DIVIDES_DISC)
    red = [x % p for x in coeffs]
    if len(_gcd(red, _derivative(red, p), p)) != 1:
        return TypeObservation(p, skip_reason=SKIP_NOT_SQUAREFREE)
    return TypeObservation(p, FactorType(_ddf_degrees(red, p)))


def observe(c: IntPoly, p: int, disc: Optional[int] = None) -> TypeObservation:
    """Factorization type of ``c`` mod ``p``, or a skip record for ramified-looking primes."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not c.is_monic():
        raise ValueError("observe expects a monic polynomial")
    return _observe(c.coeffs, discriminant(c) if disc is None else disc, p)


@dataclass
class TypeTally:
    """Per-range scan result; tallies merge associatively in range order."""

    observations: list = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    def add(self, obs: TypeObservation) -> None:
        self.observations.append(obs)
        if not obs.skipped:
            self.counts[obs.ftype] += 1

    def merge(self, other: "TypeTally") -> "TypeTally":
        return TypeTally(self.observations + other.observations, self.counts + other.counts)

    @property
    def types(self) -> frozenset:
        return frozenset(self.counts)


def _scan_range(coeffs: tuple, disc: int, lo: int, hi: int) -> TypeTally:
    tally = TypeTally()
    for p in iter_primes(hi, start=lo):
        tally.add(_observe(coeffs, disc, p))
    return tally


def scan(c: IntPoly, prime_limit: int, disc: Optional[int] = None, n_jobs: int = 1) -> TypeTally:
    """Observe every prime ``p <= prime_limit``.

    With ``n_jobs != 1`` the range is split into blocks scanned in parallel by
    joblib; the merged tally is identical to the sequential one.
    """
    disc = discriminant(c) if disc is None else disc
    if n_jobs == 1 or prime_limit < 10_000:
        return _scan_range(c.coeffs, disc, 2, prime_limit)
    from joblib import Parallel, delayed

    workers = n_jobs if n_jobs > 0 else max(1, (__import__("os").cpu_count() or 1))
    blocks = 4 * workers
    edges = [2 + (prime_limit - 1) * k // blocks for k in range(blocks + 1)]
    parts = Parallel(n_jobs=n_jobs)(
        delayed(_scan_range)(c.coeffs, disc, edges[k], edges[k + 1] - 1 if k < blocks - 1 else prime_limit)
        for k in range(blocks)
    )
    out = TypeTally()
    for part in parts:
        out = out.merge(part)
    return out


# ---------------------------------------------------------------------------


def candidates_for(n: int, observed: Iterable[FactorType]) -> tuple[str, ...]:
    """Names of degree-``n`` transitive groups whose type set contains ``observed``."""
    observed = frozenset(observed)
    return tuple(row.name for row in table(n) if observed <= row.types)


def _is_square(d: int) -> bool:
    return d >= 0 and math.isqrt(d) ** 2 == d


def disc_square_refinement(c: IntPoly) -> bool:
    """True iff disc(c) is a perfect square, i.e. the Galois group lies in A_n.

    Auxiliary tie-break only; the determination never depends on it unless it
    is enabled.
    """
    return _is_square(discriminant(c))


@dataclass(frozen=True)
class Verdict:
    kind: str  # "conclusive" | "consistent" | "exhausted"
    groups: tuple[str, ...]
    via: Optional[str] = None  # for conclusive: "types" | "disc-square" | "assume-complete"

    @property
    def group(self) -> Optional[str]:
        return self.groups[0] if self.kind == "conclusive" else None

    def __str__(self) -> str:
        if self.kind == "conclusive":
            return f"conclusive({self.groups[0]})" + (f" via {self.via}" if self.via != "types" else "")
        return f"{self.kind}({', '.join(self.groups)})"


@dataclass
class DeterminationReport:
    polynomial: IntPoly
    disc: int
    mode: str
    prime_limit: int
    observations: list
    counts: Counter
    candidates: tuple[str, ...]
    verdict: Verdict
    disc_refinement: bool = True
    expected_densities: Optional[dict] = None

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def primes_scanned(self) -> int:
        return len(self.observations)

    @property
    def skipped(self) -> list[TypeObservation]:
        return [o for o in self.observations if o.skipped]

    @property
    def observed_types(self) -> frozenset:
        return frozenset(self.counts)

    @property
    def last_prime(self) -> Optional[int]:
        return self.observations[-1].prime if self.observations else None

    def frequencies(self) -> dict[FactorType, Fraction]:
        total = sum(self.counts.values())
        return {t: Fraction(k, total) for t, k in sorted(self.counts.items())} if total else {}


def _check_subject(c: IntPoly, check_irreducible: bool) -> None:
    if not c.is_monic():
        raise ValueError(f"determination needs a monic polynomial, got {c}")
    if c.degree not in SUPPORTED_DEGREES:
        raise UnsupportedDegreeError(f"determination supports degrees 3-5, got {c.degree}")
    if check_irreducible:
        res = is_irreducible(c)
        if not res.irreducible:
            raise ReducibleError(f"{c} is reducible (factor {res.witness})", witness=res.witness)


def _decide(n: int, observed: frozenset, candidates: tuple, mode: str,
            refine: bool, disc: int) -> Verdict:
    if len(candidates) == 1:
        return Verdict("conclusive", candidates, "types")
    if not observed:
        return Verdict("exhausted", candidates)
    if mode == "assume-complete":
        exact = [row.name for row in table(n) if row.types == observed]
        if len(exact) == 1:
            return Verdict("conclusive", (exact[0],), "assume-complete")
    if refine:
        square = _is_square(disc)
        matching = [g for g in candidates if transitive_group(n, g).is_even() == square]
        if len(matching) == 1:
            return Verdict("conclusive", (matching[0],), "disc-square")
    return Verdict("consistent", candidates)


def determine(c: IntPoly, prime_limit: int = 1000, mode: str = "strict", disc_refinement: bool = True,
              early_exit: bool = True, n_jobs: int = 1, check_irreducible: bool = True) -> DeterminationReport:
    """Scan primes up to ``prime_limit`` and narrow down the Galois group of ``c``.

    ``mode="strict"`` only reports what set inclusion proves; with
    ``"assume-complete"`` the observed types are taken to be the full cycle-type
    set of the group. ``early_exit`` stops the scan as soon as one candidate is
    left; turn it off to collect statistics over the whole range.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    _check_subject(c, check_irreducible)
    n = c.degree
    disc = discriminant(c)

    if early_exit:
        tally = TypeTally()
        candidates = candidates_for(n, ())
        for p in iter_primes(prime_limit):
            obs = _observe(c.coeffs, disc, p)
            tally.add(obs)
            if not obs.skipped and tally.counts[obs.ftype] == 1:
                candidates = candidates_for(n, tally.types)
                if len(candidates) <= 1:
                    break
    else:
        tally = scan(c, prime_limit, disc, n_jobs=n_jobs)
    candidates = candidates_for(n, tally.types)
    verdict = _decide(n, tally.types, candidates, mode, disc_refinement, disc)
    densities = None
    if verdict.kind == "conclusive":
        densities = expected_type_densities(transitive_group(n, verdict.group))
    return DeterminationReport(c, disc, mode, prime_limit, tally.observations, tally.counts,
                               candidates, verdict, disc_refinement, densities)


@dataclass
class FrequencyReport:
    counts: Counter
    candidates: tuple[str, ...]
    expected: dict  # group name -> {FactorType: Fraction}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def frequencies(self) -> dict[FactorType, Fraction]:
        total = self.total
        return {t: Fraction(k, total) for t, k in sorted(self.counts.items())} if total else {}


def frequency_report(c: IntPoly, prime_limit: int, n_jobs: int = 1,
                     check_irreducible: bool = True) -> FrequencyReport:
    """Observed type frequencies next to the density predicted by each candidate group."""
    _check_subject(c, check_irreducible)
    tally = scan(c, prime_limit, n_jobs=n_jobs)
    cands = candidates_for(c.degree, tally.types)
    expected = {g: expected_type_densities(transitive_group(c.degree, g)) for g in cands}
    return FrequencyReport(tally.counts, cands, expected)
