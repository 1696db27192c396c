"""Explicit permutation groups of small degree.

Groups are stored as their full sorted element lists (at most 120 elements for
degree 5), which makes brute-force verification of the coset and double-coset
identities straightforward.

Conventions
-----------
* A :class:`Perm` stores 0-based images; cycle notation in ``repr`` and in
  :meth:`Perm.from_cycles` is 1-based.
* Products compose left to right: ``(a * b)[i] == b[a[i]]``. With this
  convention the right cosets of ``Stab(1)`` are ``{g : g(1) = j}`` and the
  right action of ``<phi>`` on them mirrors the action of ``phi`` on points.
* Subgroups act on right cosets ``Hg`` by right translation, and on left
  cosets ``gD`` by left translation.
* A coset is identified by its lexicographically least element.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence

from .exceptions import GroupError, UnsupportedDegreeError
from .fp_poly import FactorType
from .tables import table

__all__ = [
    "Perm",
    "PermGroup",
    "OrbitDecomposition",
    "generate_group",
    "symmetric_group",
    "alternating_group",
    "cycle_type",
    "cycle_type_set",
    "all_subgroups",
    "transitive_subgroups",
    "divisions",
    "conjugacy_classes",
    "right_cosets",
    "coset_orbit_decomposition",
    "verify_double_coset_identities",
    "verify_stabilizer_orbit_lemma",
    "verify_lagarias_equivalence",
    "verify_normality_criterion",
    "verify_cycle_orbit_correspondence",
    "expected_type_densities",
]


class Perm(tuple):
    """Permutation of ``{0, ..., n-1}`` given by its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation of 0..{len(images) - 1}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Perm":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Perm":
        """Build from 1-based disjoint cycles, e.g. ``Perm.from_cycles(4, (1, 2), (3, 4))``."""
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if not 1 <= a <= n or a in seen:
                    raise GroupError(f"bad cycle {cyc} for degree {n}")
                seen.add(a)
                images[a - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm._raw(other[i] for i in self)

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        out = Perm.identity(len(self))
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._raw(inv)

    def conjugate(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based), including fixed points."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self[i]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> FactorType:
        return FactorType(len(c) for c in self.cycles())

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if len(self) else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    __str__ = __repr__


def cycle_type(g: Perm) -> FactorType:
    return g.cycle_type()


def _closure(gens: Sequence[Perm], n: int) -> frozenset:
    e = Perm.identity(n)
    seen = {e}
    frontier = [e]
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


class PermGroup:
    """Finite permutation group held as an explicit sorted element list.

    Construction checks the group axioms unless ``check=False`` (used for
    groups obtained by closure, which are groups by construction).
    """

    def __init__(self, elements: Iterable[Perm], degree: int, generators: Sequence[Perm] = (),
                 name: Optional[str] = None, check: bool = True):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(sorted(elements))
        self._set = frozenset(self.elements)
        self.generators = tuple(generators)
        self.name = name
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.degree
        if any(len(g) != n for g in self.elements):
            raise GroupError("elements of mixed degree")
        if Perm.identity(n) not in self._set:
            raise GroupError("group must contain the identity")
        for a in self.elements:
            if a.inverse() not in self._set:
                raise GroupError(f"not closed under inverse: {a}")
            for b in self.elements:
                if a * b not in self._set:
                    raise GroupError(f"not closed under composition: {a} * {b}")
        if math.factorial(n) % len(self.elements):
            raise GroupError("group order must divide n!")

    # -- basic protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    @property
    def element_set(self) -> frozenset:
        return self._set

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    # -- structure --------------------------------------------------------

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._set <= other._set

    def orbit(self, point: int) -> set[int]:
        return {g[point] for g in self.elements}

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def stabilizer(self, point: int) -> "PermGroup":
        return PermGroup((g for g in self.elements if g[point] == point), self.degree, check=False)

    def conjugate(self, g: Perm) -> frozenset:
        """Element set of g^-1 H g."""
        gi = g.inverse()
        return frozenset(gi * h * g for h in self.elements)

    def is_normal_in(self, G: "PermGroup") -> bool:
        return all(self.conjugate(g) == self._set for g in G.elements)

    def is_even(self) -> bool:
        return all(g.is_even() for g in self.elements)

    def cycle_type_counts(self) -> Counter:
        return Counter(g.cycle_type() for g in self.elements)


def _group_from_set(elements: frozenset, n: int, name=None) -> PermGroup:
    return PermGroup(elements, n, generators=_small_generating_set(elements, n), name=name, check=False)


def _small_generating_set(elements, n: int) -> tuple[Perm, ...]:
    gens: list[Perm] = []
    span = frozenset([Perm.identity(n)])
    for g in sorted(elements, key=lambda x: (-x.order(), x)):
        if g not in span:
            gens.append(g)
            span = _closure(gens, n)
            if len(span) == len(elements):
                break
    return tuple(gens)


def generate_group(gens: Iterable[Perm], n: int, name: Optional[str] = None) -> PermGroup:
    """Close ``gens`` under composition; the empty list gives the trivial group."""
    gens = list(gens)
    for g in gens:
        if not isinstance(g, Perm):
            g = Perm(g)
        if len(g) != n:
            raise GroupError(f"generator {g} has degree {len(g)}, expected {n}")
    gens = [g if isinstance(g, Perm) else Perm(g) for g in gens]
    return PermGroup(_closure(gens, n), n, generators=gens, name=name, check=False)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> PermGroup:
    return PermGroup((Perm._raw(p) for p in permutations(range(n))), n,
                     generators=_sn_generators(n), name=f"S{n}", check=False)


def _sn_generators(n: int) -> tuple[Perm, ...]:
    if n < 2:
        return ()
    return (Perm.from_cycles(n, (1, 2)), Perm.from_cycles(n, tuple(range(1, n + 1))))


@lru_cache(maxsize=None)
def alternating_group(n: int) -> PermGroup:
    return PermGroup((g for g in symmetric_group(n) if g.is_even()), n, name=f"A{n}", check=False)


def cyclic_subgroup(g: Perm) -> frozenset:
    out = {Perm.identity(len(g))}
    x = g
    while x not in out:
        out.add(x)
        x = x * g
    return frozenset(out)


def cycle_type_set(G: PermGroup) -> frozenset:
    """Distinct cycle types of the elements of a transitive group."""
    if not G.is_transitive():
        raise GroupError("cycle-type tables are defined for transitive groups only")
    return frozenset(g.cycle_type() for g in G.elements)


# ---------------------------------------------------------------------------
# subgroup lattice


def _index_closure(gens: Sequence[int], mult: Sequence[Sequence[int]], e: int) -> frozenset:
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            row = mult[x]
            for s in gens:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=32)
def _subgroup_sets(G: PermGroup) -> tuple[frozenset, ...]:
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}
    mult = [[index[a * b] for b in elems] for a in elems]
    e = index[G.identity]
    cyclic: dict[frozenset, int] = {}
    for i in range(len(elems)):
        cyclic.setdefault(_index_closure((i,), mult, e), i)
    found = set(cyclic)
    queue = list(cyclic)
    gens_of = {c: (i,) for c, i in cyclic.items()}
    while queue:
        S = queue.pop()
        for i in cyclic.values():
            if i in S:
                continue
            gens = gens_of[S] + (i,)
            J = _index_closure(gens, mult, e)
            if J not in found:
                found.add(J)
                gens_of[J] = gens
                queue.append(J)
    subsets = (frozenset(elems[i] for i in S) for S in found)
    return tuple(sorted(subsets, key=lambda s: (len(s), sorted(s))))


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    """Every subgroup of ``G``.

    Built by joining cyclic subgroups one generator at a time until the family
    stops growing; every subgroup is generated by its cyclic subgroups, so the
    fixed point is the whole lattice.
    """
    return [_group_from_set(s, G.degree) for s in _subgroup_sets(G)]


def _conjugate_set(S: frozenset, g: Perm) -> frozenset:
    gi = g.inverse()
    return frozenset(gi * s * g for s in S)


def _conjugacy_key(S: frozenset, ambient: PermGroup) -> tuple:
    return min(tuple(sorted(ginv * s * g for s in S)) for g, ginv in
               ((g, g.inverse()) for g in ambient.elements))


@lru_cache(maxsize=None)
def transitive_subgroups(n: int) -> tuple[PermGroup, ...]:
    """Transitive subgroups of S_n up to conjugacy, named and sorted by order."""
    if n not in (3, 4, 5):
        raise UnsupportedDegreeError(f"transitive subgroup classification supports n = 3, 4, 5; got {n}")
    Sn = symmetric_group(n)
    names = {(row.order, row.types): row.name for row in table(n)}
    reps: dict[tuple, frozenset] = {}
    for S in _subgroup_sets(Sn):
        if len({g[0] for g in S}) != n:
            continue
        sig = (len(S), frozenset(g.cycle_type() for g in S))
        if sig not in reps:
            reps[sig] = S
        elif not any(_conjugate_set(S, g) == reps[sig] for g in Sn.elements):
            raise GroupError(f"two non-conjugate transitive subgroups share the signature {sig}")
    out = []
    for sig, S in reps.items():
        if sig not in names:
            raise GroupError(f"transitive subgroup with unexpected signature {sig}")
        out.append(_group_from_set(S, n, name=names[sig]))
    out.sort(key=lambda H: (H.order, H.name))
    return tuple(out)


def transitive_group(n: int, name: str) -> PermGroup:
    for H in transitive_subgroups(n):
        if H.name == name:
            return H
    raise KeyError(f"no transitive group {name!r} of degree {n}")


# ---------------------------------------------------------------------------
# conjugacy and divisions


def conjugacy_classes(G: PermGroup) -> list[frozenset]:
    remaining = set(G.elements)
    out = []
    for g in G.elements:
        if g not in remaining:
            continue
        cls = frozenset(g.conjugate(x) for x in G.elements)
        remaining -= cls
        out.append(cls)
    return out


def divisions(G: PermGroup) -> list[frozenset]:
    """Partition of G: two elements share a division iff their cyclic subgroups are conjugate."""
    key_of = {}
    for g in G.elements:
        key_of[g] = _conjugacy_key(cyclic_subgroup(g), G)
    groups: dict[tuple, set] = {}
    for g in G.elements:
        groups.setdefault(key_of[g], set()).add(g)
    return sorted((frozenset(s) for s in groups.values()), key=min)


# ---------------------------------------------------------------------------
# cosets and orbits


def _require_subgroup(H: PermGroup, G: PermGroup, label: str) -> None:
    if not H.is_subgroup_of(G):
        raise GroupError(f"{label} is not a subgroup of G")


def right_cosets(G: PermGroup, H: PermGroup) -> tuple[dict, dict]:
    """Right cosets Hg of H in G.

    Returns ``(coset_of, members)``: ``coset_of`` maps each element of G to the
    canonical (least) element of its coset, ``members`` maps each canonical
    element to the coset as a frozenset.
    """
    coset_of: dict[Perm, Perm] = {}
    members: dict[Perm, frozenset] = {}
    for g in G.elements:
        if g in coset_of:
            continue
        coset = frozenset(h * g for h in H.elements)
        members[g] = coset
        for x in coset:
            coset_of[x] = g
    return coset_of, members


def left_cosets(G: PermGroup, D: PermGroup) -> tuple[dict, dict]:
    coset_of: dict[Perm, Perm] = {}
    members: dict[Perm, frozenset] = {}
    for g in G.elements:
        if g in coset_of:
            continue
        coset = frozenset(g * d for d in D.elements)
        members[g] = coset
        for x in coset:
            coset_of[x] = g
    return coset_of, members


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits of the right action of D on the right cosets H\\G.

    ``orbits`` lists each orbit as a tuple of canonical coset representatives;
    ``cosets`` maps a representative to the coset's elements.
    """

    orbits: tuple[tuple[Perm, ...], ...]
    cosets: Mapping[Perm, frozenset] = field(repr=False, compare=False)

    @property
    def lengths(self) -> FactorType:
        return FactorType(len(o) for o in self.orbits)

    @property
    def index(self) -> int:
        return len(self.cosets)

    def union(self, i: int) -> frozenset:
        return frozenset().union(*(self.cosets[r] for r in self.orbits[i]))


def _orbits(reps: Iterable[Perm], step, acting: Sequence[Perm]) -> list[tuple[Perm, ...]]:
    seen = set()
    out = []
    for r in reps:
        if r in seen:
            continue
        orbit = [r]
        seen.add(r)
        k = 0
        while k < len(orbit):
            for d in acting:
                y = step(orbit[k], d)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
            k += 1
        out.append(tuple(orbit))
    return out


def _generators(G: PermGroup) -> Sequence[Perm]:
    return G.generators or G.elements


def coset_orbit_decomposition(G: PermGroup, H: PermGroup, D: PermGroup) -> OrbitDecomposition:
    _require_subgroup(H, G, "H")
    _require_subgroup(D, G, "D")
    coset_of, members = right_cosets(G, H)
    orbits = _orbits(members, lambda r, d: coset_of[r * d], _generators(D))
    return OrbitDecomposition(tuple(orbits), members)


def _cyclic_orbit_lengths(reps: Sequence[Perm], coset_of: Mapping, phi: Perm) -> FactorType:
    seen = set()
    lengths = []
    for r in reps:
        if r in seen:
            continue
        k = 0
        x = r
        while x not in seen:
            seen.add(x)
            x = coset_of[x * phi]
            k += 1
        lengths.append(k)
    return FactorType(lengths)


# ---------------------------------------------------------------------------
# verifiers


@dataclass
class Report:
    """Outcome of a brute-force verification sweep."""

    name: str
    passed: bool = True
    checks: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def check(self, ok: bool, failure=None) -> bool:
        self.checks += 1
        if not ok:
            self.passed = False
            self.failures.append(failure)
        return ok

    def merge(self, other: "Report") -> "Report":
        self.passed = self.passed and other.passed
        self.checks += other.checks
        self.failures.extend(other.failures)
        return self

    def __bool__(self) -> bool:
        return self.passed


def verify_double_coset_identities(G: PermGroup, H: PermGroup, D: PermGroup) -> Report:
    """Orbit unions are double cosets, orbit counts agree, and sizes match.

    With ``a_i`` the number of right cosets of H in the i-th D-orbit of H\\G and
    ``b_i`` the number of left cosets of D in the matching H-orbit of G/D, both
    ``a_i |H|`` and ``b_i |D|`` equal ``|HgD| = |H||D| / |H ∩ gDg^-1|``.
    """
    _require_subgroup(H, G, "H")
    _require_subgroup(D, G, "D")
    rep = Report("double-coset identities")
    right = coset_orbit_decomposition(G, H, D)
    lcoset_of, lmembers = left_cosets(G, D)
    left = _orbits(lmembers, lambda r, h: lcoset_of[h * r], _generators(H))

    def left_union(orbit):
        return frozenset().union(*(lmembers[r] for r in orbit))

    rep.check(len(right.orbits) == len(left), ("orbit counts differ", len(right.orbits), len(left)))
    left_by_union = {left_union(o): o for o in left}
    sizes = []
    for i, orbit in enumerate(right.orbits):
        g = orbit[0]
        double = frozenset(h * g * d for h in H.elements for d in D.elements)
        sizes.append(len(double))
        rep.check(right.union(i) == double, ("right-orbit union is not HgD", g))
        match = left_by_union.get(double)
        if not rep.check(match is not None, ("no H-orbit on G/D covers HgD", g)):
            continue
        a, b = len(orbit), len(match)
        rep.check(a * H.order == b * D.order, ("a|H| != b|D|", g, a, b))
        gDg = frozenset(g * d * g.inverse() for d in D.elements)
        predicted = Fraction(H.order * D.order, len(H.element_set & gDg))
        rep.check(predicted == len(double), ("double coset size formula", g, len(double), predicted))
    rep.check(sum(sizes) == G.order, ("double cosets do not exhaust G",))
    rep.details.update(right_orbit_lengths=right.lengths,
                       left_orbit_lengths=FactorType(len(o) for o in left),
                       double_coset_sizes=FactorType(sizes))
    return rep


def verify_stabilizer_orbit_lemma(G: PermGroup, D: PermGroup, E: PermGroup, H: PermGroup) -> Report:
    """Each D-orbit on H\\G splits into E-orbits of one common length.

    For the orbit of ``Hg`` that length is ``|E| / |H ∩ gEg^-1|``, and the orbit
    splits into ``(D-orbit length) / (E-orbit length)`` pieces. Requires E normal
    in D.
    """
    _require_subgroup(H, G, "H")
    _require_subgroup(D, G, "D")
    if not E.is_subgroup_of(D) or not E.is_normal_in(D):
        raise GroupError("E must be a normal subgroup of D")
    rep = Report("stabilizer orbit lemma")
    coset_of, members = right_cosets(G, H)
    d_orbits = _orbits(members, lambda r, d: coset_of[r * d], _generators(D))
    e_step = _generators(E)
    split = []
    for orbit in d_orbits:
        e_orbits = _orbits(orbit, lambda r, e: coset_of[r * e], e_step)
        rep.check(all(set(o) <= set(orbit) for o in e_orbits), ("E-orbit escapes D-orbit", orbit[0]))
        lengths = {len(o) for o in e_orbits}
        rep.check(len(lengths) == 1, ("unequal E-orbit lengths", orbit[0], sorted(lengths)))
        for r in orbit:
            gEg = frozenset(r * e * r.inverse() for e in E.elements)
            expected = Fraction(E.order, len(H.element_set & gEg))
            rep.check(expected in lengths and len(lengths) == 1, ("E-orbit length formula", r, expected))
        length = min(lengths)
        rep.check(len(orbit) % length == 0 and len(e_orbits) == len(orbit) // length,
                  ("E-orbit count", orbit[0]))
        split.append((len(orbit), FactorType(len(o) for o in e_orbits)))
    rep.details["split"] = split
    return rep


def _orbit_signatures(G: PermGroup, subgroups: Sequence[PermGroup]) -> dict[Perm, tuple]:
    sig: dict[Perm, list] = {g: [] for g in G.elements}
    for H in subgroups:
        coset_of, members = right_cosets(G, H)
        reps = list(members)
        for g in G.elements:
            sig[g].append(_cyclic_orbit_lengths(reps, coset_of, g))
    return {g: tuple(v) for g, v in sig.items()}


def verify_lagarias_equivalence(G: PermGroup, subgroups: Optional[Sequence[PermGroup]] = None) -> Report:
    """<phi1>, <phi2> conjugate  <=>  equal <phi>-orbit lengths on H\\G for every H <= G.

    Equivalently: the partition of G by the vector of orbit-length multisets
    (one entry per subgroup) coincides with the partition into divisions.
    """
    subgroups = all_subgroups(G) if subgroups is None else subgroups
    rep = Report("division / orbit-signature equivalence")
    sig = _orbit_signatures(G, subgroups)
    divs = divisions(G)
    div_of = {g: i for i, d in enumerate(divs) for g in d}
    by_sig: dict[tuple, int] = {}
    for g in G.elements:
        i = div_of[g]
        j = by_sig.setdefault(sig[g], i)
        rep.check(i == j, ("signature shared across divisions", g, min(divs[j])))
    rep.check(len(by_sig) == len(divs), ("division split by signatures", len(by_sig), len(divs)))
    rep.details.update(subgroups=len(subgroups), divisions=len(divs), pairs=G.order ** 2)
    return rep


def verify_normality_criterion(G: PermGroup, H: PermGroup) -> Report:
    """H normal in G  <=>  every cyclic D <= G has equal-length orbits on H\\G.

    For non-normal H a witness ``phi in H`` with ``phi not in g^-1 H g`` is
    exhibited: under ``<phi>`` the coset H is fixed while Hg moves.
    """
    _require_subgroup(H, G, "H")
    rep = Report("normality criterion")
    normal = H.is_normal_in(G)
    coset_of, members = right_cosets(G, H)
    reps = list(members)
    uniform = all(len(set(_cyclic_orbit_lengths(reps, coset_of, phi))) <= 1 for phi in G.elements)
    rep.check(normal == uniform, ("normality and uniform orbit lengths disagree", normal, uniform))
    rep.details.update(normal=normal, uniform=uniform)
    if not normal:
        witness = None
        for g in G.elements:
            conj = H.conjugate(g)
            outside = [phi for phi in H.elements if phi not in conj]
            if outside:
                witness = (outside[0], g)
                break
        if rep.check(witness is not None, ("no witness for non-normal H",)):
            phi, g = witness
            one = _single_orbit_length(coset_of, coset_of[H.identity], phi)
            moved = _single_orbit_length(coset_of, coset_of[g], phi)
            rep.check(one == 1 and moved > 1, ("witness orbit lengths", phi, g, one, moved))
            rep.details["witness"] = {"phi": phi, "g": g, "orbit_of_H": one, "orbit_of_Hg": moved}
    return rep


def _single_orbit_length(coset_of, start: Perm, phi: Perm) -> int:
    k, x = 1, coset_of[start * phi]
    while x != start:
        x = coset_of[x * phi]
        k += 1
    return k


def verify_cycle_orbit_correspondence(G: PermGroup, elements: Optional[Iterable[Perm]] = None) -> Report:
    """For H = Stab(1): the <phi>-orbit lengths on H\\G equal the cycle type of phi.

    Also checks that every point stabilizer has index n and that the point
    stabilizers form one full conjugacy class of subgroups.
    """
    if not G.is_transitive():
        raise GroupError("cycle/orbit correspondence needs a transitive group")
    n = G.degree
    rep = Report("cycle type / coset orbit correspondence")
    stabs = [G.stabilizer(w) for w in range(n)]
    for w, S in enumerate(stabs):
        rep.check(G.order == n * S.order, ("index of stabilizer", w + 1))
    conj_class = {stabs[0].conjugate(g) for g in G.elements}
    rep.check(conj_class == {S.element_set for S in stabs}, ("stabilizers not a conjugacy class",))
    coset_of, members = right_cosets(G, stabs[0])
    reps = list(members)
    elements = G.elements if elements is None else list(elements)
    for phi in elements:
        lengths = _cyclic_orbit_lengths(reps, coset_of, phi)
        rep.check(lengths == phi.cycle_type(), ("orbit lengths differ from cycle type", phi, lengths))
    rep.details["elements"] = len(elements)
    return rep


def expected_type_densities(G: PermGroup) -> dict[FactorType, Fraction]:
    """Proportion of elements of each cycle type (the Chebotarev densities)."""
    if G.degree < 3:
        raise UnsupportedDegreeError("type densities are tabulated from degree 3")
    if not G.is_transitive():
        raise GroupError("type densities need a transitive group")
    counts = G.cycle_type_counts()
    return {t: Fraction(k, G.order) for t, k in sorted(counts.items())}
