"""Exhaustive group-theory sweeps behind ``galtypes verify-group-theory``."""
from __future__ import annotations

from .perm_groups import (
    Report,
    all_subgroups,
    symmetric_group,
    transitive_subgroups,
    verify_cycle_orbit_correspondence,
    verify_double_coset_identities,
    verify_lagarias_equivalence,
    verify_normality_criterion,
    verify_stabilizer_orbit_lemma,
)


def _sweep(name: str, reports) -> Report:
    total = Report(name)
    runs = 0
    for rep in reports:
        total.merge(rep)
        runs += 1
    total.details["runs"] = runs
    return total


def double_coset_sweep(n: int) -> Report:
    G = symmetric_group(n)
    subs = all_subgroups(G)
    return _sweep(f"double-coset identities, all (H, D) in S{n}",
                  (verify_double_coset_identities(G, H, D) for H in subs for D in subs))


def stabilizer_sweep(n: int) -> Report:
    G = symmetric_group(n)
    subs = all_subgroups(G)

    def runs():
        for D in subs:
            for E in subs:
                if E.is_subgroup_of(D) and E.is_normal_in(D):
                    for H in subs:
                        yield verify_stabilizer_orbit_lemma(G, D, E, H)

    return _sweep(f"E-orbit refinement, all E normal in D, all H in S{n}", runs())


def lagarias_sweep(degree_max: int) -> Report:
    groups = [H for n in range(3, degree_max + 1) for H in transitive_subgroups(n)]
    if degree_max < 4:
        groups.append(symmetric_group(4))
    return _sweep(f"divisions vs coset-orbit signatures, transitive groups of degree 3..{degree_max}",
                  (verify_lagarias_equivalence(G) for G in groups))


def normality_sweep(n: int) -> Report:
    G = symmetric_group(n)
    return _sweep(f"normality criterion, every subgroup of S{n}",
                  (verify_normality_criterion(G, H) for H in all_subgroups(G)))


def cycle_orbit_sweep(degree_max: int) -> Report:
    groups = [H for n in range(3, degree_max + 1) for H in transitive_subgroups(n)]
    return _sweep(f"cycle type = coset-orbit lengths, transitive groups of degree 3..{degree_max}",
                  (verify_cycle_orbit_correspondence(G) for G in groups))


def run_suite(degree_max: int = 4) -> list[Report]:
    if degree_max not in (3, 4, 5):
        raise ValueError("degree_max must be 3, 4 or 5")
    small = min(degree_max, 4)
    return [
        double_coset_sweep(small),
        stabilizer_sweep(small),
        lagarias_sweep(degree_max),
        normality_sweep(small),
        cycle_orbit_sweep(degree_max),
    ]
