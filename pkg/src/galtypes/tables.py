"""Embedded determination tables for transitive groups of degree 3, 4 and 5.

Each row lists a candidate Galois group together with the complete set of
factorization types (equivalently, cycle types) it produces. The group engine
recomputes every row from scratch; ``tests/test_acceptance.py`` checks that the
two agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exceptions import UnsupportedDegreeError
from .fp_poly import FactorType

TABLE_VERSION = 1

DETERMINATION_TABLES = {
    "version": TABLE_VERSION,
    "degrees": {
        "3": [
            {"name": "A3", "order": 3, "types": [[1, 1, 1], [3]]},
            {"name": "S3", "order": 6, "types": [[1, 1, 1], [1, 2], [3]]},
        ],
        "4": [
            {"name": "Z4", "order": 4, "types": [[1, 1, 1, 1], [2, 2], [4]]},
            {"name": "Z2xZ2", "order": 4, "types": [[1, 1, 1, 1], [2, 2]]},
            {"name": "D4", "order": 8, "types": [[1, 1, 1, 1], [1, 1, 2], [2, 2], [4]]},
            {"name": "A4", "order": 12, "types": [[1, 1, 1, 1], [1, 3], [2, 2]]},
            {"name": "S4", "order": 24, "types": [[1, 1, 1, 1], [1, 1, 2], [1, 3], [2, 2], [4]]},
        ],
        "5": [
            {"name": "Z5", "order": 5, "types": [[1, 1, 1, 1, 1], [5]]},
            {"name": "D5", "order": 10, "types": [[1, 1, 1, 1, 1], [1, 2, 2], [5]]},
            {"name": "Hol(Z5)", "order": 20, "types": [[1, 1, 1, 1, 1], [1, 2, 2], [1, 4], [5]]},
            {"name": "A5", "order": 60, "types": [[1, 1, 1, 1, 1], [1, 2, 2], [1, 1, 3], [5]]},
            {
                "name": "S5",
                "order": 120,
                "types": [[1, 1, 1, 1, 1], [1, 1, 1, 2], [1, 2, 2], [1, 1, 3], [2, 3], [1, 4], [5]],
            },
        ],
    },
}

SUPPORTED_DEGREES = (3, 4, 5)


@dataclass(frozen=True)
class TableRow:
    name: str
    order: int
    types: frozenset  # of FactorType

    def sorted_types(self) -> list[FactorType]:
        return sorted(self.types, key=lambda t: (-len(t), t))


@lru_cache(maxsize=None)
def table(n: int) -> tuple[TableRow, ...]:
    """Rows of the embedded table for degree ``n``, ordered by group order."""
    rows = DETERMINATION_TABLES["degrees"].get(str(n))
    if rows is None:
        raise UnsupportedDegreeError(f"determination tables cover degrees 3-5, got {n}")
    return tuple(
        TableRow(r["name"], r["order"], frozenset(FactorType(t) for t in r["types"])) for r in rows
    )


def row_by_name(n: int, name: str) -> TableRow:
    for row in table(n):
        if row.name == name:
            return row
    raise KeyError(f"no group named {name!r} in degree {n}")
