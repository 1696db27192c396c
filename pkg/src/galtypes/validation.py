"""Input checks shared by the estimators and the CLI."""
from __future__ import annotations

import numbers
from typing import Any

import numpy as np

from .galois_id import MODES
from .parsing import parse_poly
from .zz_poly import IntPoly


def check_polynomial(obj: Any) -> IntPoly:
    """Coerce an expression string, a descending coefficient sequence or an IntPoly."""
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, str):
        return parse_poly(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        coeffs = []
        for v in obj:
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                raise TypeError(f"coefficients must be integers, got {v!r}")
            coeffs.append(int(v))
        if not coeffs:
            raise ValueError("empty coefficient sequence")
        return IntPoly.from_descending(coeffs)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a polynomial")


def check_polynomials(X: Any) -> list[IntPoly]:
    """A batch of polynomials; a bare string is rejected rather than split."""
    if isinstance(X, (str, IntPoly)):
        raise ValueError("expected a sequence of polynomials, got a single polynomial")
    if hasattr(X, "tolist"):
        X = X.tolist()
    polys = []
    for item in X:
        # single-column 2-D input, as produced by DataFrames or np.array([[...]])
        if isinstance(item, (list, tuple)) and len(item) == 1 and isinstance(item[0], (str, IntPoly)):
            item = item[0]
        polys.append(check_polynomial(item))
    if not polys:
        raise ValueError("expected at least one polynomial")
    return polys


def check_prime_limit(n: Any) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"prime_limit must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"prime_limit must be >= 2, got {n}")
    return int(n)


def check_mode(mode: Any) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode
