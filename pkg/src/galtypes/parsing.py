"""Polynomial text I/O.

Two input forms are accepted:

* a descending comma list of integers, ``"1,0,0,-2"`` for x^3 - 2;
* a sum of terms ``[+-][k][*][x[^e]]`` in the single variable ``x``, e.g.
  ``"x^5 - x - 1"``. ``**`` may stand in for ``^``; whitespace is ignored and
  repeated exponents are summed.
"""
from __future__ import annotations

import re
from collections import defaultdict
from typing import Sequence

from .exceptions import PolyParseError
from .zz_poly import IntPoly

__all__ = ["parse_poly", "format_coeffs", "format_poly"]

_LIST_RE = re.compile(r"^\s*[+-]?\d+\s*(,\s*[+-]?\d+\s*)+$")
_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x)|(?P<pow>\^|\*\*)|(?P<sign>[+-])|(?P<star>\*))")


def parse_poly(text: str) -> IntPoly:
    if text is None or not text.strip():
        raise PolyParseError("empty polynomial", 0)
    if "," in text:
        if not _LIST_RE.match(text):
            bad = _first_bad_list_char(text)
            raise PolyParseError("malformed coefficient list", bad)
        return IntPoly.from_descending(int(tok) for tok in text.split(","))
    return _parse_terms(text)


def _first_bad_list_char(text: str) -> int:
    for i, ch in enumerate(text):
        if not (ch.isdigit() or ch in "+-, \t"):
            return i
    for m in re.finditer(r",\s*(?=,|$)", text):
        return m.start()
    return 0


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", len(text)


def _parse_terms(text: str) -> IntPoly:
    terms: dict[int, int] = defaultdict(int)
    toks = list(_tokens(text))
    i = 0

    def peek():
        return toks[i]

    first = True
    while True:
        kind, val, pos = peek()
        if kind == "end":
            if first:
                raise PolyParseError("empty polynomial", pos)
            raise PolyParseError("dangling operator", pos)
        sign = 1
        if kind == "sign":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError(f"expected '+' or '-', got {val!r}", pos)
        first = False

        kind, val, pos = peek()
        coef = None
        if kind == "int":
            coef = int(val)
            i += 1
            kind, val, pos = peek()
            if kind == "star":
                i += 1
                kind, val, pos = peek()
                if kind != "var":
                    raise PolyParseError("expected 'x' after '*'", pos)
        exp = 0
        if kind == "var":
            i += 1
            exp = 1
            kind, val, pos = peek()
            if kind == "pow":
                i += 1
                kind, val, pos = peek()
                if kind != "int":
                    raise PolyParseError("expected integer exponent", pos)
                exp = int(val)
                i += 1
        elif coef is None:
            raise PolyParseError(f"expected a term, got {val or 'end of input'!r}", pos)
        terms[exp] += sign * (1 if coef is None else coef)

        kind, val, pos = peek()
        if kind == "end":
            break
        if kind != "sign":
            raise PolyParseError(f"unexpected token {val!r}", pos)

    if not terms:
        raise PolyParseError("empty polynomial", 0)
    top = max(terms)
    return IntPoly(terms.get(k, 0) for k in range(top + 1))


def format_coeffs(coeffs: Sequence[int]) -> str:
    """Canonical expression for ascending coefficients, e.g. ``x^3 - 2``."""
    pieces = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "x" if e == 1 else f"x^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


def format_poly(c: IntPoly) -> str:
    return format_coeffs(c.coeffs)
