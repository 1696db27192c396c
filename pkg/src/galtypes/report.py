"""Serialization of determination and bound reports: JSON, CSV and plain text."""
from __future__ import annotations

import csv
import io
import json
import os
import re
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional

from .disc_bound import BoundReport
from .galois_id import DeterminationReport
from .parsing import format_poly

SCHEMA_VERSION = 1
NO_TIMESTAMP_ENV = "GALTYPES_NO_TIMESTAMP"
COLOR_ENV = "GALTYPES_COLOR"


def timestamps_disabled() -> bool:
    return os.environ.get(NO_TIMESTAMP_ENV, "").strip().lower() not in ("", "0", "false", "no")


def color_enabled() -> bool:
    return os.environ.get(COLOR_ENV, "").strip().lower() in ("1", "true", "yes", "always")


def _frac(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _exact_log2(base: int, exponent: int) -> str:
    """exponent * log2(base); rational only when base is a power of two."""
    if base & (base - 1) == 0:
        return str(exponent * (base.bit_length() - 1))
    return f"{exponent}*log2({base})"


def bound_to_dict(b: BoundReport) -> dict:
    out = {
        "n": b.n,
        "root_bound": _frac(b.root_bound),
        "z_bound": _frac(b.z_bound),
        "beta_bound": _frac(b.beta_bound),
        "h_degree_bound": str(b.h_degree_bound),
        "disc_bound_base": str(b.disc_bound_base),
        "disc_bound_exponent": str(b.disc_bound_exponent),
        "disc_bound": None if b.disc_bound is None else str(b.disc_bound),
        "disc_bound_log2": _exact_log2(b.disc_bound_base, b.disc_bound_exponent),
        "disc_bound_log2_approx": f"{b.disc_bound_log2:.6f}",
        "A": None if b.A is None else _frac(b.A),
        "prime_bound_log2": (
            f"1 + A*{_exact_log2(b.disc_bound_base, b.disc_bound_exponent)}" if b.A is None
            else f"1 + {_frac(b.A)}*{_exact_log2(b.disc_bound_base, b.disc_bound_exponent)}"
        ),
        "prime_bound_log2_approx": None if b.A is None else f"{b.prime_bound_log2:.6f}",
    }
    return out


def report_to_dict(rep: DeterminationReport, bound: Optional[BoundReport] = None,
                   with_expected: bool = False, timestamp: bool = True) -> dict:
    freqs = rep.frequencies()
    frequencies = []
    for t, q in freqs.items():
        entry = {"type": list(t), "count": rep.counts[t], "exact": _frac(q), "decimal": f"{float(q):.6f}"}
        frequencies.append(entry)
    verdict = {"kind": rep.verdict.kind, "groups": list(rep.verdict.groups)}
    if rep.verdict.kind == "conclusive":
        verdict["via"] = rep.verdict.via
    out = {
        "schema_version": SCHEMA_VERSION,
        "poly": format_poly(rep.polynomial),
        "degree": rep.degree,
        "disc": str(rep.disc),
        "prime_limit": rep.prime_limit,
        "primes_scanned": rep.primes_scanned,
        "skipped": [{"prime": o.prime, "reason": o.skip_reason} for o in rep.skipped],
        "observed_types": [list(t) for t in sorted(rep.observed_types)],
        "counts": [{"type": list(t), "count": k} for t, k in sorted(rep.counts.items())],
        "frequencies": frequencies,
        "candidates": list(rep.candidates),
        "verdict": verdict,
        "mode": rep.mode,
        "disc_refinement": rep.disc_refinement,
    }
    if with_expected and rep.verdict.kind == "conclusive" and rep.expected_densities:
        out["expected_densities"] = [
            {"type": list(t), "exact": _frac(q), "decimal": f"{float(q):.6f}"}
            for t, q in sorted(rep.expected_densities.items())
        ]
    if bound is not None:
        out["bound"] = bound_to_dict(bound)
    if timestamp:
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return out


_INT_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def to_json(data: dict) -> str:
    text = json.dumps(data, indent=2)
    # keep integer arrays such as factorization types on one line
    return _INT_ARRAY.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text) + "\n"


def to_csv(rep: DeterminationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["prime", "type_or_skip_reason"])
    for o in rep.observations:
        w.writerow([o.prime, o.skip_reason if o.skipped else repr(o.ftype)])
    return buf.getvalue()


def _paint(text: str, code: str, color: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if color else text


def to_text(rep: DeterminationReport, bound: Optional[BoundReport] = None,
            with_expected: bool = False, color: bool = False) -> str:
    lines = [
        f"polynomial      {format_poly(rep.polynomial)}",
        f"degree          {rep.degree}",
        f"discriminant    {rep.disc}",
        f"primes scanned  {rep.primes_scanned} (p <= {rep.prime_limit}, last {rep.last_prime})",
        f"skipped         {', '.join(f'{o.prime} ({o.skip_reason})' for o in rep.skipped) or 'none'}",
        f"mode            {rep.mode}",
        "observed types:",
    ]
    freqs = rep.frequencies()
    for t, q in freqs.items():
        lines.append(f"  {t!r:<14} {rep.counts[t]:>7}  {float(q):.6f}")
    lines.append(f"candidates      {', '.join(rep.candidates) or 'none'}")
    code = "32" if rep.verdict.kind == "conclusive" else "33"
    lines.append(f"verdict         {_paint(str(rep.verdict), code, color)}")
    if with_expected and rep.expected_densities:
        lines.append(f"expected densities for {rep.verdict.group}:")
        for t, q in sorted(rep.expected_densities.items()):
            seen = freqs.get(t, Fraction(0))
            lines.append(f"  {t!r:<14} {_frac(q):>7}  {float(q):.6f}  observed {float(seen):.6f}")
    if bound is not None:
        lines.append(bound_to_text(bound))
    return "\n".join(lines) + "\n"


def bound_to_text(b: BoundReport) -> str:
    d = bound_to_dict(b)
    rows = [
        ("root bound B_c", d["root_bound"]),
        ("multiplier bound", d["z_bound"]),
        ("beta bound B_beta", d["beta_bound"]),
        ("deg h <=", d["h_degree_bound"]),
        ("disc bound", d["disc_bound"] if d["disc_bound"] is not None
         else f"{d['disc_bound_base']}^{d['disc_bound_exponent']}"),
        ("log2 disc bound", f"{d['disc_bound_log2']} ~ {d['disc_bound_log2_approx']}"),
        ("log2 prime bound", d["prime_bound_log2"] + (f" ~ {d['prime_bound_log2_approx']}"
                                                      if d["prime_bound_log2_approx"] else "")),
    ]
    return "\n".join(f"{k:<18}{v}" for k, v in rows)
