"""Identity reports and machine-readable output.

An :class:`IdentityReport` is the artifact's unit of evidence: one named
identity checked at one parameter point, with both sides, the residual, the
tolerance regime, and the methods that produced each side.  The JSON writer
serializes reals with 17 significant digits in a fixed field order so that
identical runs produce byte-identical output.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

__all__ = ["IdentityReport", "render_json", "render_table", "write_reports"]


@dataclass(frozen=True)
class IdentityReport:
    """One verified identity at one grid point.

    Invariants: ``abs_residual == |lhs - rhs|`` exactly as computed, and
    ``passed`` is ``abs_residual <= tolerance + (tail_bound or 0)``.  Use
    :meth:`build` so both are enforced by construction.  The wire name of
    ``passed`` is ``pass``.
    """

    name: str
    params: dict[str, float] = field(compare=False)
    lhs: float
    rhs: float
    abs_residual: float
    tolerance: float
    passed: bool
    method_lhs: str
    method_rhs: str
    tail_bound: Optional[float] = None
    terms_used: Optional[int] = None

    @classmethod
    def build(
        cls,
        name: str,
        params: dict[str, float],
        lhs: float,
        rhs: float,
        tolerance: float,
        method_lhs: str,
        method_rhs: str,
        tail_bound: Optional[float] = None,
        terms_used: Optional[int] = None,
    ) -> "IdentityReport":
        residual = abs(lhs - rhs)
        budget = tolerance + (tail_bound if tail_bound is not None else 0.0)
        return cls(
            name=name,
            params=dict(params),
            lhs=lhs,
            rhs=rhs,
            abs_residual=residual,
            tolerance=tolerance,
            passed=residual <= budget,
            method_lhs=method_lhs,
            method_rhs=method_rhs,
            tail_bound=tail_bound,
            terms_used=terms_used,
        )


def _real(x: float) -> str:
    # 17 significant digits round-trips any binary64 value.
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot serialize non-finite real {x!r}")
    return format(x, ".17g")


def _report_json(r: IdentityReport) -> str:
    parts = [f'"name": {json.dumps(r.name)}']
    inner = ", ".join(f"{json.dumps(k)}: {_real(v)}" for k, v in r.params.items())
    parts.append(f'"params": {{{inner}}}')
    parts.append(f'"lhs": {_real(r.lhs)}')
    parts.append(f'"rhs": {_real(r.rhs)}')
    parts.append(f'"abs_residual": {_real(r.abs_residual)}')
    parts.append(f'"tolerance": {_real(r.tolerance)}')
    if r.tail_bound is not None:
        parts.append(f'"tail_bound": {_real(r.tail_bound)}')
    parts.append(f'"pass": {"true" if r.passed else "false"}')
    parts.append(f'"method_lhs": {json.dumps(r.method_lhs)}')
    parts.append(f'"method_rhs": {json.dumps(r.method_rhs)}')
    if r.terms_used is not None:
        parts.append(f'"terms_used": {r.terms_used}')
    return "{" + ", ".join(parts) + "}"


def render_json(reports: Sequence[IdentityReport]) -> str:
    if not reports:
        return "[]\n"
    body = ",\n  ".join(_report_json(r) for r in reports)
    return "[\n  " + body + "\n]\n"


_TABLE_HEADER = (
    f"{'identity':<12} {'params':<28} {'lhs':>22} {'rhs':>22} "
    f"{'residual':>10} {'tol':>9} {'tail':>9} {'pass':>5}"
)


def render_table(reports: Sequence[IdentityReport]) -> str:
    lines = [_TABLE_HEADER, "-" * len(_TABLE_HEADER)]
    for r in reports:
        params = " ".join(f"{k}={v:.6g}" for k, v in r.params.items())
        tail = f"{r.tail_bound:9.2e}" if r.tail_bound is not None else f"{'-':>9}"
        lines.append(
            f"{r.name:<12} {params:<28} {r.lhs:>22.15e} {r.rhs:>22.15e} "
            f"{r.abs_residual:>10.2e} {r.tolerance:>9.1e} {tail} "
            f"{'ok' if r.passed else 'FAIL':>5}"
        )
    return "\n".join(lines) + "\n"


def write_reports(
    reports: Sequence[IdentityReport],
    fmt: str,
    destination: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """Render ``reports`` as ``fmt`` ("json" or "table") to a path or stream.

    Exit-code policy lives with the caller; this function only raises OSError
    on unwritable destinations.
    """
    if fmt == "json":
        text = render_json(reports)
    elif fmt == "table":
        text = render_table(reports)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if destination is not None:
        with open(destination, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif stream is not None:
        stream.write(text)
    else:
        import sys

        sys.stdout.write(text)
