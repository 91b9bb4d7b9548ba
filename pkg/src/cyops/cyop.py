"""Reader/writer for the ``.cyop`` operator text format.

::

    # comment
    order: 3
    degree: 1
    P[0]: 0 0 0 1
    P[1]: 1/8 3/4 3/2 1

``P[k]`` lists the T^0..T^n coefficients of P_k as integers or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .theta import OperatorError, ThetaOperator, from_theta_coefficients


class CyopParseError(OperatorError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_KEY = re.compile(r"^(order|degree)\s*:\s*(\S+)$")
_ROW = re.compile(r"^P\[(\d+)\]\s*:(.*)$")
_NUM = re.compile(r"^[+-]?\d+(/\d+)?$")


def _fraction(tok: str, lineno: int) -> Fraction:
    if not _NUM.match(tok):
        raise CyopParseError(f"bad coefficient {tok!r}", lineno)
    if "/" in tok:
        den = int(tok.split("/")[1])
        if den == 0:
            raise CyopParseError("zero denominator", lineno)
        if Fraction(tok).denominator != den:
            raise CyopParseError(f"fraction {tok!r} is not in lowest terms", lineno)
    return Fraction(tok)


def loads(text: str) -> ThetaOperator:
    order = degree = None
    rows: dict[int, list[Fraction]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _KEY.match(line):
            key, val = m.groups()
            if not val.isdigit():
                raise CyopParseError(f"{key} must be a non-negative integer", lineno)
            if key == "order":
                order = int(val)
            else:
                degree = int(val)
            continue
        if m := _ROW.match(line):
            if order is None or degree is None:
                raise CyopParseError("P[k] row before order/degree header", lineno)
            k = int(m.group(1))
            if k > degree:
                raise CyopParseError(f"P[{k}] exceeds degree {degree}", lineno)
            if k in rows:
                raise CyopParseError(f"duplicate P[{k}]", lineno)
            toks = m.group(2).split()
            if len(toks) != order + 1:
                raise CyopParseError(f"P[{k}] needs {order + 1} coefficients, got {len(toks)}", lineno)
            rows[k] = [_fraction(t, lineno) for t in toks]
            continue
        raise CyopParseError(f"unrecognized line {raw.strip()!r}", lineno)
    if order is None or degree is None:
        raise CyopParseError("missing order/degree header")
    missing = [k for k in range(degree + 1) if k not in rows]
    if missing:
        raise CyopParseError(f"missing rows P[{missing[0]}]")
    op = from_theta_coefficients(order, [rows[k] for k in range(degree + 1)])
    if op.degree != degree:
        raise CyopParseError(f"declared degree {degree} but top row is zero")
    return op


def dumps(op: ThetaOperator, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"order: {op.order}")
    lines.append(f"degree: {op.degree}")
    for k, pk in enumerate(op.coeffs):
        cs = [pk[i] if i < len(pk) else Fraction(0) for i in range(op.order + 1)]
        lines.append(f"P[{k}]: " + " ".join(str(c) for c in cs))
    return "\n".join(lines) + "\n"


def load(path) -> ThetaOperator:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(op: ThetaOperator, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(op, comment), encoding="utf-8")
