"""Text formats for fields, matrices and point lists.

A matrix file starts with the field header ``F m=<m> poly=0x<bits>`` and has
one matrix per following line, rows separated by ';' and entries by ','.
"""
import re

import numpy as np

from .errors import FieldMismatch, ParseError, UnsupportedM
from .field import PRIMITIVE_POLYS, make_field

_HEADER = re.compile(r"^F\s+m=(\d+)\s+poly=(0x[0-9a-fA-F]+)\s*$")


def parse_header(line: str, lineno: int = 1):
    mt = _HEADER.match(line.strip())
    if not mt:
        raise ParseError("bad field header", line=lineno, column=1)
    m = int(mt.group(1))
    poly = int(mt.group(2), 16)
    if m not in PRIMITIVE_POLYS:
        raise UnsupportedM(f"m={m} outside 1..10")
    if poly != PRIMITIVE_POLYS[m]:
        raise FieldMismatch(f"poly 0x{poly:x} differs from the built-in 0x{PRIMITIVE_POLYS[m]:x}")
    return make_field(m)


def format_matrix(F, g) -> str:
    return ";".join(",".join(F.fmt(int(x)) for x in row) for row in np.asarray(g))


def parse_matrix(F, text: str, lineno: int = 1) -> np.ndarray:
    rows = []
    col = 1
    for r in text.strip().split(";"):
        row = []
        for ent in r.split(","):
            s = ent.strip()
            if not re.fullmatch(r"0[xX][0-9a-fA-F]+", s):
                raise ParseError(f"bad entry {s!r}", line=lineno, column=col)
            v = int(s, 16)
            if v >= F.q:
                raise FieldMismatch(f"entry {s} is not in GF(2^{F.n}) (line {lineno}, column {col})")
            row.append(v)
            col += len(ent) + 1
        rows.append(row)
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix is not square", line=lineno)
    return np.array(rows, dtype=np.int64)


def parse_input_text(text: str):
    lines = [ln for ln in text.splitlines()]
    idx = [i for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not idx:
        raise ParseError("empty input", line=1)
    F = parse_header(lines[idx[0]], idx[0] + 1)
    mats = [parse_matrix(F, lines[i], i + 1) for i in idx[1:]]
    if mats and any(M.shape != mats[0].shape for M in mats):
        raise ParseError("matrices of different degrees")
    return F, mats


def parse_input(path: str):
    with open(path) as fh:
        return parse_input_text(fh.read())


def format_input(F, mats) -> str:
    return "\n".join([F.header()] + [format_matrix(F, g) for g in mats]) + "\n"


def format_point(F, P) -> str:
    return "(" + ":".join(F.fmt(int(x)) for x in P) + ")"


# results: a matrix file followed by one "SLP <k>" block per matrix

def format_result(F, mats, slps=None) -> str:
    out = [F.header()] + [format_matrix(F, g) for g in mats]
    for k, w in enumerate(slps or []):
        out.append(f"SLP {k}")
        if len(w):
            out.append(w.to_text())
    return "\n".join(out) + "\n"


def parse_result_text(text: str):
    """(F, mats, slps) from format_result output."""
    from .groupcore import SLP

    lines = text.splitlines()
    cut = next((i for i, ln in enumerate(lines) if ln.startswith("SLP ")), len(lines))
    F, mats = parse_input_text("\n".join(lines[:cut]))
    slps = []
    block = None
    for i in range(cut, len(lines)):
        ln = lines[i]
        if ln.startswith("SLP "):
            if block is not None:
                slps.append(SLP.from_text("\n".join(block)) if block else SLP([]))
            if ln.split()[1:] != [str(len(slps))]:
                raise ParseError("SLP blocks out of order", line=i + 1)
            block = []
        elif ln.strip():
            block.append(ln)
    if block is not None:
        slps.append(SLP.from_text("\n".join(block)) if block else SLP([]))
    return F, mats, slps
