import numpy as np
import pytest
from hypothesis import given, strategies as st

from szgroup import linalg as la
from szgroup.errors import FieldMismatch, ParseError, UnsupportedM
from szgroup.field import make_field
from szgroup.groupcore import SLP, GenSet, make_rng
from szgroup.textio import (
    format_input, format_point, format_result, parse_input, parse_input_text, parse_result_text,
)


def test_parse_identity(tmp_path):
    p = tmp_path / "id.txt"
    p.write_text("F m=1 poly=0xB\n0x1,0x0,0x0,0x0;0x0,0x1,0x0,0x0;0x0,0x0,0x1,0x0;0x0,0x0,0x0,0x1\n")
    F, mats = parse_input(str(p))
    assert F.q == 8 and len(mats) == 1 and la.is_identity(mats[0])


def test_comments_and_blank_lines():
    F, mats = parse_input_text("# group\n\nF m=2 poly=0x25\n# one\n0x1,0x2;0x3,0x4\n")
    assert F.q == 32 and mats[0].tolist() == [[1, 2], [3, 4]]


@pytest.mark.parametrize("text,line,col", [
    ("F m=1 poly=0xB\n0x1,0xZ;0x0,0x1\n", 2, 5),
    ("F m=1 poly=0xB\n0x1,12;0x0,0x1\n", 2, 5),
    ("G m=1\n", 1, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as ei:
        parse_input_text(text)
    assert ei.value.line == line and ei.value.column == col


def test_non_square_and_mixed():
    with pytest.raises(ParseError):
        parse_input_text("F m=1 poly=0xB\n0x1,0x0;0x1\n")
    with pytest.raises(ParseError):
        parse_input_text("F m=1 poly=0xB\n0x1,0x0;0x0,0x1\n0x1\n")
    with pytest.raises(ParseError):
        parse_input_text("\n# nothing\n")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        parse_input_text("F m=1 poly=0xB\n0x1,0x0;0x0,0x8\n")
    with pytest.raises(FieldMismatch):
        parse_input_text("F m=1 poly=0xD\n0x1\n")
    with pytest.raises(UnsupportedM):
        parse_input_text("F m=12 poly=0xB\n0x1\n")


@given(seed=st.integers(0, 2 ** 32 - 1), m=st.sampled_from([1, 2, 5]))
def test_matrix_roundtrip(seed, m):
    F = make_field(m)
    rng = make_rng(seed)
    mats = [np.array([[F.random(rng) for _ in range(4)] for _ in range(4)]) for _ in range(3)]
    F2, back = parse_input_text(format_input(F, mats))
    assert F2 == F and all(np.array_equal(a, b) for a, b in zip(mats, back))


def test_result_roundtrip(ctx8, rng):
    F = ctx8.F
    gs = GenSet(F, ctx8.std_gens)
    els = [gs.random(rng) for _ in range(3)] + [gs.identity()]
    text = format_result(F, [e.mat for e in els], [gs.slp(e) for e in els])
    F2, mats, slps = parse_result_text(text)
    assert len(mats) == len(slps) == 4
    for e, M, w in zip(els, mats, slps):
        assert np.array_equal(M, e.mat)
        assert np.array_equal(w.evaluate(F, ctx8.std_gens), e.mat)


def test_format_point(F8):
    assert format_point(F8, (1, 0, 7, 2)) == "(0x1:0x0:0x7:0x2)"
