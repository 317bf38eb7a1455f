import json

import pytest
from hypothesis import given

from conftest import matrices
from tropgreen.matrix import Shape
from tropgreen.matrix_io import (
    MatrixFormatError, parse_any, parse_json, parse_text, parse_text_all, to_json, to_text,
)


@given(matrices())
def test_text_round_trip(A):
    assert parse_text(to_text(A)) == A


@given(matrices())
def test_json_round_trip(A):
    assert parse_json(to_json(A)) == A
    assert parse_any(to_json(A)) == [A]


def test_comments_and_several_matrices():
    text = "# two\nn 1 maxplus\n3/2\n\nn 2 bool  # boolean\n1 0\n0 1\n"
    A, B = parse_text_all(text)
    assert A[0, 0] == 1.5
    assert B.kind.value == "bool"


def test_error_position():
    with pytest.raises(MatrixFormatError) as e:
        parse_text("n 2 maxplus\n0 x\n-inf 0\n")
    assert (e.value.line, e.value.col) == (2, 3)


def test_wrong_row_length():
    with pytest.raises(MatrixFormatError) as e:
        parse_text("n 2 maxplus\n0 1 2\n-inf 0\n")
    assert e.value.line == 2


def test_declared_shape_is_checked():
    ok = "n 2 maxplus shape=unitriangular\n0 1\n-inf 0\n"
    assert Shape.UNITRIANGULAR in parse_text(ok).shapes
    with pytest.raises(MatrixFormatError):
        parse_text("n 2 maxplus shape=unitriangular\n0 1\n2 0\n")


@pytest.mark.parametrize("text", ["", "n x maxplus\n", "n 1 weird\n0\n", "n 2 maxplus\n0 0\n"])
def test_malformed(text):
    with pytest.raises(MatrixFormatError):
        parse_text(text)


def test_bad_json():
    with pytest.raises(MatrixFormatError):
        parse_any('{"kind": "maxplus"}')
    with pytest.raises(MatrixFormatError):
        parse_any(json.dumps({"kind": "maxplus", "rows": [["0", "1"]]}))
