import pytest
from hypothesis import given, strategies as st

from defectlab.errors import ParseError
from defectlab.formats import emit, parse_csv, parse_input, parse_json, parse_text

from strategies import configs


def test_parse_text_with_comments_and_fractions():
    A = parse_text("# a line\n2 3\n1 1 1\n0 1/2 1\n")
    assert A.n == 3 and A.matrix[1, 1] * 2 == 1


def test_parse_text_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_text("2 3\n1 1 1\n0 x 1\n")
    assert exc.value.line == 3 and exc.value.column == 2
    with pytest.raises(ParseError):
        parse_text("2 3\n1 1 1\n")
    with pytest.raises(ParseError):
        parse_text("")


def test_parse_json_and_csv():
    assert parse_json('{"rows": [[1, 1], [0, "1/3"]]}').n == 2
    assert parse_csv("1,1,1\n0,1,2\n").e == 2
    with pytest.raises(ParseError):
        parse_json("[1,2]")
    with pytest.raises(ParseError):
        parse_csv("1,2\n1\n")
    with pytest.raises(ParseError):
        parse_json('{"rows": [[true]]}')


def test_rows_are_points():
    A = parse_text("3 2\n0 0\n1 0\n0 1\n", rows_are_points=True)
    assert (A.e, A.n) == (2, 3)


@given(configs(), st.sampled_from(["text", "json", "csv"]))
def test_round_trip(A, fmt):
    assert parse_input(emit(A, fmt), fmt).matrix == A.matrix
