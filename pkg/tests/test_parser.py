import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbdalg.diagram import ONE, ZERO, A, Complement, Diagram, Parallel, Series
from rbdalg.parser import ErrorKind, ParseError, parse, render
from strategies import diagrams


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A1 * A2", Series(A(1), A(2))),
        ("~(A1 + A2)", Complement(Parallel(A(1), A(2)))),
        ("A1 * A2 + A3", Parallel(Series(A(1), A(2)), A(3))),
        ("A1 + A2 * A3", Parallel(A(1), Series(A(2), A(3)))),
        ("A1 & A2 | A3", Parallel(Series(A(1), A(2)), A(3))),
        ("A1*A2*A3", Series(Series(A(1), A(2)), A(3))),
        ("A1+A2+A3", Parallel(Parallel(A(1), A(2)), A(3))),
        ("~~A1", Complement(Complement(A(1)))),
        ("~A1 * A2", Series(Complement(A(1)), A(2))),
        ("1", ONE),
        ("0 + 1", Parallel(ZERO, ONE)),
        ("  (( A12 ))\n", A(12)),
        ("A007", A(7)),
    ],
)
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text, kind, position",
    [
        ("A1 * * A2", ErrorKind.UNEXPECTED_TOKEN, 5),
        ("", ErrorKind.EMPTY_INPUT, 0),
        ("   ", ErrorKind.EMPTY_INPUT, 0),
        ("(A1 + A2", ErrorKind.UNBALANCED_PARENTHESIS, 0),
        ("A1 + A2)", ErrorKind.UNBALANCED_PARENTHESIS, 7),
        ("A0", ErrorKind.BAD_COMPONENT_INDEX, 0),
        ("A + A1", ErrorKind.BAD_COMPONENT_INDEX, 0),
        ("A1 A2", ErrorKind.TRAILING_INPUT, 3),
        ("(A1 A2)", ErrorKind.UNEXPECTED_TOKEN, 4),
        ("A1 +", ErrorKind.UNEXPECTED_TOKEN, 4),
        ("2", ErrorKind.UNEXPECTED_TOKEN, 0),
        ("A1 ? A2", ErrorKind.UNEXPECTED_TOKEN, 3),
        ("()", ErrorKind.UNEXPECTED_TOKEN, 1),
        ("a1", ErrorKind.UNEXPECTED_TOKEN, 0),
    ],
)
def test_parse_errors(text, kind, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.kind == kind
    assert info.value.position == position
    assert 0 <= info.value.position <= len(text)


def test_render_examples():
    assert render(Series(A(1), A(2))) == "A1 * A2"
    assert render(Complement(Complement(A(1)))) == "~~A1"
    assert render(Parallel(Series(A(1), A(2)), A(3))) == "A1 * A2 + A3"
    assert render(Series(A(1), Series(A(2), A(3)))) == "A1 * (A2 * A3)"
    assert render(Series(Parallel(A(1), A(2)), A(3))) == "(A1 + A2) * A3"
    assert render(Complement(Series(A(1), A(2)))) == "~(A1 * A2)"
    assert str(A(1) + ~A(1)) == "A1 + ~A1"


def test_deep_nesting_is_accepted():
    text = "(" * 5000 + "A1" + ")" * 5000
    assert parse(text) == A(1)
    assert isinstance(parse("~" * 50_000 + "A1"), Complement)


def test_huge_component_index():
    with pytest.raises(ParseError) as info:
        parse("A" + "9" * 10_000)
    assert info.value.kind == ErrorKind.BAD_COMPONENT_INDEX


def test_bytes_input():
    assert parse(b"A1 * A2") == Series(A(1), A(2))
    with pytest.raises(ParseError):
        parse(b"\xff\xfe")


@given(diagrams(max_component=12, max_leaves=30))
def test_round_trip(d):
    assert parse(render(d)) == d


@settings(max_examples=500)
@given(st.binary(max_size=40) | st.text(alphabet="A0123456789()~*+&| x", max_size=40))
def test_parse_is_total(data):
    try:
        result = parse(data)
    except ParseError as exc:
        assert exc.kind in ErrorKind
    else:
        assert isinstance(result, Diagram)
