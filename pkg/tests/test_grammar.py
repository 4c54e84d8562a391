import pytest
from hypothesis import given, strategies as st

from bicyclic_ext.endo import ZERO_ENDO, Alpha, Beta, Delta, Gamma
from bicyclic_ext.grammar import (
    ParseError,
    format_pair,
    format_word,
    parse_element,
    parse_endo,
    parse_family,
    parse_word,
)
from bicyclic_ext.omega import EMPTY, STUDY_FAMILY, Family, Tail
from bicyclic_ext.semigroup import ZERO, Triple
from bicyclic_ext.verify import all_endos

triples = st.builds(Triple, st.integers(0, 10**6), st.integers(0, 10**6), st.builds(Tail, st.integers(0, 50)))


@given(triples)
def test_element_round_trip(x):
    assert parse_element(str(x)) == x


def test_element_examples():
    assert parse_element("(0,1,[1))") == Triple(0, 1, Tail(1))
    assert parse_element(" ( 2 , 3 , [ 0 ) ) ") == Triple(2, 3, Tail(0))
    assert parse_element("0") == ZERO
    assert str(ZERO) == "0"


def test_endo_round_trip():
    for e in all_endos(12):
        assert parse_endo(str(e)) == e
    assert parse_endo("zero") == ZERO_ENDO
    assert parse_endo("alpha:3,2") == Alpha(3, 2)
    assert parse_endo("beta: 4, 1") == Beta(4, 1)
    assert parse_endo("gamma:7") == Gamma(7)
    assert parse_endo("delta:1") == Delta(1)


@given(st.text(alphabet="pq", min_size=0, max_size=20))
def test_word_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_family_round_trip():
    assert parse_family("{[0),[1)}") == STUDY_FAMILY
    assert parse_family(str(STUDY_FAMILY)) == STUDY_FAMILY
    fam = Family([Tail(0), Tail(1), EMPTY])
    assert parse_family(str(fam)) == fam


def test_format_pair():
    assert format_pair((1, 0)) == "(1,0)"


@pytest.mark.parametrize(
    "parser,text,position",
    [
        (parse_element, "(1,2,[0)", 8),
        (parse_element, "(1,x,[0))", 3),
        (parse_element, "(1,2,(0))", 5),
        (parse_element, "(1,2,[0)))", 9),
        (parse_element, "", 0),
        (parse_endo, "gamma:", 6),
        (parse_endo, "epsilon:3", 0),
        (parse_endo, "beta:2,2", 0),
        (parse_endo, "alpha:3", 7),
        (parse_word, "pqr", 2),
        (parse_word, "", 0),
        (parse_family, "{[0),[2)}", 0),
        (parse_family, "{[0),x}", 5),
    ],
)
def test_parse_error_positions(parser, text, position):
    with pytest.raises(ParseError) as info:
        parser(text)
    assert info.value.position == position
    assert "expected" in str(info.value)


def test_range_error_names_the_constraint():
    with pytest.raises(ParseError) as info:
        parse_endo("beta:2,2")
    assert "p in 1..1" in str(info.value)
