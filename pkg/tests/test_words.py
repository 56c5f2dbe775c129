import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fiberscope.errors import ParseError
from fiberscope.words import (
    LatticePath,
    Word,
    build_path,
    exponent_sums,
    format_word,
    free_reduce,
    parse_word,
)
from oracles import CENSUS_RELATOR

letters = st.lists(st.sampled_from("abAB"), max_size=40)


def test_example_relator_parses_to_19_letters():
    w = parse_word(CENSUS_RELATOR)
    assert len(w) == 19
    assert "".join(w.letters) == "aabbbaaBBAAABBaabbb"


def test_inverse_pair_cancels():
    assert parse_word("a A") == Word()
    assert len(parse_word("a A")) == 0


def test_commutator_is_already_reduced():
    w = parse_word("a b A B")
    assert w.letters == ("a", "b", "A", "B")


def test_uppercase_powers_and_reduction_after_expansion():
    assert parse_word("A^2").letters == ("A", "A")
    assert parse_word("A^-1").letters == ("a",)
    assert parse_word("a^3 a^-2 b").letters == ("a", "b")
    assert parse_word("a^2 b^-3").letters == ("a", "a", "B", "B", "B")


@pytest.mark.parametrize("text", ["c", "a^0", "a^", "ab", "a^x", "a**2", "a^1.5"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_exponent_sums():
    assert exponent_sums(parse_word(CENSUS_RELATOR)) == (3, 2)
    assert exponent_sums(Word()) == (0, 0)
    assert exponent_sums(parse_word("a b A B")) == (0, 0)


def test_build_path_examples():
    assert build_path(parse_word("a b A B")).vertices == ((0, 0), (1, 0), (1, 1), (0, 1), (0, 0))
    assert build_path(parse_word("a^2")).vertices == ((0, 0), (1, 0), (2, 0))
    p = build_path(parse_word(CENSUS_RELATOR))
    assert len(p.vertices) == 20
    assert p.endpoint == (3, 2)
    assert not p.is_closed


def test_lattice_path_rejects_bad_steps():
    with pytest.raises(ValueError):
        LatticePath(((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        LatticePath(((1, 0), (2, 0)))


def test_format_word():
    assert format_word(parse_word("a a B B B A")) == "a^2 b^-3 a^-1"
    assert format_word(Word()) == ""


@given(letters)
def test_endpoint_equals_exponent_sums(ls):
    w = Word(tuple(ls))
    assert build_path(w).endpoint == exponent_sums(w)


@given(letters)
def test_round_trip(ls):
    w = Word(tuple(ls))
    assert parse_word(format_word(w)) == w


@given(letters)
def test_reduction_preserves_exponent_sums(ls):
    raw = (sum(1 for x in ls if x == "a") - ls.count("A"), ls.count("b") - ls.count("B"))
    assert exponent_sums(Word(tuple(ls))) == raw


@given(letters)
def test_reduced_words_have_no_inverse_pairs(ls):
    red = free_reduce(ls)
    assert all(x.swapcase() != y for x, y in zip(red, red[1:]))


def test_rotation_of_cyclically_reduced_word():
    w = parse_word("a b A B")
    assert w.rotate(1).letters == ("b", "A", "B", "a")
    assert w.is_cyclically_reduced()
    assert not parse_word("a b A").is_cyclically_reduced()


def test_inverse_word():
    rng = random.Random(5)
    for _ in range(50):
        w = Word(tuple(rng.choice("abAB") for _ in range(rng.randint(0, 20))))
        assert Word(w.letters + w.inverse().letters) == Word()
