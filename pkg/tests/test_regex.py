from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from helpers import example_nfa
from oracles import regex_matches
from tqft1d.automaton import accepts, words_up_to
from tqft1d.regex import (
    Concat,
    Empty,
    Epsilon,
    Letter,
    RegexSyntaxError,
    Star,
    Union,
    compile_regex,
    parse_regex,
    to_text,
)

CORPUS = [
    "(a+b)*b(a+b)", "a", "b*", "ab", "a+b", "(ab)*", "a*b*", "(a+b)*", "a(a+b)*b",
    "(a+ab)*", "((a+b)(a+b))*", "a*ba*ba*", "(aa+bb)*", "b(ab)*a", "(a*b)*a", "ε", "∅",
    "a∅+b", "(ε+a)b", "(a+b)*abb", "ba**", "(a+b+ε)(a+b+ε)", "(b+ab)*(ε+a)",
]


def test_parse_example():
    r = parse_regex("(a+b)*b(a+b)")
    ab = Union(Letter("a"), Letter("b"))
    assert r == Concat(Concat(Star(ab), Letter("b")), ab)


def test_double_star_is_legal():
    assert parse_regex("a**") == Star(Star(Letter("a")))


def test_syntax_error_position():
    with pytest.raises(RegexSyntaxError) as err:
        parse_regex("(a+")
    assert err.value.position == 3
    for bad, pos in [("a)", 1), ("", 0), ("*a", 0), ("a+*", 2), ("a$", 1)]:
        with pytest.raises(RegexSyntaxError) as err:
            parse_regex(bad)
        assert err.value.position == pos, bad


@pytest.mark.parametrize("pattern", CORPUS)
def test_compiled_language_matches_oracle(pattern):
    nfa = compile_regex(parse_regex(pattern), ["a", "b"])
    for w in words_up_to("ab", 8):
        assert accepts(nfa, w) == regex_matches(pattern, w), w


def test_example_regex_equals_three_state_machine():
    nfa = compile_regex(parse_regex("(a+b)*b(a+b)"))
    ref = example_nfa()
    for w in words_up_to("ab", 8):
        assert accepts(nfa, w) == accepts(ref, w)


def test_small_cases():
    nfa = compile_regex(parse_regex("a"))
    assert len(nfa.states) == 2
    assert [w for w in words_up_to("a", 3) if accepts(nfa, w)] == ["a"]
    empty = compile_regex(Empty(), ["a", "b"])
    assert not any(accepts(empty, w) for w in words_up_to("ab", 5))
    eps = compile_regex(Epsilon(), ["a"])
    assert [w for w in words_up_to("a", 3) if accepts(eps, w)] == [""]


def test_alphabet_must_cover_letters():
    with pytest.raises(ValueError):
        compile_regex(parse_regex("abc"), ["a", "b"])


_leaf = st.sampled_from([Letter("a"), Letter("b"), Epsilon(), Empty()])
regexes = st.recursive(
    _leaf,
    lambda kids: st.one_of(
        st.builds(Concat, kids, kids), st.builds(Union, kids, kids), st.builds(Star, kids)
    ),
    max_leaves=8,
)


@given(regexes)
def test_printer_round_trip(r):
    assert parse_regex(to_text(r)) == r


@given(regexes)
def test_random_regexes_against_oracle(r):
    text = to_text(r)
    nfa = compile_regex(r, ["a", "b"])
    for w in words_up_to("ab", 5):
        assert accepts(nfa, w) == regex_matches(text, w)
