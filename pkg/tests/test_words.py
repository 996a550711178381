import random

import pytest
from hypothesis import given, strategies as st

from earring.words import (
    EMPTY,
    Word,
    WordParseError,
    concat,
    count_gen,
    delete_above,
    format_word,
    invert,
    is_reduced,
    letter,
    parse_word,
    reduce_word,
    word,
)
from earring.evidence import a_word, w_word

from oracles import naive_reduce, random_word

letters_st = st.integers(min_value=-6, max_value=6).filter(lambda x: x != 0)
words_st = st.lists(letters_st, max_size=80).map(lambda xs: Word(tuple(xs)))


def test_reduce_cancelling_pair():
    assert reduce_word(word([1, -1])) == EMPTY


def test_reduce_nested_cancellation():
    assert reduce_word(word([1, 2, -2, -1, 3])) == word([3])


def test_reduce_commutator_power_of_equal_letters():
    # (x2 x2 x2^-1 x2^-1)^4 collapses; the fixpoint oracle agrees
    w = a_word(2, 2)
    assert naive_reduce(w) == EMPTY
    assert reduce_word(w) == EMPTY


def test_concat_examples():
    assert concat(word([1, 2]), word([-2, 3])) == word([1, 2, -2, 3])
    assert reduce_word(concat(word([1, 2]), word([-2, 3]))) == word([1, 3])
    assert concat(EMPTY, word([5])) == word([5])


def test_concat_families_no_junction_cancellation():
    r = concat(a_word(2, 3), w_word(2, 3))
    assert len(r) == 28
    assert is_reduced(r.letters)


def test_invert_examples():
    assert invert(word([1, 2])) == word([-2, -1])
    assert invert(EMPTY) == EMPTY


@given(words_st)
def test_invert_involution(w):
    assert invert(invert(w)) == w


def test_delete_above_examples():
    assert delete_above(word([1, 3, 2]), 2) == word([1, 2])
    assert delete_above(w_word(2, 3), 1) == word([1, -1, 1, -1])
    assert delete_above(word([4, -2, 9]), 0) == EMPTY


def test_count_gen_examples():
    assert count_gen(w_word(2, 2), 1) == 4
    assert count_gen(EMPTY, 7) == 0
    assert count_gen(a_word(3, 5), 3) == 16


@given(words_st)
def test_reduce_idempotent(w):
    assert reduce_word(reduce_word(w)) == reduce_word(w)


@given(words_st)
def test_reduce_kills_inverse_product(w):
    assert reduce_word(concat(w, invert(w))) == EMPTY


@given(words_st)
def test_stack_reduce_matches_fixpoint_oracle(w):
    assert reduce_word(w) == naive_reduce(w)


def test_stack_reduce_matches_fixpoint_oracle_seeded():
    rng = random.Random(20260810)
    for _ in range(300):
        w = random_word(rng)
        assert reduce_word(w) == naive_reduce(w)
        assert reduce_word(concat(w, invert(w))) == EMPTY


@given(words_st, words_st, st.integers(min_value=0, max_value=7))
def test_delete_above_is_homomorphism_up_to_reduction(u, v, n):
    lhs = reduce_word(delete_above(concat(u, v), n))
    rhs = reduce_word(concat(delete_above(u, n), delete_above(v, n)))
    assert lhs == rhs


@given(words_st, st.integers(min_value=1, max_value=6))
def test_count_gen_reduce_monotone_same_parity(w, n):
    before = count_gen(w, n)
    after = count_gen(reduce_word(w), n)
    assert after <= before
    assert after % 2 == before % 2


def test_letter_encoding():
    assert letter(3, 1) == 3
    assert letter(3, -1) == -3
    with pytest.raises(ValueError):
        letter(0, 1)
    with pytest.raises(ValueError):
        letter(2, 0)


def test_word_rejects_zero_letter():
    with pytest.raises(ValueError):
        word([1, 0, 2])


def test_word_rejects_false_reduced_flag():
    with pytest.raises(ValueError):
        Word((1, -1), reduced=True)


def test_format_empty_word_as_e():
    assert format_word(EMPTY) == "e"
    assert format_word(word([1, 5, -1, -5])) == "1 5 -1 -5"


def test_parse_word_examples():
    assert parse_word("1 5 -1 -5") == word([1, 5, -1, -5])
    assert parse_word("e") == EMPTY


def test_parse_word_zero_is_an_error_with_position():
    with pytest.raises(WordParseError) as exc:
        parse_word("1 0 2")
    assert exc.value.token_index == 2


@given(words_st)
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w)) == w
