# tests/test_notation.py
import pytest

from core.errors import CombinatoricsError, InvalidPermutationError, InvalidWordError
from core.notation import (
    clean_text, format_partition, format_permutation, format_set, format_tableau,
    parse_partition, parse_permutation, parse_tableau, parse_word, word_key,
)


@pytest.mark.parametrize("text", ["5,1,3,4,2", "51342", "[5, 1, 3, 4, 2]", " 5 1 3 4 2 "])
def test_parse_permutation_formats(text):
    assert parse_permutation(text) == (5, 1, 3, 4, 2)


def test_parse_permutation_reports_missing_and_duplicated():
    with pytest.raises(InvalidPermutationError) as info:
        parse_permutation("5113")
    message = str(info.value)
    assert "missing {2,4}" in message
    assert "duplicated {1}" in message
    assert "out of range {5}" in message


def test_parse_permutation_rejects_empty_and_long_digit_strings():
    with pytest.raises(InvalidPermutationError):
        parse_permutation("")
    with pytest.raises(InvalidPermutationError):
        parse_permutation("1234567890")
    with pytest.raises(InvalidPermutationError):
        parse_permutation("1,two,3")


def test_format_permutation_switches_to_commas():
    assert format_permutation((5, 1, 3, 4, 2)) == "51342"
    assert format_permutation(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"


def test_parse_word():
    assert parse_word("432134") == (4, 3, 2, 1, 3, 4)
    assert parse_word("10-9-8") == (10, 9, 8)
    assert parse_word("e") == ()
    assert parse_word("") == ()
    with pytest.raises(InvalidWordError):
        parse_word("1,x")


def test_word_key():
    assert word_key((3, 2, 1, 2, 3), 4) == "32123"
    assert word_key((10, 9), 11) == "10-9"
    assert word_key((), 5) == "e"


def test_sets_and_partitions():
    assert format_set({4, 1}) == "{1,4}"
    assert format_set([]) == "{}"
    assert format_partition((3, 2)) == "(3,2)"
    assert format_partition(()) == "∅"
    assert parse_partition("(3,2)") == (3, 2)
    assert parse_partition("∅") == ()
    assert parse_partition("(3)") == (3,)
    with pytest.raises(CombinatoricsError):
        parse_partition("(a,1)")


def test_tableau_text():
    assert format_tableau((3, 4, 5), 2, 1, 5) == "345|2|1"
    assert format_tableau(tuple(range(1, 9)), 10, 9, 10) == "1,2,3,4,5,6,7,8|10|9"
    assert parse_tableau("345|2|1") == ((3, 4, 5), 2, 1)
    assert parse_tableau("1,2,3,4,5,6,7,8|10|9") == (tuple(range(1, 9)), 10, 9)
    with pytest.raises(CombinatoricsError):
        parse_tableau("12|3")
    with pytest.raises(CombinatoricsError):
        parse_tableau("12|x|3")


def test_clean_text():
    assert clean_text("[5, 1, 3]") == "5,1,3"
    assert clean_text(None) == ""
