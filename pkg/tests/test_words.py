import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmcf.words import finite_word, from_ab, letter_at, to_ab, to_signs, word_prefix, word_step


@pytest.mark.parametrize(
    "w, i, expected",
    [
        ("a", 1, "ab"),
        ("ab", 1, "abba"),
        ("a", 2, "aabb"),
        ("aabb", 2, "aabbaabbbbaabbaa"),
    ],
)
def test_word_step(w, i, expected):
    assert to_ab(word_step(from_ab(w), i)) == expected


def test_word_step_empty():
    with pytest.raises(ValueError):
        word_step((), 2)


def test_w2_prefix_36():
    assert to_ab(word_prefix(2, 36)) == "aabbaabbbbaabbaaaabbaabbbbaabbaabbaa"


def test_w1_prefix_16():
    # the first 16 letters of the displayed W(1) prefix; see test_acceptance for all 19
    assert to_ab(word_prefix(1, 16)) == "abbabaabbaababba"


def test_w1_is_thue_morse_a010060():
    # A010060(n) = binary digit sum of n mod 2; a <-> 0, b <-> 1
    w = word_prefix(1, 4096)
    assert [0 if x == 1 else 1 for x in w] == [bin(n).count("1") % 2 for n in range(4096)]


@pytest.mark.parametrize("i", range(1, 7))
def test_first_letter_is_a(i):
    assert word_prefix(i, 1) == (1,)
    assert letter_at(i, 1) == 1


def test_letter_at_examples():
    assert letter_at(1, 2) == -1
    assert letter_at(2, 5) == 1


@pytest.mark.parametrize("i", range(1, 6))
def test_prefix_stability_length_balance(i):
    prev = finite_word(i, 1)
    for n in range(2, 7):
        if (2 * i) ** (n - 1) > 10**6:
            break
        cur = finite_word(i, n)
        assert len(cur) == (2 * i) ** (n - 1)
        assert cur[: len(prev)] == prev
        assert sum(cur) == 0
        prev = cur


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_letter_at_matches_recursion(i):
    L = (2 * i) ** 4
    w = word_prefix(i, L)
    assert [letter_at(i, n) for n in range(1, L + 1)] == list(w)


@given(st.integers(1, 6), st.integers(1, 5000))
def test_prefix_is_prefix_of_longer(i, n):
    assert word_prefix(i, n) == word_prefix(i, n + 37)[:n]


def test_renderings():
    w = word_prefix(1, 4)
    assert to_ab(w) == "abba"
    assert to_signs(w) == "+1,-1,-1,+1"


@pytest.mark.parametrize("bad", [0, -1])
def test_bad_index(bad):
    with pytest.raises(ValueError):
        word_prefix(bad, 3)
