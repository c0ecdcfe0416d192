"""The binary words W(i): W(i)_1 = a, W(i)_{n+1} = W(i)_n^[i] followed by its letter swap.

Letters are stored as +1 (a) and -1 (b).
"""
from __future__ import annotations

from typing import Sequence

A, B = 1, -1
BinaryWord = tuple  # tuple of +1/-1


def _check_index(i: int) -> None:
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"word family index must be a positive integer, got {i!r}")


def star(w: Sequence[int]) -> tuple[int, ...]:
    """Swap a <-> b."""
    return tuple(-x for x in w)


def word_step(w: Sequence[int], i: int) -> tuple[int, ...]:
    _check_index(i)
    if not w:
        raise ValueError("word_step needs a nonempty word")
    block = tuple(w) * i
    return block + star(block)


def finite_word(i: int, n: int) -> tuple[int, ...]:
    """W(i)_n, of length (2i)^(n-1)."""
    _check_index(i)
    if n < 1:
        raise ValueError("n must be >= 1")
    w: tuple[int, ...] = (A,)
    for _ in range(n - 1):
        w = word_step(w, i)
    return w


def word_prefix(i: int, length: int) -> tuple[int, ...]:
    """First ``length`` letters of the infinite word W(i)."""
    _check_index(i)
    if length < 1:
        raise ValueError("length must be >= 1")
    w: tuple[int, ...] = (A,)
    while len(w) < length:
        w = word_step(w, i)
    return w[:length]


def letter_at(i: int, n: int) -> int:
    """n-th letter (1-based) of W(i) without building the word.

    Writing n-1 in base 2i, the letter is b exactly when an odd number of digits are >= i.
    Checked against :func:`word_prefix` in the test suite.
    """
    _check_index(i)
    if n < 1:
        raise ValueError("n must be >= 1")
    m, base, flips = n - 1, 2 * i, 0
    while m:
        m, d = divmod(m, base)
        flips ^= d >= i
    return B if flips else A


def to_ab(w: Sequence[int]) -> str:
    return "".join("a" if x == A else "b" for x in w)


def to_signs(w: Sequence[int]) -> str:
    return ",".join("+1" if x == A else "-1" for x in w)


def from_ab(s: str) -> tuple[int, ...]:
    try:
        return tuple({"a": A, "b": B}[c] for c in s)
    except KeyError as exc:
        raise ValueError(f"not a word over {{a, b}}: {s!r}") from exc
