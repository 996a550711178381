"""Exact free-group word algebra over the circle generators.

A letter is a nonzero integer: ``+n`` traverses circle ``n`` counterclockwise,
``-n`` clockwise.  A word is a finite tuple of letters; the empty word is the
identity class of the constant loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class WordParseError(ValueError):
    """Raised for malformed word or loop literals; carries the 1-based token index."""

    def __init__(self, message: str, token_index: int):
        super().__init__(f"{message} (token {token_index})")
        self.token_index = token_index


def letter(gen: int, sign: int) -> int:
    """Encode a generator index and an orientation as a signed letter."""
    if gen < 1:
        raise ValueError(f"generator index must be >= 1, got {gen}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return gen * sign


def letter_gen(x: int) -> int:
    return abs(x)


def letter_sign(x: int) -> int:
    return 1 if x > 0 else -1


def is_reduced(letters: tuple[int, ...]) -> bool:
    return all(a != -b for a, b in zip(letters, letters[1:]))


@dataclass(frozen=True)
class Word:
    """An immutable word; ``reduced=True`` certifies no adjacent cancelling pair.

    Equality and hashing look only at the letters, never at the flag.
    """

    letters: tuple[int, ...]
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        for x in self.letters:
            if not isinstance(x, int) or x == 0:
                raise ValueError(f"letters must be nonzero integers, got {x!r}")
        if self.reduced and not is_reduced(self.letters):
            raise ValueError("word flagged reduced but contains a cancelling pair")

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY = Word((), reduced=True)


def word(letters: Iterable[int]) -> Word:
    """Build a word from any iterable of signed letters."""
    return Word(tuple(letters))


def reduce_word(w: Word) -> Word:
    """Free-group normal form via a single left-to-right stack scan."""
    if w.reduced:
        return w
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), reduced=True)


def concat(u: Word, v: Word) -> Word:
    """Literal concatenation; the result is not flagged reduced."""
    letters = u.letters + v.letters
    return Word(letters, reduced=not letters)


def invert(w: Word) -> Word:
    """Group inverse: reverse the letters and flip every sign."""
    return Word(tuple(-x for x in reversed(w.letters)), reduced=w.reduced)


def delete_above(w: Word, n: int) -> Word:
    """Erase every letter on a circle of index > n (retraction onto the first n circles)."""
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    letters = tuple(x for x in w.letters if abs(x) <= n)
    return Word(letters, reduced=not letters)


def count_gen(w: Word, n: int) -> int:
    """Number of letters on circle n, either sign."""
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    return sum(1 for x in w.letters if abs(x) == n)


def max_gen(w: Word) -> int:
    """Largest circle index occurring in w; 0 for the empty word."""
    return max((abs(x) for x in w.letters), default=0)


def format_word(w: Word) -> str:
    """Word literal: whitespace-separated signed integers, ``e`` for the empty word."""
    if not w.letters:
        return "e"
    return " ".join(str(x) for x in w.letters)


def parse_word(text: str) -> Word:
    """Parse a word literal; inverse of :func:`format_word`."""
    tokens = text.split()
    if tokens == ["e"]:
        return EMPTY
    letters = []
    for i, tok in enumerate(tokens, start=1):
        if tok == "e":
            raise WordParseError("'e' is only valid as the whole literal", i)
        try:
            x = int(tok)
        except ValueError:
            raise WordParseError(f"expected a nonzero integer, got {tok!r}", i) from None
        if x == 0:
            raise WordParseError("zero is not a letter", i)
        letters.append(x)
    return Word(tuple(letters), reduced=not letters)
