"""Truncated inverse-limit representation of the earring's fundamental group.

Level ``n`` sees only the first ``n`` circles; the level maps erase higher
generators and renormalize.  A finitely supported class is pinned down by its
level tower up to the largest generator it uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import Word, delete_above, format_word, is_reduced, max_gen, parse_word, reduce_word


def project(w: Word, n: int) -> Word:
    """Image of w at level n: erase generators above n, then reduce."""
    return reduce_word(delete_above(w, n))


@dataclass(frozen=True)
class CoherentSequence:
    """Reduced words at levels 1..depth, consistent under generator deletion.

    ``levels[i]`` is the level-(i+1) word.  Construction does not validate;
    use :func:`check_coherent`.
    """

    levels: tuple[Word, ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def to_json(self) -> str:
        return json.dumps([format_word(w) for w in self.levels])


def coherent_from_json(text: str) -> CoherentSequence:
    literals = json.loads(text)
    return CoherentSequence(tuple(parse_word(s) for s in literals))


def phi(w: Word, depth: int) -> CoherentSequence:
    """The level tower of w down to the given depth."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    return CoherentSequence(tuple(project(w, n) for n in range(1, depth + 1)))


def check_coherent(c: CoherentSequence) -> bool:
    """True iff every level is reduced, supported on its allowed generators,
    and maps onto the level below under deletion + reduction."""
    if c.depth < 1:
        return False
    for i, w in enumerate(c.levels):
        n = i + 1
        if not is_reduced(w.letters) or max_gen(w) > n:
            return False
    for i in range(c.depth - 1):
        if project(c.levels[i + 1], i + 1) != c.levels[i]:
            return False
    return True
