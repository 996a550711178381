"""Combinatorial based loops in the planar Hawaiian earring.

The earring is the union of circles ``X_n`` of radius ``1/n`` centered at
``(1/n, 0)``, all through the basepoint ``p = (0, 0)``.  A representable loop
is a timed sequence of dwells at ``p`` and full traversals of single circles;
time arithmetic is exact rational so breakpoints and midpoints are hit
exactly, while planar distances use floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, Union

import numpy as np

from .words import Word, WordParseError, concat, invert, reduce_word

#: Token marking a dwell slot in a padded word (0 is never a valid letter).
DWELL: Final[int] = 0

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Base:
    """The basepoint ``p = (0, 0)``."""

    def __repr__(self) -> str:
        return "Base()"


BASE = Base()


@dataclass(frozen=True)
class OnCircle:
    """A point of circle ``gen`` at arc position ``s``, measured counterclockwise.

    ``s`` is strictly inside (0, 1); positions 0 and 1 are the basepoint and
    must be represented as :data:`BASE`.
    """

    gen: int
    s: Fraction

    def __post_init__(self) -> None:
        if self.gen < 1:
            raise ValueError(f"circle index must be >= 1, got {self.gen}")
        if not (0 < self.s < 1):
            raise ValueError(f"arc position must lie strictly in (0,1), got {self.s}")


HEPoint = Union[Base, OnCircle]


def embed(pt: HEPoint) -> tuple[float, float]:
    """Planar coordinates of a point: circle ``n`` has center ``(1/n, 0)`` and
    radius ``1/n``; arc position ``s`` sits at angle ``pi + 2*pi*s``.

    The antipode ``s = 1/2`` is returned exactly as ``(2/n, 0)``.
    """
    if isinstance(pt, Base):
        return (0.0, 0.0)
    n = pt.gen
    if pt.s == _HALF:
        return (2.0 / n, 0.0)
    theta = math.pi * (1.0 + 2.0 * float(pt.s))
    return ((1.0 + math.cos(theta)) / n, math.sin(theta) / n)


@dataclass(frozen=True)
class Dwell:
    duration: Fraction

    def __post_init__(self) -> None:
        if self.duration <= 0:
            raise ValueError(f"duration must be positive, got {self.duration}")


@dataclass(frozen=True)
class Traverse:
    gen: int
    direction: int
    duration: Fraction

    def __post_init__(self) -> None:
        if self.gen < 1:
            raise ValueError(f"circle index must be >= 1, got {self.gen}")
        if self.direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {self.direction}")
        if self.duration <= 0:
            raise ValueError(f"duration must be positive, got {self.duration}")


Move = Union[Dwell, Traverse]


@dataclass(frozen=True)
class CombLoop:
    """A based loop as a nonempty move sequence whose durations sum to 1."""

    moves: tuple[Move, ...]

    def __post_init__(self) -> None:
        if not self.moves:
            raise ValueError("a loop needs at least one move; use constant_loop()")
        total = sum((m.duration for m in self.moves), Fraction(0))
        if total != 1:
            raise ValueError(f"durations must sum to 1, got {total}")

    def breakpoints(self) -> list[Fraction]:
        """Move boundaries 0 = b_0 < b_1 < ... < b_m = 1, exact."""
        out = [Fraction(0)]
        for m in self.moves:
            out.append(out[-1] + m.duration)
        return out


def constant_loop() -> CombLoop:
    return CombLoop((Dwell(Fraction(1)),))


def compile_loop(tokens: list[int] | tuple[int, ...]) -> CombLoop:
    """Compile a padded word into a loop, one move per token with uniform duration.

    A letter ``+-n`` becomes a full traversal of circle ``n``; the dwell
    marker becomes a dwell at the basepoint.
    """
    if not tokens:
        raise ValueError("cannot compile empty loop; use constant loop constructor")
    d = Fraction(1, len(tokens))
    moves: list[Move] = []
    for t in tokens:
        if t == DWELL:
            moves.append(Dwell(d))
        else:
            moves.append(Traverse(abs(t), 1 if t > 0 else -1, d))
    return CombLoop(tuple(moves))


def loop_of_word(w: Word) -> CombLoop:
    """Uniform-duration loop traversing the letters of w; constant for the empty word."""
    if not w.letters:
        return constant_loop()
    return compile_loop(list(w.letters))


def eval_loop(f: CombLoop, t: Fraction | int) -> HEPoint:
    """The point of the earring the loop occupies at exact time t in [0, 1].

    Move boundaries evaluate to the basepoint; inside a traversal the arc
    position advances at constant speed.
    """
    t = Fraction(t)
    if not (0 <= t <= 1):
        raise ValueError(f"time must lie in [0,1], got {t}")
    start = Fraction(0)
    for m in f.moves:
        end = start + m.duration
        if t < end or end == 1:
            if t == start or t == end:
                return BASE
            if isinstance(m, Dwell):
                return BASE
            u = (t - start) / m.duration
            s = u if m.direction == 1 else 1 - u
            return OnCircle(m.gen, s)
        start = end
    return BASE


def retract_loop(f: CombLoop, n: int) -> CombLoop:
    """Collapse every traversal of a circle of index > n to a dwell of equal duration."""
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    moves: list[Move] = []
    for m in f.moves:
        if isinstance(m, Traverse) and m.gen > n:
            moves.append(Dwell(m.duration))
        else:
            moves.append(m)
    return CombLoop(tuple(moves))


def word_of(f: CombLoop) -> Word:
    """The unreduced word read off the traversals, dwells dropped."""
    letters = tuple(m.gen * m.direction for m in f.moves if isinstance(m, Traverse))
    return Word(letters, reduced=not letters)


def concat_loops(f: CombLoop, g: CombLoop) -> CombLoop:
    """Path concatenation: f on [0, 1/2], then g on [1/2, 1]."""

    def halved(h: CombLoop) -> list[Move]:
        out: list[Move] = []
        for m in h.moves:
            if isinstance(m, Dwell):
                out.append(Dwell(m.duration / 2))
            else:
                out.append(Traverse(m.gen, m.direction, m.duration / 2))
        return out

    return CombLoop(tuple(halved(f) + halved(g)))


def homotopy_class_equal(f: CombLoop, g: CombLoop) -> bool:
    """Decide path-homotopy of representable loops algebraically: the words
    must be freely equal, which injectivity of the level tower makes sound."""
    return not reduce_word(concat(word_of(f), invert(word_of(g)))).letters


def lipschitz_bound(f: CombLoop) -> float:
    """Max planar speed over moves: a traversal of circle n covers arc length
    2*pi/n in its duration, a dwell covers none."""
    best = 0.0
    for m in f.moves:
        if isinstance(m, Traverse):
            best = max(best, (2.0 * math.pi / m.gen) / float(m.duration))
    return best


def _eval_sorted(f: CombLoop, times: list[Fraction]) -> list[HEPoint]:
    """Evaluate at ascending exact times with a single sweep over the moves."""
    bps = f.breakpoints()
    out: list[HEPoint] = []
    i = 0
    for t in times:
        while i + 1 < len(bps) - 1 and t >= bps[i + 1]:
            i += 1
        if t == bps[i] or t == bps[i + 1]:
            out.append(BASE)
            continue
        m = f.moves[i]
        if isinstance(m, Dwell):
            out.append(BASE)
            continue
        u = (t - bps[i]) / m.duration
        out.append(OnCircle(m.gen, u if m.direction == 1 else 1 - u))
    return out


def _move_speed(m: Move) -> float:
    if isinstance(m, Dwell):
        return 0.0
    return (2.0 * math.pi / m.gen) / float(m.duration)


def _move_coords(m: Move, start: float, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(m, Dwell):
        zero = np.zeros_like(ts)
        return zero, zero
    u = (ts - start) / float(m.duration)
    s = u if m.direction == 1 else 1.0 - u
    theta = np.pi * (1.0 + 2.0 * s)
    return (1.0 + np.cos(theta)) / m.gen, np.sin(theta) / m.gen


def sup_distance(f: CombLoop, g: CombLoop, eps: float) -> float:
    """Estimate of the uniform (sup) planar distance between two loops,
    guaranteed within eps of the true supremum.

    Every move boundary and midpoint of both loops is sampled exactly.  On
    each interval of the common breakpoint refinement both loops run a single
    move, so the pair distance is Lipschitz with the two move speeds summed;
    the interval gets a grid of step 2*eps / (speed sum).  Intervals where
    both loops execute the identical move over the identical span contribute
    exactly zero and are skipped.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")

    fb = f.breakpoints()
    gb = g.breakpoints()
    exact_times: set[Fraction] = set(fb) | set(gb)
    for bps in (fb, gb):
        for lo, hi in zip(bps, bps[1:]):
            exact_times.add((lo + hi) / 2)
    ts_sorted = sorted(exact_times)
    best = 0.0
    for pf, pg in zip(_eval_sorted(f, ts_sorted), _eval_sorted(g, ts_sorted)):
        fx, fy = embed(pf)
        gx, gy = embed(pg)
        best = max(best, math.hypot(fx - gx, fy - gy))

    events = sorted(set(fb) | set(gb))
    fi = gi = 0
    for a, b in zip(events, events[1:]):
        while fb[fi + 1] <= a:
            fi += 1
        while gb[gi + 1] <= a:
            gi += 1
        mf, mg = f.moves[fi], g.moves[gi]
        if isinstance(mf, Dwell) and isinstance(mg, Dwell):
            continue
        if (
            isinstance(mf, Traverse)
            and isinstance(mg, Traverse)
            and mf == mg
            and fb[fi] == gb[gi]
        ):
            continue
        speed = _move_speed(mf) + _move_speed(mg)
        a_f, b_f = float(a), float(b)
        npts = math.ceil((b_f - a_f) * speed / (2.0 * eps)) + 1
        ts = np.linspace(a_f, b_f, max(npts, 2))
        fx, fy = _move_coords(mf, float(fb[fi]), ts)
        gx, gy = _move_coords(mg, float(gb[gi]), ts)
        best = max(best, float(np.hypot(fx - gx, fy - gy).max()))
    return best


def format_tokens(tokens: list[int] | tuple[int, ...]) -> str:
    """Loop literal: word literal extended with ``.`` for a dwell slot."""
    if not tokens:
        return "e"
    return " ".join("." if t == DWELL else str(t) for t in tokens)


def parse_tokens(text: str) -> list[int]:
    """Parse a loop literal into a padded token list."""
    tokens = text.split()
    if tokens == ["e"]:
        return []
    out: list[int] = []
    for i, tok in enumerate(tokens, start=1):
        if tok == ".":
            out.append(DWELL)
            continue
        if tok == "e":
            raise WordParseError("'e' is only valid as the whole literal", i)
        try:
            x = int(tok)
        except ValueError:
            raise WordParseError(f"expected a nonzero integer or '.', got {tok!r}", i) from None
        if x == 0:
            raise WordParseError("zero is not a letter", i)
        out.append(x)
    return out
