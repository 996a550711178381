"""Oscillation numbers of combinatorial loops, with explicit witness sets.

The n-th oscillation number of a loop counts the longest alternation
p, q_n, p, q_n, ..., p it achieves over increasing times, where q_n = (2/n, 0)
is the point of circle n antipodal to the basepoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .loops import BASE, Base, CombLoop, OnCircle, Traverse, eval_loop

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WitnessSet:
    """Time set certifying an oscillation lower bound for circle ``gen``.

    Times are 0 = t_0 < t_1 < ... < t_2m = 1 with the loop at the basepoint
    at even indices and at q_gen at odd ones.  A loop that never reaches
    q_gen gets the degenerate witness (0, 1) with m = 0.
    """

    gen: int
    times: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return (len(self.times) - 1) // 2

    def to_json(self) -> str:
        return json.dumps(
            {"gen": self.gen, "m": self.m, "times": [str(t) for t in self.times]}
        )


def oscillation(f: CombLoop, n: int) -> tuple[int, WitnessSet]:
    """Exact oscillation number of a representable loop for circle n.

    On this class the count is combinatorial: every full traversal of circle
    n passes q_n exactly once, at its midpoint, and starts and ends at the
    basepoint, so each traversal contributes one alternation; q_n lies on no
    other circle, so no other move can contribute one.  Hence m equals the
    number of traversals of circle n, witnessed by midpoints interleaved
    with move boundaries.
    """
    if n < 1:
        raise ValueError(f"circle index must be >= 1, got {n}")
    hits: list[tuple[Fraction, Fraction]] = []
    start = Fraction(0)
    for mv in f.moves:
        end = start + mv.duration
        if isinstance(mv, Traverse) and mv.gen == n:
            hits.append(((start + end) / 2, end))
        start = end
    if not hits:
        return 0, WitnessSet(n, (Fraction(0), Fraction(1)))
    times = [Fraction(0)]
    for mid, end in hits[:-1]:
        times.extend((mid, end))
    times.extend((hits[-1][0], Fraction(1)))
    return len(hits), WitnessSet(n, tuple(times))


def verify_witness(f: CombLoop, w: WitnessSet) -> bool:
    """Check a witness against a loop by exact evaluation at every time."""
    ts = w.times
    if len(ts) < 2 or ts[0] != 0 or ts[-1] != 1:
        return False
    if any(a >= b for a, b in zip(ts, ts[1:])):
        return False
    if len(ts) == 2:
        return w.m == 0 and eval_loop(f, ts[0]) == BASE and eval_loop(f, ts[1]) == BASE
    if len(ts) % 2 == 0:
        return False
    q = OnCircle(w.gen, _HALF)
    for i, t in enumerate(ts):
        pt = eval_loop(f, t)
        if i % 2 == 0:
            if not isinstance(pt, Base):
                return False
        elif pt != q:
            return False
    return True


def hausdorff(a: set[Fraction] | frozenset[Fraction], b: set[Fraction] | frozenset[Fraction]) -> Fraction:
    """Hausdorff distance between nonempty finite sets of rationals, exact."""
    if not a or not b:
        raise ValueError("hausdorff distance needs nonempty sets")

    def one_sided(src, dst):
        return max(min(abs(x - y) for y in dst) for x in src)

    return max(one_sided(a, b), one_sided(b, a))
