"""Finite-evidence harness for the limit-point and oscillation facts.

Builds the commutator-power families a(n,k) = (x_n x_k x_n^-1 x_k^-1)^(n+k)
and w(n,k) = (x_1 x_k x_1^-1 x_k^-1)^n, measures their uniform distances and
oscillation counts over parameter grids, and packages the results as
deterministic pass/fail reports serializable to JSON, CSV, and text tables.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .loops import CombLoop, DWELL, compile_loop, constant_loop, sup_distance
from .oscillation import oscillation
from .words import Word, concat, count_gen, reduce_word

#: Accuracy handed to sup_distance inside reports.
SUP_EPS = 1e-4
#: Extra slack on top of SUP_EPS when comparing a measured distance to its
#: closed-form prediction.
DIST_TOL = 1e-3

_LIMIT_POINT_MAX_INDEX = 200


def a_word(n: int, k: int) -> Word:
    """The literal commutator power (x_n x_k x_n^-1 x_k^-1)^(n+k), length 4(n+k)."""
    if n < 2 or k < 2:
        raise ValueError(f"a(n,k) needs n >= 2 and k >= 2, got ({n},{k})")
    return Word(tuple([n, k, -n, -k] * (n + k)))


def w_word(n: int, k: int) -> Word:
    """The literal commutator power (x_1 x_k x_1^-1 x_k^-1)^n, length 4n."""
    if n < 1:
        raise ValueError(f"w(n,k) needs n >= 1, got n={n}")
    if k < 2:
        raise ValueError(f"w(n,k) needs k >= 2, got k={k}")
    return Word(tuple([1, k, -1, -k] * n), reduced=True)


def limit_tokens(n: int) -> list[int]:
    """Padded word (x_1 . x_1^-1 .)^n: the uniform limit of the w(n,k) loops
    as k grows, with dwells in the slots the x_k traversals vacate."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return [1, DWELL, -1, DWELL] * n


def w_loop(n: int, k: int) -> CombLoop:
    """w(n,k) compiled with one uniform slot per letter, aligned with limit_tokens(n)."""
    return compile_loop(list(w_word(n, k).letters))


def a_loop(n: int, k: int) -> CombLoop:
    return compile_loop(list(a_word(n, k).letters))


def square_grid(nmax: int, kmax: int) -> list[tuple[int, int]]:
    """All (n, k) with 2 <= n <= nmax, 2 <= k <= kmax, ascending lexicographic."""
    if nmax < 2 or kmax < 2:
        raise ValueError("grid bounds must be >= 2")
    return [(n, k) for n in range(2, nmax + 1) for k in range(2, kmax + 1)]


@dataclass(frozen=True)
class FamilyPair:
    """One member of the doubly indexed pair family: the words a(n,k) and w(n,k)."""

    n: int
    k: int
    a: Word
    w: Word

    def __post_init__(self) -> None:
        if self.a != a_word(self.n, self.k) or self.w != w_word(self.n, self.k):
            raise ValueError("words do not match the family at these indices")


def family_pair(n: int, k: int) -> FamilyPair:
    return FamilyPair(n, k, a_word(n, k), w_word(n, k))


def fmt_rat(x: Fraction) -> str:
    return str(x)


def fmt_dist(x: float) -> str:
    return f"{x:.6f}"


@dataclass(frozen=True)
class Cell:
    n: int | None
    k: int | None
    values: dict[str, Any]
    passed: bool


@dataclass(frozen=True)
class EvidenceReport:
    claim: str
    grid: list[Any]
    cells: tuple[Cell, ...]
    seed: int
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "grid": self.grid,
            "cells": [
                {"n": c.n, "k": c.k, "values": dict(c.values), "pass": c.passed}
                for c in self.cells
            ],
            "seed": self.seed,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        keys = list(self.cells[0].values.keys()) if self.cells else []
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", *keys, "pass"])
        for c in self.cells:
            row = [c.n if c.n is not None else "", c.k if c.k is not None else ""]
            row += [_csv_value(c.values[key]) for key in keys]
            row.append("true" if c.passed else "false")
            writer.writerow(row)
        return buf.getvalue()

    def to_table(self) -> str:
        keys = list(self.cells[0].values.keys()) if self.cells else []
        header = ["n", "k", *keys, "pass"]
        rows = [header]
        for c in self.cells:
            row = ["-" if c.n is None else str(c.n), "-" if c.k is None else str(c.k)]
            row += [_csv_value(c.values[key]) for key in keys]
            row.append("pass" if c.passed else "FAIL")
            rows.append(row)
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = [f"claim: {self.claim}    seed: {self.seed}"]
        lines += ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _csv_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def convergence_report(n: int, k_values: list[int], sup_eps: float = SUP_EPS) -> EvidenceReport:
    """Uniform convergence of the w(n,k) loops to their padded limit loop:
    the measured sup distance must match 2/k and shrink strictly in k."""
    ks = sorted(k_values)
    if n < 1 or any(k < 2 for k in ks):
        raise ValueError("convergence needs n >= 1 and every k >= 2")
    limit = compile_loop(limit_tokens(n))
    cells = []
    distances = []
    for k in ks:
        d = sup_distance(w_loop(n, k), limit, sup_eps)
        expected = Fraction(2, k)
        ok = abs(d - float(expected)) <= sup_eps + DIST_TOL
        distances.append(d)
        cells.append(
            Cell(n, k, {"d_w": fmt_dist(d), "expected": fmt_rat(expected)}, ok)
        )
    decreasing = all(a > b for a, b in zip(distances, distances[1:]))
    verdict = "pass" if decreasing and all(c.passed for c in cells) else "fail"
    return EvidenceReport("convergence", [[n, k] for k in ks], tuple(cells), 0, verdict)


def vanishing_report(grid: list[tuple[int, int]], sup_eps: float = SUP_EPS) -> EvidenceReport:
    """Uniform convergence of the a(n,k) loops to the constant loop: the
    measured sup distance must match max(2/n, 2/k)."""
    pairs = sorted(grid)
    const = constant_loop()
    cells = []
    for n, k in pairs:
        d = sup_distance(a_loop(n, k), const, sup_eps)
        expected = Fraction(2, min(n, k))
        ok = abs(d - float(expected)) <= sup_eps + DIST_TOL
        cells.append(
            Cell(n, k, {"d_a": fmt_dist(d), "expected": fmt_rat(expected)}, ok)
        )
    verdict = "pass" if all(c.passed for c in cells) else "fail"
    return EvidenceReport("vanishing", [list(p) for p in pairs], tuple(cells), 0, verdict)


def padded_variant(w: Word, rng: random.Random, insertions: int, max_gen: int) -> Word:
    """Insert cancelling adjacent pairs at random positions; the result is
    freely equal to w (conjugation-style padding would change the based word)."""
    letters = list(w.letters)
    for _ in range(insertions):
        g = rng.randint(1, max_gen)
        x = g if rng.random() < 0.5 else -g
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = [x, -x]
    return Word(tuple(letters))


def oscillation_bounds_report(
    grid: list[tuple[int, int]], pad_trials: int, seed: int = 0
) -> EvidenceReport:
    """Exact oscillation counts of the two families, plus the lower bound on
    randomly padded loops freely equal to w(n,k).

    The letter-count oracle gives O_1(w(n,k)) = 2n always, and
    O_n(a(n,k)) = 2(n+k) off the diagonal; at n = k the commutator block
    degenerates to four letters of the same circle, so the count is 8n, which
    still satisfies the >= 2(n+k) bound.
    """
    pairs = sorted(grid)
    if pad_trials < 1:
        raise ValueError("pad_trials must be >= 1")
    cells = []
    for n, k in pairs:
        wv = w_word(n, k)
        av = a_word(n, k)
        osc_w = oscillation(w_loop(n, k), 1)[0]
        osc_a = oscillation(a_loop(n, k), n)[0]
        expected_w = 2 * n
        expected_a = count_gen(av, n)
        lower_a = 2 * (n + k)
        rng = random.Random(f"{seed}:{n}:{k}")
        pad_min = min(
            oscillation(
                compile_loop(
                    list(padded_variant(wv, rng, rng.randint(1, 6), max(n, k) + 2).letters)
                ),
                1,
            )[0]
            for _ in range(pad_trials)
        )
        ok = (
            osc_w == expected_w
            and osc_a == expected_a
            and osc_a >= lower_a
            and pad_min >= expected_w
        )
        cells.append(
            Cell(
                n,
                k,
                {
                    "osc_w": osc_w,
                    "expected_w": expected_w,
                    "osc_a": osc_a,
                    "expected_a": expected_a,
                    "lower_bound_a": lower_a,
                    "pad_trials": pad_trials,
                    "pad_min_osc_w": pad_min,
                },
                ok,
            )
        )
    verdict = "pass" if all(c.passed for c in cells) else "fail"
    return EvidenceReport(
        "oscillation_bounds", [list(p) for p in pairs], tuple(cells), seed, verdict
    )


def product_class_report(grid: list[tuple[int, int]]) -> EvidenceReport:
    """The concatenation class [a(n,k)] * [w(n,k)] never reduces to the
    identity; off the diagonal nothing cancels at the junction, on the
    diagonal a(n,n) is freely trivial and the product collapses to w(n,n)."""
    pairs = sorted(grid)
    cells = []
    for n, k in pairs:
        r = reduce_word(concat(a_word(n, k), w_word(n, k)))
        expected_len = 4 * n if n == k else 4 * (n + k) + 4 * n
        nonempty = bool(r.letters)
        ok = nonempty and len(r) == expected_len
        cells.append(
            Cell(
                n,
                k,
                {"reduced_len": len(r), "expected_len": expected_len, "nonempty": nonempty},
                ok,
            )
        )
    verdict = "pass" if all(c.passed for c in cells) else "fail"
    return EvidenceReport(
        "product_class", [list(p) for p in pairs], tuple(cells), 0, verdict
    )


def limit_point_report(
    eps_values: list[float],
    sup_eps: float = SUP_EPS,
    max_index: int = _LIMIT_POINT_MAX_INDEX,
) -> EvidenceReport:
    """For every radius eps, exhibit (n,k) whose a-loop is within eps of the
    constant loop and whose w-loop is within eps of its padded limit loop
    while the w class stays nontrivial: the constant pair is approached by
    pairs that never reach it.

    Scans n = k ascending and stops at max_index, failing the cell if no pair
    qualified by then."""
    if any(e <= 0 for e in eps_values):
        raise ValueError("eps values must be positive")
    if max_index < 2:
        raise ValueError("max_index must be >= 2")
    const = constant_loop()
    memo: dict[int, tuple[float, float, bool]] = {}

    def measure(m: int) -> tuple[float, float, bool]:
        if m not in memo:
            d_a = sup_distance(a_loop(m, m), const, sup_eps)
            d_w = sup_distance(w_loop(m, m), compile_loop(limit_tokens(m)), sup_eps)
            nontrivial = bool(reduce_word(w_word(m, m)).letters)
            memo[m] = (d_a, d_w, nontrivial)
        return memo[m]

    cells = []
    for eps in eps_values:
        found = None
        for m in range(2, max_index + 1):
            d_a, d_w, nontrivial = measure(m)
            if d_a < eps and d_w < eps and nontrivial:
                found = (m, d_a, d_w, nontrivial)
                break
        if found is None:
            cells.append(
                Cell(
                    None,
                    None,
                    {"eps": fmt_dist(eps), "d_a": "", "d_w": "", "w_nontrivial": ""},
                    False,
                )
            )
        else:
            m, d_a, d_w, nontrivial = found
            cells.append(
                Cell(
                    m,
                    m,
                    {
                        "eps": fmt_dist(eps),
                        "d_a": fmt_dist(d_a),
                        "d_w": fmt_dist(d_w),
                        "w_nontrivial": nontrivial,
                    },
                    True,
                )
            )
    verdict = "pass" if all(c.passed for c in cells) else "fail"
    return EvidenceReport(
        "limit_point", [fmt_dist(e) for e in eps_values], tuple(cells), 0, verdict
    )
