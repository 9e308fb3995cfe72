"""Closed-form values and independent counters used as cross-checks."""

from __future__ import annotations

from math import comb

from .params import Params
from .tableau import Word


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def large_degree_value(params: Params) -> int | None:
    """(r+1)^g when d >= rg + r, else None."""
    if params.d >= params.r * params.g + params.r:
        return (params.r + 1) ** params.g
    return None


def d_equals_rg_value(params: Params) -> int | None:
    if params.d == params.r * params.g:
        return (params.r + 1) ** params.g - params.n
    return None


def d_equals_rg_failures(g: int, r: int) -> set[Word]:
    """Constant words and nondecreasing words over {i, i+1} using both letters."""
    out: set[Word] = set()
    for i in range(1, r + 1):
        for k in range(g + 1):
            out.add((i,) * k + (i + 1,) * (g - k))
    return out


def lattice_paths_r1(g: int, d: int) -> int:
    """Count binary words by the lattice-path rule for r = 1.

    A word with a ones and b twos is counted when a, b >= g + 1 - d and,
    reading left to right, the ones never lead the twos by more than
    d - 1 - b.
    """
    low = g + 1 - d
    total = 0
    for b in range(g + 1):
        a = g - b
        if a < low or b < low:
            continue
        cap = d - 1 - b
        # paths[(ones, twos)] restricted to ones - twos <= cap
        paths = {(0, 0): 1} if cap >= 0 else {}
        for _ in range(g):
            nxt: dict[tuple[int, int], int] = {}
            for (x, y), c in paths.items():
                if x < a and x + 1 - y <= cap:
                    nxt[(x + 1, y)] = nxt.get((x + 1, y), 0) + c
                if y < b:
                    nxt[(x, y + 1)] = nxt.get((x, y + 1), 0) + c
            paths = nxt
        total += paths.get((a, b), 0)
    return total


def lattice_path_ok(word: Word, d: int) -> bool:
    """Per-word form of :func:`lattice_paths_r1` for binary words."""
    g = len(word)
    a = word.count(1)
    b = g - a
    if min(a, b) < g + 1 - d:
        return False
    lead = 0
    for x in word:
        lead += 1 if x == 1 else -1
        if lead > d - 1 - b:
            return False
    return True
