"""Schensted row insertion, Knuth moves and Greene invariants on words."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .tableau import Partition, Tableau, Word, validate_tableau

GREENE_ORACLE_MAX_LENGTH = 12


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    @property
    def shape(self) -> Partition:
        return self.P.shape


def insertion_shape(word: Iterable[int]) -> Partition:
    """Shape of the insertion tableau, without building Q."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return Partition(tuple(len(row) for row in rows))


def rsk(word: Iterable[int]) -> TableauPair:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        for r, row in enumerate(P):
            # bump the leftmost entry strictly greater than x
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
        else:
            P.append([x])
            Q.append([step])
    return TableauPair(Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q))))


def rsk_inverse(pair: TableauPair) -> Word:
    P, Q = pair.P.trimmed(), pair.Q.trimmed()
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {P.shape} vs {Q.shape}")
    if not validate_tableau(P, "ssyt") or not validate_tableau(Q, "syt"):
        raise ValueError("P must be semistandard and Q standard")
    rows = [list(row) for row in P.rows]
    where = {v: r for r, row in enumerate(Q.rows) for v in row}
    out = []
    for step in range(Q.size, 0, -1):
        r = where[step]
        x = rows[r].pop()
        for upper in range(r - 1, -1, -1):
            row = rows[upper]
            # rightmost entry strictly less than x is the one that bumped it
            j = bisect_right(row, x - 1) - 1
            row[j], x = x, row[j]
        if not rows[r]:
            rows.pop()
        out.append(x)
    return tuple(reversed(out))


def greene_oracle(word: Word, k: int, mode: str = "nondecreasing") -> int:
    """Max total length of ``k`` disjoint monotone subsequences, by search.

    ``decreasing`` means strictly decreasing. Exponential; refuses words
    longer than twelve letters.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if len(word) > GREENE_ORACLE_MAX_LENGTH:
        raise ValueError(f"greene_oracle is limited to length {GREENE_ORACLE_MAX_LENGTH}")
    if mode == "nondecreasing":
        fits = lambda last, x: last <= x  # noqa: E731
    elif mode == "decreasing":
        fits = lambda last, x: last > x  # noqa: E731
    else:
        raise ValueError(f"unknown mode {mode!r}")
    word = tuple(word)
    if k == 0 or not word:
        return 0

    # chains are open subsequences, identified by their last letter; a
    # chain that has not started yet is None
    @lru_cache(maxsize=None)
    def best(pos: int, lasts: tuple) -> int:
        if pos == len(word):
            return 0
        x = word[pos]
        result = best(pos + 1, lasts)
        tried = set()
        for idx, last in enumerate(lasts):
            if last in tried:
                continue
            tried.add(last)
            if last is None or fits(last, x):
                nxt = lasts[:idx] + (x,) + lasts[idx + 1:]
                key = tuple(sorted(nxt, key=lambda v: (v is None, v or 0)))
                result = max(result, 1 + best(pos + 1, key))
        return result

    return best(0, (None,) * k)


def knuth_neighbors(word: Word) -> set[Word]:
    """Words one elementary Knuth transformation (or inverse) away."""
    word = tuple(word)
    out = set()
    for p in range(len(word) - 2):
        x, y, z = word[p:p + 3]
        # acb <-> cab  (a <= b < c)
        if x <= z < y or y <= z < x:
            out.add(word[:p] + (y, x, z) + word[p + 3:])
        # bac <-> bca  (a < b <= c)
        if y < x <= z or z < x <= y:
            out.add(word[:p] + (x, z, y) + word[p + 3:])
    return out


def max_ii1_subseq(word: Word, i: int, max_letter: int | None = None) -> int:
    """Longest nondecreasing subsequence using only letters i and i+1."""
    if i < 1 or (max_letter is not None and i >= max_letter):
        raise ValueError(f"letter {i} out of range")
    tail = sum(1 for x in word if x == i + 1)
    head = 0
    best = tail
    for x in word:
        if x == i:
            head += 1
        elif x == i + 1:
            tail -= 1
        best = max(best, head + tail)
    return best


def max_ii1_subseq_bruteforce(word: Word, i: int) -> int:
    letters = [x for x in word if x in (i, i + 1)]
    for m in range(len(letters), 0, -1):
        for sub in combinations(letters, m):
            if all(a <= b for a, b in zip(sub, sub[1:])):
                return m
    return 0
