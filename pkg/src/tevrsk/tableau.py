"""Partitions, tableaux, reading words, strips and bounded enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

Word = tuple[int, ...]


class MalformedTableauError(ValueError):
    """Row lengths do not describe the declared shape."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not nonincreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def fits(self, height: int, width: int) -> bool:
        return self.height <= height and self.width <= width

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition{self.parts}"


def conjugate(lam: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.width + 1)))


@dataclass(frozen=True)
class Tableau:
    """Row-wise filling of a Young diagram.

    ``rotated`` tableaux are the red kind: rows are right-justified and row
    lengths weakly increase downward, so ``shape`` is the reversed row-length
    profile. Trailing (or, for rotated, leading) empty rows are allowed.
    """

    rows: tuple[tuple[int, ...], ...]
    shape: Partition = field(default=None)  # type: ignore[assignment]
    rotated: bool = False

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(row) for row in rows]
        profile = lengths[::-1] if self.rotated else lengths
        if self.shape is None:
            try:
                object.__setattr__(self, "shape", Partition(tuple(profile)))
            except ValueError as exc:
                raise MalformedTableauError(f"row lengths {lengths} are not a partition") from exc
        elif tuple(profile) != self.shape.padded(len(profile)) or len(profile) < self.shape.height:
            raise MalformedTableauError(f"row lengths {lengths} do not match {self.shape}")

    @classmethod
    def of(cls, *rows: Sequence[int]) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return self.shape.size

    def entries(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def column(self, c: int) -> list[int]:
        """Entries of column ``c`` (0-based, left-justified tableaux only)."""
        return [row[c] for row in self.rows if len(row) > c]

    def trimmed(self) -> Tableau:
        """Drop trailing empty rows of a left-justified tableau."""
        rows = list(self.rows)
        while rows and not rows[-1]:
            rows.pop()
        return Tableau(tuple(rows))

    def __repr__(self):
        kind = "RotatedTableau" if self.rotated else "Tableau"
        return f"{kind}({[list(r) for r in self.rows]})"


def _is_ssyt(rows: Sequence[Sequence[int]]) -> bool:
    for row in rows:
        if any(v < 1 for v in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def _is_rotated_red(rows: Sequence[Sequence[int]]) -> bool:
    for row in rows:
        if any(v < 1 for v in row):
            return False
        if any(a <= b for a, b in zip(row, row[1:])):
            return False
    # right-justified: align from the right end
    for upper, lower in zip(rows, rows[1:]):
        if any(a < b for a, b in zip(reversed(upper), reversed(lower))):
            return False
    return True


def validate_tableau(T: Tableau, mode: str = "ssyt") -> bool:
    """True iff ``T`` satisfies the invariant of ``mode``.

    Modes: ``ssyt``, ``syt``, ``rotated_red``. Orientation mismatches raise
    :class:`MalformedTableauError` rather than returning False.
    """
    if mode == "rotated_red":
        if not T.rotated:
            raise MalformedTableauError("rotated_red mode needs a right-justified tableau")
        return _is_rotated_red(T.rows)
    if T.rotated:
        raise MalformedTableauError(f"{mode} mode needs a left-justified tableau")
    if mode == "ssyt":
        return _is_ssyt(T.rows)
    if mode == "syt":
        return _is_ssyt(T.rows) and sorted(T.entries()) == list(range(1, T.size + 1))
    raise ValueError(f"unknown mode {mode!r}")


def reading_word(T: Tableau) -> Word:
    return tuple(v for row in reversed(T.rows) for v in row)


def max_ii1_strip(T: Tableau, i: int, max_entry: int | None = None) -> int:
    """Longest (i, i+1)-strip of the SSYT ``T``.

    A strip of length l has one box in each of the first l columns, with
    boxes weakly descending as one moves left, and every ``i`` to the left
    of every ``i + 1``. Scans columns left to right keeping the set of
    reachable (row, switched) states; each column holds at most one ``i``
    and one ``i + 1``.
    """
    if i < 1 or (max_entry is not None and i >= max_entry):
        raise ValueError(f"letter {i} out of range")
    rows = T.rows
    width = T.shape.width
    # states: (row of last box, whether an i+1 has been used)
    states: set[tuple[int, bool]] | None = None
    for c in range(width):
        nxt: set[tuple[int, bool]] = set()
        for row_idx, row in enumerate(rows):
            if len(row) <= c:
                break
            v = row[c]
            if v == i:
                if states is None or any(not sw and row_idx <= prev for prev, sw in states):
                    nxt.add((row_idx, False))
            elif v == i + 1:
                if states is None or any(row_idx <= prev for prev, _ in states):
                    nxt.add((row_idx, True))
        if not nxt:
            return c
        states = nxt
    return width


def max_ii1_strip_bruteforce(T: Tableau, i: int) -> int:
    """Reference for :func:`max_ii1_strip` by trying every box choice."""
    heights = T.shape.conjugate().parts
    best = 0
    for length in range(1, len(heights) + 1):
        found = False
        for choice in product(*(range(h) for h in heights[:length])):
            vals = [T.rows[row][c] for c, row in enumerate(choice)]
            if any(v not in (i, i + 1) for v in vals):
                continue
            if any(choice[a] < choice[b] for a in range(length) for b in range(a + 1, length)):
                continue
            if any(vals[a] == i + 1 and vals[b] == i for a in range(length) for b in range(a + 1, length)):
                continue
            found = True
            break
        if not found:
            break
        best = length
    return best


def enumerate_ssyt(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """Every SSYT of ``shape`` with entries in 1..max_entry, row-lexicographic."""
    if shape.height > max_entry:
        return
    parts = shape.parts
    col_heights = conjugate(shape).parts
    cells = [(r, c) for r, length in enumerate(parts) for c in range(length)]
    rows = [[0] * length for length in parts]

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(tuple(tuple(row) for row in rows), shape)
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = rows[r][c - 1]
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        # leave room for the strictly larger entries below
        hi = max_entry - (col_heights[c] - 1 - r)
        for v in range(lo, hi + 1):
            rows[r][c] = v
            yield from fill(k + 1)

    yield from fill(0)


def count_ssyt(shape: Partition, max_entry: int) -> int:
    """Number of SSYT of ``shape`` with entries <= max_entry (hook-content formula)."""
    if shape.height > max_entry:
        return 0
    conj = conjugate(shape).parts
    num = den = 1
    for r, length in enumerate(shape.parts):
        for c in range(length):
            num *= max_entry + c - r
            den *= (length - c - 1) + (conj[c] - r - 1) + 1
    return num // den


def enumerate_partitions(size: int, max_height: int, max_width: int) -> Iterator[Partition]:
    """Partitions of ``size`` inside a max_height x max_width box, lexicographic."""
    if size < 0:
        raise ValueError("size must be nonnegative")

    def rec(remaining: int, rows_left: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        # smallest feasible first part, ascending for lexicographic order
        first_min = -(-remaining // rows_left)
        for p in range(first_min, min(cap, remaining) + 1):
            for rest in rec(remaining - p, rows_left - 1, p):
                yield (p,) + rest

    for parts in rec(size, max_height, max_width):
        yield Partition(parts)
