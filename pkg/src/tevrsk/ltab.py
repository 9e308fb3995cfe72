"""L-tableaux, their enumeration, and the map L -> (P, Q) -> word."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .params import DEFAULT_WORK_BOUND, Params
from .rsk import TableauPair, rsk_inverse
from .tableau import (
    Partition,
    Tableau,
    Word,
    enumerate_partitions,
    enumerate_ssyt,
    max_ii1_strip,
    validate_tableau,
)


class Cell(NamedTuple):
    red: bool
    value: int

    def __repr__(self):
        return f"{'Red' if self.red else 'Blue'}({self.value})"


@dataclass(frozen=True)
class LTableau:
    """An (r+1) x (d-r) grid, stored as per-row blue prefixes and red suffixes.

    ``red[j]`` lists the red entries of row ``j`` left to right, so red rows
    are right-justified against the grid's right edge.
    """

    params: Params
    blue: tuple[tuple[int, ...], ...]
    red: tuple[tuple[int, ...], ...]

    @classmethod
    def from_grid(cls, params: Params, grid: Sequence[Sequence[Cell]]) -> LTableau:
        blue, red = [], []
        for row in grid:
            k = 0
            while k < len(row) and not row[k].red:
                k += 1
            if any(not c.red for c in row[k:]):
                raise ValueError("each row must be blue cells followed by red cells")
            blue.append(tuple(c.value for c in row[:k]))
            red.append(tuple(c.value for c in row[k:]))
        return cls(params, tuple(blue), tuple(red))

    @property
    def grid(self) -> tuple[tuple[Cell, ...], ...]:
        return tuple(
            tuple(Cell(False, v) for v in b) + tuple(Cell(True, v) for v in rd)
            for b, rd in zip(self.blue, self.red)
        )

    def blue_tableau(self) -> Tableau:
        return Tableau(self.blue).trimmed()

    def red_tableau(self) -> Tableau:
        return Tableau(self.red, rotated=True)

    def __str__(self):
        return "\n".join(
            " ".join(f"{v:>2}" for v in b) + (" | " if b and rd else "") + " ".join(f"{v:>2}'" for v in rd)
            for b, rd in zip(self.blue, self.red)
        )


def strip_free(B: Tableau, r: int, length: int) -> bool:
    """No (i, i+1)-strip of the given length in ``B`` for any i in 1..r."""
    if B.shape.width < length:
        return True
    return all(max_ii1_strip(B, i) < length for i in range(1, r + 1))


def validate_L(L: LTableau, constrained: bool = True) -> bool:
    p = L.params
    if len(L.blue) != p.r + 1 or len(L.red) != p.r + 1:
        raise ValueError(f"expected {p.r + 1} rows")
    if any(len(b) + len(rd) != p.width for b, rd in zip(L.blue, L.red)):
        raise ValueError(f"every row must have {p.width} cells")

    blue_lengths = [len(b) for b in L.blue]
    if sum(blue_lengths) != p.width * (p.r + 1) - p.r * p.g:
        return False
    if any(a < b for a, b in zip(blue_lengths, blue_lengths[1:])):
        return False
    B = L.blue_tableau()
    if any(v > p.r + 1 for v in B.entries()) or not validate_tableau(B, "ssyt"):
        return False

    R = L.red_tableau()
    if any(not 1 <= v <= p.g for v in R.entries()):
        return False
    counts = [0] * (p.g + 1)
    for v in R.entries():
        counts[v] += 1
    if any(c != p.r for c in counts[1:]):
        return False
    if not validate_tableau(R, "rotated_red"):
        return False

    if constrained:
        if B.shape.width > p.strip_bound:
            return False
        if not strip_free(B, p.r, p.strip_bound):
            return False
    return True


# -- width adjustment -------------------------------------------------------

def in_ssyt_C(B: Tableau, params: Params) -> bool:
    """Membership in the set of admissible blue tableaux."""
    r = params.r
    if B.size != params.blue_size or any(v > r + 1 for v in B.entries()):
        return False
    if not validate_tableau(B, "ssyt") or B.shape.width > params.strip_bound:
        return False
    full = B.shape.parts[r] if B.shape.height > r else 0
    if full < -params.full_columns:
        return False
    return strip_free(B, r, params.strip_bound)


def in_ssyt_AC(P: Tableau, params: Params) -> bool:
    """Membership in the set of width-adjusted tableaux (size g)."""
    r = params.r
    if P.size != params.g or any(v > r + 1 for v in P.entries()):
        return False
    if not validate_tableau(P, "ssyt") or P.shape.width > params.d_over_r:
        return False
    full = P.shape.parts[r] if P.shape.height > r else 0
    if full < params.full_columns:
        return False
    return strip_free(P, r, params.d_over_r)


def _shift_columns(T: Tableau, k: int, r: int) -> Tableau:
    rows = list(T.rows) + [()] * (r + 1 - len(T.rows))
    if k >= 0:
        rows = [(j + 1,) * k + tuple(row) for j, row in enumerate(rows)]
    else:
        rows = [tuple(row[-k:]) for row in rows]
    return Tableau(tuple(rows)).trimmed()


def psi(B: Tableau, params: Params) -> Tableau:
    """Add (or strip) full-height columns on the left so the size becomes g."""
    if not in_ssyt_C(B, params):
        raise ValueError(f"{B} is not an admissible blue tableau for {params}")
    return _shift_columns(B, params.full_columns, params.r)


def psi_inverse(P: Tableau, params: Params) -> Tableau:
    if not in_ssyt_AC(P, params):
        raise ValueError(f"{P} is not an admissible adjusted tableau for {params}")
    return _shift_columns(P, -params.full_columns, params.r)


# -- purple tableau ---------------------------------------------------------

def _red_rows(R: Tableau, r: int) -> list[tuple[int, ...]]:
    rows = list(R.rows)
    if len(rows) > r + 1:
        raise ValueError(f"red tableau has more than {r + 1} rows")
    # row labels run 1..r+1 with the bottom row labelled r+1
    return [()] * (r + 1 - len(rows)) + rows


def phi(R: Tableau, g: int, r: int) -> Tableau:
    """Purple tableau: value i goes to the row of R that lacks it."""
    rows = _red_rows(R, r)
    missing: dict[int, int] = {}
    seen = [set(row) for row in rows]
    for i in range(1, g + 1):
        lacking = [j for j, s in enumerate(seen) if i not in s]
        if len(lacking) != 1:
            raise ValueError(f"value {i} appears in {r + 1 - len(lacking)} rows, need exactly {r}")
        missing[i] = lacking[0]
    if sum(len(row) for row in rows) != r * g:
        raise ValueError(f"red tableau must have content ({r}^{g})")
    out: list[list[int]] = [[] for _ in range(r + 1)]
    for i in range(1, g + 1):
        out[missing[i]].append(i)
    return Tableau(tuple(map(tuple, out))).trimmed()


def phi_inverse(Q: Tableau, g: int, r: int) -> Tableau:
    Q = Q.trimmed()
    if Q.shape.height > r + 1 or Q.size != g or not validate_tableau(Q, "syt"):
        raise ValueError(f"{Q} is not a standard tableau of size {g} with <= {r + 1} rows")
    rows = list(Q.rows) + [()] * (r + 1 - Q.shape.height)
    red = []
    for row in rows:
        present = set(row)
        red.append(tuple(v for v in range(g, 0, -1) if v not in present))
    return Tableau(tuple(red), rotated=True)


# -- the bijection ----------------------------------------------------------

def L_to_pair(L: LTableau) -> TableauPair:
    p = L.params
    return TableauPair(psi(L.blue_tableau(), p), phi(L.red_tableau(), p.g, p.r))


def pair_to_L(pair: TableauPair, params: Params) -> LTableau:
    r = params.r
    B = psi_inverse(pair.P.trimmed(), params)
    R = phi_inverse(pair.Q, params.g, r)
    blue = tuple(B.rows) + ((),) * (r + 1 - len(B.rows))
    red = _red_rows(R, r)
    if any(len(b) + len(rd) != params.width for b, rd in zip(blue, red)):
        raise ValueError("blue and red tableaux are not complementary in the grid")
    return LTableau(params, blue, tuple(red))


def L_to_word(L: LTableau) -> Word:
    return rsk_inverse(L_to_pair(L))


# -- enumeration ------------------------------------------------------------

@lru_cache(maxsize=None)
def red_fillings(lengths: tuple[int, ...], g: int, r: int) -> tuple[Tableau, ...]:
    """All red tableaux with the given row lengths (top to bottom), sorted.

    Values are placed in increasing order; value v enters every row but
    one, at that row's next free position counted from the right. Rows
    filled so far must stay weakly longer going down.
    """
    h = len(lengths)
    if sum(lengths) != r * g or h != r + 1:
        return ()
    found: list[tuple[tuple[int, ...], ...]] = []
    rows: list[list[int]] = [[] for _ in range(h)]

    def grow(v: int) -> None:
        if v > g:
            if all(len(rows[j]) == lengths[j] for j in range(h)):
                found.append(tuple(tuple(reversed(row)) for row in rows))
            return
        left = g - v  # steps remaining after this one
        for skip in range(h):
            counts = [len(rows[j]) + (j != skip) for j in range(h)]
            if any(a > b for a, b in zip(counts, counts[1:])):
                continue
            if any(c > lengths[j] or lengths[j] - c > left for j, c in enumerate(counts)):
                continue
            for j in range(h):
                if j != skip:
                    rows[j].append(v)
            grow(v + 1)
            for j in range(h):
                if j != skip:
                    rows[j].pop()

    grow(1)
    return tuple(Tableau(rows, rotated=True) for rows in sorted(found))


def blue_shapes(params: Params) -> Iterator[Partition]:
    """Blue shapes whose complement in the grid can hold a red tableau."""
    if params.n == params.r + 1:
        return
    r, width = params.r, params.width
    cap = min(params.strip_bound, width)
    for shape in enumerate_partitions(params.blue_size, r + 1, cap):
        if all(width - b <= params.g for b in shape.padded(r + 1)):
            yield shape


def _fillings_for_shape(params: Params, shape: Partition):
    r = params.r
    blues = [
        B for B in enumerate_ssyt(shape, r + 1) if strip_free(B, r, params.strip_bound)
    ]
    lengths = tuple(params.width - b for b in shape.padded(r + 1))
    reds = red_fillings(lengths, params.g, r) if blues else ()
    return blues, reds


def _enumerate_shape(params: Params, shape: Partition) -> Iterator[LTableau]:
    r = params.r
    blues, reds = _fillings_for_shape(params, shape)
    for B in blues:
        blue = tuple(B.rows) + ((),) * (r + 1 - len(B.rows))
        for R in reds:
            yield LTableau(params, blue, R.rows)


def enumerate_L(params: Params) -> Iterator[LTableau]:
    """Each constrained L-tableau exactly once, in deterministic order."""
    for shape in blue_shapes(params):
        yield from _enumerate_shape(params, shape)


def _count_shape(params: Params, shape: Partition) -> int:
    return sum(1 for _ in _enumerate_shape(params, shape))


def tev_ltab(params: Params, threads: int = 1, work_bound: int | None = DEFAULT_WORK_BOUND) -> int:
    params.check_work(work_bound)
    if params.n == params.r + 1:
        return 0
    shapes = list(blue_shapes(params))
    if threads > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_count_shape, [params] * len(shapes), shapes))
    return sum(_count_shape(params, s) for s in shapes)
