"""Intersection numbers on Gr(r+1, d+1) via the Pieri rule for sigma_{1^m}."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict

from .ltab import strip_free
from .params import Params
from .tableau import Partition, count_ssyt, enumerate_partitions, enumerate_ssyt

SchubertClass = Dict[Partition, int]


@dataclass(frozen=True)
class GrassmannianCtx:
    """Gr(k, N); Schubert classes are indexed by partitions in a k x (N-k) box."""

    k: int
    N: int

    def __post_init__(self):
        # N == k (a point) arises for d == r, g == 0
        if self.k < 2 or self.N < self.k:
            raise ValueError(f"need k >= 2 and N >= k, got Gr({self.k}, {self.N})")

    @classmethod
    def for_params(cls, params: Params) -> GrassmannianCtx:
        return cls(params.r + 1, params.d + 1)

    @property
    def box_width(self) -> int:
        return self.N - self.k

    @property
    def top(self) -> Partition:
        return Partition((self.box_width,) * self.k)

    @property
    def dim(self) -> int:
        return self.k * self.box_width

    def contains(self, lam: Partition) -> bool:
        return lam.fits(self.k, self.box_width)


def vertical_strips(lam: Partition, m: int, ctx: GrassmannianCtx) -> list[Partition]:
    """Shapes obtained by adding m boxes to ``lam``, no two in one row, inside the box."""
    base = lam.padded(ctx.k)
    out = []
    for rows in combinations(range(ctx.k), m):
        mu = list(base)
        for j in rows:
            mu[j] += 1
        if mu[0] > ctx.box_width:
            continue
        if any(a < b for a, b in zip(mu, mu[1:])):
            continue
        out.append(Partition(tuple(mu)))
    return out


def pieri_e(c: SchubertClass, m: int, ctx: GrassmannianCtx) -> SchubertClass:
    """Multiply by sigma_{1^m}; terms leaving the box vanish."""
    if not 1 <= m <= ctx.k:
        raise ValueError(f"m must lie in 1..{ctx.k}")
    out: Counter = Counter()
    for lam, coeff in c.items():
        for mu in vertical_strips(lam, m, ctx):
            out[mu] += coeff
    return {mu: v for mu, v in out.items() if v}


@lru_cache(maxsize=None)
def _top_coefficient(lam: Partition, g: int, r: int, ctx: GrassmannianCtx) -> int:
    if g == 0:
        return int(lam == ctx.top)
    return sum(_top_coefficient(mu, g - 1, r, ctx) for mu in vertical_strips(lam, r, ctx))


def intersect_with_power(lam: Partition, g: int, ctx: GrassmannianCtx, r: int | None = None) -> int:
    """Coefficient of the top class in sigma_lam * sigma_{1^r}^g (r defaults to k - 1)."""
    r = ctx.k - 1 if r is None else r
    if not ctx.contains(lam):
        raise ValueError(f"{lam} does not fit in the {ctx.k}x{ctx.box_width} box")
    if lam.size + r * g != ctx.dim:
        return 0
    return _top_coefficient(lam, g, r, ctx)


def gamma(lam: Partition, params: Params) -> int:
    """SSYT of shape ``lam`` with entries <= r+1 and no (i,i+1)-strip of length n-r-1."""
    r, bound = params.r, params.strip_bound
    if not lam.fits(r + 1, bound):
        raise ValueError(f"{lam} does not fit in the {r + 1}x{bound} box")
    if lam.width < bound:
        return count_ssyt(lam, r + 1)
    return sum(1 for T in enumerate_ssyt(lam, r + 1) if strip_free(T, r, bound))


def tev_schubert(params: Params) -> int:
    if params.n == params.r + 1:
        return 0
    ctx = GrassmannianCtx.for_params(params)
    r = params.r
    total = 0
    for lam in enumerate_partitions(params.blue_size, r + 1, params.strip_bound):
        if not ctx.contains(lam):
            continue
        coeff = intersect_with_power(lam, params.g, ctx, r)
        if coeff:
            total += gamma(lam, params) * coeff
    return total
