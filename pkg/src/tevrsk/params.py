"""Parameter triples (g, r, d) and the errors shared by the counting code."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_WORK_BOUND = 10**8


class InvalidParams(ValueError):
    pass


class WorkBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Params:
    """Genus ``g``, target dimension ``r`` and degree ``d``.

    The number of marked points ``n = (r+1)d/r - g + 1`` must be an integer
    and at least ``r + 1``.
    """

    g: int
    r: int
    d: int

    def __post_init__(self):
        g, r, d = self.g, self.r, self.d
        if r < 1:
            raise InvalidParams(f"r must be >= 1, got {r}")
        if g < 0:
            raise InvalidParams(f"g must be >= 0, got {g}")
        if d < r:
            raise InvalidParams(f"d must be >= r, got d={d}, r={r}")
        if d % r:
            raise InvalidParams(f"r={r} does not divide d={d}")
        if self.n < r + 1:
            raise InvalidParams(f"n={self.n} < r+1={r + 1} for (g,r,d)=({g},{r},{d})")

    @property
    def n(self) -> int:
        return (self.r + 1) * self.d // self.r - self.g + 1

    @property
    def d_over_r(self) -> int:
        return self.d // self.r

    @property
    def width(self) -> int:
        """Number of columns of an L-tableau."""
        return self.d - self.r

    @property
    def strip_bound(self) -> int:
        """Forbidden strip length (and width cap) for blue tableaux."""
        return self.n - self.r - 1

    @property
    def blue_size(self) -> int:
        return self.r * (self.n - self.r - 2)

    @property
    def full_columns(self) -> int:
        """Full-height columns added by the width adjustment (negative: removed)."""
        return self.g + self.r - self.d

    @property
    def word_count(self) -> int:
        return (self.r + 1) ** self.g

    def check_work(self, bound: int | None) -> None:
        if bound is not None and self.word_count > bound:
            raise WorkBoundExceeded(
                f"(r+1)^g = {self.word_count} exceeds the work bound {bound}"
            )

    def shifted(self) -> Params:
        """(g, n, d) -> (g, n + r + 1, d + r)."""
        return Params(self.g, self.r, self.d + self.r)


def is_valid(g: int, r: int, d: int) -> bool:
    try:
        Params(g, r, d)
    except InvalidParams:
        return False
    return True
