"""Filtering (r+1)-ary words by the three subsequence conditions."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator

from .params import DEFAULT_WORK_BOUND, Params
from .rsk import insertion_shape, max_ii1_subseq
from .tableau import Partition, Word


@dataclass(frozen=True)
class ConditionReport:
    satisfies_i: bool
    satisfies_ii: bool
    satisfies_iii: bool
    shape: Partition
    ii1_lengths: tuple[int, ...]

    @property
    def passes(self) -> bool:
        return self.satisfies_i and self.satisfies_ii and self.satisfies_iii


def check_word(word: Word, params: Params) -> ConditionReport:
    """Evaluate the three conditions on ``word``.

    (i) at least g+r-d disjoint strictly decreasing subsequences of length
    r+1, read off as the (r+1)-th row of the insertion shape; (ii) no
    nondecreasing subsequence longer than d/r; (iii) no (i, i+1)-subsequence
    of length d/r.
    """
    r = params.r
    if len(word) != params.g:
        raise ValueError(f"word has length {len(word)}, expected g={params.g}")
    if any(not 1 <= x <= r + 1 for x in word):
        raise ValueError(f"letters must lie in 1..{r + 1}")
    shape = insertion_shape(word)
    lengths = tuple(max_ii1_subseq(word, i) for i in range(1, r + 1))
    return ConditionReport(
        satisfies_i=shape.padded(r + 1)[r] >= params.full_columns,
        satisfies_ii=shape.width <= params.d_over_r,
        satisfies_iii=max(lengths) < params.d_over_r,
        shape=shape,
        ii1_lengths=lengths,
    )


def passes(word: Word, params: Params) -> bool:
    """Fast membership test; same verdict as ``check_word(...).passes``."""
    r, bound = params.r, params.d_over_r
    shape = insertion_shape(word)
    if shape.width > bound or shape.padded(r + 1)[r] < params.full_columns:
        return False
    if shape.width < bound:
        return True
    return all(max_ii1_subseq(word, i) < bound for i in range(1, r + 1))


def all_words(params: Params, prefix: Word = ()) -> Iterator[Word]:
    """Every word of length g (odometer order), optionally with a fixed prefix."""
    for tail in product(range(1, params.r + 2), repeat=params.g - len(prefix)):
        yield prefix + tail


def iter_words(params: Params, prefix: Word = ()) -> Iterator[Word]:
    if params.n == params.r + 1:
        return
    for w in all_words(params, prefix):
        if passes(w, params):
            yield w


def _count_block(params: Params, prefix: Word) -> int:
    return sum(1 for _ in iter_words(params, prefix))


def tev_words(params: Params, threads: int = 1, work_bound: int | None = DEFAULT_WORK_BOUND) -> int:
    params.check_work(work_bound)
    if params.n == params.r + 1:
        return 0
    if threads > 1 and params.g >= 2:
        prefixes = list(product(range(1, params.r + 2), repeat=min(2, params.g)))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_count_block, [params] * len(prefixes), prefixes))
    return _count_block(params, ())


def list_words(params: Params, limit: int | None = None) -> Iterator[Word]:
    return islice(iter_words(params), limit)


def word_set(params: Params, work_bound: int | None = DEFAULT_WORK_BOUND) -> set[Word]:
    params.check_work(work_bound)
    return set(iter_words(params))


def r1_implications(report: ConditionReport) -> dict[str, bool]:
    """For r = 1: (iii) implies (ii), and (i) implies both."""
    return {
        "iii_implies_ii": (not report.satisfies_iii) or report.satisfies_ii,
        "i_implies_ii_and_iii": (not report.satisfies_i)
        or (report.satisfies_ii and report.satisfies_iii),
    }
