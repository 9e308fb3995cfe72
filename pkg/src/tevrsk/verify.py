"""End-to-end check of the L-tableau -> word bijection for one parameter triple."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ltab import L_to_pair, enumerate_L, pair_to_L
from .params import DEFAULT_WORK_BOUND, Params
from .rsk import rsk_inverse
from .words import check_word, word_set


@dataclass
class VerifyReport:
    params: Params
    ok: bool = True
    matched: int = 0
    tev_words: int = 0
    failure: str | None = None
    counterexample: object = None
    images: set = field(default_factory=set, repr=False)

    def fail(self, why: str, example: object) -> VerifyReport:
        self.ok = False
        self.failure = why
        self.counterexample = example
        return self


def verify_bijection(params: Params, work_bound: int | None = DEFAULT_WORK_BOUND) -> VerifyReport:
    """Map every constrained L-tableau to its word and check the image.

    Each image must pass the word conditions, images must be distinct, the
    round trip through (P, Q) must return L, and the image must be exactly
    the set of passing words.
    """
    params.check_work(work_bound)
    report = VerifyReport(params)
    for L in enumerate_L(params):
        pair = L_to_pair(L)
        if pair_to_L(pair, params) != L:
            return report.fail("pair_to_L does not invert L_to_pair", L)
        word = rsk_inverse(pair)
        if not check_word(word, params).passes:
            return report.fail("image word fails the conditions", (L, word))
        if word in report.images:
            return report.fail("two L-tableaux share a word", (L, word))
        report.images.add(word)
    report.matched = len(report.images)
    expected = word_set(params, work_bound)
    report.tev_words = len(expected)
    if report.images != expected:
        missing = sorted(expected - report.images)
        return report.fail("image differs from the passing word set", missing[:1] or None)
    return report
