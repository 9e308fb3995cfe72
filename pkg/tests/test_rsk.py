import random
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import words
from tevrsk.rsk import (
    TableauPair,
    greene_oracle,
    insertion_shape,
    knuth_neighbors,
    max_ii1_subseq,
    max_ii1_subseq_bruteforce,
    rsk,
    rsk_inverse,
)
from tevrsk.tableau import Tableau, conjugate, max_ii1_strip, validate_tableau

OMEGA = (3, 2, 1, 3, 2, 1, 2, 1, 1, 2, 3)
P_EX = Tableau.of([1, 1, 1, 1, 2, 3], [2, 2, 2], [3, 3])
Q_EX = Tableau.of([1, 4, 7, 9, 10, 11], [2, 5, 8], [3, 6])


def test_rsk_worked_example():
    pair = rsk(OMEGA)
    assert pair.P == P_EX
    assert pair.Q == Q_EX


def test_rsk_small_cases():
    empty = rsk(())
    assert empty.P.rows == () and empty.Q.rows == ()
    assert rsk((1, 1, 1)) == TableauPair(Tableau.of([1, 1, 1]), Tableau.of([1, 2, 3]))


def test_rsk_inverse_examples():
    assert rsk_inverse(TableauPair(P_EX, Q_EX)) == OMEGA
    assert rsk_inverse(TableauPair(Tableau(()), Tableau(()))) == ()
    assert rsk_inverse(TableauPair(Tableau.of([1, 1]), Tableau.of([1, 2]))) == (1, 1)


def test_rsk_inverse_rejects_bad_pairs():
    with pytest.raises(ValueError):
        rsk_inverse(TableauPair(Tableau.of([1, 1]), Tableau.of([1], [2])))
    with pytest.raises(ValueError):
        rsk_inverse(TableauPair(Tableau.of([1, 1]), Tableau.of([2, 1])))


def test_round_trip_exhaustive():
    for m in range(1, 5):
        for n in range(0, 9 if m <= 2 else (7 if m == 3 else 6)):
            for w in product(range(1, m + 1), repeat=n):
                pair = rsk(w)
                assert validate_tableau(pair.P, "ssyt")
                assert validate_tableau(pair.Q, "syt")
                assert rsk_inverse(pair) == w


@given(words(max_len=8, max_letter=4))
def test_round_trip_property(w):
    pair = rsk(w)
    assert rsk_inverse(pair) == w
    assert rsk(rsk_inverse(pair)) == pair
    assert sorted(pair.P.entries()) == sorted(w)
    assert insertion_shape(w) == pair.shape


def test_greene_examples():
    assert greene_oracle(OMEGA, 1, "nondecreasing") == 6
    assert greene_oracle(OMEGA, 1, "decreasing") == 3
    assert greene_oracle(OMEGA, 0) == 0
    assert greene_oracle((), 3) == 0
    with pytest.raises(ValueError):
        greene_oracle(tuple(range(13)), 1)


@settings(max_examples=150, deadline=None)
@given(words(max_len=10, max_letter=4))
def test_greene_agreement(w):
    lam = insertion_shape(w)
    conj = conjugate(lam)
    for k in range(1, lam.height + 1):
        assert greene_oracle(w, k, "nondecreasing") == sum(lam.parts[:k])
    for k in range(1, conj.height + 1):
        assert greene_oracle(w, k, "decreasing") == sum(conj.parts[:k])


def test_knuth_examples():
    assert (3, 1, 2) in knuth_neighbors((1, 3, 2))
    assert knuth_neighbors((1, 1, 1)) == set()
    assert (2, 3, 1) in knuth_neighbors((2, 1, 3))


def test_knuth_neighbors_are_symmetric():
    for w in product(range(1, 4), repeat=4):
        for v in knuth_neighbors(w):
            assert w in knuth_neighbors(v)


@settings(max_examples=200, deadline=None)
@given(words(max_len=10, max_letter=4))
def test_knuth_preserves_p_and_ii1(w):
    P = rsk(w).P
    m = max(w, default=1)
    for v in knuth_neighbors(w):
        assert rsk(v).P == P
        for i in range(1, m + 1):
            assert max_ii1_subseq(v, i) == max_ii1_subseq(w, i)


def test_same_p_implies_knuth_connected_small():
    # words with equal P are connected by elementary moves (length 4, 3 letters)
    classes = {}
    for w in product(range(1, 4), repeat=4):
        classes.setdefault(rsk(w).P, set()).add(w)
    for members in classes.values():
        start = next(iter(members))
        seen, todo = {start}, [start]
        while todo:
            for v in knuth_neighbors(todo.pop()):
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        assert seen == members


def test_max_ii1_subseq_examples():
    assert max_ii1_subseq(OMEGA, 1) == 5
    assert max_ii1_subseq(OMEGA, 2) == 5
    assert max_ii1_subseq((2,) * 7, 2) == 7
    with pytest.raises(ValueError):
        max_ii1_subseq(OMEGA, 0)


@given(words(max_len=10, max_letter=4))
def test_max_ii1_subseq_matches_bruteforce(w):
    for i in range(1, 4):
        got = max_ii1_subseq(w, i)
        assert got == max_ii1_subseq_bruteforce(w, i)
        assert got <= insertion_shape(w).width


def test_strip_subsequence_equivalence():
    """Strip of length lambda_1 in P iff (i,i+1)-subsequence of that length in w."""
    for m in (2, 3, 4):
        for n in range(1, 9 if m < 4 else 7):
            for w in product(range(1, m + 1), repeat=n):
                P = rsk(w).P
                width = P.shape.width
                for i in range(1, m):
                    assert (max_ii1_strip(P, i) >= width) == (max_ii1_subseq(w, i) >= width)


def test_greene_random_sample_is_reproducible():
    rng = random.Random(7)
    w = tuple(rng.randint(1, 4) for _ in range(9))
    assert greene_oracle(w, 2) == sum(insertion_shape(w).parts[:2])
