from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from tevrsk.tableau import (
    MalformedTableauError,
    Partition,
    Tableau,
    conjugate,
    count_ssyt,
    enumerate_partitions,
    enumerate_ssyt,
    max_ii1_strip,
    max_ii1_strip_bruteforce,
    reading_word,
    validate_tableau,
)

EXAMPLE_RED = Tableau(
    ((8, 6, 5, 3, 2), (11, 10, 9, 7, 6, 4, 3, 1), (11, 10, 9, 8, 7, 5, 4, 2, 1)), rotated=True
)
PSI_B = Tableau.of([1, 1, 1, 1, 2, 3], [2, 2, 2], [3, 3])


@pytest.mark.parametrize(
    "parts, expected",
    [((), ()), ((6, 3, 2), (3, 3, 2, 1, 1, 1)), ((7, 4, 4, 3), (4, 4, 4, 3, 1, 1, 1))],
)
def test_conjugate_examples(parts, expected):
    assert conjugate(Partition(parts)) == Partition(expected)


def test_partition_normalises_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))


@given(partitions)
def test_conjugate_is_involution(parts):
    lam = Partition(parts)
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_conjugate_involution_exhaustive_to_12():
    for n in range(13):
        for lam in enumerate_partitions(n, n, n):
            assert conjugate(conjugate(lam)) == lam


def test_validate_examples():
    assert validate_tableau(Tableau.of([1, 1, 1, 2, 3], [2, 2], [3]), "ssyt")
    assert not validate_tableau(Tableau.of([1], [1]), "ssyt")
    assert validate_tableau(EXAMPLE_RED, "rotated_red")
    assert validate_tableau(Tableau.of([1, 4, 7, 9, 10, 11], [2, 5, 8], [3, 6]), "syt")
    assert not validate_tableau(Tableau.of([1, 1], [2]), "syt")


def test_red_rejects_equal_entries_in_a_row():
    assert not validate_tableau(Tableau(((3, 3), (2, 1)), rotated=True), "rotated_red")
    # right-aligned column 2 over 3 increases downward
    assert not validate_tableau(Tableau(((2,), (1, 3)), rotated=True), "rotated_red")


def test_malformed_rows_are_structural_errors():
    with pytest.raises(MalformedTableauError):
        Tableau(((1,), (1, 2)))
    with pytest.raises(MalformedTableauError):
        Tableau(((1, 2),), shape=Partition((3,)))
    with pytest.raises(MalformedTableauError):
        validate_tableau(EXAMPLE_RED, "ssyt")


def test_reading_word():
    assert reading_word(PSI_B) == (3, 3, 2, 2, 2, 1, 1, 1, 1, 2, 3)
    assert reading_word(Tableau(())) == ()
    assert reading_word(Tableau.of([1, 2])) == (1, 2)


def test_reading_word_rows_weakly_increase():
    for T in enumerate_ssyt(Partition((3, 2, 2)), 4):
        w = reading_word(T)
        start = 0
        for row in reversed(T.rows):
            seg = w[start:start + len(row)]
            assert list(seg) == sorted(seg)
            start += len(row)


def test_strip_example_shape_7443():
    # green boxes: row 3 col 1, row 2 cols 2-4, row 1 cols 5-6, filled 3,3,3,4,4,4
    T = Tableau.of([1, 1, 1, 1, 4, 4, 5], [2, 3, 3, 4], [3, 4, 4, 5], [4, 5, 5])
    assert validate_tableau(T, "ssyt")
    assert max_ii1_strip(T, 3) >= 6
    assert max_ii1_strip_bruteforce(T, 3) >= 6


def test_strip_single_row_and_psi_b():
    assert max_ii1_strip(Tableau.of([2, 2, 3]), 2) == 3
    # frozen from max_ii1_strip_bruteforce
    assert max_ii1_strip(PSI_B, 1) == 5
    assert max_ii1_strip(PSI_B, 2) == 3


def test_strip_rejects_bad_letter():
    with pytest.raises(ValueError):
        max_ii1_strip(PSI_B, 0)
    with pytest.raises(ValueError):
        max_ii1_strip(PSI_B, 3, max_entry=3)


@pytest.mark.parametrize("shape", [(3, 2), (4, 2, 1), (3, 3, 1), (5, 1, 1), (2, 2, 2)])
def test_strip_dp_matches_bruteforce(shape):
    lam = Partition(shape)
    for T in enumerate_ssyt(lam, 4):
        for i in (1, 2, 3):
            got = max_ii1_strip(T, i)
            assert got == max_ii1_strip_bruteforce(T, i)
            assert got <= lam.width


def _brute_ssyt(shape, m):
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    out = []
    for vals in product(range(1, m + 1), repeat=len(cells)):
        rows = [[0] * n for n in shape]
        for (r, c), v in zip(cells, vals):
            rows[r][c] = v
        T = Tableau(tuple(map(tuple, rows)))
        if validate_tableau(T, "ssyt"):
            out.append(T)
    return out


def test_enumerate_ssyt_examples():
    assert list(enumerate_ssyt(Partition((1, 1, 1)), 3)) == [Tableau.of([1], [2], [3])]
    assert list(enumerate_ssyt(Partition((2, 2)), 2)) == [Tableau.of([1, 1], [2, 2])]
    assert len(list(enumerate_ssyt(Partition((2, 1)), 3))) == 8
    assert list(enumerate_ssyt(Partition((1, 1, 1)), 2)) == []


@pytest.mark.parametrize("shape, m", [((2, 1), 3), ((2, 2), 3), ((3, 1), 3), ((2, 1, 1), 4), ((3, 2), 2)])
def test_enumerate_ssyt_matches_bruteforce(shape, m):
    got = list(enumerate_ssyt(Partition(shape), m))
    want = _brute_ssyt(shape, m)
    assert got == sorted(want, key=lambda T: [v for row in T.rows for v in row])
    assert all(validate_tableau(T, "ssyt") for T in got)
    assert count_ssyt(Partition(shape), m) == len(got)


def test_enumerate_ssyt_restartable():
    lam = Partition((3, 1))
    assert list(enumerate_ssyt(lam, 3)) == list(enumerate_ssyt(lam, 3))


def test_enumerate_partitions_examples():
    assert list(enumerate_partitions(0, 3, 3)) == [Partition(())]
    assert list(enumerate_partitions(4, 2, 2)) == [Partition((2, 2))]
    assert list(enumerate_partitions(4, 3, 3)) == [Partition(p) for p in [(2, 1, 1), (2, 2), (3, 1)]]


@given(st.integers(0, 10), st.integers(0, 5), st.integers(0, 5))
def test_enumerate_partitions_matches_filter(n, h, w):
    everything = set(enumerate_partitions(n, n, n)) if n else {Partition(())}
    want = sorted(p for p in everything if p.fits(h, w))
    assert list(enumerate_partitions(n, h, w)) == want
