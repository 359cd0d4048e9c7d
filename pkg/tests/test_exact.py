import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle_usd._exact import bareiss_det, bareiss_rank, fraction_rank

from conftest import leibniz_det


def square_ints(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def rect_ints():
    return st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
        lambda rc: st.lists(
            st.lists(st.integers(-3, 3), min_size=rc[1], max_size=rc[1]),
            min_size=rc[0],
            max_size=rc[0],
        )
    )


@settings(max_examples=300)
@given(square_ints())
def test_bareiss_matches_leibniz(mat):
    assert bareiss_det(mat) == leibniz_det(mat)


@settings(max_examples=300)
@given(rect_ints())
def test_bareiss_rank_matches_fractions(mat):
    assert bareiss_rank(mat) == fraction_rank(mat)


def test_known_determinants():
    assert bareiss_det([]) == 1
    assert bareiss_det([[7]]) == 7
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[2, 1, 1], [1, 2, 1], [1, 1, 2]]) == 4


def test_big_integers_stay_exact():
    big = 10**30
    mat = [[big, 1], [1, big]]
    assert bareiss_det(mat) == big * big - 1


def test_non_square_rejected():
    with pytest.raises(ValueError):
        bareiss_det([[1, 2, 3], [4, 5, 6]])


def test_rank_zero_columns():
    assert bareiss_rank([[0, 0, 1], [0, 0, 2]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
