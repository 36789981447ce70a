import itertools
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from resonance.linalg import RowSpace, integer_rank, kernel, primitive, rank, solve
from resonance.lp import strictly_feasible_point

matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5))


def test_primitive():
    assert primitive([0, -4, 6]) == ((0, 2, -3), -1)
    assert primitive([3, 6]) == ((1, 2), 1)


@given(matrices)
def test_rank_agrees(mat):
    assert integer_rank(mat) == rank(mat)


@given(matrices)
def test_kernel_is_kernel(mat):
    ker = kernel(mat)
    assert len(ker) == len(mat[0]) - rank(mat)
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in mat)


def test_solve():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


@given(matrices)
def test_rowspace_rank_and_coordinates(mat):
    space = RowSpace()
    for row in mat:
        space.add({k: Fraction(x) for k, x in enumerate(row) if x})
    assert space.rank == rank(mat)
    for row in mat:
        assert space.coordinates({k: Fraction(x) for k, x in enumerate(row) if x}) is not None


def _brute_feasible(rows):
    """Search a small integer box for a strictly feasible point."""
    n = len(rows[0])
    for x in itertools.product(range(-6, 7), repeat=n):
        if all(sum(a * b for a, b in zip(r, x)) > 0 for r in rows):
            return True
    return False


def test_lp_examples():
    assert strictly_feasible_point([[1, 0], [0, 1]]) is not None
    assert strictly_feasible_point([[1, 0], [-1, 0]]) is None
    assert strictly_feasible_point([[1, 1], [-1, 0], [0, -1]]) is None


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=1, max_size=4))
def test_lp_matches_brute_force_in_the_plane(rows):
    point = strictly_feasible_point(rows)
    if point is not None:
        assert all(sum(a * b for a, b in zip(r, point)) > 0 for r in rows)
    # homogeneous open cones in the plane contain a small integer point if nonempty
    assert (point is not None) == _brute_feasible(rows)
