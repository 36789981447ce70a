import itertools

import pytest

from resonance.arrangement import arrangement
from resonance.chambers import (act_on_vector, enumerate_chambers, fixed_chambers, is_chamber,
                                signed_permutation)
from resonance.charpoly import chamber_count, char_poly_nbc
from resonance.errors import LimitExceeded
from resonance.symmetric import partitions, representative


@pytest.mark.parametrize("S,n,count", [("0,1", 1, 2), ("0,1", 2, 6), ("-1,1", 2, 4), ("0,1", 3, 32),
                                       ("-1,1", 3, 14), ("-1,0,1", 2, 8)])
def test_counts(S, n, count):
    assert len(enumerate_chambers(arrangement(S, n))) == count


@pytest.mark.parametrize("S,n", [("0,1", 2), ("-1,1", 3), ("-1,0,1", 2), ("1,2", 2), ("0,1", 3)])
def test_bfs_matches_exhaustive_sign_vectors(S, n):
    g = arrangement(S, n)
    m = len(g)
    feasible = set()
    for signs in itertools.product((1, -1), repeat=m):
        if is_chamber(g, signs):
            feasible.add(sum(1 << k for k, s in enumerate(signs) if s > 0))
    found = [c.mask for c in enumerate_chambers(g)]
    assert len(found) == len(set(found))
    assert set(found) == feasible
    assert len(feasible) == chamber_count(char_poly_nbc(g))


def test_points_lie_in_their_chambers():
    g = arrangement("-1,0,1", 2)
    for c in enumerate_chambers(g):
        for k, h in enumerate(g.normals):
            value = sum(a * b for a, b in zip(h, c.point))
            assert value != 0 and (value > 0) == (c.sign(k) > 0)
        assert len(str(c)) == len(g)


def test_limit():
    with pytest.raises(LimitExceeded):
        enumerate_chambers(arrangement("0,1", 4), limit=10)


def test_fixed_chamber_examples():
    g = arrangement("0,1", 2)
    assert fixed_chambers(g, (0, 1)) == 6
    assert fixed_chambers(g, (1, 0)) == 2
    assert fixed_chambers(arrangement("-1,1", 2), (1, 0)) == 0


def geometric_fixed(g, sigma):
    """Fixed iff sigma maps the chamber's interior point back into the chamber."""
    count = 0
    for c in enumerate_chambers(g):
        y = act_on_vector(sigma, c.point)
        if all((sum(a * b for a, b in zip(h, y)) > 0) == (c.sign(k) > 0) for k, h in enumerate(g.normals)):
            count += 1
    return count


@pytest.mark.parametrize("S,n", [("0,1", 2), ("0,1", 3), ("-1,1", 3), ("-1,1", 4), ("-1,0,1", 2)])
def test_fixed_chambers_on_every_class(S, n):
    g = arrangement(S, n)
    for mu in partitions(n):
        sigma = representative(mu)
        assert fixed_chambers(g, sigma) == geometric_fixed(g, sigma)


def test_signed_permutation_is_a_bijection():
    g = arrangement("-1,1", 3)
    perm = signed_permutation(g, (2, 0, 1))
    assert sorted(j for j, _ in perm) == list(range(len(g)))
    assert act_on_vector((2, 0, 1), (1, 2, 3)) == (2, 3, 1)
