import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from resonance.arrangement import (ArrangementSpec, CoefficientSet, arrangement, broken_circuits,
                                   canonicalize, circuits, load_arrangement, parse_coefficients, rank)
from resonance.errors import InvalidArrangement
from resonance.linalg import integer_rank


def test_resonance_n2_normals():
    g = arrangement("0,1", 2)
    assert sorted(g.normals) == [(0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_resonance_count(n):
    assert len(arrangement("0,1", n)) == 2 ** n - 1


def test_threshold_n3_collapses_pairs():
    assert len(arrangement("-1,1", 3)) == 4


def brute_count(S, n):
    seen = set()
    for v in itertools.product(S, repeat=n):
        if any(v):
            seen.add(canonicalize(v)[0])
    return len(seen)


@pytest.mark.parametrize("S", [[0, 1], [-1, 1], [-1, 0, 1], [1, 2], [0, Fraction(1, 2), 1]])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_build_matches_brute_dedup(S, n):
    assert len(arrangement(S, n)) == brute_count(S, n)


def test_plus_minus_syntax():
    assert parse_coefficients("±1") == CoefficientSet([-1, 1])
    assert parse_coefficients("0,±1").values == (-1, 0, 1)


def test_rejects_bad_input():
    with pytest.raises(InvalidArrangement):
        ArrangementSpec(CoefficientSet([0]), 2)
    with pytest.raises(InvalidArrangement):
        CoefficientSet([1, 1])
    with pytest.raises(InvalidArrangement):
        ArrangementSpec(CoefficientSet([0, 1]), 0)


vectors = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=5)


@given(vectors, st.fractions(min_value=-7, max_value=7, max_denominator=5))
def test_canonical_normal_is_scale_invariant(v, c):
    if not any(v) or c == 0:
        return
    n1, s1 = canonicalize(v)
    n2, s2 = canonicalize([c * x for x in v])
    assert n1 == n2
    assert s2 == s1 * (1 if c > 0 else -1)
    first = next(x for x in n1 if x)
    assert first > 0


def test_ground_set_order_and_roundtrip():
    g = arrangement("-1,0,1", 3)
    assert g.normals == sorted(g.normals)
    assert load_arrangement(g.dumps()).normals == g.normals


def test_rank_examples():
    g = arrangement("0,1", 2)
    assert rank(g, range(3)) == 2
    assert all(rank(g, [k]) == 1 for k in range(3))
    g3 = arrangement("0,1", 3)
    e1, e2 = g3.locate((1, 0, 0))[0], g3.locate((0, 1, 0))[0]
    assert rank(g3, [e1, e2, g3.locate((1, 1, 0))[0]]) == 2


small = [arrangement(S, n) for S in ("0,1", "-1,1", "-1,0,1", "1,2") for n in (2, 3)
         if len(arrangement(S, n)) <= 12]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small), st.data())
def test_rank_is_a_matroid_rank(g, data):
    idx = st.sets(st.integers(0, len(g) - 1))
    A = data.draw(idx)
    B = data.draw(idx)
    assert 0 <= rank(g, A) <= len(A)
    assert rank(g, A) <= rank(g, A | B)
    assert rank(g, A | B) + rank(g, A & B) <= rank(g, A) + rank(g, B)


def test_circuit_examples():
    g = arrangement("0,1", 2)
    cs = circuits(g)
    assert [c.elements for c in cs] == [(0, 1, 2)]
    assert circuits(g, max_size=1) == []
    assert circuits(arrangement("-1,1", 2), max_size=2) == []


@pytest.mark.parametrize("S,n", [("0,1", 3), ("-1,1", 3), ("-1,0,1", 2), ("1,2", 3)])
def test_circuits_are_minimal_dependent_and_complete(S, n):
    g = arrangement(S, n)
    normals = g.normals
    found = {c.elements for c in circuits(g)}
    for c in circuits(g):
        vecs = [normals[k] for k in c.elements]
        assert integer_rank(vecs) == len(vecs) - 1
        assert all(integer_rank(vecs[:k] + vecs[k + 1:]) == len(vecs) - 1 for k in range(len(vecs)))
        assert sum(lam * normals[e][0] for lam, e in zip(c.coefficients, c.elements)) == 0
        assert all(lam for lam in c.coefficients)
    # exhaustive: every minimal dependent set of size <= n+1 was reported
    for size in range(2, n + 2):
        for sub in itertools.combinations(range(len(g)), size):
            vecs = [normals[k] for k in sub]
            minimal = integer_rank(vecs) == size - 1 and all(
                integer_rank(vecs[:k] + vecs[k + 1:]) == size - 1 for k in range(size))
            assert minimal == (sub in found)


def test_broken_circuit_examples():
    g = arrangement("0,1", 2)
    # lexicographic order is (0,1) < (1,0) < (1,1)
    assert broken_circuits(g) == [(1, 2)]
    assert broken_circuits(arrangement("-1,1", 2)) == []
    g3 = arrangement("0,1", 3)
    e1, e2, e12 = (g3.locate(v)[0] for v in [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    # e2 precedes e1 lexicographically, so it is the dropped minimum
    assert e2 < e1 < e12
    assert (e1, e12) in broken_circuits(g3)
    for c in circuits(g3):
        assert c.elements[1:] in broken_circuits(g3)
