import itertools

import pytest
from hypothesis import given, settings, strategies as st

from resonance.arrangement import arrangement, broken_circuits, rank
from resonance.charpoly import (CharPoly, all_hyperplanes_char_poly, betti_numbers, chamber_count,
                                char_poly_finite_field, char_poly_nbc, check_prime,
                                count_all_hyperplanes_complement, count_complement_points, good_primes)
from resonance.errors import BadPrime, NonAlternating


def whitney(g):
    """Sum over all subsets of (-1)^|B| t^(n - rank B)."""
    n, m = g.n, len(g)
    coeffs = [0] * (n + 1)
    for size in range(m + 1):
        for sub in itertools.combinations(range(m), size):
            coeffs[rank(g, sub)] += (-1) ** size
    return CharPoly(coeffs)


def brute_nbc(g):
    """Count independent sets with no broken circuit, by listing them."""
    bcs = [set(b) for b in broken_circuits(g)]
    counts = [0] * (g.n + 1)
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(len(g)), size):
            if rank(g, sub) == size and not any(b <= set(sub) for b in bcs):
                counts[size] += 1
    return CharPoly([(-1) ** k * c for k, c in enumerate(counts)])


def brute_points(g, q):
    return sum(1 for x in itertools.product(range(q), repeat=g.n)
               if all(sum(a * b for a, b in zip(h, x)) % q for h in g.normals))


FROZEN = {
    ("0,1", 2): [1, -3, 2],
    ("0,1", 3): [1, -7, 15, -9],
    ("0,1", 4): [1, -15, 80, -170, 104],
    ("0,1", 5): [1, -31, 375, -2130, 5270, -3485],
    ("-1,1", 2): [1, -2, 1],
    ("-1,1", 5): [1, -16, 120, -460, 820, -465],
    ("-1,0,1", 3): [1, -13, 47, -35],
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_values(key):
    assert char_poly_nbc(arrangement(*key)).coefficients == tuple(FROZEN[key])


SMALL = [("0,1", 2), ("0,1", 3), ("-1,1", 2), ("-1,1", 3), ("-1,0,1", 2), ("1,2", 3), ("0,1,2", 2),
         ("-1,0,1", 3)]


@pytest.mark.parametrize("S,n", SMALL)
def test_three_routes_agree_with_whitney(S, n):
    g = arrangement(S, n)
    expected = whitney(g)
    assert char_poly_nbc(g) == expected
    assert brute_nbc(g) == expected
    assert char_poly_finite_field(g) == expected


def test_point_count_example():
    g = arrangement("0,1", 2)
    assert count_complement_points(g, 5) == 12 == char_poly_nbc(g)(5)


@pytest.mark.parametrize("S,n,q", [("0,1", 3, 5), ("0,1", 3, 7), ("-1,1", 3, 7), ("-1,0,1", 2, 11),
                                   ("1,2", 2, 5)])
def test_point_count_matches_brute_force(S, n, q):
    g = arrangement(S, n)
    assert count_complement_points(g, q) == brute_points(g, q)


def test_prime_guard():
    g = arrangement("0,1", 3)
    with pytest.raises(BadPrime):
        check_prime(g, 2)
    for q in good_primes(g):
        check_prime(g, q)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([("0,1", 3), ("-1,1", 3), ("-1,0,1", 2), ("0,1", 4)]), st.randoms())
def test_nbc_is_order_invariant(key, rnd):
    g = arrangement(*key)
    order = list(range(len(g)))
    rnd.shuffle(order)
    assert char_poly_nbc(g, order) == char_poly_nbc(g)


def test_betti_and_chambers():
    chi = char_poly_nbc(arrangement("0,1", 3))
    assert betti_numbers(chi) == [1, 7, 15, 9]
    assert chamber_count(chi) == 32 == sum(betti_numbers(chi))
    assert betti_numbers(char_poly_nbc(arrangement("0,1", 2))) == [1, 3, 2]
    with pytest.raises(NonAlternating):
        betti_numbers(CharPoly([1, 2]))


@pytest.mark.parametrize("S,n", SMALL)
def test_first_betti_counts_hyperplanes(S, n):
    g = arrangement(S, n)
    assert betti_numbers(char_poly_nbc(g))[1] == len(g)


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (5, 2)])
def test_all_hyperplanes_over_fq(q, n):
    chi = all_hyperplanes_char_poly(q, n)
    expected = CharPoly([1])
    for j in range(n):
        # multiply by (t - q^j)
        c = list(expected.coefficients) + [0]
        expected = CharPoly([c[k] - q ** j * (c[k - 1] if k else 0) for k in range(len(c))])
    assert chi == expected
    assert count_all_hyperplanes_complement(q, n) == chi(q)
