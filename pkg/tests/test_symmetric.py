import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from resonance.errors import NonCharacter, PadTooSmall
from resonance.symmetric import (CharacterVector, class_size, compose, cycle_type, decompose, dimension,
                                 inverse, irreducible_character, padded, parse_partition,
                                 partition_str, partitions, representative)


def test_partitions_and_strings():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partition_str((2, 1)) == "2+1"
    assert parse_partition("3+1") == (3, 1)
    assert partition_str(()) == "0"


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum(n):
    assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)
    counted = {}
    for p in itertools.permutations(range(n)):
        counted[cycle_type(p)] = counted.get(cycle_type(p), 0) + 1
    assert counted == {mu: class_size(mu) for mu in partitions(n)}


@pytest.mark.parametrize("n", range(1, 8))
def test_character_table_orthogonality(n):
    lams = list(partitions(n))
    for a in lams:
        assert irreducible_character(a, (1,) * n) == dimension(a)
        for b in lams:
            ip = sum(class_size(mu) * irreducible_character(a, mu) * irreducible_character(b, mu)
                     for mu in lams)
            assert ip == (factorial(n) if a == b else 0)


def test_known_values():
    assert irreducible_character((2, 1), (3,)) == -1
    assert irreducible_character((2, 1, 1), (2, 2)) == -1
    assert dimension((3, 2)) == 5


def test_decompose_examples():
    n = 4
    trivial = CharacterVector.from_function(n, lambda mu: 1)
    assert decompose(trivial) == {(4,): 1}
    regular = CharacterVector.from_function(n, lambda mu: factorial(n) if mu == (1,) * n else 0)
    assert decompose(regular) == {lam: dimension(lam) for lam in partitions(n)}
    with pytest.raises(NonCharacter):
        decompose(CharacterVector.from_function(3, lambda mu: Fraction(1, 2)))


def test_padding():
    assert padded((1,), 3) == (2, 1)
    assert padded((), 4) == (4,)
    with pytest.raises(PadTooSmall):
        padded((2,), 3)


perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(n))))


@given(perms)
def test_representative_has_its_cycle_type(p):
    mu = cycle_type(p)
    assert cycle_type(representative(mu)) == mu
    assert compose(p, inverse(p)) == tuple(range(len(p)))
