import pytest

from resonance.algebra import GradedAlgebra
from resonance.arrangement import arrangement
from resonance.equivariant import (DirectQuotient, chamber_character, character, padded_multiplicity_table,
                                   row_bound_report, total_character)
from resonance.symmetric import decompose, partitions, representative


def test_character_examples():
    g = arrangement("0,1", 3)
    chi = character(g, "os", 1)
    # permutation character on 7 hyperplanes, orbits by support size
    assert chi.to_json() == {"3": "1", "2+1": "3", "1+1+1": "7"}
    assert decompose(chi) == {(3,): 3, (2, 1): 2}
    assert total_character(arrangement("0,1", 2), "cordovil")[(2,)] == 2


@pytest.mark.parametrize("S,n", [("0,1", 2), ("0,1", 3), ("-1,1", 3), ("-1,0,1", 2)])
def test_identity_trace_is_betti(S, n):
    g = arrangement(S, n)
    alg = GradedAlgebra(g, "os")
    for i in range(n + 1):
        assert character(g, "os", i, alg)[(1,) * n] == len(alg.nbc_basis(i))


@pytest.mark.parametrize("S,n", [("0,1", 3), ("-1,1", 3), ("-1,1", 4)])
def test_chamber_identity(S, n):
    g = arrangement(S, n)
    assert total_character(g, "cordovil").values == chamber_character(g).values


def test_row_bound_examples():
    assert row_bound_report(arrangement("0,1", 3), "os", 1).holds
    rep = row_bound_report(arrangement("0,1", 4), "os", 1)
    assert rep.holds and rep.bound == 2
    rep = row_bound_report(arrangement("-1,1", 4), "cordovil", 2)
    assert rep.holds and rep.bound == 4
    assert rep.to_json()["violators"] == []


def test_padded_trivial_multiplicities():
    table = padded_multiplicity_table("0,1", "os", 1, (), range(1, 6))
    assert [m for _, m in table.rows] == [1, 2, 3, 4, 5]
    assert table.residuals == [0] * 5
    zero = padded_multiplicity_table("-1,1", "cordovil", 0, (), range(1, 5))
    assert [m for _, m in zero.rows] == [1, 1, 1, 1]


@pytest.mark.parametrize("S,n", [("0,1", 2), ("0,1", 3), ("-1,1", 3), ("1,2", 3), ("-1,0,1", 2)])
@pytest.mark.parametrize("conv", ["os", "cordovil"])
def test_direct_quotient_agrees(S, n, conv):
    g = arrangement(S, n)
    alg = GradedAlgebra(g, conv, max_degree=3)
    for i in range(min(3, n) + 1):
        direct = DirectQuotient(alg, i)
        assert direct.dimension == len(alg.nbc_basis(i))
        for mu in partitions(n):
            sigma = representative(mu)
            assert direct.trace(sigma) == alg.trace(sigma, i)
