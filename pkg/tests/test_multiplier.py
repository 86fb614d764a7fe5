from math import inf, prod

import pytest

from oracles import classical_schur_multiplier
from polynil.abelian import FGAbelianGroup, elements, enumerate_abelian_groups, quotient_by_subgroup
from polynil.multiplier import (
    MultiplierStructure,
    factored_value,
    multiplier_order,
    multiplier_torsion_free_rank,
    polynilpotent_multiplier,
    torsion_part,
)
from polynil.witt import chi_chain


def G(*torsion, rank=0):
    return FGAbelianGroup(rank, torsion)


@pytest.mark.parametrize("n", range(2, 9))
def test_homocyclic_rank_two(n):
    assert polynilpotent_multiplier(G(n, n), (1,)) == MultiplierStructure(0, ((n, 1),))
    assert polynilpotent_multiplier(G(n, n), (1, 1)).is_trivial
    assert polynilpotent_multiplier(G(n, n, n), (1, 1)) == MultiplierStructure(0, ((n, 3),))


def test_klein_four_class_two():
    assert polynilpotent_multiplier(G(2, 2), (2,)) == MultiplierStructure(0, ((2, 2),))


@pytest.mark.parametrize("row", [(1,), (2,), (3,), (2, 1), (2, 2)])
def test_finite_layers_start_at_second_factor(row):
    g = G(12, 6, 6, 2)
    f = [chi_chain(row, i) for i in range(5)]
    assert f[1] == 0
    expected = MultiplierStructure(0, ((6, f[2]), (6, f[3] - f[2]), (2, f[4] - f[3])))
    assert polynilpotent_multiplier(g, row) == expected


def test_layer_normalization():
    s = MultiplierStructure(0, ((4, 2), (4, 1), (2, 0), (1, 7)))
    assert s.layers == ((4, 3),)
    with pytest.raises(ValueError):
        MultiplierStructure(0, ((4, -1),))
    with pytest.raises(ValueError):
        MultiplierStructure(-1)


def test_order():
    assert multiplier_order(MultiplierStructure()) == {}
    assert multiplier_order(MultiplierStructure(0, ((4, 2), (2, 1)))) == {2: 5}
    assert multiplier_order(MultiplierStructure(3, ((4, 2),))) == inf


def test_order_multiplicative():
    for g in enumerate_abelian_groups(40):
        for row in [(1,), (2,), (1, 1)]:
            s = polynilpotent_multiplier(g, row)
            assert factored_value(multiplier_order(s)) == prod(n ** k for n, k in s.layers)


def test_torsion_free_rank():
    assert multiplier_torsion_free_rank(polynilpotent_multiplier(G(rank=3), (1,))) == 3
    assert multiplier_torsion_free_rank(polynilpotent_multiplier(G(4, 2), (3,))) == 0
    assert multiplier_torsion_free_rank(polynilpotent_multiplier(G(rank=2), (1, 1))) == 0


def test_torsion_part():
    s = MultiplierStructure(0, ((4, 2),))
    assert torsion_part(s) == s
    assert torsion_part(MultiplierStructure(5)).is_trivial
    t = torsion_part(polynilpotent_multiplier(G(2, rank=3), (1,)))
    assert t == MultiplierStructure(0, ((2, 3),))


def test_classical_schur():
    for g in enumerate_abelian_groups(64):
        expected = MultiplierStructure(0, tuple(classical_schur_multiplier(g.torsion).items()))
        assert polynilpotent_multiplier(g, (1,)) == expected


@pytest.mark.parametrize("row", [(1, 1), (1, 2), (1, 3), (1, 1, 1), (1, 2, 2)])
@pytest.mark.parametrize("n", range(2, 13))
def test_two_generator_vanishing(row, n):
    assert polynilpotent_multiplier(G(n, n), row).is_trivial
    assert polynilpotent_multiplier(G(n), row).is_trivial
    assert polynilpotent_multiplier(G(rank=2), row).is_trivial


@pytest.mark.parametrize("row", [(1,), (2,), (3,), (2, 1), (3, 1, 1)])
def test_cyclic_vanishing(row):
    for n in range(2, 30):
        assert polynilpotent_multiplier(G(n), row).is_trivial
    assert polynilpotent_multiplier(G(rank=1), row).is_trivial
    assert not polynilpotent_multiplier(G(2, 2), row).is_trivial


@pytest.mark.parametrize("row", [(1,), (2,), (1, 1)])
def test_quotient_order_divides(row):
    for g in enumerate_abelian_groups(48):
        before = factored_value(multiplier_order(polynilpotent_multiplier(g, row)))
        for x in elements(g):
            q = quotient_by_subgroup(g, [x])
            after = factored_value(multiplier_order(polynilpotent_multiplier(q, row)))
            assert before % after == 0
