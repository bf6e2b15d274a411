from random import Random

import pytest

from qym.chains import (AXES, DIRS_BY_DEGREE, Cell, Chain, boundary,
                        boundary_is_nilpotent_on, complement, shift,
                        shuffle_sign, star_chain)
from qym.scalars import rat


def test_shift_operators():
    assert shift((0, 0, 0, 0), 2) == (0, 1, 0, 0)
    assert shift(shift((1, 2, 3, 4), 2), 2, -1) == (1, 2, 3, 4)
    assert shift(shift((1, 2, 3, 4), 1), 3) == (2, 2, 4, 4)
    with pytest.raises(ValueError):
        shift((0, 0, 0, 0), 5)


def test_boundary_of_point_vanishes():
    assert boundary(Chain.basis((3, -1, 0, 2), ())).is_zero()


def test_boundary_of_edge():
    bc = boundary(Chain.basis((0, 0, 0, 0), (1,)))
    assert bc.terms == {Cell((1, 0, 0, 0), ()): rat(1),
                        Cell((0, 0, 0, 0), ()): rat(-1)}


def test_boundary_of_plaquette_24():
    # four terms: the edge factor in slot 2 or slot 4 survives, with the
    # graded sign on the slot-4 differences
    bc = boundary(Chain.basis((0, 0, 0, 0), (2, 4)))
    assert bc.terms == {
        Cell((0, 1, 0, 0), (4,)): rat(1),
        Cell((0, 0, 0, 0), (4,)): rat(-1),
        Cell((0, 0, 0, 1), (2,)): rat(-1),
        Cell((0, 0, 0, 0), (2,)): rat(1),
    }


def test_boundary_squared_zero_all_degrees():
    rng = Random("chains")
    for degree in range(5):
        terms = {}
        for _ in range(12):
            index = tuple(rng.randint(-2, 2) for _ in range(4))
            dirs = rng.choice(DIRS_BY_DEGREE[degree])
            terms[Cell(index, dirs)] = rat(rng.randint(-5, 5), rng.randint(1, 3))
        assert boundary_is_nilpotent_on(Chain(degree, terms))


def test_chain_linearity():
    a = Chain.basis((0, 0, 0, 0), (1,))
    b = Chain.basis((0, 1, 0, 0), (2,))
    combo = 2 * a - b
    assert boundary(combo) == 2 * boundary(a) - boundary(b)


def test_zero_chain_is_empty_mapping():
    a = Chain.basis((0, 0, 0, 0), (1, 2))
    assert (a - a).is_zero()
    assert (a - a).terms == {}


def test_shuffle_sign():
    assert shuffle_sign((1,), (2,)) == 1
    assert shuffle_sign((2,), (1,)) == -1
    assert shuffle_sign((1, 3), (2, 4)) == -1
    assert shuffle_sign((1, 2), (3, 4)) == 1
    assert shuffle_sign((), (1, 2, 3)) == 1


def test_star_example_sign():
    s = star_chain(Chain.basis((1, 2, 3, 4), (1, 3)))
    assert s.terms == {Cell((1, 2, 3, 4), (2, 4), True): rat(-1)}


def test_star_of_point_is_positive_volume():
    s = star_chain(Chain.basis((5, 6, 7, 8), ()))
    assert s.terms == {Cell((5, 6, 7, 8), (1, 2, 3, 4), True): rat(1)}


@pytest.mark.parametrize("degree", range(5))
def test_star_involution_every_subset(degree):
    sign = (-1) ** (degree * (4 - degree))
    for dirs in DIRS_BY_DEGREE[degree]:
        for doubled in (False, True):
            c = Chain.basis((0, -1, 2, 1), dirs, doubled=doubled)
            assert star_chain(star_chain(c)) == sign * c


def test_star_is_bijection_on_basis():
    # at a fixed index, star pairs the p-cells with the (4-p)-cells of the
    # other complex, hitting each exactly once
    for degree in range(5):
        images = set()
        for dirs in DIRS_BY_DEGREE[degree]:
            s = star_chain(Chain.basis((0, 0, 0, 0), dirs))
            (cell,) = s.terms
            assert cell.doubled
            assert cell.dirs == complement(dirs)
            images.add(cell.dirs)
        assert images == set(DIRS_BY_DEGREE[4 - degree])


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        Chain(1, {Cell((0, 0, 0, 0), (1, 2)): rat(1)})
    with pytest.raises(ValueError):
        Chain(1, {Cell((0, 0, 0, 0), (1,), True): rat(1)})


def test_mixed_complex_addition_rejected():
    a = Chain.basis((0, 0, 0, 0), (1,))
    b = Chain.basis((0, 0, 0, 0), (1,), doubled=True)
    with pytest.raises(ValueError):
        a + b
