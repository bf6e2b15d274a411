from itertools import combinations
from random import Random

import pytest

from qym.chains import AXES, DIRS_BY_DEGREE, Cell, Chain, boundary, star_chain
from qym.forms import (DegreeError, RuleForm, SingularCoefficientError,
                       TableForm, Window, WindowError, coboundary,
                       conjugate_form, constant_form, cup, cup_cells,
                       cup_cells_recursive, form_inverse, imaginary_part,
                       iota, pair, star_form, unit_zero_form, zero_form)
from qym.quaternion import ComplexRational, Matrix2C, QUNITS, Quaternion, embed
from qym.sampling import random_form, random_quaternion
from qym.scalars import rat
from qym.solutions import (conjugate_frame_form, coordinate_form, frame_form)

I, J, K, ONE = Quaternion.I, Quaternion.J, Quaternion.K, Quaternion.ONE
PAIRS = DIRS_BY_DEGREE[2]


# -- windows -------------------------------------------------------------------

def test_window_basics():
    w = Window.cube(-2, 2)
    assert w.contains((0, 0, 0, 0)) and not w.contains((0, 0, 3, 0))
    assert w.shrink_upper(1) == Window((-2,) * 4, (1,) * 4)
    assert len(list(Window.cube(0, 1).indices())) == 16
    with pytest.raises(ValueError):
        Window((0, 0, 0, 0), (1, 1, -1, 1))


def test_windowed_read_outside_region_is_an_error():
    f = TableForm(0, {((0, 0, 0, 0), ()): ONE}, Window.cube(0, 1))
    assert f.coefficient((1, 1, 1, 1), ()) == Quaternion.ZERO
    with pytest.raises(WindowError):
        f.coefficient((2, 0, 0, 0), ())


def test_coboundary_shrinks_upper_layer():
    f = random_form(Random("w"), 1, Window.cube(-1, 1))
    df = coboundary(f)
    assert df.window == Window.cube(-1, 0)
    with pytest.raises(WindowError):
        df.coefficient((1, 0, 0, 0), (1, 2))


def test_cup_window_shrinks_only_for_positive_left_degree():
    w = Window.cube(-1, 1)
    zero_deg = cup(random_form(Random("a"), 0, w), random_form(Random("b"), 1, w))
    assert zero_deg.window == w
    one_deg = cup(random_form(Random("c"), 1, w), random_form(Random("d"), 1, w))
    assert one_deg.window == Window.cube(-1, 0)


# -- pairing -------------------------------------------------------------------

def test_pair_matching_and_mismatching_cells():
    k = (0, 0, 0, 0)
    a = Quaternion(2, 1, 0, 0)
    phi = TableForm(2, {(k, (1, 2)): a}, Window.cube(0, 0))
    assert pair(Chain.basis(k, (1, 2)), phi) == a
    assert pair(Chain.basis(k, (1, 3)), phi) == Quaternion.ZERO


def test_pair_is_bilinear():
    k, m = (0, 0, 0, 0), (1, 0, 0, 0)
    a = Quaternion(0, 3, 0, 0)
    phi = TableForm(2, {(k, (1, 2)): a}, Window.cube(0, 1))
    chain = 2 * Chain.basis(k, (1, 2)) + Chain.basis(m, (1, 2))
    assert pair(chain, phi) == a * 2


def test_pair_requires_matching_complex():
    phi = TableForm(0, {((0, 0, 0, 0), ()): ONE}, Window.cube(0, 0))
    with pytest.raises(ValueError):
        pair(Chain.basis((0, 0, 0, 0), (), doubled=True), phi)


def test_pair_outside_window_is_an_error():
    phi = TableForm(0, {((0, 0, 0, 0), ()): ONE}, Window.cube(0, 0))
    with pytest.raises(WindowError):
        pair(Chain.basis((3, 0, 0, 0), ()), phi)


# -- coboundary ----------------------------------------------------------------

def test_coboundary_of_constant_vanishes():
    df = coboundary(constant_form(Quaternion(1, 2, 3, 4)))
    assert df.is_zero_on(Window.cube(-2, 2))


def test_coboundary_of_coordinate_form_is_frame():
    assert coboundary(coordinate_form()).equals_on(frame_form(),
                                                   Window.cube(-2, 2))


def test_coboundary_zero_form_components():
    f = TableForm(0, {((0, 0, 0, 0), ()): I}, Window.cube(-1, 1))
    df = coboundary(f)
    # forward difference: -I at the cell itself, +I one step below
    assert df.coefficient((0, 0, 0, 0), (3,)) == -I
    assert df.coefficient((0, 0, -1, 0), (3,)) == I
    assert df.coefficient((0, 0, 0, 0), (1,)) == -I


def test_coboundary_nilpotent(window):
    rng = Random("nilpotent")
    for degree in range(3):
        f = random_form(rng, degree, window)
        assert coboundary(coboundary(f)).is_zero_on(Window.cube(-2, 0))


def test_coboundary_top_degree_rejected():
    with pytest.raises(DegreeError):
        coboundary(zero_form(4))


def test_coboundary_adjoint_to_boundary(window):
    rng = Random("adjoint")
    for degree in range(4):
        f = random_form(rng, degree, window)
        df = coboundary(f)
        for k in Window.cube(-2, 1).indices():
            for dirs in DIRS_BY_DEGREE[degree + 1]:
                chain = Chain.basis(k, dirs)
                assert pair(boundary(chain), f) == pair(chain, df)


# -- cup product ---------------------------------------------------------------

def test_cup_cells_one_dimensional_rules():
    # the three nonzero patterns per axis, encoded on full cells
    k = (0, 0, 0, 0)
    assert cup_cells(Cell(k, ()), Cell(k, ())) == (1, Cell(k, ()))
    assert cup_cells(Cell(k, (1,)), Cell((1, 0, 0, 0), ())) == (1, Cell(k, (1,)))
    assert cup_cells(Cell(k, ()), Cell(k, (1,))) == (1, Cell(k, (1,)))
    assert cup_cells(Cell(k, (1,)), Cell(k, ())) is None
    assert cup_cells(Cell(k, (1,)), Cell(k, (1,))) is None


def test_cup_cells_closed_form_matches_recursion_exhaustively():
    for p in range(5):
        for q in range(5):
            for left_dirs in combinations(AXES, p):
                for right_dirs in combinations(AXES, q):
                    for m in Window.cube(0, 1).indices():
                        left = Cell((0, 0, 0, 0), left_dirs)
                        right = Cell(m, right_dirs)
                        assert cup_cells(left, right) == \
                            cup_cells_recursive(left, right)


def test_frame_components_multiply_to_signed_plaquettes():
    # e_i cup e_j is the (i,j) plaquette form; swapping the factors flips
    # the sign
    def axis_form(i):
        return RuleForm(1, lambda k, d, i=i: ONE if d == (i,) else Quaternion.ZERO)

    w = Window.cube(-1, 1)
    for i, j in PAIRS:
        forward = cup(axis_form(i), axis_form(j))
        backward = cup(axis_form(j), axis_form(i))
        for k in w.indices():
            for pr in PAIRS:
                want = ONE if pr == (i, j) else Quaternion.ZERO
                assert forward.coefficient(k, pr) == want
                assert backward.coefficient(k, pr) == -want


def test_frame_cup_conjugate_expansion():
    ee = cup(frame_form(), conjugate_frame_form())
    expected = {(1, 2): -2 * I, (3, 4): -2 * I, (1, 3): -2 * J,
                (2, 4): 2 * J, (1, 4): -2 * K, (2, 3): -2 * K}
    for k in Window.cube(-1, 1).indices():
        for pr in PAIRS:
            assert ee.coefficient(k, pr) == expected[pr]


def test_conjugate_frame_cup_frame_expansion():
    be = cup(conjugate_frame_form(), frame_form())
    expected = {(1, 2): 2 * I, (3, 4): -2 * I, (1, 3): 2 * J,
                (2, 4): 2 * J, (1, 4): 2 * K, (2, 3): -2 * K}
    for k in Window.cube(-1, 1).indices():
        for pr in PAIRS:
            assert be.coefficient(k, pr) == expected[pr]


def test_unit_form_is_cup_identity(window):
    u = unit_zero_form()
    f = random_form(Random("unit"), 2, window)
    assert cup(u, f).equals_on(f, window)
    assert cup(f, u).equals_on(f, Window.cube(-2, 1))


def test_cup_degree_overflow_rejected():
    with pytest.raises(DegreeError):
        cup(zero_form(3), zero_form(2))


def test_cup_mixed_complexes_rejected():
    with pytest.raises(ValueError):
        cup(zero_form(1), zero_form(1, doubled=True))


def test_cup_coefficients_multiply_in_written_order():
    f = constant_form(I)
    g = constant_form(J)
    assert cup(f, g).coefficient((0, 0, 0, 0), ()) == K
    assert cup(g, f).coefficient((0, 0, 0, 0), ()) == -K


@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2),
                                 (2, 0), (1, 2), (2, 1), (0, 3), (3, 0)])
def test_leibniz_rule(p, q):
    rng = Random(f"leibniz-{p}-{q}")
    w = Window.cube(-1, 1)
    inner = Window.cube(-1, -1)
    for _ in range(5):
        f = random_form(rng, p, w)
        g = random_form(rng, q, w)
        lhs = coboundary(cup(f, g))
        rhs = cup(coboundary(f), g) + \
            cup(f, coboundary(g)).scale(rat(1 if p % 2 == 0 else -1))
        assert lhs.equals_on(rhs, inner)


def test_cup_associativity_empirical():
    rng = Random("assoc")
    w = Window.cube(-1, 1)
    inner = Window.cube(-1, -1)
    for degrees in ((1, 1, 1), (0, 1, 2), (2, 1, 1)):
        f, g, h = (random_form(rng, d, w) for d in degrees)
        assert cup(cup(f, g), h).equals_on(cup(f, cup(g, h)), inner)


# -- star and iota -------------------------------------------------------------

def test_star_form_sign_example():
    f = TableForm(2, {((0, 0, 0, 0), (1, 3)): ONE}, Window.cube(0, 0))
    s = star_form(f)
    assert s.doubled and s.degree == 2
    assert s.coefficient((0, 0, 0, 0), (2, 4)) == -ONE


def test_star_of_zero_form_is_positive_volume_form():
    a = Quaternion(3, 1, 4, 1)
    s = star_form(constant_form(a))
    assert s.degree == 4 and s.doubled
    assert s.coefficient((2, -1, 0, 5), (1, 2, 3, 4)) == a


@pytest.mark.parametrize("degree", range(5))
def test_star_involution_on_forms(degree, small_window):
    f = random_form(Random(f"star{degree}"), degree, small_window)
    sign = (-1) ** (degree * (4 - degree))
    ss = star_form(star_form(f))
    assert ss.equals_on(f.map_coefficients(lambda q: q * sign), small_window)


@pytest.mark.parametrize("degree", range(5))
def test_star_adjunction_against_chains(degree, small_window):
    f = random_form(Random(f"adj{degree}"), degree, small_window)
    sf = star_form(f)
    for k in small_window.indices():
        for dirs in DIRS_BY_DEGREE[4 - degree]:
            doubled_chain = Chain.basis(k, dirs, doubled=True)
            assert pair(doubled_chain, sf) == pair(star_chain(doubled_chain), f)


def test_iota_identities(small_window):
    rng = Random("iota")
    h = random_form(rng, 0, small_window)
    for degree in range(5):
        f = random_form(rng, degree, small_window)
        assert iota(f).doubled and not iota(iota(f)).doubled
        assert iota(iota(f)).equals_on(f, small_window)
        assert iota(star_form(f)).equals_on(star_form(iota(f)), small_window)
        assert iota(star_form(cup(h, f))).equals_on(
            cup(h, iota(star_form(f))), small_window)
    f = random_form(rng, 1, small_window)
    g = random_form(rng, 1, small_window)
    assert iota(coboundary(f)).equals_on(coboundary(iota(f)),
                                         Window.cube(-1, 0))
    assert iota(cup(f, g)).equals_on(cup(iota(f), iota(g)),
                                     Window.cube(-1, 0))


# -- pointwise maps --------------------------------------------------------------

def test_form_inverse_of_unit_form():
    u = unit_zero_form()
    assert form_inverse(u).equals_on(u, Window.cube(-2, 2))


def test_form_inverse_is_pointwise(small_window):
    x = coordinate_form()
    xinv = form_inverse(x)
    k = (1, 1, 0, 0)
    assert xinv.coefficient(k, ()) == Quaternion(1, 1, 0, 0).inverse()
    product = cup(x, xinv)
    assert product.equals_on(unit_zero_form(), Window.cube(1, 3))


def test_form_inverse_singular_index_reported():
    xinv = form_inverse(coordinate_form())
    with pytest.raises(SingularCoefficientError) as err:
        xinv.coefficient((0, 0, 0, 0), ())
    assert err.value.index == (0, 0, 0, 0)


def test_form_inverse_needs_degree_zero():
    with pytest.raises(DegreeError):
        form_inverse(zero_form(1))


def test_generator_inverse_derivative_identity():
    # d(f) cup f^{-1} = - f cup d(f^{-1}) for the coordinate form, away
    # from the origin and its upward shifts
    x = coordinate_form()
    xinv = form_inverse(x)
    lhs = cup(coboundary(x), xinv)
    rhs = cup(x, coboundary(xinv)).scale(rat(-1))
    assert lhs.equals_on(rhs, Window.cube(1, 3))


def test_imaginary_and_conjugate_maps():
    f = constant_form(Quaternion(2, 1, -1, 3))
    assert imaginary_part(f).coefficient((0,) * 4, ()) == Quaternion(0, 1, -1, 3)
    assert conjugate_form(f).coefficient((0,) * 4, ()) == Quaternion(2, -1, 1, -3)


# -- matrix-valued coefficients ---------------------------------------------------

def _random_matrix(rng):
    return embed(random_quaternion(rng)) + Matrix2C(
        ComplexRational(rat(rng.randint(-3, 3), 2)), ComplexRational(0),
        ComplexRational(0), ComplexRational(0))


def test_matrix_coefficient_forms_support_the_calculus():
    rng = Random("matrix")
    w = Window.cube(-1, 1)
    zero = Matrix2C.ZERO

    def make(degree):
        table = {}
        for k in w.indices():
            for dirs in DIRS_BY_DEGREE[degree]:
                table[(k, dirs)] = _random_matrix(rng)
        return TableForm(degree, table, w, zero=zero)

    f, g = make(0), make(1)
    assert coboundary(coboundary(f)).is_zero_on(Window.cube(-1, -1))
    lhs = coboundary(cup(f, g))
    rhs = cup(coboundary(f), g) + cup(f, coboundary(g))
    assert lhs.equals_on(rhs, Window.cube(-1, -1))
    ss = star_form(star_form(g))
    assert ss.equals_on(g.map_coefficients(lambda m: -1 * m), w)
