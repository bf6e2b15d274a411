"""Discrete forms: cochains on the cubical complex and its double.

A degree-p form assigns a coefficient (quaternion, or any ring element with
``+ - *``) to every p-cell.  Two backends exist:

* :class:`RuleForm` -- a closed-form coefficient rule defined on all of Z^4
  (coordinate forms, frame forms, the explicit connection families);
* :class:`TableForm` -- a finite sparse table with an explicit validity
  window (random test data, materialised results).

Operations that consume an upward shift shrink a windowed operand's validity
region by one layer on the upper boundary of each axis; reading a windowed
form outside its region raises :class:`WindowError` rather than silently
returning zero.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Iterator

from .chains import (AXES, BOUNDARY_TERMS, DIRS_BY_DEGREE, Cell, Chain,
                     complement, shift, shuffle_sign)
from .quaternion import Quaternion
from .scalars import rat

__all__ = [
    "WindowError", "DegreeError", "SingularCoefficientError",
    "Window", "DiscreteForm", "RuleForm", "TableForm",
    "pair", "coboundary", "cup", "cup_cells", "cup_cells_recursive",
    "star_form", "iota", "form_inverse", "imaginary_part", "conjugate_form",
    "zero_form", "constant_form", "unit_zero_form",
]


class WindowError(Exception):
    """A windowed form was evaluated outside its validity region."""


class DegreeError(Exception):
    """A form operation was asked for an impossible degree."""


class SingularCoefficientError(Exception):
    """A pointwise inverse hit a non-invertible coefficient."""

    def __init__(self, index, message="coefficient is not invertible"):
        self.index = index
        super().__init__(f"{message} at index {index}")


class Window:
    """An axis-aligned box of multi-indices, inclusive on both ends."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: tuple, hi: tuple):
        lo, hi = tuple(lo), tuple(hi)
        if len(lo) != 4 or len(hi) != 4:
            raise ValueError("window bounds must be 4-tuples")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError(f"empty window lo={lo} hi={hi}")
        self.lo, self.hi = lo, hi

    @classmethod
    def cube(cls, lo: int, hi: int) -> "Window":
        return cls((lo,) * 4, (hi,) * 4)

    def contains(self, k: tuple) -> bool:
        lo, hi = self.lo, self.hi
        return (lo[0] <= k[0] <= hi[0] and lo[1] <= k[1] <= hi[1]
                and lo[2] <= k[2] <= hi[2] and lo[3] <= k[3] <= hi[3])

    def shrink_upper(self, layers: int = 1) -> "Window":
        return Window(self.lo, tuple(h - layers for h in self.hi))

    def intersect(self, other: "Window") -> "Window":
        return Window(tuple(map(max, self.lo, other.lo)),
                      tuple(map(min, self.hi, other.hi)))

    def indices(self) -> Iterator[tuple]:
        return product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __eq__(self, other):
        if not isinstance(other, Window):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __repr__(self):
        return f"Window({self.lo}, {self.hi})"


class DiscreteForm:
    """Common interface of rule-backed and windowed forms."""

    degree: int
    doubled: bool
    zero = Quaternion.ZERO

    #: validity region; None means total (all of Z^4)
    window: Window | None = None

    def coefficient(self, index: tuple, dirs: tuple):
        raise NotImplementedError

    def cells(self, window: Window) -> Iterator[tuple]:
        """Iterate ``(index, dirs)`` over a window at this form's degree."""
        dirs_list = DIRS_BY_DEGREE[self.degree]
        for k in window.indices():
            for dirs in dirs_list:
                yield k, dirs

    # -- linear structure ----------------------------------------------------

    def _check_compatible(self, other: "DiscreteForm") -> None:
        if self.degree != other.degree:
            raise DegreeError("cannot combine forms of different degree")
        if self.doubled != other.doubled:
            raise ValueError("cannot combine forms over different complexes")

    def __add__(self, other: "DiscreteForm") -> "DiscreteForm":
        self._check_compatible(other)
        return _combine(self, other, lambda a, b: a + b)

    def __sub__(self, other: "DiscreteForm") -> "DiscreteForm":
        self._check_compatible(other)
        return _combine(self, other, lambda a, b: a - b)

    def __neg__(self) -> "DiscreteForm":
        return self.map_coefficients(lambda a: -a)

    def scale(self, scalar) -> "DiscreteForm":
        return self.map_coefficients(lambda a, s=scalar: a * s)

    def map_coefficients(self, fn: Callable) -> "DiscreteForm":
        raise NotImplementedError

    # -- comparisons ---------------------------------------------------------

    def equals_on(self, other: "DiscreteForm", window: Window) -> bool:
        if self.degree != other.degree or self.doubled != other.doubled:
            return False
        return all(self.coefficient(k, d) == other.coefficient(k, d)
                   for k, d in self.cells(window))

    def is_zero_on(self, window: Window) -> bool:
        zero = self.zero
        return all(self.coefficient(k, d) == zero for k, d in self.cells(window))

    def materialise(self, window: Window) -> "TableForm":
        table = {}
        zero = self.zero
        for k, d in self.cells(window):
            c = self.coefficient(k, d)
            if not (c == zero):
                table[(k, d)] = c
        return TableForm._trusted(self.degree, table, window, self.doubled,
                                  zero)


class RuleForm(DiscreteForm):
    """A form whose coefficients come from a total rule on Z^4."""

    __slots__ = ("degree", "doubled", "rule", "zero")

    def __init__(self, degree: int, rule: Callable[[tuple, tuple], object],
                 doubled: bool = False, zero=Quaternion.ZERO):
        if not 0 <= degree <= 4:
            raise DegreeError(f"degree must be 0..4, got {degree}")
        self.degree = degree
        self.doubled = doubled
        self.rule = rule
        self.zero = zero

    window = None

    def coefficient(self, index: tuple, dirs: tuple):
        if len(dirs) != self.degree:
            return self.zero
        return self.rule(index, dirs)

    def map_coefficients(self, fn: Callable) -> "RuleForm":
        rule = self.rule
        return RuleForm(self.degree, lambda k, d: fn(rule(k, d)),
                        doubled=self.doubled, zero=self.zero)


class TableForm(DiscreteForm):
    """A sparse windowed form; entries absent inside the window are zero."""

    __slots__ = ("degree", "doubled", "table", "window", "zero")

    def __init__(self, degree: int, table: dict, window: Window,
                 doubled: bool = False, zero=Quaternion.ZERO):
        if not 0 <= degree <= 4:
            raise DegreeError(f"degree must be 0..4, got {degree}")
        self.degree = degree
        self.doubled = doubled
        self.window = window
        self.zero = zero
        self.table = {}
        for (k, d), coeff in table.items():
            if len(d) != degree:
                raise ValueError(f"cell {d} has wrong degree for a {degree}-form")
            if not window.contains(k):
                raise WindowError(f"cell at {k} lies outside window {window}")
            if not (coeff == zero):
                self.table[(tuple(k), tuple(d))] = coeff

    @classmethod
    def _trusted(cls, degree: int, table: dict, window: Window,
                 doubled: bool, zero) -> "TableForm":
        # fast constructor for internal builders whose tables are already
        # normalised: tuple keys, zero-free, inside the window
        out = cls.__new__(cls)
        out.degree = degree
        out.doubled = doubled
        out.window = window
        out.zero = zero
        out.table = table
        return out

    def coefficient(self, index: tuple, dirs: tuple):
        if not self.window.contains(index):
            raise WindowError(
                f"index {index} outside validity region {self.window}")
        if len(dirs) != self.degree:
            return self.zero
        return self.table.get((index, dirs), self.zero)

    def map_coefficients(self, fn: Callable) -> "TableForm":
        return TableForm(self.degree,
                         {cell: fn(c) for cell, c in self.table.items()},
                         self.window, doubled=self.doubled, zero=self.zero)


def _combine(a: DiscreteForm, b: DiscreteForm, op) -> DiscreteForm:
    if a.window is None and b.window is None:
        return RuleForm(a.degree,
                        lambda k, d: op(a.coefficient(k, d), b.coefficient(k, d)),
                        doubled=a.doubled, zero=a.zero)
    window = a.window or b.window
    if a.window is not None and b.window is not None:
        window = a.window.intersect(b.window)
    table = {}
    for k, d in a.cells(window):
        table[(k, d)] = op(a.coefficient(k, d), b.coefficient(k, d))
    return TableForm(a.degree, table, window, doubled=a.doubled, zero=a.zero)


# -- constructors -------------------------------------------------------------

def zero_form(degree: int, doubled: bool = False,
              zero=Quaternion.ZERO) -> RuleForm:
    return RuleForm(degree, lambda k, d: zero, doubled=doubled, zero=zero)


def constant_form(value, doubled: bool = False) -> RuleForm:
    """Degree-0 form with the same coefficient everywhere."""
    return RuleForm(0, lambda k, d: value, doubled=doubled)


def unit_zero_form(doubled: bool = False) -> RuleForm:
    """The multiplicative unit: the degree-0 form with coefficient 1."""
    return constant_form(Quaternion.ONE, doubled=doubled)


# precomputed cup expansion table, keyed by the output cell's axis set:
#   (dirs, left_degree) -> ((left_dirs, right_dirs, sign, index_offset), ...)


def _build_cup_splits():
    table = {}
    for p in range(5):
        for dirs in DIRS_BY_DEGREE[p]:
            for left_degree in range(p + 1):
                entries = []
                for left_dirs in combinations(dirs, left_degree):
                    right_dirs = tuple(d for d in dirs if d not in left_dirs)
                    offset = tuple(1 if a in left_dirs else 0 for a in AXES)
                    entries.append((left_dirs, right_dirs,
                                    shuffle_sign(left_dirs, right_dirs), offset))
                table[(dirs, left_degree)] = tuple(entries)
    return table


_CUP_SPLITS = _build_cup_splits()


# -- pairing ------------------------------------------------------------------

def pair(chain: Chain, form: DiscreteForm):
    """Pair a chain with a form of matching complex.

    A basis cell picks out its own coefficient; the pairing is bilinear and
    zero across mismatched cells.  Coefficients are returned as stored (no
    transposition), scaled by the chain's rational weights.
    """
    if chain.doubled != form.doubled:
        raise ValueError("chain and form live over different complexes")
    total = form.zero
    if chain.degree != form.degree:
        return total
    if isinstance(form, TableForm):
        contains = form.window.contains
        get = form.table.get
        zero = form.zero
        for cell, weight in chain.terms.items():
            index = cell.index
            if not contains(index):
                raise WindowError(
                    f"index {index} outside validity region {form.window}")
            coeff = get((index, cell.dirs), zero)
            if weight == 1:
                total = total + coeff
            elif weight == -1:
                total = total - coeff
            else:
                total = total + coeff * weight
        return total
    for cell, weight in chain.terms.items():
        coeff = form.coefficient(cell.index, cell.dirs)
        if weight == 1:
            total = total + coeff
        elif weight == -1:
            total = total - coeff
        else:
            total = total + coeff * weight
    return total


# -- coboundary ---------------------------------------------------------------

def _coboundary_coefficient(form: DiscreteForm, index: tuple, dirs: tuple):
    total = form.zero
    coeff = form.coefficient
    for sign, axis, sub in BOUNDARY_TERMS[dirs]:
        delta = coeff(shift(index, axis), sub) - coeff(index, sub)
        total = total + (-delta if sign < 0 else delta)
    return total


def _coboundary_table(form: TableForm) -> TableForm:
    # inside the shrunk window every shifted read stays in bounds, so the
    # bounds checks of the generic path can be skipped
    window = form.window.shrink_upper(1)
    get = form.table.get
    zero = form.zero
    table = {}
    dirs_list = DIRS_BY_DEGREE[form.degree + 1]
    for k in window.indices():
        for dirs in dirs_list:
            total = zero
            for sign, axis, sub in BOUNDARY_TERMS[dirs]:
                up = list(k)
                up[axis - 1] += 1
                delta = get((tuple(up), sub), zero) - get((k, sub), zero)
                total = total + (-delta if sign < 0 else delta)
            if not (total == zero):
                table[(k, dirs)] = total
    return TableForm._trusted(form.degree + 1, table, window, form.doubled,
                              zero)


def coboundary(form: DiscreteForm) -> DiscreteForm:
    """Discrete exterior derivative, adjoint to the boundary under pairing.

    The coefficient on an output (p+1)-cell with axis set E is

        sum over i in E of (-1)^|{j in E : j < i}| * (forward difference
        along axis i of the coefficient on E\\{i}).

    Raises:
        DegreeError: on a degree-4 input.
    """
    if form.degree >= 4:
        raise DegreeError("coboundary of a top-degree form is not defined")
    if form.window is None:
        return RuleForm(form.degree + 1,
                        lambda k, d: _coboundary_coefficient(form, k, d),
                        doubled=form.doubled, zero=form.zero)
    if isinstance(form, TableForm):
        return _coboundary_table(form)
    window = form.window.shrink_upper(1)
    out = RuleForm(form.degree + 1,
                   lambda k, d: _coboundary_coefficient(form, k, d),
                   doubled=form.doubled, zero=form.zero)
    return out.materialise(window)


# -- cup product ----------------------------------------------------------------

def cup_cells(left: Cell, right: Cell):
    """Product of two basis cells in closed form.

    Nonzero exactly when the axis sets are disjoint and the right index is
    the left index shifted up by one along each left axis; the result sits
    at the left index with the union axis set and carries the interleaving
    parity sign.

    Returns:
        ``(sign, cell)`` or ``None`` when the product vanishes.
    """
    if left.doubled != right.doubled:
        raise ValueError("cells live over different complexes")
    if set(left.dirs) & set(right.dirs):
        return None
    expected = list(left.index)
    for a in left.dirs:
        expected[a - 1] += 1
    if tuple(expected) != tuple(right.index):
        return None
    dirs = tuple(sorted(left.dirs + right.dirs))
    return shuffle_sign(left.dirs, right.dirs), Cell(left.index, dirs,
                                                     left.doubled)


def _cup_cells_1d(s, t):
    # one-dimensional factors: ('x', j) or ('e', j)
    kind_s, js = s
    kind_t, jt = t
    if kind_s == "x" and kind_t == "x" and js == jt:
        return ("x", js)
    if kind_s == "e" and kind_t == "x" and jt == js + 1:
        return ("e", js)
    if kind_s == "x" and kind_t == "e" and js == jt:
        return ("e", js)
    return None


def cup_cells_recursive(left: Cell, right: Cell):
    """Product of two basis cells by the defining one-axis-at-a-time recursion.

    Peels the last tensor factor: the sign at each step is -1 exactly when
    that factor of the left cell is an edge and the remaining leading block
    of the right cell has odd dimension.  Kept as an independent oracle for
    :func:`cup_cells`.
    """
    if left.doubled != right.doubled:
        raise ValueError("cells live over different complexes")

    def factors(cell):
        return [("e" if a in cell.dirs else "x", cell.index[a - 1])
                for a in AXES]

    lf, rf = factors(left), factors(right)

    def go(r):
        if r == 1:
            res = _cup_cells_1d(lf[0], rf[0])
            return (1, [res]) if res is not None else None
        head = go(r - 1)
        if head is None:
            return None
        sign, cells = head
        last = _cup_cells_1d(lf[r - 1], rf[r - 1])
        if last is None:
            return None
        right_block_dim = sum(1 for kind, _ in rf[:r - 1] if kind == "e")
        if lf[r - 1][0] == "e" and right_block_dim & 1:
            sign = -sign
        return sign, cells + [last]

    out = go(4)
    if out is None:
        return None
    sign, factors_out = out
    dirs = tuple(a for a, (kind, _) in zip(AXES, factors_out) if kind == "e")
    index = tuple(pos for _, pos in factors_out)
    return sign, Cell(index, dirs, left.doubled)


def _cup_coefficient(left: DiscreteForm, right: DiscreteForm,
                     index: tuple, dirs: tuple):
    total = left.zero
    zero = left.zero
    for left_dirs, right_dirs, sign, off in _CUP_SPLITS[(dirs, left.degree)]:
        a = left.coefficient(index, left_dirs)
        if a == zero:
            continue
        shifted = (index[0] + off[0], index[1] + off[1],
                   index[2] + off[2], index[3] + off[3])
        term = a * right.coefficient(shifted, right_dirs)
        total = total + (-term if sign < 0 else term)
    return total


def cup(left: DiscreteForm, right: DiscreteForm) -> DiscreteForm:
    """Graded product of forms; coefficients multiply in the order written.

    Raises:
        DegreeError: when the degrees sum past 4.
    """
    if left.doubled != right.doubled:
        raise ValueError("cannot multiply forms over different complexes")
    if left.degree + right.degree > 4:
        raise DegreeError("cup product degree exceeds the complex dimension")
    degree = left.degree + right.degree
    rule = RuleForm(degree, lambda k, d: _cup_coefficient(left, right, k, d),
                    doubled=left.doubled, zero=left.zero)
    if left.window is None and right.window is None:
        return rule
    # the right operand is read at indices shifted up by at most one layer
    # along the left cell's axes; degree-0 left operands never shift
    window = right.window
    if window is not None and left.degree > 0:
        window = window.shrink_upper(1)
    if left.window is not None:
        window = left.window if window is None else window.intersect(left.window)
    return rule.materialise(window)


# -- star and the complex-swap involution --------------------------------------

def star_form(form: DiscreteForm) -> DiscreteForm:
    """Star on forms, adjoint to the star on chains under the pairing.

    Sends a p-form to the (4-p)-form over the other complex; the coefficient
    on the complementary cell carries the parity sign of ``(complement,
    dirs)``.  Applying it twice gives ``(-1)^(r(4-r))``.
    """
    degree = 4 - form.degree

    def rule(k, d):
        src = complement(d)
        sign = shuffle_sign(d, src)
        c = form.coefficient(k, src)
        return -c if sign < 0 else c

    out = RuleForm(degree, rule, doubled=not form.doubled, zero=form.zero)
    if form.window is None:
        return out
    return out.materialise(form.window)


def iota(form: DiscreteForm) -> DiscreteForm:
    """Swap a form to the other complex, coefficients unchanged."""
    out = RuleForm(form.degree, form.coefficient, doubled=not form.doubled,
                   zero=form.zero)
    if form.window is None:
        return out
    return out.materialise(form.window)


# -- pointwise coefficient maps -------------------------------------------------

def form_inverse(form: DiscreteForm) -> DiscreteForm:
    """Pointwise quaternion inverse of a degree-0 form.

    Raises:
        DegreeError: unless the form has degree 0.
        SingularCoefficientError: when a zero coefficient is evaluated,
            carrying the offending index.
    """
    if form.degree != 0:
        raise DegreeError("pointwise inverse is defined for 0-forms only")

    def invert(k, d):
        c = form.coefficient(k, d)
        if c.is_zero():
            raise SingularCoefficientError(k)
        return c.inverse()

    out = RuleForm(0, invert, doubled=form.doubled, zero=form.zero)
    if form.window is None:
        return out
    return out.materialise(form.window)


def imaginary_part(form: DiscreteForm) -> DiscreteForm:
    """Pointwise projection onto pure-imaginary (su(2)) coefficients."""
    return form.map_coefficients(lambda q: q.imaginary())


def conjugate_form(form: DiscreteForm) -> DiscreteForm:
    """Pointwise quaternion conjugate."""
    return form.map_coefficients(lambda q: q.conj())
