"""The 4-dimensional cubical chain complex and its double.

A basis cell is a lattice multi-index ``k`` in Z^4 together with the sorted
set of axes that carry an edge factor (the remaining axes carry a point
factor).  The complex and its double have identical structure; cells carry
a ``doubled`` flag and the combinatorial star maps each complex onto the
other, sending a p-cell to the complementary (4-p)-cell at the same index
with a permutation-parity sign.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

from .scalars import rat

__all__ = [
    "AXES", "DIRS_BY_DEGREE", "BOUNDARY_TERMS", "Cell", "Chain",
    "shift", "shift_many", "complement", "shuffle_sign", "star_cell_sign",
    "boundary", "star_chain", "boundary_is_nilpotent_on",
]

AXES = (1, 2, 3, 4)

#: All sorted axis subsets, grouped by size: degree -> tuple of dirs tuples.
DIRS_BY_DEGREE = {
    p: tuple(combinations(AXES, p)) for p in range(5)
}


def _build_boundary_terms():
    # dirs -> ((sign, axis, dirs with that axis removed), ...), the graded
    # Leibniz expansion shared by the boundary and the coboundary
    table = {}
    for p in range(1, 5):
        for dirs in combinations(AXES, p):
            entries = []
            for position, axis in enumerate(dirs):
                sub = tuple(d for d in dirs if d != axis)
                entries.append((-1 if position & 1 else 1, axis, sub))
            table[dirs] = tuple(entries)
    return table


BOUNDARY_TERMS = _build_boundary_terms()


def shift(k: tuple, axis: int, step: int = 1) -> tuple:
    """Shift one component of a multi-index (step +1 or -1)."""
    if axis not in AXES:
        raise ValueError(f"axis must be in 1..4, got {axis}")
    out = list(k)
    out[axis - 1] += step
    return tuple(out)


def shift_many(k: tuple, axes: Iterable[int], step: int = 1) -> tuple:
    out = list(k)
    for axis in axes:
        out[axis - 1] += step
    return tuple(out)


def complement(dirs: tuple) -> tuple:
    return tuple(a for a in AXES if a not in dirs)


def shuffle_sign(left: tuple, right: tuple) -> int:
    """Parity sign of interleaving two disjoint axis blocks.

    Counts pairs (i in left, j in right) with j < i, i.e. the inversions of
    the concatenated sequence ``left + right`` relative to sorted order.
    """
    inversions = 0
    for i in left:
        for j in right:
            if j < i:
                inversions += 1
    return -1 if inversions & 1 else 1


def star_cell_sign(dirs: tuple) -> int:
    """Sign of the star on a basis cell: parity of ``(dirs, complement)``."""
    return shuffle_sign(dirs, complement(dirs))


class Cell(NamedTuple):
    """A basis cell of the complex (or of its double when ``doubled``)."""

    index: tuple
    dirs: tuple
    doubled: bool = False

    @property
    def degree(self) -> int:
        return len(self.dirs)


class Chain:
    """A finite formal sum of same-degree cells with rational coefficients.

    The zero chain is an empty mapping; absent cells have coefficient zero.
    """

    __slots__ = ("degree", "doubled", "terms")

    def __init__(self, degree: int, terms: dict | None = None,
                 doubled: bool = False):
        if not 0 <= degree <= 4:
            raise ValueError(f"degree must be 0..4, got {degree}")
        self.degree = degree
        self.doubled = doubled
        self.terms = {}
        if terms:
            for cell, coeff in terms.items():
                self._accumulate(cell, coeff)

    @classmethod
    def basis(cls, index: tuple, dirs: tuple, doubled: bool = False) -> "Chain":
        return cls(len(dirs), {Cell(tuple(index), tuple(dirs), doubled): rat(1)},
                   doubled=doubled)

    def _accumulate(self, cell: Cell, coeff) -> None:
        if cell.degree != self.degree:
            raise ValueError(
                f"cell degree {cell.degree} does not match chain degree {self.degree}")
        if cell.doubled != self.doubled:
            raise ValueError("cell complex flag does not match chain")
        total = self.terms.get(cell, 0) + coeff
        if total == 0:
            self.terms.pop(cell, None)
        else:
            self.terms[cell] = total

    def coefficient(self, cell: Cell):
        return self.terms.get(cell, rat(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        if self.degree != other.degree or self.doubled != other.doubled:
            raise ValueError("cannot add chains of different degree or complex")
        out = Chain(self.degree, dict(self.terms), doubled=self.doubled)
        for cell, coeff in other.terms.items():
            out._accumulate(cell, coeff)
        return out

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-1) * other

    def __mul__(self, scalar) -> "Chain":
        s = rat(scalar)
        if s == 0:
            return Chain(self.degree, doubled=self.doubled)
        return Chain(self.degree,
                     {cell: s * c for cell, c in self.terms.items()},
                     doubled=self.doubled)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return (self.degree == other.degree and self.doubled == other.doubled
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"Chain(degree={self.degree}, terms={len(self.terms)})"


def boundary(chain: Chain) -> Chain:
    """Boundary operator.

    On an edge factor the boundary is (far endpoint) - (near endpoint); on a
    point factor it vanishes.  Across the tensor product the graded Leibniz
    sign ``(-1)^(number of preceding edge factors)`` applies, so for a cell
    with axis set D:

        d cell(k, D) = sum over i in D of
            (-1)^|{j in D : j < i}| * (cell(k + e_i, D\\{i}) - cell(k, D\\{i}))
    """
    if chain.degree == 0:
        return Chain(0, doubled=chain.doubled)
    out = Chain(chain.degree - 1, doubled=chain.doubled)
    for cell, coeff in chain.terms.items():
        for sign, axis, sub in BOUNDARY_TERMS[cell.dirs]:
            signed = coeff if sign > 0 else -coeff
            out._accumulate(Cell(shift(cell.index, axis), sub, cell.doubled),
                            signed)
            out._accumulate(Cell(cell.index, sub, cell.doubled), -signed)
    return out


def star_chain(chain: Chain) -> Chain:
    """Combinatorial star on chains: p-cells map to complementary (4-p)-cells
    of the other complex, with the parity sign of ``(dirs, complement)``.

    Applying it twice gives ``(-1)^(r(4-r))`` on an r-chain.
    """
    out = Chain(4 - chain.degree, doubled=not chain.doubled)
    for cell, coeff in chain.terms.items():
        sign = star_cell_sign(cell.dirs)
        out._accumulate(
            Cell(cell.index, complement(cell.dirs), not cell.doubled),
            sign * coeff)
    return out


def boundary_is_nilpotent_on(chain: Chain) -> bool:
    """Test oracle: the boundary of the boundary is always the zero chain."""
    return boundary(boundary(chain)).is_zero()
