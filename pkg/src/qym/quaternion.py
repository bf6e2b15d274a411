"""Quaternions over exact rationals, and their 2x2 complex-matrix picture.

Quaternions are the coefficient algebra for every cochain in this package:
unit quaternions realise SU(2), pure-imaginary ones realise su(2).  The
matrix embedding sends a quaternion to a 2x2 complex matrix whose trace is
twice the real part and whose determinant is the squared norm.
"""

from __future__ import annotations

from .scalars import rat

__all__ = ["Quaternion", "ComplexRational", "Matrix2C", "QUNITS", "embed"]

_RZERO = rat(0)


def _q(w, x, y, z) -> "Quaternion":
    # raw constructor for internal arithmetic: components already rational
    out = Quaternion.__new__(Quaternion)
    out.w = w
    out.x = x
    out.y = y
    out.z = z
    return out


class Quaternion:
    """A quaternion ``w + x*i + y*j + z*k`` with exact rational components."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = rat(w)
        self.x = rat(x)
        self.y = rat(y)
        self.z = rat(z)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return _q(self.w + other.w, self.x + other.x,
                  self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return _q(self.w - other.w, self.x - other.x,
                  self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return _q(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        """Hamilton product; also accepts a rational scalar on either side."""
        if isinstance(other, Quaternion):
            a1, a2, a3, a4 = self.w, self.x, self.y, self.z
            b1, b2, b3, b4 = other.w, other.x, other.y, other.z
            return _q(
                a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
                a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,
                a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,
                a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1,
            )
        s = rat(other)
        return _q(self.w * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other):
        s = rat(other)
        return _q(s * self.w, s * self.x, s * self.y, s * self.z)

    def __truediv__(self, other):
        s = rat(other)
        return _q(self.w / s, self.x / s, self.y / s, self.z / s)

    # -- involutions and norms ---------------------------------------------

    def conj(self) -> "Quaternion":
        return _q(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quaternion":
        """Multiplicative inverse ``conj(q) / norm_sq(q)``.

        Raises:
            ZeroDivisionError: for the zero quaternion, which has no inverse.
        """
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return _q(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def imaginary(self) -> "Quaternion":
        """Projection onto the pure-imaginary (su(2)) part."""
        return _q(_RZERO, self.x, self.y, self.z)

    def real_part(self):
        return self.w

    def is_su2(self) -> bool:
        """True iff the quaternion is pure imaginary, i.e. lies in su(2)."""
        return self.w == 0

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def is_unit(self) -> bool:
        return self.norm_sq() == 1

    # -- misc ----------------------------------------------------------------

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __repr__(self) -> str:
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"

    def __str__(self) -> str:
        parts = []
        for val, unit in zip(self.components(), ("", "i", "j", "k")):
            if val == 0:
                continue
            sign = "-" if val < 0 else ("+" if parts else "")
            mag = abs(val)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            parts.append(f"{sign}{body}")
        return "".join(parts) or "0"


Quaternion.ZERO = Quaternion(0)
Quaternion.ONE = Quaternion(1)
Quaternion.I = Quaternion(0, 1)
Quaternion.J = Quaternion(0, 0, 1)
Quaternion.K = Quaternion(0, 0, 0, 1)

#: Unit quaternions indexed by axis: QUNITS[1] = 1, QUNITS[2] = i, ...
QUNITS = {1: Quaternion.ONE, 2: Quaternion.I, 3: Quaternion.J, 4: Quaternion.K}


class ComplexRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = rat(re)
        self.im = rat(im)

    def __add__(self, other):
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ComplexRational):
            return ComplexRational(self.re * other.re - self.im * other.im,
                                   self.re * other.im + self.im * other.re)
        s = rat(other)
        return ComplexRational(self.re * s, self.im * s)

    __rmul__ = __mul__

    def conj(self):
        return ComplexRational(self.re, -self.im)

    def __eq__(self, other):
        if not isinstance(other, ComplexRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


class Matrix2C:
    """A 2x2 matrix ``[[a, b], [c, d]]`` with exact complex-rational entries.

    This is the gl(2, C) coefficient type for general cochains; quaternions
    map into it via :func:`embed`.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __add__(self, other):
        return Matrix2C(self.a + other.a, self.b + other.b,
                        self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Matrix2C(self.a - other.a, self.b - other.b,
                        self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Matrix2C(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, Matrix2C):
            return Matrix2C(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return Matrix2C(self.a * other, self.b * other,
                        self.c * other, self.d * other)

    def __rmul__(self, other):
        return Matrix2C(other * self.a, other * self.b,
                        other * self.c, other * self.d)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def conj_transpose(self):
        return Matrix2C(self.a.conj(), self.c.conj(),
                        self.b.conj(), self.d.conj())

    def is_su2(self) -> bool:
        """True iff skew-Hermitian and traceless."""
        return (self + self.conj_transpose()).is_zero() and \
            self.trace() == ComplexRational(0)

    def is_zero(self) -> bool:
        z = ComplexRational(0)
        return self.a == z and self.b == z and self.c == z and self.d == z

    def __eq__(self, other):
        if not isinstance(other, Matrix2C):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Matrix2C({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


Matrix2C.ZERO = Matrix2C(*(ComplexRational(0) for _ in range(4)))
Matrix2C.IDENTITY = Matrix2C(ComplexRational(1), ComplexRational(0),
                             ComplexRational(0), ComplexRational(1))


def embed(q: Quaternion) -> Matrix2C:
    """Algebra embedding of a quaternion into gl(2, C).

    ``w + x*i + y*j + z*k`` maps to ``[[w + x*i, y + z*i], [-y + z*i, w - x*i]]``,
    so 1 goes to the identity and i, j, k go to the standard su(2) basis
    (the Pauli matrices times the complex unit).
    """
    return Matrix2C(
        ComplexRational(q.w, q.x), ComplexRational(q.y, q.z),
        ComplexRational(-q.y, q.z), ComplexRational(q.w, -q.x),
    )
