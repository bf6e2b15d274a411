"""Lattice SU(2) gauge fields: connections, curvature, duality.

A connection is a degree-1 form (the gauge potential).  Connections built
from a generating 0-form ``f`` cupped with a frame 1-form keep the generator
around: the imaginary-part projection that makes the potential su(2)-valued
does not commute with taking curvature on the lattice, and the general
(non-unit) gauge transformation acts on the unprojected quaternionic form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chains import DIRS_BY_DEGREE, shift
from .forms import (DegreeError, DiscreteForm, TableForm, Window, coboundary,
                    conjugate_form, cup, form_inverse, imaginary_part, iota,
                    star_form)
from .quaternion import Quaternion
from .scalars import rat

__all__ = [
    "Connection", "Curvature", "GaugeTransform", "DualityReport",
    "curvature_form", "curvature", "generated_curvature",
    "field_strength_component", "covariant_differential", "ym_residuals",
    "gauge_transform", "su2_residuals", "duality_classify",
    "componentwise_duality_residuals", "PAIRS",
]

#: the six ordered axis pairs of a 2-form
PAIRS = DIRS_BY_DEGREE[2]


@dataclass(frozen=True)
class Connection:
    """A gauge potential, optionally with its quaternionic generator.

    Attributes:
        potential: the degree-1 form the field strength is computed from.
        generator: optional ``(f, frame)`` with f a 0-form and frame a
            1-form; when present, ``potential`` arose from ``f `cup` frame``
            (imaginary-projected unless ``projected`` is False).
        projected: whether ``potential`` is the su(2) projection of the
            generator product (False for intrinsically quaternionic
            potentials such as the flat one).
    """

    potential: DiscreteForm
    generator: Optional[tuple] = None
    projected: bool = True

    def __post_init__(self):
        if self.potential.degree != 1:
            raise DegreeError("a connection potential must be a 1-form")

    def quaternionic_form(self) -> DiscreteForm:
        """The unprojected 1-form: the generator product when available."""
        if self.generator is not None:
            f, frame = self.generator
            return cup(f, frame)
        return self.potential


@dataclass(frozen=True)
class Curvature:
    """A field-strength 2-form together with the potential that produced it."""

    form: DiscreteForm
    potential: Optional[DiscreteForm] = None

    def component(self, index: tuple, pair: tuple):
        return self.form.coefficient(index, pair)


class GaugeTransform:
    """A 0-form acting on connections by conjugation plus inhomogeneous term.

    Unit-norm gauges invert by conjugation and act without projection;
    general quaternionic gauges invert pointwise and the transformed
    potential is projected onto su(2).
    """

    __slots__ = ("form", "unit_norm")

    def __init__(self, form: DiscreteForm, unit_norm: bool):
        if form.degree != 0:
            raise DegreeError("a gauge transform must be a 0-form")
        self.form = form
        self.unit_norm = unit_norm

    @classmethod
    def identity(cls) -> "GaugeTransform":
        from .forms import unit_zero_form
        return cls(unit_zero_form(), unit_norm=True)

    @classmethod
    def constant(cls, q: Quaternion) -> "GaugeTransform":
        from .forms import constant_form
        return cls(constant_form(q), unit_norm=q.norm_sq() == 1)

    @classmethod
    def unit(cls, form: DiscreteForm) -> "GaugeTransform":
        """Declare a unit-norm gauge; table-backed forms are verified."""
        if isinstance(form, TableForm):
            for (k, _), coeff in form.table.items():
                if coeff.norm_sq() != 1:
                    raise ValueError(f"gauge coefficient at {k} is not unit norm")
        return cls(form, unit_norm=True)

    @classmethod
    def general(cls, form: DiscreteForm) -> "GaugeTransform":
        return cls(form, unit_norm=False)

    def inverse_form(self) -> DiscreteForm:
        if self.unit_norm:
            return conjugate_form(self.form)
        return form_inverse(self.form)


def curvature_form(potential: DiscreteForm) -> DiscreteForm:
    """Field strength of a 1-form: coboundary plus the cup square."""
    if potential.degree != 1:
        raise DegreeError("field strength needs a 1-form")
    return coboundary(potential) + cup(potential, potential)


def curvature(conn: Connection) -> Curvature:
    """Field strength of a connection's stored potential.

    Componentwise, on the pair (i, j) at index k this is the forward
    difference of the j-component along i, minus the forward difference of
    the i-component along j, plus ``A_i(k) A_j(k + e_i) - A_j(k) A_i(k + e_j)``.
    """
    return Curvature(curvature_form(conn.potential), potential=conn.potential)


def generated_curvature(conn: Connection) -> Curvature:
    """su(2)-valued field strength of a generated connection.

    Computes the field strength of the unprojected quaternionic 1-form and
    projects the result onto su(2).  On the lattice this does NOT agree
    with :func:`curvature` of the projected potential: projection and
    field strength do not commute.  In particular the pure-gauge connection
    is flat in this sense while its projected potential is not flat under
    :func:`curvature`.
    """
    form = imaginary_part(curvature_form(conn.quaternionic_form()))
    return Curvature(form, potential=conn.potential)


def field_strength_component(potential: DiscreteForm, index: tuple,
                             pair: tuple):
    """The same field-strength coefficient, written out directly.

    Kept as an independent evaluation path; tests pin it against
    :func:`curvature_form`.
    """
    i, j = pair
    ai = potential.coefficient(index, (i,))
    aj = potential.coefficient(index, (j,))
    aj_up_i = potential.coefficient(shift(index, i), (j,))
    ai_up_j = potential.coefficient(shift(index, j), (i,))
    return (aj_up_i - aj) - (ai_up_j - ai) + ai * aj_up_i - aj * ai_up_j


def covariant_differential(potential: DiscreteForm,
                           omega: DiscreteForm) -> DiscreteForm:
    """Covariant exterior differential of a p-form against a potential.

    ``d_A(omega) = d(omega) + A `cup` omega + (-1)^(p+1) omega `cup` A``.
    """
    if omega.degree >= 4:
        raise DegreeError("covariant differential of a top-degree form")
    out = coboundary(omega) + cup(potential, omega)
    tail = cup(omega, potential)
    if (omega.degree + 1) % 2 == 1:
        out = out - tail
    else:
        out = out + tail
    return out


def ym_residuals(conn: Connection) -> tuple:
    """The two Yang-Mills residual forms of a connection.

    Both vanish identically when the field strength is zero; the first is
    the Bianchi combination and vanishes for every connection.
    """
    f = curvature_form(conn.potential)
    first = covariant_differential(conn.potential, f)
    second = covariant_differential(conn.potential, star_form(iota(f)))
    return first, second


def gauge_transform(conn: Connection, gt: GaugeTransform) -> Connection:
    """Transform a connection: conjugate the potential and add the
    inhomogeneous term.

    Unit-norm gauges act on the stored potential as-is.  General
    quaternionic gauges act on the unprojected quaternionic form and the
    result is projected onto su(2).

    Raises:
        SingularCoefficientError: when a general gauge has a zero
            coefficient anywhere it is evaluated.
    """
    g = gt.form
    ginv = gt.inverse_form()
    base = conn.potential if gt.unit_norm else conn.quaternionic_form()
    transformed = cup(cup(ginv, base), g) + cup(ginv, coboundary(g))
    if not gt.unit_norm:
        transformed = imaginary_part(transformed)
    return Connection(transformed, generator=None)


def su2_residuals(curv: Curvature, window: Window) -> dict:
    """Real quaternion components of the field strength over a window.

    The mapping ``(index, pair) -> rational`` is identically zero exactly
    when the field strength is su(2)-valued there.
    """
    out = {}
    for k in window.indices():
        for pair in PAIRS:
            out[(k, pair)] = curv.form.coefficient(k, pair).real_part()
    return out


def componentwise_duality_residuals(form: DiscreteForm, index: tuple,
                                    self_dual: bool) -> tuple:
    """Residuals of the three componentwise duality relations at one index.

    Self-dual:      F12 - F34,  F13 + F24,  F14 - F23.
    Anti-self-dual: F12 + F34,  F13 - F24,  F14 + F23.
    """
    f = {pair: form.coefficient(index, pair) for pair in PAIRS}
    if self_dual:
        return (f[(1, 2)] - f[(3, 4)], f[(1, 3)] + f[(2, 4)],
                f[(1, 4)] - f[(2, 3)])
    return (f[(1, 2)] + f[(3, 4)], f[(1, 3)] - f[(2, 4)],
            f[(1, 4)] + f[(2, 3)])


@dataclass(frozen=True)
class DualityReport:
    """Outcome of a duality classification over a window."""

    window: Window
    self_residuals: dict
    anti_residuals: dict
    su2_defects: dict
    is_self_dual: bool
    is_anti_self_dual: bool

    @property
    def classification(self) -> str:
        if self.is_self_dual and self.is_anti_self_dual:
            return "flat"
        if self.is_self_dual:
            return "self-dual"
        if self.is_anti_self_dual:
            return "anti-self-dual"
        return "neither"

    def worst_residual(self):
        worst = rat(0)
        for res in (*self.self_residuals.values(), *self.anti_residuals.values()):
            n = res.norm_sq()
            if n > worst:
                worst = n
        return worst


def duality_classify(curv: Curvature, window: Window) -> DualityReport:
    """Compare a field strength with its star-swapped image over a window.

    Computes the swapped-and-starred 2-form and records, per index and axis
    pair, the residual of both duality equations; the componentwise
    relations reported agree with the operator route exactly.
    """
    f = curv.form
    g = iota(star_form(f))
    self_res, anti_res, su2_def = {}, {}, {}
    all_self = all_anti = True
    for k in window.indices():
        for pair in PAIRS:
            a = f.coefficient(k, pair)
            b = g.coefficient(k, pair)
            s, t = a - b, a + b
            self_res[(k, pair)] = s
            anti_res[(k, pair)] = t
            su2_def[(k, pair)] = a.real_part()
            if not s.is_zero():
                all_self = False
            if not t.is_zero():
                all_anti = False
    return DualityReport(window, self_res, anti_res, su2_def,
                         all_self, all_anti)
