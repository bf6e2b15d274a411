"""Explicit lattice connections: instanton, anti-instanton, pure gauge.

Both families come from the quaternionic coordinate 0-form ``x`` (value
``k1 + k2 i + k3 j + k4 k`` at index k) scaled by the conformal factor
``1/(1 + |kappa|^2)``:

* anti-instanton: generator ``conj(kappa)/(1+|kappa|^2)`` cupped with the
  frame 1-form,
* instanton: generator ``kappa/(1+|kappa|^2)`` cupped with the conjugate
  frame.

Their field strengths admit closed components built from the link weights
``M_i``; on the main diagonal the field strength is su(2)-valued,
factorises through a diagonal 0-form, and is (anti-)self-dual.  Away from
the origin both families approach the flat pure-gauge connection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import shift
from .forms import (DiscreteForm, RuleForm, TableForm, Window, coboundary,
                    conjugate_form, cup, form_inverse, imaginary_part)
from .gauge import (PAIRS, Connection, GaugeTransform, curvature,
                    gauge_transform)
from .quaternion import QUNITS, Quaternion
from .scalars import rat

__all__ = [
    "VARIANTS", "coordinate_quaternion", "coordinate_form",
    "coordinate_inverse_form", "frame_form", "conjugate_frame_form",
    "generator_form", "build_anti_instanton", "build_instanton",
    "build_connection", "pure_gauge_form", "pure_gauge_connection",
    "flat_connection", "link_weight", "diagonal_weight",
    "closed_field_strength", "diagonal_field_strength",
    "diagonal_curvature_form", "omega_form", "su2_defect_closed_form",
    "shell_indices", "shell_max_deviation", "gauge_at_infinity_forms",
    "asymptotic_gauge_check", "AsymptoticReport",
]

VARIANTS = ("anti-instanton", "instanton")


def coordinate_quaternion(k: tuple) -> Quaternion:
    return Quaternion(k[0], k[1], k[2], k[3])


def coordinate_form() -> RuleForm:
    """The quaternionic coordinate 0-form; its coboundary is the frame."""
    return RuleForm(0, lambda k, d: coordinate_quaternion(k))


def coordinate_inverse_form() -> DiscreteForm:
    """Pointwise inverse of the coordinate form (singular at the origin)."""
    return form_inverse(coordinate_form())


def frame_form() -> RuleForm:
    """The unit 1-form: coefficient 1, i, j, k on the four axis directions."""
    return RuleForm(1, lambda k, d: QUNITS[d[0]])


def conjugate_frame_form() -> RuleForm:
    return RuleForm(1, lambda k, d: QUNITS[d[0]].conj())


def _conformal_denominator(k: tuple):
    return 1 + coordinate_quaternion(k).norm_sq()


def generator_form(variant: str) -> RuleForm:
    """Generating 0-form of an instanton family.

    Anti-instanton coefficients are ``conj(kappa)/(1+|kappa|^2)``; the
    instanton's are their componentwise conjugates.
    """
    if variant == "anti-instanton":
        return RuleForm(0, lambda k, d:
                        coordinate_quaternion(k).conj() / _conformal_denominator(k))
    if variant == "instanton":
        return RuleForm(0, lambda k, d:
                        coordinate_quaternion(k) / _conformal_denominator(k))
    raise ValueError(f"unknown variant {variant!r}")


def build_connection(variant: str) -> Connection:
    """Rule-backed connection for either instanton family.

    The potential is the su(2) projection of the generator cupped with the
    frame (conjugate frame for the instanton); the generator pair is kept
    on the connection.
    """
    f = generator_form(variant)
    frame = frame_form() if variant == "anti-instanton" else conjugate_frame_form()
    potential = imaginary_part(cup(f, frame))
    return Connection(potential, generator=(f, frame))


def build_anti_instanton() -> Connection:
    return build_connection("anti-instanton")


def build_instanton() -> Connection:
    return build_connection("instanton")


def pure_gauge_form() -> DiscreteForm:
    """The quaternionic pure-gauge 1-form: (coordinate inverse) cup
    (coboundary of the coordinate form).  Its field strength vanishes
    identically wherever it is defined."""
    x = coordinate_form()
    return cup(form_inverse(x), coboundary(x))


def pure_gauge_connection() -> Connection:
    """su(2) projection of the pure-gauge form, with its generator."""
    x = coordinate_form()
    return Connection(imaginary_part(pure_gauge_form()),
                      generator=(form_inverse(x), coboundary(x)))


def flat_connection() -> Connection:
    """The unprojected pure-gauge form as a (quaternion-valued) connection;
    genuinely flat under the generic field-strength formula."""
    x = coordinate_form()
    return Connection(pure_gauge_form(),
                      generator=(form_inverse(x), coboundary(x)),
                      projected=False)


def link_weight(k: tuple, axis: int):
    """Weight of the link from k along one axis: the reciprocal of the
    product of the conformal denominators at its two endpoints."""
    return rat(1) / (_conformal_denominator(k)
                     * _conformal_denominator(shift(k, axis)))


def diagonal_weight(mu: int):
    """Closed form of the link weight at a diagonal point (any axis)."""
    return rat(1) / (2 * (1 + 4 * mu * mu) * (1 + mu + 2 * mu * mu))


def closed_field_strength(variant: str, k: tuple) -> dict:
    """Closed-form field-strength components of either family at one index.

    Returns the six quaternions indexed by axis pair, polynomial in k over
    the link weights.  The generic field-strength evaluation of the built
    connections reproduces these exactly (pinned by the test suite).
    """
    k1, k2, k3, k4 = (rat(v) for v in k)
    m1, m2, m3, m4 = (link_weight(k, a) for a in (1, 2, 3, 4))
    if variant == "anti-instanton":
        return {
            (1, 2): Quaternion(
                m1 * (k1 * k2 + k2) - m2 * (k1 * k2 + k1),
                m1 * (1 + k2 * k2 - k1 * k1 - k1) + m2 * (1 + k1 * k1 - k2 * k2 - k2),
                m1 * (k4 * k1 + k2 * k3) - m2 * (k3 * k2 + k4 * k1),
                m1 * (k2 * k4 - k1 * k3) + m2 * (k1 * k3 - k2 * k4)),
            (1, 3): Quaternion(
                m1 * (k1 * k3 + k3) - m3 * (k1 * k3 + k1),
                m1 * (k2 * k3 - k1 * k4) + m3 * (k1 * k4 - k2 * k3),
                m1 * (1 + k3 * k3 - k1 * k1 - k1) + m3 * (1 + k1 * k1 - k3 * k3 - k3),
                m1 * (k1 * k2 + k3 * k4) - m3 * (k3 * k4 + k1 * k2)),
            (1, 4): Quaternion(
                m1 * (k1 * k4 + k4) - m4 * (k1 * k4 + k1),
                m1 * (k1 * k3 + k2 * k4) - m4 * (k2 * k4 + k1 * k3),
                m1 * (k3 * k4 - k1 * k2) + m4 * (k1 * k2 - k3 * k4),
                m1 * (1 + k4 * k4 - k1 * k1 - k1) + m4 * (1 + k1 * k1 - k4 * k4 - k4)),
            (2, 3): Quaternion(
                m2 * (k2 * k3 + k3) - m3 * (k2 * k3 + k2),
                -m2 * (k2 * k4 + k1 * k3) + m3 * (k1 * k3 + k2 * k4),
                m2 * (k3 * k4 - k1 * k2) + m3 * (k1 * k2 - k3 * k4),
                -(m2 * (1 + k3 * k3 - k2 * k2 - k2) + m3 * (1 + k2 * k2 - k3 * k3 - k3))),
            (2, 4): Quaternion(
                m2 * (k2 * k4 + k4) - m4 * (k2 * k4 + k2),
                m2 * (k2 * k3 - k4 * k1) + m4 * (k1 * k4 - k2 * k3),
                m2 * (1 + k4 * k4 - k2 * k2 - k2) + m4 * (1 + k2 * k2 - k4 * k4 - k4),
                -(m2 * (k1 * k2 + k3 * k4) - m4 * (k3 * k4 + k1 * k2))),
            (3, 4): Quaternion(
                m3 * (k3 * k4 + k4) - m4 * (k3 * k4 + k3),
                -(m3 * (1 + k4 * k4 - k3 * k3 - k3) + m4 * (1 + k3 * k3 - k4 * k4 - k4)),
                m3 * (-k2 * k3 - k1 * k4) + m4 * (k1 * k4 + k2 * k3),
                m3 * (k2 * k4 - k1 * k3) + m4 * (k1 * k3 - k2 * k4)),
        }
    if variant == "instanton":
        return {
            (1, 2): Quaternion(
                m1 * (k1 * k2 + k2) - m2 * (k1 * k2 + k1),
                -m1 * (1 + k2 * k2 - k1 * k1 - k1) - m2 * (1 + k1 * k1 - k2 * k2 - k2),
                m1 * (k4 * k1 - k2 * k3) + m2 * (k3 * k2 - k4 * k1),
                m1 * (-k2 * k4 - k1 * k3) + m2 * (k1 * k3 + k2 * k4)),
            (1, 3): Quaternion(
                m1 * (k1 * k3 + k3) - m3 * (k1 * k3 + k1),
                m1 * (-k2 * k3 - k1 * k4) + m3 * (k1 * k4 + k2 * k3),
                -(m1 * (1 + k3 * k3 - k1 * k1 - k1) + m3 * (1 + k1 * k1 - k3 * k3 - k3)),
                m1 * (k1 * k2 - k3 * k4) + m3 * (k3 * k4 - k1 * k2)),
            (1, 4): Quaternion(
                m1 * (k1 * k4 + k4) - m4 * (k1 * k4 + k1),
                m1 * (k1 * k3 - k2 * k4) + m4 * (k2 * k4 - k1 * k3),
                m1 * (-k3 * k4 - k1 * k2) + m4 * (k1 * k2 + k3 * k4),
                -(m1 * (1 + k4 * k4 - k1 * k1 - k1) + m4 * (1 + k1 * k1 - k4 * k4 - k4))),
            (2, 3): Quaternion(
                m2 * (k2 * k3 + k3) - m3 * (k2 * k3 + k2),
                m2 * (-k2 * k4 + k1 * k3) + m3 * (-k1 * k3 + k2 * k4),
                m2 * (k3 * k4 + k1 * k2) - m3 * (k1 * k2 + k3 * k4),
                -(m2 * (1 + k3 * k3 - k2 * k2 - k2) + m3 * (1 + k2 * k2 - k3 * k3 - k3))),
            (2, 4): Quaternion(
                m2 * (k2 * k4 + k4) - m4 * (k2 * k4 + k2),
                m2 * (k2 * k3 + k4 * k1) - m4 * (k1 * k4 + k2 * k3),
                m2 * (1 + k4 * k4 - k2 * k2 - k2) + m4 * (1 + k2 * k2 - k4 * k4 - k4),
                m2 * (k1 * k2 - k3 * k4) + m4 * (k3 * k4 - k1 * k2)),
            (3, 4): Quaternion(
                m3 * (k3 * k4 + k4) - m4 * (k3 * k4 + k3),
                -(m3 * (1 + k4 * k4 - k3 * k3 - k3) + m4 * (1 + k3 * k3 - k4 * k4 - k4)),
                m3 * (-k2 * k3 + k1 * k4) + m4 * (-k1 * k4 + k2 * k3),
                m3 * (k2 * k4 + k1 * k3) - m4 * (k1 * k3 + k2 * k4)),
        }
    raise ValueError(f"unknown variant {variant!r}")


def su2_defect_closed_form(k: tuple, pair: tuple):
    """Closed form of the real part of a field-strength component:
    ``M_i (k_i k_j + k_j) - M_j (k_i k_j + k_i)``.

    Vanishes for every pair exactly on the main diagonal.
    """
    i, j = pair
    ki, kj = rat(k[i - 1]), rat(k[j - 1])
    return link_weight(k, i) * (ki * kj + kj) - link_weight(k, j) * (ki * kj + ki)


def diagonal_field_strength(variant: str, mu: int) -> dict:
    """Field-strength components at a diagonal index, in closed form.

    The anti-instanton pattern puts ``M(2 - 2 mu)`` on (12, -34) i,
    (13, +24) j, (14, -23) k; the instanton flips to ``M(2 mu - 2)`` on
    (12, +34) i, (13, -24) j, (14, +23) k.
    """
    m = diagonal_weight(mu)
    if variant == "anti-instanton":
        c = m * (2 - 2 * mu)
        return {
            (1, 2): Quaternion(0, c), (3, 4): Quaternion(0, -c),
            (1, 3): Quaternion(0, 0, c), (2, 4): Quaternion(0, 0, c),
            (1, 4): Quaternion(0, 0, 0, c), (2, 3): Quaternion(0, 0, 0, -c),
        }
    if variant == "instanton":
        c = m * (2 * mu - 2)
        return {
            (1, 2): Quaternion(0, c), (3, 4): Quaternion(0, c),
            (1, 3): Quaternion(0, 0, c), (2, 4): Quaternion(0, 0, -c),
            (1, 4): Quaternion(0, 0, 0, c), (2, 3): Quaternion(0, 0, 0, c),
        }
    raise ValueError(f"unknown variant {variant!r}")


def diagonal_curvature_form(variant: str, window: Window) -> TableForm:
    """The su(2)-valued diagonal field strength as a windowed 2-form.

    Supported only on diagonal indices; its duality claims are scoped to
    that support, where the generic field strength is su(2)-valued.
    """
    table = {}
    for k in window.indices():
        if len(set(k)) != 1:
            continue
        for pair, coeff in diagonal_field_strength(variant, k[0]).items():
            table[(k, pair)] = coeff
    return TableForm(2, table, window)


def omega_form() -> RuleForm:
    """Diagonal 0-form with coefficient ``M(mu) (1 - mu)`` at each diagonal
    index and zero elsewhere.  Cupped with the appropriate ordered product
    of frame forms it reproduces the diagonal field strength."""

    def rule(k, d):
        if len(set(k)) != 1:
            return Quaternion.ZERO
        mu = k[0]
        return Quaternion(diagonal_weight(mu) * (1 - mu))

    return RuleForm(0, rule)


# -- behaviour at infinity ------------------------------------------------------


def shell_indices(radius: int):
    """All indices with max |k_i| equal to the radius."""
    rng = range(-radius, radius + 1)
    for k1 in rng:
        for k2 in rng:
            for k3 in rng:
                for k4 in rng:
                    if max(abs(k1), abs(k2), abs(k3), abs(k4)) == radius:
                        yield (k1, k2, k3, k4)


def shell_max_deviation(radius: int):
    """Largest squared norm, over a shell, of the difference between the
    anti-instanton potential and the su(2) pure-gauge potential."""
    if radius < 1:
        raise ValueError("shell radius must be at least 1")
    anti = build_anti_instanton().potential
    flat = pure_gauge_connection().potential
    worst = rat(0)
    for k in shell_indices(radius):
        for axis in (1, 2, 3, 4):
            n = (anti.coefficient(k, (axis,))
                 - flat.coefficient(k, (axis,))).norm_sq()
            if n > worst:
                worst = n
    return worst


def gauge_at_infinity_forms() -> tuple:
    """Both sides of the coordinate-inversion identity for the
    anti-instanton.

    The left side gauge-transforms the anti-instanton by the pointwise
    coordinate inverse; the right side is the su(2) projection of the
    instanton-type generator cupped with the coboundary of the inverted
    coordinate.  They agree exactly away from the origin.
    """
    g = GaugeTransform.general(coordinate_inverse_form())
    lhs = gauge_transform(build_anti_instanton(), g).potential
    rhs = imaginary_part(cup(generator_form("instanton"),
                             coboundary(coordinate_inverse_form())))
    return lhs, rhs


@dataclass(frozen=True)
class AsymptoticReport:
    """Shell-by-shell decay of the anti-instanton toward pure gauge, plus
    the exact gauge identity that moves the far field to the origin."""

    shell_max: dict
    strictly_decreasing: bool
    identity_window: Window
    identity_holds: bool


def asymptotic_gauge_check(radius: int,
                           identity_window: Window | None = None) -> AsymptoticReport:
    """Measure decay on shells 2..radius and verify the inversion identity.

    Raises:
        ValueError: when the radius is below 2.
        SingularCoefficientError: when the identity window (default the
            cube [1, 3]^4) reaches the origin, where the gauge is singular.
    """
    if radius < 2:
        raise ValueError("radius must be at least 2")
    shells = {r: shell_max_deviation(r) for r in range(2, radius + 1)}
    radii = sorted(shells)
    decreasing = all(shells[a] > shells[b] for a, b in zip(radii, radii[1:]))
    window = identity_window or Window.cube(1, 3)
    lhs, rhs = gauge_at_infinity_forms()
    holds = lhs.equals_on(rhs, window)
    return AsymptoticReport(shells, decreasing, window, holds)
