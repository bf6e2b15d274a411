"""Named verification checks and their machine-readable results.

Each check runs one family of exact identities over a lattice region and
reports the worst residual found (a rational, rendered in lowest terms).
Every check except ``shell-decay`` passes iff its worst residual is exactly
zero; ``shell-decay`` passes iff the shell maxima strictly decrease, and
its reported residual is the deviation on the outermost shell.

The registry drives both the command-line ``verify`` subcommand and the
acceptance test suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from random import Random

from .chains import AXES, DIRS_BY_DEGREE, Cell, Chain, boundary, star_chain
from .forms import (TableForm, Window, coboundary, constant_form, cup,
                    cup_cells, cup_cells_recursive, iota, pair, star_form)
from .gauge import (PAIRS, Connection, Curvature, GaugeTransform,
                    componentwise_duality_residuals, covariant_differential,
                    curvature, curvature_form, duality_classify,
                    field_strength_component, gauge_transform,
                    generated_curvature, su2_residuals)
from .quaternion import Quaternion
from .sampling import random_form, random_su2_connection
from .scalars import rat, rat_decimal, rat_str
from .solutions import (VARIANTS, build_connection, closed_field_strength,
                        conjugate_frame_form, diagonal_curvature_form,
                        diagonal_field_strength, diagonal_weight,
                        flat_connection, frame_form, gauge_at_infinity_forms,
                        link_weight, omega_form, pure_gauge_connection,
                        shell_max_deviation, su2_defect_closed_form)

__all__ = ["RunConfig", "CheckResult", "CHECKS", "run_checks", "check_names"]

_ZERO = rat(0)


@dataclass
class RunConfig:
    """Configuration shared by all checks.

    ``kmin``/``kmax`` bound the lattice window for the checks whose region
    is configurable; seeded randomness makes reports reproducible.
    """

    kmin: tuple = (-3, -3, -3, -3)
    kmax: tuple = (3, 3, 3, 3)
    solution: str = "anti-instanton"
    seed: int = 7
    checks: tuple = ()
    out_format: str = "json"
    out_path: str | None = None

    def __post_init__(self):
        self.kmin = tuple(int(v) for v in self.kmin)
        self.kmax = tuple(int(v) for v in self.kmax)
        if len(self.kmin) != 4 or len(self.kmax) != 4:
            raise ValueError("kmin and kmax must each have four entries")
        if any(a >= b for a, b in zip(self.kmin, self.kmax)):
            raise ValueError(
                f"window must satisfy kmin < kmax on every axis, "
                f"got {self.kmin} .. {self.kmax}")

    def window(self) -> Window:
        return Window(self.kmin, self.kmax)


@dataclass
class CheckResult:
    """Outcome of one named check."""

    name: str
    anchor: str
    region: str
    passed: bool
    points_checked: int
    worst_residual: object = field(default_factory=lambda: _ZERO)
    elapsed_s: float = 0.0

    def to_row(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "region": self.region,
            "passed": self.passed,
            "points_checked": self.points_checked,
            "worst_residual": rat_str(self.worst_residual),
            "worst_residual_decimal": rat_decimal(self.worst_residual),
        }


class _Tally:
    """Accumulates residuals; a residual may be a rational or a quaternion."""

    def __init__(self):
        self.worst = _ZERO
        self.points = 0

    def add(self, residual) -> None:
        self.points += 1
        mag = residual.norm_sq() if isinstance(residual, Quaternion) else \
            residual * residual
        if mag > self.worst:
            self.worst = mag

    def add_equal(self, a, b) -> None:
        self.add(a - b)

    def result(self, name: str, anchor: str, region: str,
               passed=None) -> CheckResult:
        ok = (self.worst == _ZERO) if passed is None else passed
        return CheckResult(name, anchor, region, ok, self.points, self.worst)


def _check_star_involution(config: RunConfig) -> CheckResult:
    """Double star is (-1)^(r(4-r)) on every basis cell type, chains and
    forms, both complexes."""
    tally = _Tally()
    base = (0, 1, -1, 2)
    for p in range(5):
        sign = (-1) ** (p * (4 - p))
        for dirs in DIRS_BY_DEGREE[p]:
            for doubled in (False, True):
                ch = Chain.basis(base, dirs, doubled=doubled)
                twice = star_chain(star_chain(ch))
                diff = twice - sign * ch
                tally.add(rat(0) if diff.is_zero() else rat(1))
                coeff = Quaternion(1, 2, rat(-1, 3), 0)
                f = TableForm(p, {(base, dirs): coeff}, Window(base, base),
                              doubled=doubled)
                ss = star_form(star_form(f))
                tally.add_equal(ss.coefficient(base, dirs), coeff * sign)
    return tally.result("star-involution", "double-star-sign",
                        "all 16 basis cell types x 2 complexes")


@lru_cache(maxsize=8)
def _shared_forms(seed: int, degree: int) -> tuple:
    """The 100 seeded random forms per degree shared by the coboundary
    checks, dense on [-2,2]^4."""
    rng = Random(f"{seed}:forms:{degree}")
    window = Window.cube(-2, 2)
    return tuple(random_form(rng, degree, window) for _ in range(100))


@lru_cache(maxsize=8)
def _shared_derivatives(seed: int, degree: int) -> tuple:
    return tuple(coboundary(f) for f in _shared_forms(seed, degree))


def _check_coboundary_nilpotence(config: RunConfig) -> CheckResult:
    """Coboundary twice is zero on seeded random forms of degree 0..2."""
    tally = _Tally()
    inner = Window.cube(-2, 0)
    for degree in range(3):
        for df in _shared_derivatives(config.seed, degree):
            dd = coboundary(df)
            for k, d in dd.cells(inner):
                tally.add(dd.coefficient(k, d))
    return tally.result("coboundary-nilpotence", "d-twice-zero",
                        "100 random forms per degree 0..2 on [-2,2]^4")


def _check_coboundary_adjunction(config: RunConfig) -> CheckResult:
    """Pairing duality between boundary and coboundary on random forms.

    The first form of every degree is paired against every basis chain of
    the inner window; the rest against a seeded sample of 200 chains each.
    """
    tally = _Tally()
    inner = Window.cube(-2, 1)
    rng = Random(f"{config.seed}:adjunction")
    for degree in range(4):
        forms = _shared_forms(config.seed, degree)
        derivatives = _shared_derivatives(config.seed, degree)
        dirs_list = DIRS_BY_DEGREE[degree + 1]
        cells = [(k, dirs) for k in inner.indices() for dirs in dirs_list]
        for count, (f, df) in enumerate(zip(forms, derivatives)):
            chosen = cells if count == 0 else rng.sample(cells, 200)
            for k, dirs in chosen:
                # <boundary(cell), f> versus <cell, coboundary(f)>; the
                # right side of the pairing collapses to one coefficient
                bch = boundary(Chain.basis(k, dirs))
                tally.add_equal(pair(bch, f), df.coefficient(k, dirs))
    return tally.result("coboundary-adjunction", "boundary-pairing-duality",
                        "100 random forms per degree 0..3 on [-2,2]^4")


def _check_leibniz(config: RunConfig) -> CheckResult:
    """Graded product rule for the coboundary over the cup product."""
    tally = _Tally()
    rng = Random(f"{config.seed}:leibniz")
    window = Window.cube(-1, 1)
    inner = Window.cube(-1, -1)
    for p in range(4):
        for q in range(4 - p):
            for _ in range(50):
                f = random_form(rng, p, window)
                g = random_form(rng, q, window)
                lhs = coboundary(cup(f, g))
                rhs = cup(coboundary(f), g) + \
                    cup(f, coboundary(g)).scale(rat(1 if p % 2 == 0 else -1))
                for k, d in lhs.cells(inner):
                    tally.add_equal(lhs.coefficient(k, d), rhs.coefficient(k, d))
    return tally.result("leibniz", "graded-product-rule",
                        "50 random pairs per (p,q), p+q<=3, on [-1,1]^4")


def _check_iota_identities(config: RunConfig) -> CheckResult:
    """Complex-swap identities: involution, star and coboundary
    commutation, multiplicativity, and the 0-form pull-through."""
    tally = _Tally()
    rng = Random(f"{config.seed}:iota")
    window = Window.cube(-2, 2)
    inner = Window.cube(-2, 1)
    h = random_form(rng, 0, window)
    for degree in range(5):
        f = random_form(rng, degree, window)
        ii = iota(iota(f))
        si = star_form(iota(f))
        is_ = iota(star_form(f))
        through_l = iota(star_form(cup(h, f)))
        through_r = cup(h, iota(star_form(f)))
        for k, d in f.cells(window):
            tally.add_equal(ii.coefficient(k, d), f.coefficient(k, d))
        for k, d in si.cells(window):
            tally.add_equal(si.coefficient(k, d), is_.coefficient(k, d))
        for k, d in through_l.cells(window):
            tally.add_equal(through_l.coefficient(k, d),
                            through_r.coefficient(k, d))
        if degree < 4:
            di = coboundary(iota(f))
            id_ = iota(coboundary(f))
            for k, d in di.cells(inner):
                tally.add_equal(di.coefficient(k, d), id_.coefficient(k, d))
        if degree <= 2:
            g = random_form(rng, 2 - degree, window)
            ic = iota(cup(f, g))
            ci = cup(iota(f), iota(g))
            for k, d in ic.cells(inner):
                tally.add_equal(ic.coefficient(k, d), ci.coefficient(k, d))
    return tally.result("iota-identities", "complex-swap-identities",
                        "random forms of every degree on [-2,2]^4")


def _check_cup_recursion(config: RunConfig) -> CheckResult:
    """Closed-form basis product against the defining recursion, all pairs."""
    tally = _Tally()
    for p in range(5):
        for q in range(5):
            for ld in combinations(AXES, p):
                for rd in combinations(AXES, q):
                    for m in Window.cube(0, 1).indices():
                        left = Cell((0, 0, 0, 0), ld)
                        right = Cell(m, rd)
                        same = cup_cells(left, right) == \
                            cup_cells_recursive(left, right)
                        tally.add(rat(0) if same else rat(1))
    return tally.result("cup-recursion", "basis-product-two-routes",
                        "all 4096 basis cell pairs")


def _check_cup_associativity(config: RunConfig) -> CheckResult:
    """Empirical associativity of the cup product on random triples."""
    tally = _Tally()
    rng = Random(f"{config.seed}:assoc")
    window = Window.cube(-1, 1)
    inner = Window.cube(-1, -1)
    for degrees in ((0, 0, 0), (0, 1, 1), (1, 1, 1), (1, 0, 2), (2, 1, 1),
                    (1, 1, 2), (0, 2, 2)):
        for _ in range(10):
            f, g, h = (random_form(rng, d, window) for d in degrees)
            left = cup(cup(f, g), h)
            right = cup(f, cup(g, h))
            for k, d in left.cells(inner):
                tally.add_equal(left.coefficient(k, d), right.coefficient(k, d))
    return tally.result("cup-associativity", "empirical-associativity",
                        "random triples on [-1,1]^4")


def _check_bianchi(config: RunConfig) -> CheckResult:
    """Covariant differential of the field strength vanishes identically."""
    tally = _Tally()
    rng = Random(f"{config.seed}:bianchi")
    window = Window.cube(-2, 2)
    inner = Window.cube(-2, 0)
    for _ in range(25):
        conn = random_su2_connection(rng, window)
        f = curvature_form(conn.potential)
        res = covariant_differential(conn.potential, f)
        for k, d in res.cells(inner):
            tally.add(res.coefficient(k, d))
    return tally.result("bianchi", "covariant-closure-of-field-strength",
                        "25 random su(2) connections on [-2,2]^4")


def _check_pure_gauge_flat(config: RunConfig) -> CheckResult:
    """Flatness of the pure-gauge connection on [1,4]^4: the quaternionic
    pure-gauge 1-form has zero field strength, hence so does the su(2)
    projection of that field strength."""
    tally = _Tally()
    window = Window.cube(1, 4)
    flat = curvature(flat_connection()).form
    projected = generated_curvature(pure_gauge_connection()).form
    for k, d in flat.cells(window):
        tally.add(flat.coefficient(k, d))
        tally.add(projected.coefficient(k, d))
    return tally.result("pure-gauge-flat", "pure-gauge-zero-field-strength",
                        "[1,4]^4")


def _check_unit_duality(config: RunConfig) -> CheckResult:
    """The frame product is self-dual one way and anti-self-dual the other,
    and stays so under multiplication by random 0-forms."""
    tally = _Tally()
    rng = Random(f"{config.seed}:duality")
    window = Window.cube(-2, 2)
    scaled_window = Window.cube(-1, 1)
    e, ebar = frame_form(), conjugate_frame_form()
    sd = cup(e, ebar)
    asd = cup(ebar, e)
    sd_swap = iota(star_form(sd))
    asd_swap = iota(star_form(asd))
    for k in window.indices():
        for pr in PAIRS:
            tally.add_equal(sd.coefficient(k, pr), sd_swap.coefficient(k, pr))
            tally.add_equal(asd.coefficient(k, pr),
                            -asd_swap.coefficient(k, pr))
    for _ in range(20):
        h = random_form(rng, 0, scaled_window)
        hs = cup(h, sd)
        ha = cup(h, asd)
        hs_swap = iota(star_form(hs))
        ha_swap = iota(star_form(ha))
        for k in scaled_window.indices():
            for pr in PAIRS:
                tally.add_equal(hs.coefficient(k, pr),
                                hs_swap.coefficient(k, pr))
                tally.add_equal(ha.coefficient(k, pr),
                                -ha_swap.coefficient(k, pr))
    return tally.result("unit-duality", "frame-product-duality",
                        "constant products on [-2,2]^4 plus 20 scaled on [-1,1]^4")


def _variants_for(config: RunConfig):
    if config.solution in VARIANTS:
        return (config.solution,)
    return VARIANTS


def _check_closed_form_oracle(config: RunConfig) -> CheckResult:
    """Closed-form field-strength components equal the generic evaluation
    at every point of the window, for the selected families."""
    tally = _Tally()
    window = config.window()
    for variant in _variants_for(config):
        conn = build_connection(variant)
        generic = curvature(conn).form
        for k in window.indices():
            closed = closed_field_strength(variant, k)
            for pr in PAIRS:
                tally.add_equal(generic.coefficient(k, pr), closed[pr])
                tally.add_equal(
                    field_strength_component(conn.potential, k, pr),
                    closed[pr])
    return tally.result("closed-form-oracle", "closed-vs-generic-field-strength",
                        f"window {config.kmin}..{config.kmax}, both routes")


def _check_su2_diagonal(config: RunConfig) -> CheckResult:
    """Real parts of the field strength vanish exactly on the main diagonal
    and fail to vanish at every off-diagonal point of the window."""
    window = config.window()
    variant = config.solution if config.solution in VARIANTS else "anti-instanton"
    conn = build_connection(variant)
    curv = curvature(conn)
    defects = su2_residuals(curv, window)
    tally = _Tally()
    points = set()
    for (k, pr), value in defects.items():
        points.add(k)
        tally.add_equal(value, su2_defect_closed_form(k, pr))
    for k in sorted(points):
        on_diagonal = len(set(k)) == 1
        if on_diagonal:
            for pr in PAIRS:
                tally.add(defects[(k, pr)])
        else:
            # an off-diagonal point must show at least one nonzero defect
            witnessed = any(defects[(k, pr)] != 0 for pr in PAIRS)
            tally.add(rat(0) if witnessed else rat(1))
    return tally.result("su2-diagonal", "su2-valued-iff-diagonal",
                        f"window {config.kmin}..{config.kmax}")


def _check_diagonal_duality(config: RunConfig) -> CheckResult:
    """On the diagonal: closed pattern matches the generic components, the
    field strength factors through the diagonal 0-form, and each family has
    its expected duality, by both the swap-star route and the componentwise
    relations."""
    tally = _Tally()
    window = config.window()
    e, ebar = frame_form(), conjugate_frame_form()
    factors = {"anti-instanton": cup(omega_form(), cup(ebar, e)),
               "instanton": cup(omega_form(), cup(e, ebar))}
    mus = range(max(config.kmin), min(config.kmax) + 1)
    for variant in VARIANTS:
        conn = build_connection(variant)
        generic = curvature(conn).form
        for mu in mus:
            k = (mu,) * 4
            pattern = diagonal_field_strength(variant, mu)
            for pr in PAIRS:
                tally.add_equal(generic.coefficient(k, pr), pattern[pr])
        diag = diagonal_curvature_form(variant, window)
        factored = factors[variant]
        for k in window.indices():
            for pr in PAIRS:
                tally.add_equal(diag.coefficient(k, pr),
                                factored.coefficient(k, pr))
        report = duality_classify(Curvature(diag), window)
        want_self = variant == "instanton"
        ok = report.is_self_dual if want_self else report.is_anti_self_dual
        tally.add(rat(0) if ok else rat(1))
        for k in window.indices():
            for r in componentwise_duality_residuals(diag, k, want_self):
                tally.add(r)
    return tally.result("diagonal-duality", "diagonal-duality-and-factorisation",
                        f"diagonal of {config.kmin}..{config.kmax}")


def _check_diagonal_weight(config: RunConfig) -> CheckResult:
    """The diagonal closed form of the link weight matches its definition."""
    tally = _Tally()
    for mu in range(-5, 6):
        k = (mu,) * 4
        for axis in AXES:
            tally.add_equal(link_weight(k, axis), diagonal_weight(mu))
    return tally.result("diagonal-weight", "link-weight-closed-form",
                        "diagonal indices -5..5, all axes")


def _check_gauge_at_infinity(config: RunConfig) -> CheckResult:
    """Exact coordinate-inversion gauge identity on [1,3]^4."""
    tally = _Tally()
    window = Window.cube(1, 3)
    lhs, rhs = gauge_at_infinity_forms()
    for k in window.indices():
        for axis in AXES:
            tally.add_equal(lhs.coefficient(k, (axis,)),
                            rhs.coefficient(k, (axis,)))
    return tally.result("gauge-at-infinity", "coordinate-inversion-identity",
                        "[1,3]^4")


def _check_shell_decay(config: RunConfig) -> CheckResult:
    """Far-field decay: the worst deviation from pure gauge on the shell of
    radius 4 is strictly below the one at radius 2.  Passes on strict
    decrease; the reported residual is the outer-shell deviation."""
    near = shell_max_deviation(2)
    far = shell_max_deviation(4)
    result = CheckResult("shell-decay", "far-field-approach-to-pure-gauge",
                         "shells radius 2 and 4", far < near, 2, far)
    return result


def _check_constant_gauge_covariance(config: RunConfig) -> CheckResult:
    """Field strength conjugates under constant unit gauges."""
    tally = _Tally()
    rng = Random(f"{config.seed}:covariance")
    window = Window.cube(-2, 2)
    inner = Window.cube(-2, 0)
    g = Quaternion(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2))
    for _ in range(5):
        conn = random_su2_connection(rng, window)
        t = gauge_transform(conn, GaugeTransform.constant(g))
        lhs = curvature(t).form
        rhs = cup(cup(constant_form(g.conj()), curvature(conn).form),
                  constant_form(g))
        for k, d in lhs.cells(inner):
            tally.add_equal(lhs.coefficient(k, d), rhs.coefficient(k, d))
        for k in inner.indices():
            for axis in AXES:
                tally.add(rat(0) if t.potential.coefficient(k, (axis,)).is_su2()
                          else rat(1))
    return tally.result("constant-gauge-covariance",
                        "constant-gauge-conjugation",
                        "5 random su(2) connections on [-2,2]^4")


CHECKS = {
    "star-involution": _check_star_involution,
    "coboundary-nilpotence": _check_coboundary_nilpotence,
    "coboundary-adjunction": _check_coboundary_adjunction,
    "leibniz": _check_leibniz,
    "iota-identities": _check_iota_identities,
    "cup-recursion": _check_cup_recursion,
    "cup-associativity": _check_cup_associativity,
    "bianchi": _check_bianchi,
    "pure-gauge-flat": _check_pure_gauge_flat,
    "unit-duality": _check_unit_duality,
    "closed-form-oracle": _check_closed_form_oracle,
    "su2-diagonal": _check_su2_diagonal,
    "diagonal-duality": _check_diagonal_duality,
    "diagonal-weight": _check_diagonal_weight,
    "gauge-at-infinity": _check_gauge_at_infinity,
    "shell-decay": _check_shell_decay,
    "constant-gauge-covariance": _check_constant_gauge_covariance,
}


def check_names() -> tuple:
    return tuple(sorted(CHECKS))


def run_checks(config: RunConfig, names=None) -> list:
    """Run the selected checks (all when names is empty), sorted by name.

    Raises:
        KeyError: for an unknown check name.
    """
    selected = sorted(names) if names else check_names()
    unknown = [n for n in selected if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check name(s): {', '.join(unknown)}")
    results = []
    for name in selected:
        start = time.perf_counter()
        result = CHECKS[name](config)
        result.elapsed_s = time.perf_counter() - start
        results.append(result)
    return results
