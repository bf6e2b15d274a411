# throwaway sanity driver; deleted before finishing
from itertools import combinations, product
from random import Random

from qym import *
from qym.chains import DIRS_BY_DEGREE, Cell
from qym.forms import cup_cells, cup_cells_recursive
from qym.gauge import PAIRS, componentwise_duality_residuals
from qym.sampling import random_form, random_su2_connection
from qym.solutions import VARIANTS, gauge_at_infinity_forms, su2_defect_closed_form
from qym.scalars import rat

ok = lambda name, cond: print(("PASS " if cond else "FAIL ") + name) or (cond or (_ for _ in ()).throw(AssertionError(name)))

# 1. quaternion basics
i, j, k = Quaternion.I, Quaternion.J, Quaternion.K
ok("ij=k", i * j == k)
ok("jk=i", j * k == i)
ok("ki=j", k * i == j)
ok("(1+i)(1+j)=1+i+j+k", Quaternion(1, 1) * Quaternion(1, 0, 1) == Quaternion(1, 1, 1, 1))
q = Quaternion(1, 1, 1, 1)
ok("inverse", q * q.inverse() == Quaternion.ONE)
m = embed(Quaternion(2, 3, -1, rat(1, 2)))
ok("det=norm_sq", m.det() == ComplexRational(Quaternion(2, 3, -1, rat(1, 2)).norm_sq()))
ok("embed hom", embed(i) * embed(j) == embed(k))
ok("embed su2", embed(i + j).is_su2() and not embed(Quaternion(1, 1)).is_su2())

# 2. boundary example and nilpotence
c = Chain.basis((0, 0, 0, 0), (2, 4))
bc = boundary(c)
expect = {
    Cell((0, 1, 0, 0), (4,)): rat(1), Cell((0, 0, 0, 0), (4,)): rat(-1),
    Cell((0, 0, 0, 1), (2,)): rat(-1), Cell((0, 0, 0, 0), (2,)): rat(1),
}
ok("boundary eps24", bc.terms == expect)
rng = Random(1)
for p in range(5):
    terms = {}
    for _ in range(10):
        idx = tuple(rng.randint(-2, 2) for _ in range(4))
        dirs = rng.choice(DIRS_BY_DEGREE[p])
        terms[Cell(idx, dirs)] = rat(rng.randint(-5, 5), rng.randint(1, 3))
    ch = Chain(p, terms)
    ok(f"dd=0 deg {p}", boundary(boundary(ch)).is_zero())

# 3. star on chains: example + involution
s = star_chain(Chain.basis((1, 2, 3, 4), (1, 3)))
ok("star eps13 chain", s.terms == {Cell((1, 2, 3, 4), (2, 4), True): rat(-1)})
for p in range(5):
    for dirs in DIRS_BY_DEGREE[p]:
        ch = Chain.basis((0, 1, -1, 2), dirs)
        sign = (-1) ** (p * (4 - p))
        ok(f"**chain {dirs}", star_chain(star_chain(ch)) == sign * ch)

# 4. cup closed form vs recursion on all basis pairs
count_checked = count_nonzero = 0
for pd in range(5):
    for qd in range(5):
        for ld in combinations((1, 2, 3, 4), pd):
            for rd in combinations((1, 2, 3, 4), qd):
                for m in product((0, 1), repeat=4):
                    left = Cell((0, 0, 0, 0), ld)
                    right = Cell(m, rd)
                    a = cup_cells(left, right)
                    b = cup_cells_recursive(left, right)
                    assert a == b, (left, right, a, b)
                    count_checked += 1
                    if a is not None:
                        count_nonzero += 1
ok(f"cup closed=recursive ({count_checked} pairs, {count_nonzero} nonzero)", True)

# 5. e cup ebar expansion (constants)
e, ebar = frame_form(), conjugate_frame_form()
ee = cup(e, ebar)
w = Window.cube(-1, 1)
expect_coeffs = {(1, 2): -2 * i, (3, 4): -2 * i, (1, 3): -2 * j, (2, 4): 2 * j,
                 (1, 4): -2 * k, (2, 3): -2 * k}
ok("e cup ebar", all(ee.coefficient(kk, p) == expect_coeffs[p] for kk in w.indices() for p in PAIRS))
be = cup(ebar, e)
expect2 = {(1, 2): 2 * i, (3, 4): -2 * i, (1, 3): 2 * j, (2, 4): 2 * j,
           (1, 4): 2 * k, (2, 3): -2 * k}
ok("ebar cup e", all(be.coefficient(kk, p) == expect2[p] for kk in w.indices() for p in PAIRS))

# duality of unit 2-forms via operator route
g1 = iota(star_form(ee))
ok("e^ebar self-dual", all(g1.coefficient(kk, p) == ee.coefficient(kk, p) for kk in w.indices() for p in PAIRS))
g2 = iota(star_form(be))
ok("ebar^e anti", all(g2.coefficient(kk, p) == -1 * be.coefficient(kk, p) for kk in w.indices() for p in PAIRS))

# 6. d^c x = e ; unit form
x = coordinate_form()
ok("dx=e", coboundary(x).equals_on(e, w))
u = unit_zero_form()
phi = random_form(Random(2), 2, Window.cube(-2, 2))
ok("unit cup phi", cup(u, phi).equals_on(phi, Window.cube(-2, 2)))
ok("phi cup unit", cup(phi, u).equals_on(phi, Window.cube(-2, 1)))

# 7. coboundary nilpotence + adjunction on random forms
rng = Random(3)
for deg in range(3):
    f = random_form(rng, deg, Window.cube(-2, 2))
    dd = coboundary(coboundary(f))
    ok(f"dcdc=0 deg {deg}", dd.is_zero_on(Window.cube(-2, 0)))
for deg in range(4):
    f = random_form(rng, deg, Window.cube(-2, 2))
    df = coboundary(f)
    good = True
    for kk in Window.cube(-2, 1).indices():
        for dirs in DIRS_BY_DEGREE[deg + 1]:
            ch = Chain.basis(kk, dirs)
            good &= pair(boundary(ch), f) == pair(ch, df)
    ok(f"adjunction deg {deg}", good)

# 8. Leibniz on random pairs
rng = Random(4)
for (pd, qd) in [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0), (1, 2), (2, 1), (0, 3), (3, 0)]:
    f = random_form(rng, pd, Window.cube(-2, 2))
    g = random_form(rng, qd, Window.cube(-2, 2))
    lhs = coboundary(cup(f, g))
    rhs = cup(coboundary(f), g) + cup(f, coboundary(g)).scale(rat(1) if pd % 2 == 0 else rat(-1))
    ok(f"leibniz ({pd},{qd})", lhs.equals_on(rhs, Window.cube(-2, 0)))

# 9. star involution + iota identities on cochains
rng = Random(5)
for deg in range(5):
    f = random_form(rng, deg, Window.cube(-1, 1))
    sign = (-1) ** (deg * (4 - deg))
    ss = star_form(star_form(f))
    ok(f"**form deg {deg}", ss.equals_on(f.map_coefficients(lambda q: q * sign), Window.cube(-1, 1)))
    ok(f"iota^2 deg {deg}", iota(iota(f)).equals_on(f, Window.cube(-1, 1)))
    ok(f"iota*=*iota deg {deg}", iota(star_form(f)).equals_on(star_form(iota(f)), Window.cube(-1, 1)))
# star adjunction on cochains: <c~, *phi> = <*c~, phi>
rng = Random(6)
for deg in range(5):
    f = random_form(rng, deg, Window.cube(-1, 1))
    sf = star_form(f)  # doubled, degree 4-deg
    good = True
    for kk in Window.cube(-1, 1).indices():
        for dirs in DIRS_BY_DEGREE[4 - deg]:
            ct = Chain.basis(kk, dirs, doubled=True)
            good &= pair(ct, sf) == pair(star_chain(ct), f)
    ok(f"star adjunction deg {deg}", good)
# iota d = d iota; iota(cup)=cup(iota)
rng = Random(7)
f = random_form(rng, 1, Window.cube(-2, 2))
g = random_form(rng, 2, Window.cube(-2, 2))
ok("iota d = d iota", iota(coboundary(f)).equals_on(coboundary(iota(f)), Window.cube(-2, 1)))
ok("iota cup", iota(cup(f, g)).equals_on(cup(iota(f), iota(g)), Window.cube(-2, 1)))
# 0-form pull-through
h = random_form(rng, 0, Window.cube(-2, 2))
for deg in range(5):
    phi = random_form(rng, deg, Window.cube(-2, 2))
    lhs = iota(star_form(cup(h, phi)))
    rhs = cup(h, iota(star_form(phi)))
    ok(f"0-form pull-through deg {deg}", lhs.equals_on(rhs, Window.cube(-2, 2)))

# 10. generator inverse identity: d f cup f^-1 = - f cup d f^-1 for f=x off origin
xinv = form_inverse(x)
lhs = cup(coboundary(x), xinv)
rhs = cup(x, coboundary(xinv)).scale(rat(-1))
ok("df cup finv", lhs.equals_on(rhs, Window.cube(1, 3)))

# 11. curvature: componentwise formula vs form machinery on random A
rng = Random(8)
conn = random_su2_connection(rng, Window.cube(-2, 2))
Fc = curvature(conn)
good = True
for kk in Window.cube(-2, 1).indices():
    for p in PAIRS:
        good &= Fc.form.coefficient(kk, p) == field_strength_component(conn.potential, kk, p)
ok("curvature two routes", good)

# Bianchi
r1, r2 = ym_residuals(conn)
ok("bianchi random", r1.is_zero_on(Window.cube(-2, 0)))

# 12. flat connection: curvature of unprojected pure gauge = 0
flat = flat_connection()
Ff = curvature(flat)
ok("flat curvature zero", Ff.form.is_zero_on(Window.cube(1, 4)))
# su2-projected pure-gauge: generic curvature NOT zero (non-commutation witness)
pg = pure_gauge_connection()
Fpg = curvature(pg)
print("   witness: generic F of projected pure gauge at (1,1,1,1), pair (1,2):", Fpg.form.coefficient((1, 1, 1, 1), (1, 2)))
ok("projection does not commute", not Fpg.form.is_zero_on(Window.cube(1, 2)))

# 13. closed-form field strength vs generic, both variants
for variant in ("anti-instanton", "instanton"):
    connv = build_connection(variant)
    Fv = curvature(connv)
    good = True
    for kk in Window.cube(-2, 2).indices():
        cf = closed_field_strength(variant, kk)
        for p in PAIRS:
            if Fv.form.coefficient(kk, p) != cf[p]:
                print("MISMATCH", variant, kk, p, Fv.form.coefficient(kk, p), cf[p])
                good = False
                break
        if not good:
            break
    ok(f"closed vs generic {variant}", good)

# su2 defect closed form matches real part
good = True
for kk in Window.cube(-2, 2).indices():
    cf = closed_field_strength("anti-instanton", kk)
    for p in PAIRS:
        good &= cf[p].real_part() == su2_defect_closed_form(kk, p)
ok("su2 defect closed form", good)

# prop: defect zero iff diagonal on [-3,3]^4
diag_ok = offdiag_ok = True
for kk in Window.cube(-3, 3).indices():
    defects = [su2_defect_closed_form(kk, p) for p in PAIRS]
    if len(set(kk)) == 1:
        diag_ok &= all(d == 0 for d in defects)
    else:
        offdiag_ok &= any(d != 0 for d in defects)
ok("defect iff off-diagonal", diag_ok and offdiag_ok)

# 14. diagonal: pattern vs closed forms; factorization; duality
for variant in VARIANTS:
    good = True
    for mu in range(-3, 4):
        kk = (mu,) * 4
        cf = closed_field_strength(variant, kk)
        dg = diagonal_field_strength(variant, mu)
        good &= all(cf[p] == dg[p] for p in PAIRS)
    ok(f"diagonal pattern {variant}", good)

wd = Window.cube(-3, 3)
dform_a = diagonal_curvature_form("anti-instanton", wd)
fact_a = cup(omega_form(), cup(ebar, e))
ok("factorization anti", dform_a.equals_on(fact_a.materialise(wd), wd))
dform_i = diagonal_curvature_form("instanton", wd)
fact_i = cup(omega_form(), cup(e, ebar))
ok("factorization inst", dform_i.equals_on(fact_i.materialise(wd), wd))
rep_a = duality_classify(Curvature(dform_a), wd)
rep_i = duality_classify(Curvature(dform_i), wd)
ok("diag anti is anti-self-dual", rep_a.is_anti_self_dual and not rep_a.is_self_dual)
ok("diag inst is self-dual", rep_i.is_self_dual and not rep_i.is_anti_self_dual)
# componentwise route agrees
good = True
for kk in wd.indices():
    ra = componentwise_duality_residuals(dform_a, kk, self_dual=False)
    ri = componentwise_duality_residuals(dform_i, kk, self_dual=True)
    good &= all(r.is_zero() for r in ra) and all(r.is_zero() for r in ri)
ok("componentwise duality", good)

# M closed form on diagonal
good = all(link_weight((mu,) * 4, a) == diagonal_weight(mu) for mu in range(-5, 6) for a in (1, 2, 3, 4))
ok("diagonal weight closed form", good)
ok("M0=1/2", diagonal_weight(0) == rat(1, 2))

# 15. gauge at infinity identity + shells
lhs, rhs = gauge_at_infinity_forms()
ok("inversion identity [1,3]^4", lhs.equals_on(rhs, Window.cube(1, 3)))
d2, d4 = shell_max_deviation(2), shell_max_deviation(4)
print("   shell max dev r=2:", d2, " r=4:", d4)
ok("shell decay 2->4", d2 > d4)

# 16. constant-gauge covariance
rng = Random(9)
conn = random_su2_connection(rng, Window.cube(-2, 2))
gq = Quaternion(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2))
gt = GaugeTransform.constant(gq)
t = gauge_transform(conn, gt)
Ft = curvature(t)
F0 = curvature(conn)
ginv = constant_form(gq.conj())
gfrm = constant_form(gq)
expected = cup(cup(ginv, F0.form), gfrm)
ok("constant gauge covariance", Ft.form.equals_on(expected, Window.cube(-2, 0)))
ok("constant gauge keeps su2", all(Ft.form is not None and t.potential.coefficient(kk, (a,)).is_su2() for kk in Window.cube(-2, 1).indices() for a in (1, 2, 3, 4)))

# non-constant unit gauge: su2-ness can FAIL (record witness)
table = {}
for kk in Window.cube(0, 1).indices():
    table[(kk, ())] = Quaternion.ONE
table[((0, 0, 0, 0), ())] = Quaternion.ONE
table[((1, 0, 0, 0), ())] = Quaternion.I
gtab = TableForm(0, table, Window.cube(0, 1))
gt2 = GaugeTransform.unit(gtab)
conn2 = Connection(TableForm(1, {((0, 0, 0, 0), (1,)): Quaternion.I}, Window.cube(0, 1)))
t2 = gauge_transform(conn2, gt2)
val = t2.potential.coefficient((0, 0, 0, 0), (1,))
print("   non-constant unit gauge witness A'^1_0 =", val, "-> su2?", val.is_su2())

# 17. associativity of cup on random triples
rng = Random(10)
f1 = random_form(rng, 1, Window.cube(-2, 2))
f2 = random_form(rng, 1, Window.cube(-2, 2))
f3 = random_form(rng, 1, Window.cube(-2, 2))
ok("cup associative", cup(cup(f1, f2), f3).equals_on(cup(f1, cup(f2, f3)), Window.cube(-2, 0)))

# 18. ym residuals of flat
r1, r2 = ym_residuals(flat_connection())
ok("flat ym residuals", r1.is_zero_on(Window.cube(1, 3)) and r2.is_zero_on(Window.cube(1, 3)))

print("ALL SCRATCH CHECKS DONE")
