"""Seeded random data for property checks: forms, connections, gauges.

Everything is driven by ``random.Random`` so a fixed seed reproduces the
exact same rational data, which keeps reports byte-identical.
"""

from __future__ import annotations

from random import Random

from .chains import DIRS_BY_DEGREE
from .forms import TableForm, Window
from .gauge import Connection
from .quaternion import Quaternion, _q, _RZERO
from .scalars import rat

__all__ = [
    "random_rational", "random_quaternion", "random_su2_quaternion",
    "random_form", "random_su2_connection", "random_unit_quaternion",
    "UNIT_POOL",
]


_POOL_MAX_NUM = 6
_POOL_MAX_DEN = 4
_RAT_POOL = tuple(rat(num, den)
                  for num in range(-_POOL_MAX_NUM, _POOL_MAX_NUM + 1)
                  for den in range(1, _POOL_MAX_DEN + 1))


def random_rational(rng: Random, *, max_num: int = 6, max_den: int = 4):
    # rng.random() is much cheaper than randint and just as reproducible
    if max_num == _POOL_MAX_NUM and max_den == _POOL_MAX_DEN:
        return _RAT_POOL[int(rng.random() * len(_RAT_POOL))]
    span = 2 * max_num + 1
    num = int(rng.random() * span) - max_num
    den = 1 + int(rng.random() * max_den)
    return rat(num, den)


def random_quaternion(rng: Random) -> Quaternion:
    r = random_rational
    return _q(r(rng), r(rng), r(rng), r(rng))


def random_su2_quaternion(rng: Random) -> Quaternion:
    r = random_rational
    return _q(_RZERO, r(rng), r(rng), r(rng))


def _unit_pool():
    pool = []
    for axis in range(4):
        for sign in (1, -1):
            comps = [0, 0, 0, 0]
            comps[axis] = sign
            pool.append(Quaternion(*comps))
    half = rat(1, 2)
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                for sw in (1, -1):
                    pool.append(Quaternion(sw * half, sx * half,
                                           sy * half, sz * half))
    for a, b in ((rat(3, 5), rat(4, 5)), (rat(5, 13), rat(12, 13))):
        pool.append(Quaternion(a, b, 0, 0))
        pool.append(Quaternion(a, 0, b, 0))
        pool.append(Quaternion(0, a, 0, b))
    return tuple(pool)


#: exact unit-norm quaternions (squared norm 1) for gauge sampling
UNIT_POOL = _unit_pool()


def random_unit_quaternion(rng: Random) -> Quaternion:
    return rng.choice(UNIT_POOL)


def random_form(rng: Random, degree: int, window: Window,
                su2: bool = False, doubled: bool = False) -> TableForm:
    """Dense random windowed form with small rational quaternion entries."""
    make = random_su2_quaternion if su2 else random_quaternion
    dirs_list = DIRS_BY_DEGREE[degree]
    table = {}
    for k in window.indices():
        for dirs in dirs_list:
            q = make(rng)
            if not q.is_zero():
                table[(k, dirs)] = q
    return TableForm._trusted(degree, table, window, doubled, Quaternion.ZERO)


def random_su2_connection(rng: Random, window: Window) -> Connection:
    return Connection(random_form(rng, 1, window, su2=True))
