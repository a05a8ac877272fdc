"""Seeded generators and small exact-arithmetic utilities shared by the tests.

Everything here is deterministic given a ``random.Random`` instance, so test
runs are reproducible without hypothesis involvement.  The rotation helpers
produce exact rational isometries (quaternion conjugation in 3-space, two-
sided unit multiplication in 4-space), which is what lets the circle
generators emit frames that satisfy their orthogonality invariants on the
nose.
"""

from __future__ import annotations

import random
from fractions import Fraction

from quatsurf import (
    Circle3,
    CircleS3,
    QPolyU,
    QPolyUV,
    Quaternion,
    RPolyUV,
    Vec2,
    stereo_inv,
)

# region random exact values


def rand_fraction(rng: random.Random, max_num: int = 10, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_quat(rng: random.Random, max_num: int = 10, max_den: int = 6) -> Quaternion:
    return Quaternion(*(rand_fraction(rng, max_num, max_den) for _ in range(4)))


def rand_nonzero_quat(rng: random.Random, **kw) -> Quaternion:
    while True:
        q = rand_quat(rng, **kw)
        if not q.is_zero:
            return q


def rand_qpolyu(rng: random.Random, max_deg: int = 3, **kw) -> QPolyU:
    return QPolyU([rand_quat(rng, **kw) for _ in range(rng.randint(0, max_deg) + 1)])


def rand_nonzero_qpolyu(rng: random.Random, max_deg: int = 3, **kw) -> QPolyU:
    while True:
        p = rand_qpolyu(rng, max_deg, **kw)
        if not p.is_zero:
            return p


def rand_qpolyuv(
    rng: random.Random, max_du: int = 2, max_dv: int = 1, density: float = 0.6, **kw
) -> QPolyUV:
    acc = QPolyUV.zero()
    for du in range(max_du + 1):
        for dv in range(max_dv + 1):
            if rng.random() < density:
                acc = acc + QPolyUV.monomial(rand_quat(rng, **kw), du, dv)
    return acc


def rand_nonzero_qpolyuv(rng: random.Random, max_du: int = 2, max_dv: int = 1, **kw) -> QPolyUV:
    while True:
        p = rand_qpolyuv(rng, max_du, max_dv, **kw)
        if not p.is_zero:
            return p


def rand_rpolyuv(
    rng: random.Random, max_du: int = 2, max_dv: int = 2, density: float = 0.6, **kw
) -> RPolyUV:
    acc = RPolyUV.zero()
    for du in range(max_du + 1):
        for dv in range(max_dv + 1):
            if rng.random() < density:
                acc = acc + RPolyUV.monomial(rand_fraction(rng, **kw), du, dv)
    return acc


def rand_vec2(rng: random.Random, max_du: int = 2, max_dv: int = 1, **kw) -> Vec2:
    return Vec2(rand_qpolyuv(rng, max_du, max_dv, **kw), rand_qpolyuv(rng, max_du, max_dv, **kw))


# endregion

# region exact isometries and circles


def rand_unit_quat(rng: random.Random) -> Quaternion:
    """A unit quaternion with rational components, never the pole 1 itself."""
    return Quaternion(*stereo_inv(tuple(rand_fraction(rng, 5, 4) for _ in range(3))))


def rotate3(q: Quaternion, v) -> tuple[Fraction, Fraction, Fraction]:
    """Rotate a 3-vector by conjugation with a unit quaternion, exactly."""
    image = q * Quaternion(0, *v) * q.conj()
    return image.components()[1:]


def rotate4(p: Quaternion, q: Quaternion, x) -> tuple[Fraction, ...]:
    """Rotate a 4-vector by two-sided unit multiplication, exactly."""
    return (p * Quaternion(*x) * q).components()


def rand_circle3(rng: random.Random) -> Circle3:
    q = rand_unit_quat(rng)
    radius = abs(rand_fraction(rng, 4, 3)) + 1
    center = tuple(rand_fraction(rng) for _ in range(3))
    return Circle3(center, rotate3(q, (radius, 0, 0)), rotate3(q, (0, radius, 0)))


def rand_circle_s3(rng: random.Random) -> CircleS3:
    while True:
        s = rand_fraction(rng, 5, 4)
        if s:
            break
    c = (1 - s * s) / (1 + s * s)
    r = 2 * s / (1 + s * s)
    p, q = rand_unit_quat(rng), rand_unit_quat(rng)
    return CircleS3(
        rotate4(p, q, (c, 0, 0, 0)),
        rotate4(p, q, (0, r, 0, 0)),
        rotate4(p, q, (0, 0, r, 0)),
    )


# endregion

# region the field Q(sqrt 3), for circles with irrational frames


class Q3:
    """Exact numbers a + b*sqrt(3) under +, -, *."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, other):
        other = _as_q3(other)
        return Q3(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Q3(-self.a, -self.b)

    def __sub__(self, other):
        return self.__add__(-_as_q3(other))

    def __mul__(self, other):
        other = _as_q3(other)
        return Q3(self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_q3(other)
        return self.a == other.a and self.b == other.b

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Q3({self.a}, {self.b})"


def _as_q3(value) -> Q3:
    return value if isinstance(value, Q3) else Q3(value)


def q3poly(*coeffs) -> dict[int, Q3]:
    """Polynomial in one variable over Q3, coefficients low degree first."""
    out = {}
    for power, c in enumerate(coeffs):
        c = _as_q3(c)
        if c:
            out[power] = c
    return out


def q3poly_add(p: dict[int, Q3], q: dict[int, Q3]) -> dict[int, Q3]:
    out = dict(p)
    for power, c in q.items():
        s = out.get(power, Q3()) + c
        if s:
            out[power] = s
        else:
            out.pop(power, None)
    return out


def q3poly_mul(p: dict[int, Q3], q: dict[int, Q3]) -> dict[int, Q3]:
    out: dict[int, Q3] = {}
    for i, a in p.items():
        for j, b in q.items():
            s = out.get(i + j, Q3()) + a * b
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return out


def q3poly_pow(p: dict[int, Q3], n: int) -> dict[int, Q3]:
    out = q3poly(1)
    for _ in range(n):
        out = q3poly_mul(out, p)
    return out


# endregion
