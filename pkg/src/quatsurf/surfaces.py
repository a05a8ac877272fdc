"""Surfaces woven from two rational families of circles, in exact arithmetic.

Three constructions share the toolkit here:

* translational surfaces ``alpha(u) + beta(v)`` of two circles in 3-space,
* products ``alpha(u) * beta(v)`` of two circles on the unit 3-sphere,
  pushed to 3-space by stereographic projection, and
* Darboux cyclides: stereographic images of the intersection of the unit
  3-sphere with another quadric, described implicitly by a quartic.

Circles carry a rational tan-half-angle parametrization

    p(t) = center + e1*(1 - t**2)/(1 + t**2) + e2*(2t)/(1 + t**2)

with an orthogonal pair e1, e2 of equal length, so every sampled point has
exact rational coordinates.  The projection pole is the quaternion 1, the
first coordinate axis; ``stereo`` maps (w, x, y, z) to (x, y, z)/(1 - w) and
``stereo_inv`` is its rational inverse.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateFamily,
    InvalidInput,
    PolePoint,
    TooFewPoints,
    UnsupportedFamily,
)
from .quat import Quaternion, rational_from_str, rational_to_str

Point3 = tuple[Fraction, Fraction, Fraction]
Point4 = tuple[Fraction, Fraction, Fraction, Fraction]


def _vec(values, size: int) -> tuple[Fraction, ...]:
    out = tuple(Fraction(c) for c in values)
    if len(out) != size:
        raise InvalidInput(f"expected a {size}-vector")
    return out


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(a, c: Fraction):
    return tuple(x * c for x in a)


def _weights(t: Fraction) -> tuple[Fraction, Fraction]:
    den = 1 + t * t
    return (1 - t * t) / den, 2 * t / den


# region circles


@dataclass(frozen=True)
class Circle3:
    """A circle in 3-space with a rational Weierstrass parametrization.

    The frame vectors must be orthogonal and of equal positive length; that
    length is the radius.  The parametrization covers the whole circle except
    the single point at t = infinity, reachable as ``point_at_infinity()``.
    """

    center: Point3
    e1: Point3
    e2: Point3

    def __post_init__(self):
        object.__setattr__(self, "center", _vec(self.center, 3))
        object.__setattr__(self, "e1", _vec(self.e1, 3))
        object.__setattr__(self, "e2", _vec(self.e2, 3))
        _check_frame(self.e1, self.e2)

    @property
    def radius_sq(self) -> Fraction:
        return _dot(self.e1, self.e1)

    def point(self, t) -> Point3:
        c, s = _weights(Fraction(t))
        return _add(self.center, _add(_scale(self.e1, c), _scale(self.e2, s)))

    def point_at_infinity(self) -> Point3:
        return _add(self.center, _scale(self.e1, Fraction(-1)))

    def to_json(self) -> dict:
        return {
            "center": [rational_to_str(c) for c in self.center],
            "e1": [rational_to_str(c) for c in self.e1],
            "e2": [rational_to_str(c) for c in self.e2],
        }

    @classmethod
    def from_json(cls, obj) -> "Circle3":
        _require_circle_doc(obj)
        return cls(
            tuple(rational_from_str(c) for c in obj["center"]),
            tuple(rational_from_str(c) for c in obj["e1"]),
            tuple(rational_from_str(c) for c in obj["e2"]),
        )


@dataclass(frozen=True)
class CircleS3:
    """A circle lying on the unit 3-sphere in 4-space.

    Beyond the orthogonal equal-length frame, the center must be orthogonal
    to both frame vectors and satisfy |center|**2 + radius**2 = 1, which is
    exactly the condition for every parametrized point to have norm 1.
    """

    center: Point4
    e1: Point4
    e2: Point4

    def __post_init__(self):
        object.__setattr__(self, "center", _vec(self.center, 4))
        object.__setattr__(self, "e1", _vec(self.e1, 4))
        object.__setattr__(self, "e2", _vec(self.e2, 4))
        _check_frame(self.e1, self.e2)
        if _dot(self.center, self.e1) or _dot(self.center, self.e2):
            raise InvalidInput("circle center must be orthogonal to the frame vectors")
        if _dot(self.center, self.center) + _dot(self.e1, self.e1) != 1:
            raise InvalidInput("circle does not lie on the unit sphere")

    @property
    def radius_sq(self) -> Fraction:
        return _dot(self.e1, self.e1)

    def point(self, t) -> Point4:
        c, s = _weights(Fraction(t))
        return _add(self.center, _add(_scale(self.e1, c), _scale(self.e2, s)))

    def point_at_infinity(self) -> Point4:
        return _add(self.center, _scale(self.e1, Fraction(-1)))

    def to_json(self) -> dict:
        return {
            "center": [rational_to_str(c) for c in self.center],
            "e1": [rational_to_str(c) for c in self.e1],
            "e2": [rational_to_str(c) for c in self.e2],
        }

    @classmethod
    def from_json(cls, obj) -> "CircleS3":
        _require_circle_doc(obj)
        return cls(
            tuple(rational_from_str(c) for c in obj["center"]),
            tuple(rational_from_str(c) for c in obj["e1"]),
            tuple(rational_from_str(c) for c in obj["e2"]),
        )


def _check_frame(e1, e2) -> None:
    if _dot(e1, e2):
        raise InvalidInput("frame vectors must be orthogonal")
    n1 = _dot(e1, e1)
    if n1 != _dot(e2, e2):
        raise InvalidInput("frame vectors must have equal length")
    if not n1:
        raise InvalidInput("frame vectors must be nonzero")


def _require_circle_doc(obj) -> None:
    if not isinstance(obj, dict) or not {"center", "e1", "e2"} <= obj.keys():
        raise InvalidInput("a circle needs 'center', 'e1' and 'e2' vectors")


# endregion

# region quadrics and cyclides

#: Matrix of the form x0**2 + x1**2 + x2**2 + x3**2 - h**2 cutting out the
#: unit sphere in homogeneous coordinates (x0, x1, x2, x3, h); x0 is the
#: projection-pole axis and h the homogenizer.
_S3_FORM: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, -1),
)


@dataclass(frozen=True)
class Quadric4:
    """A symmetric quadratic form on homogeneous 4-space coordinates.

    Rows and columns follow (x0, x1, x2, x3, h) with x0 the pole axis.  A
    multiple of the unit-sphere form is rejected: it would cut out the whole
    sphere rather than a surface.
    """

    q: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(_vec(row, 5) for row in self.q)
        if len(rows) != 5:
            raise InvalidInput("a quadric needs a 5x5 coefficient matrix")
        object.__setattr__(self, "q", rows)
        for i in range(5):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInput("the quadric matrix must be symmetric")
        if self._is_sphere_multiple():
            raise DegenerateFamily("quadric is a multiple of the unit-sphere form")

    def _is_sphere_multiple(self) -> bool:
        scale = self.q[0][0]
        return all(
            self.q[i][j] == scale * _S3_FORM[i][j] for i in range(5) for j in range(5)
        )

    def value(self, point4, h=1) -> Fraction:
        """Evaluate the form at an affine sphere point (h defaults to 1)."""
        vec = tuple(Fraction(c) for c in point4) + (Fraction(h),)
        return sum(
            (self.q[i][j] * vec[i] * vec[j] for i in range(5) for j in range(5)),
            Fraction(0),
        )

    def to_json(self) -> dict:
        return {"q": [[rational_to_str(c) for c in row] for row in self.q]}

    @classmethod
    def from_json(cls, obj) -> "Quadric4":
        if not isinstance(obj, dict) or "q" not in obj or not isinstance(obj["q"], list):
            raise InvalidInput("a quadric needs a 'q' matrix of rational strings")
        return cls(tuple(tuple(rational_from_str(c) for c in row) for row in obj["q"]))


# Quartic polynomials in (x, y, z, w) as exponent-tuple -> coefficient maps.
Quartic = dict[tuple[int, int, int, int], Fraction]

# Homogeneous lift of 3-space into sphere coordinates: substituting it into a
# quadric turns the quadric-sphere intersection into a quartic in (x, y, z, w).
# Components follow the (x0, x1, x2, x3, h) order of Quadric4.
_LIFT: tuple[dict, ...] = (
    {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): -1},
    {(1, 0, 0, 1): 2},
    {(0, 1, 0, 1): 2},
    {(0, 0, 1, 1): 2},
    {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1},
)


def _poly4_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            s = out.get(key, Fraction(0)) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def cyclide_implicit(quadric: Quadric4) -> Quartic:
    """The homogeneous quartic cutting out the projected quadric-sphere curve locus.

    Substitutes the lift (x**2+y**2+z**2-w**2, 2xw, 2yw, 2zw), homogenized by
    x**2+y**2+z**2+w**2, into the quadratic form.  In the affine chart w = 1
    the vanishing locus is exactly the stereographic image of the
    intersection of the quadric with the unit sphere.

    Raises:
        DegenerateFamily: if the quartic collapses to zero.
    """
    acc: Quartic = {}
    for i in range(5):
        for j in range(5):
            c = quadric.q[i][j]
            if not c:
                continue
            for key, value in _poly4_mul(_LIFT[i], _LIFT[j]).items():
                s = acc.get(key, Fraction(0)) + c * value
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
    if not acc:
        raise DegenerateFamily("the quadric pulls back to the zero quartic")
    return acc


def quartic_value(quartic: Quartic, point3, w=1) -> Fraction:
    """Evaluate a quartic at an affine point (w defaults to 1)."""
    x, y, z = (Fraction(c) for c in point3)
    w = Fraction(w)
    total = Fraction(0)
    for (ex, ey, ez, ew), c in quartic.items():
        total += c * x**ex * y**ey * z**ez * w**ew
    return total


def quartic_to_json(quartic: Quartic) -> list[dict]:
    return [
        {"x": ex, "y": ey, "z": ez, "w": ew, "c": rational_to_str(c)}
        for (ex, ey, ez, ew), c in sorted(quartic.items())
    ]


# endregion

# region surface families


@dataclass(frozen=True)
class SurfaceSpec:
    """A surface description: family tag plus the data that family needs.

    Families: ``"e"`` sums two circles in 3-space, ``"c"`` multiplies two
    circles on the unit sphere and projects, ``"d"`` is implicit, given by a
    quadric.
    """

    family: str
    alpha: Circle3 | CircleS3 | None = None
    beta: Circle3 | CircleS3 | None = None
    quadric: Quadric4 | None = None

    def __post_init__(self):
        if self.family == "e":
            if not isinstance(self.alpha, Circle3) or not isinstance(self.beta, Circle3):
                raise InvalidInput("family e needs two circles in 3-space")
        elif self.family == "c":
            if not isinstance(self.alpha, CircleS3) or not isinstance(self.beta, CircleS3):
                raise InvalidInput("family c needs two circles on the unit sphere")
        elif self.family == "d":
            if not isinstance(self.quadric, Quadric4):
                raise InvalidInput("family d needs a quadric")
        else:
            raise InvalidInput(f"unknown family {self.family!r}")

    @classmethod
    def family_e(cls, alpha: Circle3, beta: Circle3) -> "SurfaceSpec":
        return cls("e", alpha=alpha, beta=beta)

    @classmethod
    def family_c(cls, alpha: CircleS3, beta: CircleS3) -> "SurfaceSpec":
        return cls("c", alpha=alpha, beta=beta)

    @classmethod
    def family_d(cls, quadric: Quadric4) -> "SurfaceSpec":
        return cls("d", quadric=quadric)

    def to_json(self) -> dict:
        if self.family == "d":
            return {"family": "d", "quadric": self.quadric.to_json()}
        return {
            "family": self.family,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "SurfaceSpec":
        if not isinstance(obj, dict) or "family" not in obj:
            raise InvalidInput("a surface needs a 'family' tag")
        family = obj["family"]
        if family == "e":
            return cls.family_e(Circle3.from_json(obj.get("alpha")), Circle3.from_json(obj.get("beta")))
        if family == "c":
            return cls.family_c(CircleS3.from_json(obj.get("alpha")), CircleS3.from_json(obj.get("beta")))
        if family == "d":
            return cls.family_d(Quadric4.from_json(obj.get("quadric")))
        raise InvalidInput(f"unknown family {family!r}")


def eval_e(alpha: Circle3, beta: Circle3, u, v) -> Point3:
    """Translational surface point ``alpha(u) + beta(v)``."""
    return _add(alpha.point(u), beta.point(v))


def eval_c(alpha: CircleS3, beta: CircleS3, u, v) -> Point4:
    """Sphere-product surface point ``alpha(u) * beta(v)`` (quaternion product).

    Both factors have norm 1 exactly, hence so does the product.
    """
    a = Quaternion(*alpha.point(u))
    b = Quaternion(*beta.point(v))
    return (a * b).components()


def stereo(x) -> Point3:
    """Stereographic projection (w, x, y, z) -> (x, y, z)/(1 - w) from the pole 1.

    Raises:
        PolePoint: at the pole, where the first coordinate equals 1.
    """
    w, p1, p2, p3 = (Fraction(c) for c in x)
    if w == 1:
        raise PolePoint("stereographic projection is undefined at the pole")
    d = 1 - w
    return (p1 / d, p2 / d, p3 / d)


def stereo_inv(p) -> Point4:
    """Inverse stereographic projection onto the unit sphere (never the pole)."""
    x, y, z = (Fraction(c) for c in p)
    n = x * x + y * y + z * z
    d = n + 1
    return ((n - 1) / d, 2 * x / d, 2 * y / d, 2 * z / d)


def grid_params(n: int) -> list[Fraction]:
    """n tan-half-angle samples in steps of 1, centered on 0."""
    if n < 1:
        raise InvalidInput("need at least one sample")
    return [Fraction(2 * k - (n - 1), 2) for k in range(n)]


def coordinate_curve(spec: SurfaceSpec, which: str, fixed, samples, *, mask_poles: bool = False):
    """Sample the curve with one parameter held constant.

    ``which`` names the frozen parameter: ``"u"`` freezes u at ``fixed`` and
    lets v run over ``samples``, and symmetrically for ``"v"``.  For family c
    the points are projected to 3-space; a sample hitting the projection pole
    raises :class:`PolePoint` unless ``mask_poles`` is set, in which case it
    is dropped.  Implicit surfaces carry no parametrization, so family d is
    rejected.

    Returns:
        A list of points in 3-space.
    """
    if which not in ("u", "v"):
        raise InvalidInput("'which' must be 'u' or 'v'")
    if spec.family == "d":
        raise UnsupportedFamily("implicit surfaces have no parametric coordinate curves")
    fixed = Fraction(fixed)
    out = []
    for t in samples:
        u, v = (fixed, Fraction(t)) if which == "u" else (Fraction(t), fixed)
        if spec.family == "e":
            out.append(eval_e(spec.alpha, spec.beta, u, v))
        else:
            try:
                out.append(stereo(eval_c(spec.alpha, spec.beta, u, v)))
            except PolePoint:
                if not mask_poles:
                    raise
    return out


def sample_grid(spec: SurfaceSpec, n: int):
    """Evaluate the surface on an n-by-n rational parameter grid.

    Returns a row-major nested list indexed by (u-sample, v-sample); for
    family c a cell is ``None`` when the product hits the projection pole.
    Family d has no parametrization and is rejected.
    """
    if spec.family == "d":
        raise UnsupportedFamily(
            "implicit surfaces cannot be sampled on a parameter grid; "
            "export the quartic instead"
        )
    if n < 2:
        raise InvalidInput("need at least a 2x2 grid")
    ts = grid_params(n)
    grid = []
    for u in ts:
        row = []
        for v in ts:
            if spec.family == "e":
                row.append(eval_e(spec.alpha, spec.beta, u, v))
            else:
                try:
                    row.append(stereo(eval_c(spec.alpha, spec.beta, u, v)))
                except PolePoint:
                    row.append(None)
        grid.append(row)
    return grid


# endregion

# region circle recognition


def _det(rows) -> Fraction:
    """Exact determinant by fraction-free elimination with row pivoting."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_circle_or_line(
    points, *, subset_cap: int = 50, sample_subsets: int = 200, seed: int = 0
) -> bool:
    """Whether all points lie on one circle or one straight line.

    Checks that every 4-subset is coplanar and every 5-subset lies on a
    common sphere or plane, via exact determinants of the affine and lifted
    coordinate matrices.  Collinear point sets pass both tests.  Up to
    ``subset_cap`` points all subsets are enumerated; beyond that,
    ``sample_subsets`` subsets of each size are drawn from a seeded generator
    so results stay reproducible.

    Raises:
        TooFewPoints: with fewer than five pairwise distinct points.
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if len(pts) < 5 or len(set(pts)) != len(pts):
        raise TooFewPoints("need at least five pairwise distinct points")

    def subsets(size: int):
        if len(pts) <= subset_cap:
            yield from itertools.combinations(range(len(pts)), size)
        else:
            rng = random.Random(seed)
            for _ in range(sample_subsets):
                yield tuple(sorted(rng.sample(range(len(pts)), size)))

    one = Fraction(1)
    for quad in subsets(4):
        rows = [[*pts[i], one] for i in quad]
        if _det(rows):
            return False
    for quint in subsets(5):
        rows = [[_dot(pts[i], pts[i]), *pts[i], one] for i in quint]
        if _det(rows):
            return False
    return True


# endregion

# region exports


def render_decimal(value: Fraction, digits: int = 12) -> str:
    """Fixed-point decimal rendering, round half to even, exact in the integers."""
    scale = 10**digits
    scaled = round(value * scale)
    sign = "-" if scaled < 0 else ""
    ip, fp = divmod(abs(scaled), scale)
    if digits == 0:
        return f"{sign}{ip}"
    return f"{sign}{ip}.{str(fp).zfill(digits)}"


def export_csv(grid, digits: int = 12) -> str:
    """One decimal point per row as ``x,y,z``; masked cells are omitted."""
    lines = []
    for row in grid:
        for cell in row:
            if cell is None:
                continue
            lines.append(",".join(render_decimal(c, digits) for c in cell))
    return "\n".join(lines) + "\n"


def export_obj(grid, digits: int = 12) -> str:
    """Wavefront OBJ mesh: grid vertices plus quad faces between valid neighbors."""
    lines = []
    index: dict[tuple[int, int], int] = {}
    count = 0
    for i, row in enumerate(grid):
        for j, cell in enumerate(row):
            if cell is None:
                continue
            count += 1
            index[(i, j)] = count
            lines.append("v " + " ".join(render_decimal(c, digits) for c in cell))
    for i in range(len(grid) - 1):
        for j in range(len(grid[i]) - 1):
            corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            if all(c in index for c in corners):
                lines.append("f " + " ".join(str(index[c]) for c in corners))
    return "\n".join(lines) + "\n"


# endregion
