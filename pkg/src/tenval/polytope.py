"""Exact convex polytopes containing the origin in their interiors.

Every polytope carries a boundary triangulation: a list of ``(n-1)``-simplices
given by vertex indices.  Facets, supports, volumes and the valuations are
all derived from it.  Area normals are never normalized: a boundary simplex
``T`` stores ``N_T`` with ``|N_T| = H^{n-1}(T)``, which keeps every quantity
rational.

Hulls are computed exactly for ``n <= 3``.  In higher dimensions only the
closed-form families (boxes, crosspolytopes, simplices, double pyramids over
such bases) are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from math import factorial, isqrt
from typing import Sequence

from .linalg import (
    Matrix,
    RationalLike,
    Vector,
    as_rational,
    basis_vector,
    determinant,
    dot,
    rank,
    scale,
    sub,
    vector,
)


class GeometryError(ValueError):
    pass


class NotFullDimensional(GeometryError):
    pass


class OriginNotInterior(GeometryError):
    def __init__(self, msg: str = "origin not interior"):
        super().__init__(msg)


class UnsupportedDimension(GeometryError):
    pass


class InvalidDoublePyramid(GeometryError):
    pass


@dataclass(frozen=True)
class BoundarySimplex:
    points: tuple[Vector, ...]
    area_normal: Vector
    support: Fraction


@dataclass(frozen=True)
class Facet:
    normal: Vector
    support: Fraction
    vertex_ids: tuple[int, ...]


@dataclass(frozen=True)
class SurfaceAtom:
    """One facet's share of ``S_p(P, .)``.

    ``direction`` is the area normal ``N_F`` and ``weight`` the exact factor
    ``h_P(N_F)^(1-p)``, so that ``weight * N_F^(.)p`` is the facet's term of
    ``int u^(.)p dS_p``.  The actual atom mass is ``weight * |N_F|^p``.
    """

    direction: Vector
    weight: Fraction
    p: int

    def mass_squared(self) -> Fraction:
        return self.weight ** 2 * dot(self.direction, self.direction) ** self.p

    def mass(self) -> float:
        return float(self.weight) * float(dot(self.direction, self.direction)) ** (self.p / 2)


@dataclass(frozen=True)
class DiscreteSurfaceMeasure:
    p: int
    atoms: tuple[SurfaceAtom, ...]

    def total_mass(self) -> float:
        return sum(a.mass() for a in self.atoms)


def _cofactor_normal(points: Sequence[Vector]) -> Vector:
    """Generalized cross product of ``points[1:] - points[0]`` scaled to the simplex area."""
    n = len(points[0])
    diffs = [sub(q, points[0]) for q in points[1:]]
    scale_ = Fraction(1, factorial(n - 1))
    out = []
    for k in range(n):
        rows = [basis_vector(n, k)] + diffs
        out.append(determinant(rows) * scale_)
    return tuple(out)


def _affine_rank(points: Sequence[Vector]) -> int:
    if not points:
        return -1
    return rank([sub(q, points[0]) for q in points[1:]]) if len(points) > 1 else 0


def _cross2(o: Vector, a: Vector, b: Vector) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2(points: Sequence[tuple]) -> list[int]:
    """Strict convex hull of 2D points (indices, counter-clockwise)."""
    idx = sorted(range(len(points)), key=lambda i: points[i])
    if len(idx) < 3:
        return idx

    def half(order):
        chain: list[int] = []
        for i in order:
            while len(chain) >= 2 and _cross2(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def _hull_triangulation(pts: list[Vector]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Extreme point indices and an oriented boundary triangulation (indices into ``pts``)."""
    n = len(pts[0])
    if n == 1:
        lo = min(range(len(pts)), key=lambda i: pts[i])
        hi = max(range(len(pts)), key=lambda i: pts[i])
        return [lo, hi], [(lo,), (hi,)]
    if n == 2:
        ring = _hull2(pts)
        return ring, [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    if n == 3:
        faces: dict[frozenset, Vector] = {}
        for i, j, k in combinations(range(len(pts)), 3):
            nrm = _cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]))
            if not any(nrm):
                continue
            off = dot(nrm, pts[i])
            sides = [dot(nrm, q) - off for q in pts]
            if all(s <= 0 for s in sides):
                pass
            elif all(s >= 0 for s in sides):
                nrm = scale(Fraction(-1), nrm)
            else:
                continue
            on = frozenset(t for t, s in enumerate(sides) if s == 0)
            faces.setdefault(on, nrm)
        extreme: set[int] = set()
        tris: list[tuple[int, ...]] = []
        for on, nrm in sorted(faces.items(), key=lambda kv: sorted(kv[0])):
            ids = sorted(on)
            drop = max(range(3), key=lambda c: abs(nrm[c]))
            keep = [c for c in range(3) if c != drop]
            flat = [tuple(pts[t][c] for c in keep) for t in ids]
            ring = [ids[t] for t in _hull2(flat)]
            extreme.update(ring)
            for a in range(1, len(ring) - 1):
                tri = (ring[0], ring[a], ring[a + 1])
                tn = _cross3(sub(pts[tri[1]], pts[tri[0]]), sub(pts[tri[2]], pts[tri[0]]))
                if dot(tn, nrm) < 0:
                    tri = (tri[0], tri[2], tri[1])
                tris.append(tri)
        return sorted(extreme), tris
    raise UnsupportedDimension(f"general convex hulls are only available for dim <= 3, got {n}")


def _cross3(u: Vector, v: Vector) -> Vector:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


class Polytope:
    """A full-dimensional convex polytope with the origin in its interior.

    Build instances with :meth:`from_vertices` or :func:`make_family`.
    """

    __slots__ = ("dim", "vertices", "_simplices", "_tag", "__dict__")

    def __init__(self, dim: int, vertices: Sequence[Vector], simplices: Sequence[tuple[int, ...]],
                 tag: tuple | None = None):
        order = sorted(range(len(vertices)), key=lambda i: vertices[i])
        remap = {old: new for new, old in enumerate(order)}
        self.dim = dim
        self.vertices: tuple[Vector, ...] = tuple(vertices[i] for i in order)
        self._simplices = tuple(tuple(remap[i] for i in s) for s in simplices)
        self._tag = tag
        self._validate()

    @classmethod
    def from_vertices(cls, dim: int, points: Sequence[Sequence[RationalLike]]) -> "Polytope":
        pts = sorted({vector(p) for p in points})
        if any(len(p) != dim for p in pts):
            raise ValueError("point dimension mismatch")
        if len(pts) < dim + 1 or _affine_rank(pts) < dim:
            raise NotFullDimensional("points do not span a full-dimensional polytope")
        if dim > 3:
            raise UnsupportedDimension(f"general convex hulls are only available for dim <= 3, got {dim}")
        extreme, simplices = _hull_triangulation(pts)
        if dim == 1:
            if not pts[extreme[0]][0] < 0 < pts[extreme[1]][0]:
                raise OriginNotInterior()
        else:
            for s in simplices:
                spx = [pts[i] for i in s]
                if dot(_cofactor_normal(spx), spx[0]) <= 0:
                    raise OriginNotInterior()
        remap = {old: new for new, old in enumerate(extreme)}
        return cls(dim, [pts[i] for i in extreme], [tuple(remap[i] for i in s) for s in simplices])

    def _validate(self) -> None:
        for s in self._simplices:
            pts = [self.vertices[i] for i in s]
            if dot(_cofactor_normal(pts), pts[0]) == 0:
                raise OriginNotInterior()

    def _boundary_raw(self) -> list[BoundarySimplex]:
        out = []
        for s in self._simplices:
            pts = tuple(self.vertices[i] for i in s)
            nrm = _cofactor_normal(pts)
            # origin is interior, so the outward side is the one away from it
            if dot(nrm, pts[0]) < 0:
                nrm = scale(Fraction(-1), nrm)
            out.append(BoundarySimplex(pts, nrm, dot(nrm, pts[0])))
        return out

    @cached_property
    def boundary(self) -> tuple[BoundarySimplex, ...]:
        return tuple(self._boundary_raw())

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        groups: dict[Vector, list[int]] = {}
        for k, bs in enumerate(self.boundary):
            groups.setdefault(scale(1 / bs.support, bs.area_normal), []).append(k)
        out = []
        for key in sorted(groups):
            members = groups[key]
            nrm = tuple(sum((self.boundary[k].area_normal[c] for k in members), Fraction(0))
                        for c in range(self.dim))
            ids = sorted({i for k in members for i in self._simplices[k]})
            out.append(Facet(nrm, dot(nrm, self.vertices[ids[0]]), tuple(ids)))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polytope) and self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.dim, self.vertices))

    def __repr__(self) -> str:
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, [{vs}])"

    def support(self, x: Sequence[RationalLike]) -> Fraction:
        x = vector(x)
        if len(x) != self.dim:
            raise ValueError("dimension mismatch")
        return max(dot(x, v) for v in self.vertices)

    def contains(self, x: Sequence[RationalLike]) -> bool:
        x = vector(x)
        return all(dot(f.normal, x) <= f.support for f in self.facets)

    def volume(self) -> Fraction:
        return sum((bs.support for bs in self.boundary), Fraction(0)) / self.dim

    def linear_image(self, phi: Matrix) -> "Polytope":
        if phi.dim != self.dim:
            raise ValueError("dimension mismatch")
        if phi.det() == 0:
            raise ValueError("singular matrix")
        tag = None
        if self._tag is not None:
            kind, psi, dual = self._tag
            tag = (kind, phi @ psi, dual)
        return Polytope(self.dim, [phi @ v for v in self.vertices], self._simplices, tag)

    def scaled(self, lam: RationalLike) -> "Polytope":
        lam = as_rational(lam)
        if lam <= 0:
            raise ValueError("scale must be positive")
        return self.linear_image(Matrix.identity(self.dim) * lam)

    def bounding_box(self) -> tuple[Vector, Vector]:
        lo = tuple(min(v[c] for v in self.vertices) for c in range(self.dim))
        hi = tuple(max(v[c] for v in self.vertices) for c in range(self.dim))
        return lo, hi


def _registered(dim: int, vertices: Sequence[Vector], simplices, dual=None) -> Polytope:
    return Polytope(dim, list(vertices), simplices, ("registered", Matrix.identity(dim), dual))


def facets(P: Polytope) -> tuple[Facet, ...]:
    return P.facets


def boundary_triangulation(P: Polytope) -> tuple[BoundarySimplex, ...]:
    return P.boundary


def support(P: Polytope, x: Sequence[RationalLike]) -> Fraction:
    return P.support(x)


def volume(P: Polytope) -> Fraction:
    return P.volume()


def linear_image(phi: Matrix, P: Polytope) -> Polytope:
    return P.linear_image(phi)


def from_vertices(dim: int, points) -> Polytope:
    return Polytope.from_vertices(dim, points)


@lru_cache(maxsize=4096)
def polar(P: Polytope) -> Polytope:
    """``P* = {x : x.y <= 1 for y in P}``; vertices are ``N_F / h_F`` over the facets."""
    if P.dim <= 3:
        return Polytope.from_vertices(P.dim, [scale(1 / f.support, f.normal) for f in P.facets])
    if P._tag is not None and P._tag[2] is not None:
        _, psi, dual = P._tag
        return dual().linear_image(psi.inverse_transpose())
    raise UnsupportedDimension(f"polar of a general polytope needs dim <= 3, got {P.dim}")


def surface_area_measure(P: Polytope, p: int) -> DiscreteSurfaceMeasure:
    if p < 0:
        raise ValueError("p must be nonnegative")
    return DiscreteSurfaceMeasure(
        p, tuple(SurfaceAtom(f.normal, f.support ** (1 - p), p) for f in P.facets))


def exact_norm(v: Sequence[Fraction]) -> Fraction | None:
    """``|v|`` when it is rational, else None."""
    q = dot(v, v)
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# -- families ----------------------------------------------------------------

def _positive(name: str, x: RationalLike) -> Fraction:
    x = as_rational(x)
    if x <= 0:
        raise ValueError(f"parameter {name} must be positive, got {x}")
    return x


def _per_axis(name: str, x, n: int) -> list[Fraction]:
    if isinstance(x, (list, tuple)):
        if len(x) != n:
            raise ValueError(f"{name} must have {n} entries")
        return [_positive(name, t) for t in x]
    return [_positive(name, x)] * n


def box(a, b=None, n: int | None = None, registered: bool | None = None) -> Polytope:
    """``prod_i [-a_i, b_i]``."""
    n = n if n is not None else (len(a) if isinstance(a, (list, tuple)) else 2)
    a = _per_axis("a", a, n)
    b = _per_axis("b", a if b is None else b, n)
    corners = [tuple(-a[i] if s[i] == 0 else b[i] for i in range(n)) for s in product((0, 1), repeat=n)]
    if not _use_registered(n, registered):
        return Polytope.from_vertices(n, corners)
    index = {c: k for k, c in enumerate(corners)}
    simplices = []
    for axis in range(n):
        for end in (0, 1):
            others = [c for c in range(n) if c != axis]
            for perm in permutations(others):
                bits = [0] * n
                bits[axis] = end
                simplex = []
                cur = list(bits)
                simplex.append(tuple(cur))
                for c in perm:
                    cur[c] = 1
                    simplex.append(tuple(cur))
                simplices.append(tuple(
                    index[tuple(-a[i] if s[i] == 0 else b[i] for i in range(n))] for s in simplex))
    return _registered(n, corners, simplices,
                       dual=lambda: crosspolytope([1 / t for t in a], [1 / t for t in b], n=n, registered=True))


def crosspolytope(a, b=None, n: int | None = None, registered: bool | None = None) -> Polytope:
    """``conv{-a_i e_i, b_i e_i}``."""
    n = n if n is not None else (len(a) if isinstance(a, (list, tuple)) else 2)
    a = _per_axis("a", a, n)
    b = _per_axis("b", a if b is None else b, n)
    verts = []
    for i in range(n):
        verts.append(scale(-a[i], basis_vector(n, i)))
        verts.append(scale(b[i], basis_vector(n, i)))
    if not _use_registered(n, registered):
        return Polytope.from_vertices(n, verts)
    simplices = [tuple(2 * i + s[i] for i in range(n)) for s in product((0, 1), repeat=n)]
    return _registered(n, verts, simplices,
                       dual=lambda: box([1 / t for t in a], [1 / t for t in b], n=n, registered=True))


def simplex(n: int, t: RationalLike = 1, registered: bool | None = None) -> Polytope:
    """``t * conv{0, e_1, ..., e_n}`` translated so that the centroid is the origin."""
    t = _positive("t", t)
    raw = [tuple(Fraction(0) for _ in range(n))] + [basis_vector(n, i) for i in range(n)]
    centroid = tuple(sum((v[c] for v in raw), Fraction(0)) / (n + 1) for c in range(n))
    verts = [scale(t, sub(v, centroid)) for v in raw]
    if not _use_registered(n, registered):
        return Polytope.from_vertices(n, verts)
    return _registered(n, verts, list(combinations(range(n + 1), n)))


def _use_registered(n: int, registered: bool | None) -> bool:
    return n > 3 if registered is None else registered


def interval(a: RationalLike, b: RationalLike) -> Polytope:
    return Polytope.from_vertices(1, [(-_positive("a", a),), (_positive("b", b),)])


def _lift(v: Vector, h: Fraction) -> Vector:
    return tuple(v) + (h,)


def _tilt_vector(name: str, x, n: int) -> Vector:
    if x is None:
        return tuple(Fraction(0) for _ in range(n - 1))
    if not isinstance(x, (list, tuple)):
        x = [x]
    x = vector(x)
    if len(x) != n - 1:
        raise ValueError(f"{name} must have {n - 1} entries")
    return x


def double_pyramid(base: Polytope, c: RationalLike, d: RationalLike, x=None, y=None,
                   registered: bool | None = None) -> Polytope:
    """``[B, -c (x, 1), d (y, 1)]`` over a base ``B`` in ``e_n^perp``.

    Raises :class:`InvalidDoublePyramid` unless the hull meets ``e_n^perp`` exactly in ``B``.
    """
    c, d = _positive("c", c), _positive("d", d)
    n = base.dim + 1
    x, y = _tilt_vector("x", x, n), _tilt_vector("y", y, n)
    # the apex segment crosses e_n^perp at cd(y - x)/(c + d); the section is conv(B, that point)
    crossing = scale(c * d / (c + d), sub(y, x))
    if not base.contains(crossing):
        raise InvalidDoublePyramid(f"apex segment leaves the base: crosses e_n^perp at {crossing}")
    lower = scale(-c, _lift(x, Fraction(1)))
    upper = scale(d, _lift(y, Fraction(1)))
    verts = [_lift(v, Fraction(0)) for v in base.vertices] + [lower, upper]
    if not _use_registered(n, registered):
        return Polytope.from_vertices(n, verts)
    if any(dot(f.normal, crossing) == f.support for f in base.facets):
        raise UnsupportedDimension("degenerate double pyramid has no closed-form facet structure")
    nb = len(base.vertices)
    simplices = [s + (apex,) for s in base._simplices for apex in (nb, nb + 1)]
    return _registered(n, verts, simplices)


def straight_double_pyramid(a=1, b=1, c=1, d=1, n: int = 2, base: Polytope | None = None,
                            registered: bool | None = None) -> Polytope:
    """``[I, J]`` in the plane; in higher dimensions the base defaults to a crosspolytope."""
    if base is None:
        base = interval(a, b) if n == 2 else crosspolytope(a, b, n=n - 1, registered=_use_registered(n - 1, registered))
    return double_pyramid(base, c, d, registered=registered)


def straight_triangle(a=1, b=1, c=1, d=1) -> Polytope:
    """Triangle with horizontal side ``[(-a, -c), (b, -c)]`` and apex ``d e_2``."""
    pts = [(-_positive("a", a), -_positive("c", c)), (_positive("b", b), -as_rational(c)), (0, _positive("d", d))]
    return Polytope.from_vertices(2, pts)


FAMILIES = ("box", "crosspolytope", "straight_double_pyramid", "double_pyramid", "straight_triangle", "simplex")


def make_family(kind: str, **params) -> Polytope:
    """Named test polytopes; see :data:`FAMILIES`."""
    if kind == "box":
        return box(params.get("a", 1), params.get("b"), n=params.get("n"), registered=params.get("registered"))
    if kind == "crosspolytope":
        return crosspolytope(params.get("a", 1), params.get("b"), n=params.get("n"),
                             registered=params.get("registered"))
    if kind == "simplex":
        return simplex(params.get("n", 2), params.get("t", 1), registered=params.get("registered"))
    if kind == "straight_triangle":
        return straight_triangle(**{k: params[k] for k in "abcd" if k in params})
    if kind in ("straight_double_pyramid", "double_pyramid"):
        base = params.get("base")
        n = params.get("n")
        if base is None:
            if n is None:
                n = 2 if not isinstance(params.get("x"), (list, tuple)) else len(params["x"]) + 1
            a, b = params.get("a", 1), params.get("b", 1)
            base = interval(a, b) if n == 2 else crosspolytope(a, b, n=n - 1)
        if kind == "straight_double_pyramid":
            return double_pyramid(base, params.get("c", 1), params.get("d", 1), registered=params.get("registered"))
        return double_pyramid(base, params.get("c", 1), params.get("d", 1), params.get("x"), params.get("y"),
                              registered=params.get("registered"))
    raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}")


def pyramid_family(base: Polytope, c: RationalLike, d: RationalLike, r: RationalLike, x=None, y=None
                   ) -> tuple[Polytope, Polytope, Polytope, Polytope]:
    """``(P, Q, P u Q, P n Q)`` for double pyramids sharing the base ``B``.

    ``P = [B, -c(x,1), r(y,1)]``, ``Q = [B, -r(y,1), d(y,1)]``,
    ``U = [B, -c(x,1), d(y,1)]``, ``I = [B, -r(y,1), r(y,1)]``.
    """
    c, d, r = (_positive(k, v) for k, v in (("c", c), ("d", d), ("r", r)))
    if r > c or r > d:
        raise InvalidDoublePyramid("need r <= min(c, d)")
    n = base.dim + 1
    x, y = _tilt_vector("x", x, n), _tilt_vector("y", y, n)
    # the r-dependent pieces need the same tilt y so that locally the union stays convex
    P = double_pyramid(base, c, r, x, y)
    Q = double_pyramid(base, r, d, y, y)
    U = double_pyramid(base, c, d, x, y)
    I = double_pyramid(base, r, r, y, y)
    if not U.contains(scale(-r, _lift(y, Fraction(1)))):
        raise InvalidDoublePyramid("-r(y, 1) lies outside the lower pyramid of P u Q")
    return P, Q, U, I
