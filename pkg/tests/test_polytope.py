import random
from functools import lru_cache
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from tenval.linalg import Matrix, dot
from tenval.polytope import (
    InvalidDoublePyramid,
    NotFullDimensional,
    OriginNotInterior,
    Polytope,
    UnsupportedDimension,
    box,
    crosspolytope,
    double_pyramid,
    exact_norm,
    interval,
    make_family,
    polar,
    pyramid_family,
    simplex,
    straight_double_pyramid,
    surface_area_measure,
)
from tenval.verify import (
    polar_by_vertex_enumeration,
    random_crosspolytope,
    random_double_pyramid,
    random_pyramid_family,
    random_shear_product,
)

from conftest import positive_rationals

F = Fraction


@lru_cache(maxsize=1)
def corpus():
    rng = random.Random(7)
    out = [box(1, n=2), box(1, n=3), crosspolytope(1, n=2), crosspolytope(1, n=3), simplex(2), simplex(3, 2),
           make_family("straight_triangle", a=1, b=2, c=1, d=3)]
    out += [random_double_pyramid(rng, n) for n in (2, 3) for _ in range(4)]
    out += [random_crosspolytope(rng, 3) for _ in range(2)]
    return tuple(out + [polar(P) for P in out])


# -- construction ----------------------------------------------------------

def test_from_vertices_examples():
    cross = Polytope.from_vertices(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert len(cross.vertices) == 4
    assert Polytope.from_vertices(2, [(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)]) == cross
    with pytest.raises(OriginNotInterior):
        Polytope.from_vertices(2, [(1, 0), (2, 0), (1, 1)])


def test_from_vertices_errors():
    with pytest.raises(NotFullDimensional):
        Polytope.from_vertices(2, [(1, 0), (-1, 0), (2, 0)])
    with pytest.raises(OriginNotInterior):
        # origin on an edge
        Polytope.from_vertices(2, [(-1, 0), (1, 0), (0, 1)])
    with pytest.raises(UnsupportedDimension):
        Polytope.from_vertices(4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)])


def test_redundant_points_removed_in_3d():
    pts = [(s * 1, t * 1, u * 1) for s in (-1, 1) for t in (-1, 1) for u in (-1, 1)]
    pts += [(0, 0, 0), (1, 0, 0), (F(1, 2), F(1, 2), 1)]
    assert Polytope.from_vertices(3, pts) == box(1, n=3)


def test_family_examples():
    assert straight_double_pyramid(1, 1, 1, 1, n=2) == crosspolytope(1, n=2)
    assert box(1, n=2).vertices == ((-1, -1), (-1, 1), (1, -1), (1, 1))
    dp = make_family("double_pyramid", a=1, b=1, c=F(1, 4), d=F(1, 4), x=[1], y=[1])
    assert set(dp.vertices) == {(-1, 0), (1, 0), (F(-1, 4), F(-1, 4)), (F(1, 4), F(1, 4))}


def _section_is_base(base, c, d, x, y):
    """Independent check: clip every hull edge by x_n = 0 and compare with the base."""
    n = base.dim + 1
    pts = [tuple(v) + (F(0),) for v in base.vertices]
    pts += [tuple(-c * t for t in x) + (-c,), tuple(d * t for t in y) + (d,)]
    section = []
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if p[-1] == 0:
                section.append(p[:-1])
            if (p[-1] < 0 < q[-1]) or (q[-1] < 0 < p[-1]):
                t = p[-1] / (p[-1] - q[-1])
                section.append(tuple(a + t * (b - a) for a, b in zip(p[:-1], q[:-1])))
    return all(base.contains(s) for s in section) and n == len(pts[0])


@pytest.mark.parametrize("x,y", [([1], [1]), ([1], [-1]), ([4], [-4]), ([-3], [2]), ([0], [0])])
def test_double_pyramid_validity_against_section(x, y):
    base = interval(1, 1)
    c = d = F(1, 4)
    valid = _section_is_base(base, c, d, x, y)
    if valid:
        double_pyramid(base, c, d, x, y)
    else:
        with pytest.raises(InvalidDoublePyramid):
            double_pyramid(base, c, d, x, y)


def test_nonpositive_parameter():
    with pytest.raises(ValueError):
        make_family("box", a=0)
    with pytest.raises(ValueError):
        straight_double_pyramid(1, 1, -1, 1)


# -- facets and triangulations ---------------------------------------------

def test_square_facets():
    fs = box(1, n=2).facets
    assert len(fs) == 4
    assert {f.normal for f in fs} == {(2, 0), (-2, 0), (0, 2), (0, -2)}
    assert all(f.support == 2 for f in fs)


def test_crosspolytope_facets():
    fs = crosspolytope(1, n=2).facets
    assert {f.normal for f in fs} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert all(f.support == 1 for f in fs)
    # |N_F| is the edge length sqrt(2)
    assert all(dot(f.normal, f.normal) == 2 for f in fs)


def test_facet_incidence():
    for P in corpus():
        for f in P.facets:
            for i, v in enumerate(P.vertices):
                if i in f.vertex_ids:
                    assert dot(f.normal, v) == f.support
                else:
                    assert dot(f.normal, v) < f.support


def test_minkowski_relation_on_corpus():
    for P in corpus():
        assert all(sum((f.normal[c] for f in P.facets), F(0)) == 0 for c in range(P.dim))
        assert all(sum((t.area_normal[c] for t in P.boundary), F(0)) == 0 for c in range(P.dim))
        assert all(f.support > 0 for f in P.facets)


def test_triangulation_examples():
    sq = box(1, n=2)
    assert len(sq.boundary) == len(sq.facets) == 4
    cube = box(1, n=3)
    assert len(cube.boundary) == 12
    assert sum(exact_norm(t.area_normal) for t in cube.boundary) == 24
    tet = simplex(3)
    assert len(tet.boundary) == 4
    assert {t.area_normal for t in tet.boundary} == {f.normal for f in tet.facets}


def test_triangulation_refines_facets():
    for P in corpus():
        for f in P.facets:
            key = tuple(c / f.support for c in f.normal)
            parts = [t for t in P.boundary if tuple(c / t.support for c in t.area_normal) == key]
            assert tuple(sum((t.area_normal[c] for t in parts), F(0)) for c in range(P.dim)) == f.normal


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("family", ["box", "crosspolytope", "simplex"])
def test_registered_structures_agree_with_hull(n, family):
    kw = {"n": n, "a": [F(1, 2), 2, 3][:n], "b": [1, F(3, 2), F(1, 3)][:n]} if family != "simplex" else {"n": n}
    hull = make_family(family, **kw)
    closed = make_family(family, registered=True, **kw)
    assert hull == closed
    assert hull.facets == closed.facets
    assert hull.volume() == closed.volume()


def test_registered_double_pyramid_agrees_with_hull():
    base = crosspolytope([1, 2], [F(1, 2), 1], n=2)
    hull = double_pyramid(base, 1, 2, [F(1, 4), 0], [0, F(-1, 4)])
    closed = double_pyramid(base, 1, 2, [F(1, 4), 0], [0, F(-1, 4)], registered=True)
    assert hull == closed and hull.facets == closed.facets


# -- support, volume, images -----------------------------------------------

def test_support_examples():
    assert box(1, n=2).support((1, 0)) == 1
    assert box(1, n=2).support((1, 1)) == 2
    assert crosspolytope(1, n=2).support((1, 1)) == 1


@given(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=3, max_size=3), positive_rationals)
def test_support_positively_homogeneous(x, lam):
    P = next(Q for Q in corpus() if Q.dim == 3 and len(Q.vertices) == 8)
    assert P.support([lam * t for t in x]) == lam * P.support(x)


def test_support_of_linear_image():
    rng = random.Random(3)
    P = random_double_pyramid(rng, 3)
    phi = random_shear_product(rng, 3)
    x = (F(1, 2), -2, 3)
    assert P.linear_image(phi).support(x) == P.support(phi.T @ x)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_crosspolytope_volume(n):
    assert crosspolytope(1, n=n).volume() == F(2 ** n, factorial(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simplex_volume(n):
    assert simplex(n).volume() == F(1, factorial(n))
    assert simplex(n, 3).volume() == F(3 ** n, factorial(n))


def test_volume_examples_and_additivity():
    assert box(1, n=2).volume() == 4
    rng = random.Random(11)
    for n in (2, 3):
        for _ in range(10):
            P, Q, U, I = random_pyramid_family(rng, n)
            assert P.volume() + Q.volume() == U.volume() + I.volume()


def test_linear_image_examples():
    sq = box(1, n=2)
    assert sq.linear_image(Matrix.identity(2)) == sq
    assert sq.linear_image(Matrix.diag(2, F(1, 2))) == box([2, F(1, 2)], n=2)
    IJ = straight_double_pyramid(1, 2, 3, 4)
    assert set(IJ.linear_image(Matrix.rho()).vertices) == {Matrix.rho() @ v for v in IJ.vertices}
    with pytest.raises(ValueError):
        sq.linear_image(Matrix([[1, 1], [1, 1]]))


# -- polarity --------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cube_polar_is_crosspolytope(n):
    assert polar(box(1, n=n)) == crosspolytope(1, n=n)
    assert polar(crosspolytope(1, n=n)) == box(1, n=n)


def test_polar_of_straight_double_pyramid():
    a, b, c, d = F(1, 2), 3, F(5, 4), 2
    assert polar(straight_double_pyramid(a, b, c, d)) == box([1 / a, 1 / c], [F(1, b), F(1, d)], n=2)


def test_polar_of_sheared_square():
    U = Matrix.upper_shear(1)
    sq = box(1, n=2)
    lhs = polar(sq.linear_image(U))
    assert lhs == polar_by_vertex_enumeration(sq.linear_image(U))
    assert lhs == polar(sq).linear_image(U.inverse_transpose())


def test_polar_laws_on_corpus():
    rng = random.Random(5)
    for P in corpus():
        assert polar(polar(P)) == P
        assert polar(P) == polar_by_vertex_enumeration(P)
        phi = random_shear_product(rng, P.dim)
        assert polar(P.linear_image(phi)) == polar(P).linear_image(phi.inverse_transpose())
        lam = F(rng.randint(1, 7), rng.randint(1, 7))
        assert polar(P.scaled(lam)) == polar(P).scaled(1 / lam)


def test_polar_in_high_dimension_needs_registered_pair():
    phi = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    P = box([1, 2, 3, 4], n=4).linear_image(phi)
    assert polar(polar(P)) == P
    dp = double_pyramid(crosspolytope(1, n=3, registered=True), 1, 2, registered=True)
    with pytest.raises(UnsupportedDimension):
        polar(dp)


# -- pyramid families ------------------------------------------------------

def test_pyramid_family_examples():
    P, Q, U, I = pyramid_family(interval(1, 1), F(1, 2), F(1, 2), F(1, 4))
    assert U == straight_double_pyramid(1, 1, F(1, 2), F(1, 2))
    assert I == straight_double_pyramid(1, 1, F(1, 4), F(1, 4))
    pyramid_family(interval(1, 1), F(1, 4), F(1, 4), F(1, 8), [1], [-1])
    with pytest.raises(InvalidDoublePyramid):
        pyramid_family(interval(1, 1), F(1, 2), F(1, 4), F(1, 2))


def test_pyramid_family_union_intersection_by_sampling():
    """U contains P and Q, and a lattice of points of U lies in P or Q; I = P n Q on that lattice."""
    P, Q, U, I = pyramid_family(interval(1, F(3, 2)), F(1, 4), F(1, 2), F(1, 8), [1], [F(-1, 2)])
    grid = [(F(i, 16), F(j, 32)) for i in range(-20, 25) for j in range(-20, 20)]
    for pt in grid:
        assert U.contains(pt) == (P.contains(pt) or Q.contains(pt))
        assert I.contains(pt) == (P.contains(pt) and Q.contains(pt))


# -- surface area measures -------------------------------------------------

def test_surface_measure_examples():
    sq = box(1, n=2)
    m2 = surface_area_measure(sq, 2)
    assert {a.direction for a in m2.atoms} == {(2, 0), (-2, 0), (0, 2), (0, -2)}
    assert all(a.mass_squared() == 4 for a in m2.atoms)
    m1 = surface_area_measure(sq, 1)
    assert sum(exact_norm(a.direction) * a.weight for a in m1.atoms) == 8
    assert m1.total_mass() == pytest.approx(8)
    for P in corpus():
        atoms = surface_area_measure(P, 1).atoms
        assert all(sum((a.weight * a.direction[c] for a in atoms), F(0)) == 0 for c in range(P.dim))
        assert all(a.weight > 0 for a in surface_area_measure(P, 3).atoms)
