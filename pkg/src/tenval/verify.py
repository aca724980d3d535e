"""Executable checks for the laws satisfied by the tensor valuations.

Every comparison of exact quantities is an equality of rationals.  The only
statistical check is the Monte Carlo moment oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .linalg import Matrix, as_rational, dot, rank, rref
from .polytope import (
    InvalidDoublePyramid,
    Polytope,
    crosspolytope,
    double_pyramid,
    interval,
    polar,
    pyramid_family,
)
from .symtensor import SymTensor, exponents, gl_action
from .valuations import ValuationDescriptor, evaluate


class InsufficientSamples(ValueError):
    pass


class RankDeficient(ValueError):
    pass


@dataclass
class CheckReport:
    check: str
    cases: int = 0
    failures: list = field(default_factory=list)
    exact: bool = True

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **witness) -> None:
        self.failures.append({k: _jsonable(v) for k, v in witness.items()})

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.exact = self.exact and other.exact
        return self

    def to_json(self) -> dict:
        failures = sorted(self.failures, key=_witness_size)
        return {"check": self.check, "cases": self.cases, "failures": failures[:5], "exact": self.exact}


def _witness_size(f: dict) -> tuple:
    verts = f.get("polytope", [])
    dens = [int(x.split("/")[1]) for v in verts for x in v if "/" in x]
    return (len(verts), max(dens, default=1))


def _jsonable(v):
    if isinstance(v, Polytope):
        return [[str(x) for x in p] for p in v.vertices]
    if isinstance(v, Matrix):
        return [[str(x) for x in r] for r in v.rows]
    if isinstance(v, SymTensor):
        return {str(list(b)): str(c) for b, c in v.items()}
    if isinstance(v, ValuationDescriptor):
        return v.label()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


# -- random exact inputs -------------------------------------------------------

GRID = [Fraction(k, 8) for k in range(2, 33)]  # 1/4, 3/8, ..., 4
TILTS = [Fraction(k, 4) for k in range(-4, 5)]


def random_positive(rng: random.Random) -> Fraction:
    return rng.choice(GRID)


def random_base(rng: random.Random, n: int) -> Polytope:
    """A random base polytope in ``e_n^perp`` (an interval or a planar crosspolytope)."""
    if n == 2:
        return interval(random_positive(rng), random_positive(rng))
    return crosspolytope([random_positive(rng) for _ in range(n - 1)],
                         [random_positive(rng) for _ in range(n - 1)], n=n - 1)


def random_double_pyramid(rng: random.Random, n: int, straight: bool = False) -> Polytope:
    while True:
        base = random_base(rng, n)
        c, d = random_positive(rng), random_positive(rng)
        if straight:
            return double_pyramid(base, c, d)
        x = [rng.choice(TILTS) for _ in range(n - 1)]
        y = [rng.choice(TILTS) for _ in range(n - 1)]
        try:
            return double_pyramid(base, c, d, x, y)
        except InvalidDoublePyramid:
            continue


def random_crosspolytope(rng: random.Random, n: int) -> Polytope:
    return crosspolytope([random_positive(rng) for _ in range(n)], [random_positive(rng) for _ in range(n)], n=n)


def random_pyramid_family(rng: random.Random, n: int, straight: bool = False):
    while True:
        base = random_base(rng, n)
        c, d = random_positive(rng), random_positive(rng)
        r = min(c, d) * rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
        x = None if straight else [rng.choice(TILTS) for _ in range(n - 1)]
        y = None if straight else [rng.choice(TILTS) for _ in range(n - 1)]
        try:
            return pyramid_family(base, c, d, r, x, y)
        except InvalidDoublePyramid:
            continue


def random_shear_product(rng: random.Random, n: int, factors: int = 3, flip: bool | None = None) -> Matrix:
    """Product of elementary rational shears; with ``flip`` a reflection makes det = -1."""
    phi = Matrix.identity(n)
    for _ in range(factors):
        i, j = rng.sample(range(n), 2)
        t = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2, 3]))
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[i][j] = t
        phi = Matrix(rows) @ phi
    if flip is None:
        flip = rng.random() < 0.5
    if flip:
        k = rng.randrange(n)
        phi = Matrix.diag(*[-1 if c == k else 1 for c in range(n)]) @ phi
    return phi


# -- laws ------------------------------------------------------------------------

def expected_law(desc: ValuationDescriptor) -> tuple[str, int] | None:
    """``(variance, e)`` with ``mu(phi P) = det(phi)^e psi . mu(P)`` for ``det phi = +-1``.

    ``psi`` is ``phi`` for variance "co" and ``phi^{-t}`` for "contra".
    None for the members of the boundary family that have no such law.
    """
    if desc.kind in ("euler", "vol", "moment") or (desc.kind == "mrs" and desc.s == 0):
        law = ["co", 0]
    elif desc.kind == "lp_normal" or (desc.kind == "mrs" and desc.r == 0):
        law = ["contra", 0]
    elif desc.kind == "mrs_rho":
        law = ["co", desc.s]
    else:
        return None
    if desc.polar_input:
        law[0] = "contra" if law[0] == "co" else "co"
    if desc.rho_output:
        # rho phi = det(phi) phi^{-t} rho in the plane
        law = ["contra" if law[0] == "co" else "co", law[1] + desc.p]
    return law[0], law[1] % 2


def parse_law(law) -> tuple[str, int]:
    if isinstance(law, tuple):
        return law
    if law == "covariant":
        return "co", 0
    if law == "contravariant":
        return "contra", 0
    if isinstance(law, str) and law.startswith("det_power"):
        return "co", int(law.split("(")[1].rstrip(")")) if "(" in law else int(law.split(":")[1])
    raise ValueError(f"unknown law {law!r}")


def transform(phi: Matrix, K: SymTensor, law) -> SymTensor:
    variance, e = parse_law(law)
    psi = phi if variance == "co" else phi.inverse_transpose()
    return gl_action(psi, K) * phi.det() ** e


def check_additivity(desc, families: Iterable[tuple]) -> CheckReport:
    """``mu(U) + mu(I) == mu(P) + mu(Q)`` on every ``(P, Q, U, I)``.

    ``desc`` is a :class:`ValuationDescriptor` or any callable on polytopes.
    """
    if isinstance(desc, ValuationDescriptor):
        rep = CheckReport(f"additivity[{desc.label()}]")
        mu = lambda P: evaluate(desc, P)  # noqa: E731
    else:
        rep = CheckReport(f"additivity[{getattr(desc, '__name__', 'callable')}]")
        mu = desc
    for P, Q, U, I in families:
        rep.cases += 1
        if mu(U) + mu(I) != mu(P) + mu(Q):
            rep.fail(polytope=U, P=P, Q=Q, I=I)
    return rep


def check_covariance(desc: ValuationDescriptor, P: Polytope, phi: Matrix, law) -> CheckReport:
    if phi.dim != P.dim:
        raise ValueError("dimension mismatch")
    variance, e = parse_law(law)
    rep = CheckReport(f"covariance[{desc.label()}, {variance}, det^{e}]", cases=1)
    lhs = evaluate(desc, P.linear_image(phi))
    rhs = transform(phi, evaluate(desc, P), (variance, e))
    if lhs != rhs:
        rep.fail(polytope=P, matrix=phi, lhs=lhs, rhs=rhs)
    return rep


def check_homogeneity(desc: ValuationDescriptor, P: Polytope, lam, expected_degree: int | None = None
                      ) -> CheckReport:
    lam = as_rational(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    q = desc.degree(P.dim) if expected_degree is None else expected_degree
    rep = CheckReport(f"homogeneity[{desc.label()}, degree {q}]", cases=1)
    if evaluate(desc, P.scaled(lam)) != evaluate(desc, P) * lam ** q:
        rep.fail(polytope=P, lam=lam, degree=q)
    return rep


def even_odd_split(mu: Callable[[Polytope], SymTensor], theta: Matrix):
    """``mu^eps(P) = (mu(P) +- theta . mu(theta^{-1} P)) / 2`` for a ``theta`` with det -1."""
    if theta.det() != -1:
        raise ValueError("theta must have determinant -1")
    theta_inv = theta.inverse()

    def conj(P: Polytope) -> SymTensor:
        return gl_action(theta, mu(P.linear_image(theta_inv)))

    def mu0(P: Polytope) -> SymTensor:
        return (mu(P) + conj(P)) / 2

    def mu1(P: Polytope) -> SymTensor:
        return (mu(P) - conj(P)) / 2

    return mu0, mu1


# -- basis structure -------------------------------------------------------------

def basis(n: int, p: int) -> list[ValuationDescriptor]:
    """Basis of the measurable SL(n) covariant valuations of rank ``p``."""
    if n < 2 or p < 0:
        raise ValueError("need n >= 2 and p >= 0")
    D = ValuationDescriptor
    if p == 0:
        return [D("euler"), D("vol"), D("vol", polar_input=True)]
    if n == 2:
        out = [D("mrs_rho", r=i, s=p - i) for i in range(p + 1) if i != p - 1]
        return out + [D.moment(p, polar_input=True, rho_output=True)]
    if p == 1:
        return [D.moment(1)]
    return [D.moment(p), D.lp_normal(p, polar_input=True)]


def _rows(descs: Sequence[ValuationDescriptor], polytopes: Sequence[Polytope]) -> list[list[Fraction]]:
    return [[x for P in polytopes for x in evaluate(d, P).flatten()] for d in descs]


def expected_rank(n: int, p: int) -> int:
    if p == 0:
        return 3
    if n == 2:
        return p + 1
    return 1 if p == 1 else 2


def basis_rank(n: int, p: int, polytopes: Sequence[Polytope]) -> int:
    descs = basis(n, p)
    if len(polytopes) < len(descs) + 3:
        raise InsufficientSamples(f"need at least {len(descs) + 3} polytopes, got {len(polytopes)}")
    if any(P.dim != n for P in polytopes):
        raise ValueError("dimension mismatch")
    return rank(_rows(descs, polytopes))


@dataclass(frozen=True)
class ValuationSample:
    polytope: Polytope
    value: SymTensor


@dataclass
class Decomposition:
    basis: list[ValuationDescriptor]
    coefficients: list[Fraction]
    residual: list[Fraction]

    @property
    def residual_norm2(self) -> Fraction:
        return sum((r * r for r in self.residual), Fraction(0))

    def as_dict(self) -> dict:
        return {d.label(): c for d, c in zip(self.basis, self.coefficients)}

    def to_json(self) -> dict:
        return {"basis": [d.label() for d in self.basis],
                "coefficients": [str(c) for c in self.coefficients],
                "residual_norm2": str(self.residual_norm2)}


def decompose(samples: Sequence[ValuationSample], n: int, p: int) -> Decomposition:
    """Least-squares coefficients against :func:`basis`, solved exactly.

    The residual vanishes exactly when the samples lie in the span.
    """
    descs = basis(n, p)
    k = len(descs)
    if len(samples) < k:
        raise RankDeficient(f"{len(samples)} samples cannot identify {k} coefficients")
    for s in samples:
        if (s.polytope.dim, s.value.dim, s.value.rank) != (n, n, p):
            raise ValueError("sample does not match n, p")
    columns = _rows(descs, [s.polytope for s in samples])
    target = [x for s in samples for x in s.value.flatten()]
    if rank(columns) < k:
        raise RankDeficient("basis values on the samples are linearly dependent")
    gram = [[dot(ci, cj) for cj in columns] + [dot(ci, target)] for ci in columns]
    red, _ = rref(gram)
    coeffs = [red[i][k] for i in range(k)]
    fitted = [sum((c * col[m] for c, col in zip(coeffs, columns)), Fraction(0)) for m in range(len(target))]
    return Decomposition(descs, coeffs, [t - f for t, f in zip(target, fitted)])


# -- independent oracles ---------------------------------------------------------

def mc_moment_oracle(P: Polytope, p: int, samples: int = 10 ** 6, seed: int = 0):
    """Rejection-sampling estimate of ``(n+p) int_P x^beta dx`` for every exponent ``beta``.

    Returns ``(estimate, stderr)`` dicts keyed by ``beta``.
    """
    if samples < 10 ** 4:
        raise ValueError("need at least 10^4 samples")
    if P.dim > 3:
        raise ValueError("oracle supports dim <= 3")
    rng = np.random.default_rng(seed)
    lo, hi = (np.array([float(t) for t in v]) for v in P.bounding_box())
    box_volume = float(np.prod(hi - lo))
    pts = lo + (hi - lo) * rng.random((samples, P.dim))
    normals = np.array([[float(t) for t in f.normal] for f in P.facets])
    supports = np.array([float(f.support) for f in P.facets])
    inside = np.all(pts @ normals.T <= supports, axis=1)
    est, err = {}, {}
    factor = (P.dim + p) * box_volume
    for beta in exponents(P.dim, p):
        vals = np.where(inside, np.prod(pts ** np.array(beta), axis=1), 0.0)
        est[beta] = factor * float(vals.mean())
        err[beta] = factor * float(vals.std(ddof=1)) / np.sqrt(samples)
    return est, err


def polar_by_vertex_enumeration(P: Polytope) -> Polytope:
    """``{x : v.x <= 1}`` by intersecting ``n`` of the planes ``v.x = 1`` at a time."""
    n = P.dim
    verts = set()
    for group in combinations(P.vertices, n):
        aug = [list(v) + [Fraction(1)] for v in group]
        red, piv = rref(aug)
        if piv != list(range(n)):
            continue
        x = tuple(red[i][n] for i in range(n))
        if all(dot(v, x) <= 1 for v in P.vertices):
            verts.add(x)
    return Polytope.from_vertices(n, sorted(verts))


# -- suites ----------------------------------------------------------------------

def descriptors_for(n: int, pmax: int = 3) -> list[ValuationDescriptor]:
    """Every implemented descriptor family up to rank ``pmax`` in dimension ``n``."""
    D = ValuationDescriptor
    out = [D("euler"), D("vol"), D("vol", polar_input=True)]
    for p in range(pmax + 1):
        for r in range(p + 1):
            if r == p:
                out.append(D.moment(p))
                out.append(D.moment(p, polar_input=True))
            elif r == 0:
                out.append(D.lp_normal(p))
                out.append(D.lp_normal(p, polar_input=True))
            else:
                out.append(D("mrs", r=r, s=p - r))
            if n == 2:
                out.append(D("mrs_rho", r=r, s=p - r))
    if n == 2:
        out += [D.moment(p, polar_input=True, rho_output=True) for p in range(1, pmax + 1)]
    return out


def suite_additivity(cases: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for n in (2, 3):
        fams = [random_pyramid_family(rng, n, straight=(k % 3 == 0)) for k in range(cases)]
        for desc in descriptors_for(n, 3 if n == 2 else 2):
            rep = check_additivity(desc, fams)
            rep.check = f"additivity[n={n}, {desc.label()}]"
            reports.append(rep)
    return reports


def suite_covariance(cases: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for n in (2, 3):
        for desc in descriptors_for(n, 3 if n == 2 else 2):
            law = expected_law(desc)
            if law is None:
                continue
            rep = CheckReport(f"covariance[n={n}, {desc.label()}, {law[0]}, det^{law[1]}]")
            for _ in range(max(1, cases // 5)):
                P = random_double_pyramid(rng, n)
                rep.merge(check_covariance(desc, P, random_shear_product(rng, n), law))
            reports.append(rep)
    return reports


def suite_homogeneity(cases: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for n in (2, 3):
        for desc in descriptors_for(n, 3 if n == 2 else 2):
            rep = CheckReport(f"homogeneity[n={n}, {desc.label()}, degree {desc.degree(n)}]")
            for lam in (Fraction(1, 3), Fraction(2), Fraction(5, 2)):
                rep.merge(check_homogeneity(desc, random_double_pyramid(rng, n), lam))
            reports.append(rep)
    return reports


def suite_closed_form(cases: int, seed: int) -> list[CheckReport]:
    from .polytope import straight_double_pyramid
    from .symtensor import middle_term_coordinate, shear_coords_reference, vandermonde_sum
    from .valuations import double_pyramid_closed_form, mrs_rho

    rng = random.Random(seed)
    closed = CheckReport("closed_form[straight double pyramid M_rho]")
    for _ in range(cases):
        a, b, c, d = (random_positive(rng) for _ in range(4))
        P = straight_double_pyramid(a, b, c, d)
        for p in range(6):
            for i in range(p + 1):
                closed.cases += 1
                got = mrs_rho(P, i, p - i)
                if got != double_pyramid_closed_form(a, b, c, d, i, p) or (i == p - 1 and not got.is_zero()):
                    closed.fail(polytope=P, i=i, p=p)
    shear = CheckReport("closed_form[shear expansions]")
    for _ in range(cases):
        z = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        p = rng.randint(0, 6)
        K = SymTensor(2, p, {beta: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for beta in exponents(2, p)})
        for kind, phi in (("upper", Matrix.upper_shear(z)), ("lower", Matrix.lower_shear(z))):
            shear.cases += 1
            if gl_action(phi, K) != shear_coords_reference(kind, z, K):
                shear.fail(kind=kind, z=z, K=K)
    middle = CheckReport("closed_form[middle term]")
    for _ in range(cases):
        phi = Matrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)])
        for p in (0, 2, 4, 6, 8):
            middle.cases += 1
            try:
                middle_term_coordinate(phi, p)
            except AssertionError:
                middle.fail(matrix=phi, p=p)
    vander = CheckReport("closed_form[Vandermonde]")
    for p in range(13):
        for i in range(7):
            vander.cases += 1
            if vandermonde_sum(p, i) != (1 if i == 0 else 0):
                vander.fail(p=p, i=i)
    return [closed, shear, middle, vander]


def suite_rank(cases: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for n, p in [(2, p) for p in range(6)] + [(3, p) for p in range(5)]:
        expected = expected_rank(n, p)
        rep = CheckReport(f"rank[n={n}, p={p}]", cases=1)
        polys = [random_double_pyramid(rng, n) for _ in range(len(basis(n, p)) + 3)]
        got = basis_rank(n, p, polys)
        if got != expected:
            rep.fail(expected=expected, got=got)
        phi = random_shear_product(rng, n, flip=False)
        rep.cases += 1
        if basis_rank(n, p, [P.linear_image(phi) for P in polys]) != got:
            rep.fail(reason="rank changed under SL(n) image", matrix=phi)
        reports.append(rep)
    dec = CheckReport("rank[decompose plant]")
    for n in (2, 3):
        for p in (0, 2, 3):
            descs = basis(n, p)
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in descs]
            polys = [random_double_pyramid(rng, n) for _ in range(len(descs) + 3)]
            samples = [ValuationSample(P, sum((evaluate(d, P) * c for d, c in zip(descs, coeffs)),
                                              SymTensor.zero(n, p))) for P in polys]
            out = decompose(samples, n, p)
            dec.cases += 1
            if out.coefficients != coeffs or out.residual_norm2 != 0:
                dec.fail(n=n, p=p, planted=coeffs, got=out.coefficients)
    reports.append(dec)
    return reports


def suite_oracle(cases: int, seed: int, samples: int = 10 ** 6) -> list[CheckReport]:
    from .polytope import box, simplex
    from .valuations import moment_tensor

    polys = [box(1, n=2), make_tilted_example(), simplex(3, 2)]
    reports = []
    for P in polys:
        for p in (0, 1, 2):
            rep = CheckReport(f"oracle[mc moment, n={P.dim}, p={p}, {len(P.vertices)} vertices]", exact=False)
            exact = moment_tensor(P, p)
            est, err = mc_moment_oracle(P, p, samples, seed)
            for beta in exponents(P.dim, p):
                rep.cases += 1
                dev = abs(est[beta] - float(exact[beta]))
                if dev > 3 * err[beta] + 1e-12:
                    rep.fail(polytope=P, beta=list(beta), exact=exact[beta], estimate=est[beta], se=err[beta])
            reports.append(rep)
    return reports


def make_tilted_example() -> Polytope:
    return double_pyramid(interval(1, Fraction(3, 2)), Fraction(1, 2), Fraction(3, 4), [Fraction(1, 2)], [-1])


def suite_identities(cases: int, seed: int) -> list[CheckReport]:
    from .valuations import lp_surface_tensor, moment_tensor, mrs

    rng = random.Random(seed)
    div = CheckReport("identities[divergence + reduction]")
    mink = CheckReport("identities[Minkowski relation, M^{0,1} = 0]")
    for k in range(max(2, cases // 3)):
        n = 2 + k % 2
        P = random_double_pyramid(rng, n) if k % 4 < 2 else random_crosspolytope(rng, n)
        for Q in (P, polar(P)):
            for p in range(5):
                div.cases += 1
                if mrs(Q, p, 0) != moment_tensor(Q, p) or mrs(Q, 0, p) != lp_surface_tensor(Q, p):
                    div.fail(polytope=Q, p=p)
            mink.cases += 1
            total = [sum((f.normal[c] for f in Q.facets), Fraction(0)) for c in range(n)]
            if any(total) or not lp_surface_tensor(Q, 1).is_zero():
                mink.fail(polytope=Q)
    return [div, mink]


def suite_polarity(cases: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    rep = CheckReport("polarity[involution, linear maps, dilations]")
    for k in range(max(2, cases // 3)):
        n = 2 + k % 2
        P = random_double_pyramid(rng, n)
        phi = random_shear_product(rng, n)
        lam = random_positive(rng)
        rep.cases += 4
        if polar(polar(P)) != P:
            rep.fail(polytope=P, law="involution")
        if polar(P.linear_image(phi)) != polar(P).linear_image(phi.inverse_transpose()):
            rep.fail(polytope=P, matrix=phi, law="linear")
        if polar(P.scaled(lam)) != polar(P).scaled(1 / lam):
            rep.fail(polytope=P, lam=lam, law="dilation")
        if polar(P) != polar_by_vertex_enumeration(P):
            rep.fail(polytope=P, law="vertex enumeration")
    return [rep]


def suite_even_odd(cases: int, seed: int) -> list[CheckReport]:
    from .valuations import moment_tensor, mrs_rho

    rng = random.Random(seed)
    rep = CheckReport("even_odd[split laws]")
    mus = {
        "M^{2,0}": (lambda P: moment_tensor(P, 2), 2, 1),
        "M_rho^{0,3}": (lambda P: mrs_rho(P, 0, 3), 2, 0),
    }
    for name, (mu, n, vanishing) in mus.items():
        theta = Matrix.diag(*([-1] + [1] * (n - 1)))
        other = random_shear_product(rng, n, flip=False) @ theta
        parts = even_odd_split(mu, theta)
        parts_other = even_odd_split(mu, other)
        for _ in range(max(1, cases // 10)):
            P = random_double_pyramid(rng, n)
            rep.cases += 1
            m0, m1 = parts[0](P), parts[1](P)
            if m0 + m1 != mu(P) or not parts[vanishing](P).is_zero():
                rep.fail(polytope=P, valuation=name)
            if (m0, m1) != (parts_other[0](P), parts_other[1](P)):
                rep.fail(polytope=P, valuation=name, reason="depends on theta")
            tP = P.linear_image(theta)
            if parts[0](tP) != gl_action(theta, m0) or parts[1](tP) != -gl_action(theta, m1):
                rep.fail(polytope=P, valuation=name, reason="eps laws")
    return [rep]


SUITES: dict[str, Callable[[int, int], list[CheckReport]]] = {
    "additivity": suite_additivity,
    "covariance": suite_covariance,
    "homogeneity": suite_homogeneity,
    "closed_form": suite_closed_form,
    "rank": suite_rank,
    "oracle": suite_oracle,
    "identities": suite_identities,
    "polarity": suite_polarity,
    "even_odd": suite_even_odd,
}


def run_suite(name: str, cases: int = 30, seed: int = 0) -> list[CheckReport]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](cases, seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected all or one of {sorted(SUITES)}")
    return SUITES[name](cases, seed)
