"""The tensor valuations ``M^{r,s}``, ``M^{r,s}_rho`` and their endpoints.

Per boundary simplex ``T`` with area normal ``N`` and support ``h = h_P(N)``,
the integrand ``x^r . u^s h_P(u)^(1-s)`` integrates to
``h^(1-s) N^(.)s . avg_T(x^(.)r)``: the unit-normal powers, the area and the
support rescaling combine into integer powers of ``N``.  Simplex averages
come from the complete symmetric sum of the vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from .linalg import Matrix, RationalLike, as_rational
from .polytope import Polytope, polar, surface_area_measure
from .symtensor import (
    SymTensor,
    binom,
    complete_symmetric,
    from_product_basis,
    gl_action,
    power,
    sum_tensors,
    sym_product,
)

KINDS = ("moment", "lp_normal", "mrs", "mrs_rho", "euler", "vol")


def simplex_average(points, r: int) -> SymTensor:
    """Mean of ``x^(.)r`` over the simplex ``conv(points)`` (any affine dimension)."""
    k = len(points) - 1
    dim = len(points[0])
    return complete_symmetric(points, r, dim) / comb(r + k, k)


def moment_tensor(P: Polytope, p: int) -> SymTensor:
    """``(n + p) int_P x^(.)p dx`` via cones from the origin over the boundary simplices."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    n = P.dim
    origin = tuple(Fraction(0) for _ in range(n))
    terms = []
    for bs in P.boundary:
        cone_volume = bs.support / n
        terms.append(simplex_average((origin,) + bs.points, p) * cone_volume)
    return sum_tensors(terms, n, p) * (n + p)


def lp_surface_tensor(P: Polytope, p: int) -> SymTensor:
    """``int u^(.)p dS_p(P, u)``, summed over the atoms of the L_p surface area measure."""
    measure = surface_area_measure(P, p)
    return sum_tensors((power(a.direction, p) * a.weight for a in measure.atoms), P.dim, p)


def _boundary_family(P: Polytope, r: int, s: int, rotate: bool) -> SymTensor:
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    rho = Matrix.rho() if rotate else None
    terms = []
    for bs in P.boundary:
        normal = rho @ bs.area_normal if rotate else bs.area_normal
        # the support weight always uses the un-rotated normal
        weight = bs.support ** (1 - s)
        terms.append(sym_product(power(normal, s), simplex_average(bs.points, r)) * weight)
    return sum_tensors(terms, P.dim, r + s)


def mrs(P: Polytope, r: int, s: int) -> SymTensor:
    """``int_{dP} x^(.)r . u^(.)s h_P(u)^(1-s) dH^{n-1}``."""
    return _boundary_family(P, r, s, rotate=False)


def mrs_rho(P: Polytope, r: int, s: int) -> SymTensor:
    """Planar variant of :func:`mrs` with ``u`` replaced by its quarter turn in the normal slot."""
    if P.dim != 2:
        raise ValueError("mrs_rho is only defined in the plane")
    return _boundary_family(P, r, s, rotate=True)


def m_coeff(p: int, i: int, l: int) -> Fraction:
    """Edge-integral coefficient for straight double pyramids; zero outside ``0 <= l <= p``."""
    if i == p:
        return Fraction((-1) ** l)
    return binom(p - i - 1, l) + (-1) ** i * binom(p - i - 1, l - i - 1)


def double_pyramid_closed_form(a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike,
                               i: int, p: int) -> SymTensor:
    """Closed form of ``M_rho^{i,p-i}`` on the straight double pyramid ``[-a e1, b e1, -c e2, d e2]``."""
    a, b, c, d = (as_rational(t) for t in (a, b, c, d))
    if min(a, b, c, d) <= 0:
        raise ValueError("a, b, c, d must be positive")
    if not 0 <= i <= p:
        raise ValueError("need 0 <= i <= p")
    coeffs = []
    for l in range(p + 1):
        e_ab, e_cd = 1 + i - l, 1 - p + i + l
        bracket = ((-1) ** (i + l) * a ** e_ab * c ** e_cd
                   + b ** e_ab * c ** e_cd
                   + (-1) ** p * a ** e_ab * d ** e_cd
                   + (-1) ** (p + i + l) * b ** e_ab * d ** e_cd)
        coeffs.append(m_coeff(p, i, l) * bracket / (i + 1))
    return from_product_basis(coeffs)


@dataclass(frozen=True)
class ValuationDescriptor:
    """A named valuation ``mu``, optionally conjugated to ``mu o *`` and/or ``rho . mu``."""

    kind: str
    r: int = 0
    s: int = 0
    polar_input: bool = False
    rho_output: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.r < 0 or self.s < 0:
            raise ValueError("r and s must be nonnegative")
        if self.kind == "moment" and self.s:
            raise ValueError("moment has s = 0")
        if self.kind == "lp_normal" and self.r:
            raise ValueError("lp_normal has r = 0")
        if self.kind in ("euler", "vol") and (self.r or self.s):
            raise ValueError(f"{self.kind} is scalar valued")

    @classmethod
    def moment(cls, p: int, **flags) -> "ValuationDescriptor":
        return cls("moment", r=p, **flags)

    @classmethod
    def lp_normal(cls, p: int, **flags) -> "ValuationDescriptor":
        return cls("lp_normal", s=p, **flags)

    @property
    def p(self) -> int:
        return self.r + self.s

    def with_flags(self, **flags) -> "ValuationDescriptor":
        return replace(self, **flags)

    def degree(self, n: int) -> int:
        """Homogeneity degree ``q`` with ``mu(lam P) = lam^q mu(P)``."""
        q = {"euler": 0, "vol": n}.get(self.kind, n + self.r - self.s)
        return -q if self.polar_input else q

    def label(self) -> str:
        core = {"moment": f"M^{{{self.p},0}}", "lp_normal": f"M^{{0,{self.p}}}",
                "mrs": f"M^{{{self.r},{self.s}}}", "mrs_rho": f"M_rho^{{{self.r},{self.s}}}",
                "euler": "chi", "vol": "V"}[self.kind]
        if self.polar_input:
            core += " o *"
        if self.rho_output:
            core = "rho . " + core
        return core


def evaluate(desc: ValuationDescriptor, P: Polytope) -> SymTensor:
    if (desc.kind == "mrs_rho" or desc.rho_output) and P.dim != 2:
        raise ValueError("rho-based valuations need dim 2")
    Q = polar(P) if desc.polar_input else P
    n = P.dim
    if desc.kind == "moment":
        out = moment_tensor(Q, desc.p)
    elif desc.kind == "lp_normal":
        out = lp_surface_tensor(Q, desc.p)
    elif desc.kind == "mrs":
        out = mrs(Q, desc.r, desc.s)
    elif desc.kind == "mrs_rho":
        out = mrs_rho(Q, desc.r, desc.s)
    elif desc.kind == "euler":
        out = SymTensor.scalar(1, n)
    else:
        out = SymTensor.scalar(Q.volume(), n)
    if desc.rho_output:
        out = gl_action(Matrix.rho(), out)
    return out
