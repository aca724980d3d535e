"""Exact symmetric tensors in exponent coordinates.

A symmetric tensor ``K`` of rank ``p`` over ``R^n`` is stored by its
exponent coordinates: for every exponent vector ``beta`` with ``|beta| = p``
the value ``m_beta`` is the common full-tensor entry shared by every index
word containing ``beta_k`` copies of index ``k``.  So ``power(v, p)`` has
``m_beta = v^beta``.

Internally products and linear substitutions go through the polynomial
``K(y) = <K, y^(x)p> = sum_beta multinomial(p; beta) m_beta y^beta``; the
symmetric product becomes polynomial multiplication and the GL action
becomes ``(phi . K)(y) = K(phi^t y)``.  For ``n = 2`` the polynomial
coefficients are exactly the coordinates with respect to the basis
``e1^(p-i) . e2^i``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import Matrix, RationalLike, Vector, as_rational

Poly = dict  # dict[tuple[int, ...], Fraction]


def exponents(dim: int, rank: int) -> list[tuple[int, ...]]:
    """All ``beta`` in N^dim with ``|beta| = rank``, lexicographically sorted."""
    return list(_exponents(dim, rank))


@lru_cache(maxsize=None)
def _exponents(dim: int, rank: int) -> tuple[tuple[int, ...], ...]:
    if dim == 1:
        return ((rank,),)
    out = []
    for first in range(rank + 1):
        for rest in _exponents(dim - 1, rank - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multinomial(beta: tuple[int, ...]) -> int:
    out = factorial(sum(beta))
    for b in beta:
        out //= factorial(b)
    return out


def binom(r: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient; zero for ``k < 0``.

    For integer ``r >= 0`` it is also zero when ``k > r``.
    """
    r = as_rational(r)
    if k < 0:
        return Fraction(0)
    if r.denominator == 1 and r >= 0 and k > r:
        return Fraction(0)
    out = Fraction(1)
    for j in range(k):
        out *= r - j
    return out / factorial(k)


class SymTensor:
    __slots__ = ("dim", "rank", "_coords", "_hash")

    def __init__(self, dim: int, rank: int, coords: Mapping[tuple[int, ...], RationalLike] | None = None):
        if dim < 1 or rank < 0:
            raise ValueError("need dim >= 1 and rank >= 0")
        self.dim = dim
        self.rank = rank
        clean: dict[tuple[int, ...], Fraction] = {}
        for beta, val in (coords or {}).items():
            beta = tuple(int(b) for b in beta)
            if len(beta) != dim or sum(beta) != rank or min(beta) < 0:
                raise ValueError(f"exponent {beta} does not match dim={dim}, rank={rank}")
            val = as_rational(val)
            if val:
                clean[beta] = clean.get(beta, Fraction(0)) + val
        self._coords = {b: v for b, v in clean.items() if v}
        self._hash = None

    @classmethod
    def zero(cls, dim: int, rank: int) -> "SymTensor":
        return cls(dim, rank)

    @classmethod
    def scalar(cls, value: RationalLike, dim: int) -> "SymTensor":
        return cls(dim, 0, {(0,) * dim: value})

    @classmethod
    def from_vector(cls, v: Sequence[RationalLike]) -> "SymTensor":
        return power(tuple(as_rational(x) for x in v), 1)

    def to_vector(self) -> Vector:
        if self.rank != 1:
            raise ValueError("only rank-1 tensors are vectors")
        return tuple(self[tuple(int(k == i) for k in range(self.dim))] for i in range(self.dim))

    def to_scalar(self) -> Fraction:
        if self.rank != 0:
            raise ValueError("only rank-0 tensors are scalars")
        return self[(0,) * self.dim]

    def __getitem__(self, beta: tuple[int, ...]) -> Fraction:
        return self._coords.get(tuple(beta), Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Nonzero coordinates in lexicographic exponent order."""
        for beta in sorted(self._coords):
            yield beta, self._coords[beta]

    def flatten(self) -> list[Fraction]:
        return [self[b] for b in exponents(self.dim, self.rank)]

    def is_zero(self) -> bool:
        return not self._coords

    def _check(self, other: "SymTensor") -> None:
        if not isinstance(other, SymTensor):
            raise TypeError("expected SymTensor")
        if (self.dim, self.rank) != (other.dim, other.rank):
            raise ValueError("dimension/rank mismatch")

    def __add__(self, other: "SymTensor") -> "SymTensor":
        self._check(other)
        out = dict(self._coords)
        for b, v in other._coords.items():
            out[b] = out.get(b, Fraction(0)) + v
        return SymTensor(self.dim, self.rank, out)

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return self + (-other)

    def __neg__(self) -> "SymTensor":
        return SymTensor(self.dim, self.rank, {b: -v for b, v in self._coords.items()})

    def __mul__(self, t: RationalLike) -> "SymTensor":
        t = as_rational(t)
        return SymTensor(self.dim, self.rank, {b: t * v for b, v in self._coords.items()})

    __rmul__ = __mul__

    def __truediv__(self, t: RationalLike) -> "SymTensor":
        return self * (1 / as_rational(t))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (self.dim, self.rank, self._coords) == (other.dim, other.rank, other._coords)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.rank, tuple(self.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{b}: {v}" for b, v in self.items())
        return f"SymTensor(dim={self.dim}, rank={self.rank}, {{{body}}})"


def sum_tensors(tensors: Iterable[SymTensor], dim: int, rank: int) -> SymTensor:
    acc: dict[tuple[int, ...], Fraction] = {}
    for t in tensors:
        if (t.dim, t.rank) != (dim, rank):
            raise ValueError("dimension/rank mismatch")
        for b, v in t.items():
            acc[b] = acc.get(b, Fraction(0)) + v
    return SymTensor(dim, rank, acc)


# -- polynomial view ---------------------------------------------------------

def _to_poly(K: SymTensor) -> Poly:
    return {b: v * multinomial(b) for b, v in K.items()}


def _from_poly(poly: Poly, dim: int, rank: int) -> SymTensor:
    return SymTensor(dim, rank, {b: v / multinomial(b) for b, v in poly.items() if v})


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + va * vb
    return out


def _linear_form(v: Sequence[Fraction]) -> Poly:
    n = len(v)
    return {tuple(int(k == i) for k in range(n)): Fraction(c) for i, c in enumerate(v) if c}


def _poly_power(form: Poly, k: int, dim: int) -> Poly:
    out: Poly = {(0,) * dim: Fraction(1)}
    for _ in range(k):
        out = _poly_mul(out, form)
    return out


# -- operations --------------------------------------------------------------

def power(v: Sequence[RationalLike], p: int) -> SymTensor:
    """``v^(.)p``, with coordinates ``m_beta = prod_k v_k^beta_k``."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    v = tuple(as_rational(x) for x in v)
    coords = {}
    for beta in exponents(len(v), p):
        val = Fraction(1)
        for x, b in zip(v, beta):
            if b:
                val *= x ** b
        coords[beta] = val
    return SymTensor(len(v), p, coords)


def sym_product(A: SymTensor, B: SymTensor) -> SymTensor:
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    return _from_poly(_poly_mul(_to_poly(A), _to_poly(B)), A.dim, A.rank + B.rank)


def complete_symmetric(vectors: Sequence[Sequence[Fraction]], r: int, dim: int) -> SymTensor:
    """Sum of ``v_i1 . ... . v_ir`` over all multisets ``i1 <= ... <= ir``."""
    # h_r(l_0..l_k) = sum_j l_k^j h_{r-j}(l_0..l_{k-1})
    h: list[Poly] = [{(0,) * dim: Fraction(1)}] + [{} for _ in range(r)]
    for v in vectors:
        form = _linear_form(v)
        powers = [{(0,) * dim: Fraction(1)}]
        for _ in range(r):
            powers.append(_poly_mul(powers[-1], form))
        new = []
        for deg in range(r + 1):
            acc: Poly = {}
            for j in range(deg + 1):
                if h[deg - j]:
                    for e, c in _poly_mul(powers[j], h[deg - j]).items():
                        acc[e] = acc.get(e, Fraction(0)) + c
            new.append(acc)
        h = new
    return _from_poly(h[r], dim, r)


def gl_action(phi: Matrix, K: SymTensor) -> SymTensor:
    """``phi^(x)p`` applied to ``K``; computed as ``K(phi^t y)`` in the polynomial view."""
    if phi.dim != K.dim:
        raise ValueError("dimension mismatch")
    n = K.dim
    columns = [tuple(phi.entry(j, k) for j in range(n)) for k in range(n)]
    power_cache: dict[tuple[int, int], Poly] = {}

    def col_power(k: int, e: int) -> Poly:
        key = (k, e)
        if key not in power_cache:
            power_cache[key] = _poly_power(_linear_form(columns[k]), e, n)
        return power_cache[key]

    out: Poly = {}
    for beta, c in _to_poly(K).items():
        term: Poly = {(0,) * n: c}
        for k, e in enumerate(beta):
            if e:
                term = _poly_mul(term, col_power(k, e))
        for e, v in term.items():
            out[e] = out.get(e, Fraction(0)) + v
    return _from_poly(out, n, K.rank)


def product_basis(K: SymTensor) -> list[Fraction]:
    """Coordinates ``K_i`` with respect to ``e1^(p-i) . e2^i``, i = 0..p."""
    if K.dim != 2:
        raise ValueError("product basis is defined for dim 2 only")
    p = K.rank
    return [comb(p, i) * K[(p - i, i)] for i in range(p + 1)]


def from_product_basis(coeffs: Sequence[RationalLike]) -> SymTensor:
    p = len(coeffs) - 1
    if p < 0:
        raise ValueError("need at least one coefficient")
    return SymTensor(2, p, {(p - i, i): as_rational(c) / comb(p, i) for i, c in enumerate(coeffs)})


def shear_coords_reference(kind: str, z: RationalLike, K: SymTensor) -> SymTensor:
    """Closed-form product-basis expansion of the upper or lower shear applied to ``K``.

    upper: ``K'_i = sum_{j>=i} C(j, i) K_j z^(j-i)``;
    lower: ``K'_i = sum_{j<=i} C(p-j, p-i) K_j z^(i-j)``.
    Deliberately independent of :func:`gl_action`.
    """
    if K.dim != 2:
        raise ValueError("shear expansions are defined for dim 2 only")
    z = as_rational(z)
    p = K.rank
    Kc = product_basis(K)
    if kind == "upper":
        new = [sum((comb(j, i) * Kc[j] * z ** (j - i) for j in range(i, p + 1)), Fraction(0))
               for i in range(p + 1)]
    elif kind == "lower":
        new = [sum((comb(p - j, p - i) * Kc[j] * z ** (i - j) for j in range(i + 1)), Fraction(0))
               for i in range(p + 1)]
    else:
        raise ValueError(f"unknown shear kind {kind!r}")
    return from_product_basis(new)


def middle_term_coordinate(phi: Matrix, p: int) -> Fraction:
    """Last product-basis coordinate of ``phi . e1^(p/2) . e2^(p/2)``.

    Raises ``AssertionError`` if it disagrees with ``(phi_21 phi_22)^(p/2)``.
    """
    if p % 2:
        raise ValueError("p must be even")
    if phi.dim != 2:
        raise ValueError("phi must be 2x2")
    half = p // 2
    K = from_product_basis([0] * half + [1] + [0] * half)
    value = product_basis(gl_action(phi, K))[p]
    expected = (phi.entry(1, 0) * phi.entry(1, 1)) ** half
    assert value == expected, (value, expected)
    return value


def vandermonde_sum(p: int, i: int) -> Fraction:
    """``sum_{j=0}^{i} C(-p/2, i-j) C(p/2, j)``."""
    if p < 0 or i < 0:
        raise ValueError("p and i must be nonnegative")
    h = Fraction(p, 2)
    return sum((binom(-h, i - j) * binom(h, j) for j in range(i + 1)), Fraction(0))
