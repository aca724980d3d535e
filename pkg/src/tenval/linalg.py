"""Exact rational vectors, matrices and elimination."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Vector = tuple  # tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: an exact library must never silently round.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def vector(xs: Iterable[RationalLike]) -> Vector:
    return tuple(as_rational(x) for x in xs)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(t: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(t * a for a in v)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


class Matrix:
    """Square rational matrix; ``entry(r, c)`` multiplies coordinate c into coordinate r."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        rows = tuple(vector(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(r == c) for c in range(n)] for r in range(n)])

    @classmethod
    def diag(cls, *d: RationalLike) -> "Matrix":
        n = len(d)
        return cls([[d[r] if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def upper_shear(cls, z: RationalLike) -> "Matrix":
        # e1 -> e1, e2 -> z e1 + e2
        return cls([[1, as_rational(z)], [0, 1]])

    @classmethod
    def lower_shear(cls, z: RationalLike) -> "Matrix":
        # e1 -> e1 + z e2, e2 -> e2
        return cls([[1, 0], [as_rational(z), 1]])

    @classmethod
    def rho(cls) -> "Matrix":
        """Quarter turn counter-clockwise: e1 -> e2, e2 -> -e1."""
        return cls([[0, -1], [1, 0]])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, r: int, c: int) -> Fraction:
        return self.rows[r][c]

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.rows))
            return Matrix([[dot(r, c) for c in cols] for r in self.rows])
        v = tuple(other)
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        return tuple(dot(r, v) for r in self.rows)

    def __mul__(self, t: RationalLike) -> "Matrix":
        t = as_rational(t)
        return Matrix([[t * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix([{body}])"

    def det(self) -> Fraction:
        return determinant(self.rows)

    def inverse(self) -> "Matrix":
        n = self.dim
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix([row[n:] for row in red[:n]])

    def inverse_transpose(self) -> "Matrix":
        return self.inverse().T


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        d *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * d


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return a, []
    m, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    a = _integer_rows(rows)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            a[i] = [(a[r][c] * a[i][k] - a[i][c] * a[r][k]) // prev for k in range(n)]
        prev = a[r][c]
        r += 1
    return r
