"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Matrices are small dense
row-major tuples; the hot paths (determinants and solves) clear
denominators and run fraction-free integer elimination, so Python's
bignums do all of the work and rationals are only formed at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import NotSquare, NotSymmetric, Singular

ExactScalar = Fraction
Number = Union[int, Fraction]


class ExactMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[Number]]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self._data = rows
        self.rows = len(rows)
        self.cols = ncols

    @classmethod
    def _wrap(cls, rows: tuple[tuple[Fraction, ...], ...]) -> "ExactMatrix":
        m = cls.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def full(cls, n: int, value: Number) -> "ExactMatrix":
        v = Fraction(value)
        return cls._wrap(tuple((v,) * n for _ in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"ExactMatrix([{body}])"

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(tuple(-a for a in r) for r in self._data))

    def scale(self, c: Number) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._data))

    def __rmul__(self, c: Number) -> "ExactMatrix":
        return self.scale(c)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        return ExactMatrix._wrap(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self._data)
        )

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(zip(*self._data)) if self.rows else ())

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def minor(self, i: int, j: int | None = None) -> "ExactMatrix":
        """Delete row ``i`` and column ``j`` (defaults to ``i``)."""
        j = i if j is None else j
        return ExactMatrix._wrap(
            tuple(r[:j] + r[j + 1 :] for k, r in enumerate(self._data) if k != i)
        )

    def quadratic_form(self, x: Sequence[Number], y: Sequence[Number] | None = None) -> Fraction:
        """Return ``x^T M y`` (``y`` defaults to ``x``)."""
        y = x if y is None else y
        total = Fraction(0)
        for xi, r in zip(x, self._data):
            if xi:
                total += xi * sum((a * yj for a, yj in zip(r, y) if yj), Fraction(0))
        return total

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._data], dtype=float).reshape(self.shape)


def _as_integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators. Row scaling preserves solutions."""
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = math.lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def det_integer(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of a square integer matrix; every division is exact."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def det_bareiss(m: ExactMatrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Integer matrices stay in the integers throughout; rational input is
    handled by clearing each row's denominators first.
    """
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    scale = 1
    for r in m:
        den = 1
        for x in r:
            den = math.lcm(den, x.denominator)
        scale *= den
    return Fraction(det_integer(_as_integer_rows(list(m))), scale)


def _fraction_free_gauss_jordan(a: list[list[int]], n: int) -> int:
    """Reduce the integer augmented matrix ``a`` (n rows) in place.

    On return the left n×n block is ``det·I`` (up to the sign of row swaps,
    which is shared by the diagonal and the right block) and the right
    block holds ``det·X``. Returns the common diagonal value.
    """
    prev = 1
    width = len(a[0])
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    break
            else:
                raise Singular("matrix is singular")
        pk = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                if pk != prev:
                    for j in range(width):
                        if j != k and ri[j]:
                            ri[j] = (pk * ri[j]) // prev
                continue
            for j in range(width):
                if j != k:
                    ri[j] = (pk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return prev


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Solve ``a @ X = b`` over the integers.

    Returns ``(numerators, den)`` with ``X = numerators / den`` entrywise.
    ``den`` is the determinant of ``a`` up to sign.
    """
    n = len(a)
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    den = _fraction_free_gauss_jordan(aug, n)
    return [r[n:] for r in aug], den


def solve_exact(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Solve ``a @ X = b`` exactly for square nonsingular ``a``."""
    if not a.is_square():
        raise NotSquare(f"coefficient matrix is {a.rows}x{a.cols}")
    if a.rows != b.rows:
        raise ValueError(f"right-hand side has {b.rows} rows, expected {a.rows}")
    n = a.rows
    if n == 0:
        return ExactMatrix._wrap(())
    aug = _as_integer_rows([ra + rb for ra, rb in zip(a, b)])
    num, den = solve_integer([r[:n] for r in aug], [r[n:] for r in aug])
    return ExactMatrix._wrap(tuple(tuple(Fraction(x, den) for x in r) for r in num))


def inverse_exact(a: ExactMatrix) -> ExactMatrix:
    return solve_exact(a, ExactMatrix.identity(a.rows))


@dataclass(frozen=True)
class PseudoInverse:
    """Moore-Penrose inverse of a connected-graph Laplacian."""

    matrix: ExactMatrix

    @property
    def diagonal(self) -> tuple[Fraction, ...]:
        return self.matrix.diagonal()


def pseudoinverse_laplacian(lap: ExactMatrix, n: int | None = None) -> PseudoInverse:
    """``L^+ = (L + J/n)^{-1} - J/n`` for the Laplacian of a connected graph.

    A disconnected Laplacian makes ``L + J/n`` singular and raises
    :class:`Singular`.
    """
    if not lap.is_square():
        raise NotSquare(f"Laplacian is {lap.rows}x{lap.cols}")
    n = lap.rows if n is None else n
    if n != lap.rows:
        raise ValueError(f"n={n} but Laplacian has {lap.rows} rows")
    if not lap.is_symmetric():
        raise NotSymmetric("Laplacian must be symmetric")
    if any(sum(r) != 0 for r in lap):
        raise ValueError("Laplacian rows must sum to zero")
    jn = Fraction(1, n)
    shifted = ExactMatrix._wrap(tuple(tuple(x + jn for x in r) for r in lap))
    try:
        inv = inverse_exact(shifted)
    except Singular:
        raise Singular("L + J/n is singular: the graph is disconnected") from None
    return PseudoInverse(ExactMatrix._wrap(tuple(tuple(x - jn for x in r) for r in inv)))


def penrose_conditions(m: ExactMatrix, m_dag: ExactMatrix) -> tuple[bool, bool, bool, bool]:
    """Check the four Penrose conditions exactly.

    For real matrices the conjugate transpose is the plain transpose.
    """
    mm = m @ m_dag
    mdm = m_dag @ m
    return (
        mm @ m == m,
        mdm @ m_dag == m_dag,
        mm.T == mm,
        mdm.T == mdm,
    )


def symmetric_eigenvalues(m: np.ndarray, tol: float = 1e-12) -> list[float]:
    """All eigenvalues of a real symmetric matrix, ascending."""
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {arr.shape}")
    if arr.size and np.max(np.abs(arr - arr.T)) > tol:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    return [float(x) for x in np.linalg.eigvalsh(arr)]
