"""Exact integer matrix algebra.

Everything here works on Python integers, so there is no rounding anywhere:
determinants come from fraction-free (Bareiss) elimination, positive
definiteness from the signs of the leading principal minors, and the Smith
normal form from unimodular row and column operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .verdict import Verdict


class NotSymmetricError(ValueError):
    pass


class NotPositiveDefiniteError(ValueError):
    pass


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix, stored row-major as nested tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have dimension >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def gram(cls, columns_matrix: Sequence[Sequence[int]]) -> "IntMatrix":
        """``DᵀD`` for a (not necessarily square) integer matrix ``D``."""
        d = [list(map(_as_int, row)) for row in columns_matrix]
        if not d or not d[0]:
            raise ValueError("empty matrix")
        width = len(d[0])
        if any(len(row) != width for row in d):
            raise ValueError("ragged matrix")
        return cls(
            tuple(
                tuple(sum(row[i] * row[j] for row in d) for j in range(width))
                for i in range(width)
            )
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def trace(self) -> int:
        return sum(self.diagonal())

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.n:
            raise ValueError(f"dimension mismatch: {self.n}x{self.n} matrix, vector of length {len(v)}")
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def quadratic_form(self, v: Sequence):
        """``vᵀ M v``."""
        return sum(a * b for a, b in zip(v, self.matvec(v)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product; index ``(i, k)`` of the result is ``i * other.n + k``."""
        return IntMatrix(
            tuple(
                tuple(a * b for a in ra for b in rb)
                for ra in self.rows
                for rb in other.rows
            )
        )

    def permuted(self, perm: Sequence[int]) -> "IntMatrix":
        """Simultaneous row/column permutation: entry (i, j) becomes M[perm[i], perm[j]]."""
        return IntMatrix(tuple(tuple(self.rows[p][q] for q in perm) for p in perm))

    def leading_block(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(row[:k] for row in self.rows[:k]))


def _bareiss(rows: list[list[int]], pivoting: bool) -> tuple[list[int], int]:
    """In-place fraction-free elimination.

    Returns the successive pivots and the sign of the row permutation.  Without
    pivoting, pivot ``k`` equals the ``(k+1)``-th leading principal minor, and
    elimination stops at the first zero pivot.
    """
    n = len(rows)
    sign = 1
    prev = 1
    pivots: list[int] = []
    for k in range(n):
        if rows[k][k] == 0:
            if not pivoting:
                pivots.append(0)
                return pivots, sign
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                pivots.append(0)
                return pivots, sign
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        pivots.append(pivot)
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                # exact division is the Bareiss (Sylvester identity) guarantee.
                row_i[j] = (row_i[j] * pivot - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return pivots, sign


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    rows = m.to_lists()
    pivots, sign = _bareiss(rows, pivoting=True)
    if len(pivots) < m.n or pivots[-1] == 0:
        return 0
    return sign * pivots[-1]


def leading_principal_minors(m: IntMatrix) -> list[int]:
    """All leading principal minors, in order of size."""
    rows = m.to_lists()
    pivots, _ = _bareiss(rows, pivoting=False)
    minors = list(pivots)
    # past a zero pivot the unpivoted recurrence breaks down.
    for k in range(len(minors), m.n):
        minors.append(det(m.leading_block(k + 1)))
    return minors


def is_positive_definite(m: IntMatrix) -> bool:
    """Sylvester's criterion: every leading principal minor is positive."""
    if not m.is_symmetric():
        raise NotSymmetricError("not symmetric")
    rows = m.to_lists()
    pivots, _ = _bareiss(rows, pivoting=False)
    return len(pivots) == m.n and all(p > 0 for p in pivots)


def smith_normal_form(m: IntMatrix) -> list[int]:
    """Elementary divisors ``d1 | d2 | ... | dn`` (non-negative).

    Standard reduction: choose the entry of least nonzero absolute value as
    pivot, clear its row and column by Euclidean steps, and fold in any row
    whose entries the pivot does not divide.  Trailing zeros appear for
    singular input.
    """
    a = m.to_lists()
    n = m.n
    divisors: list[int] = []
    for t in range(n):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not nonzero:
                return divisors + [0] * (n - t)
            _, pi, pj = min(nonzero)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                divisors.append(abs(p))
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return divisors


def hadamard_and_amgm_check(m: IntMatrix) -> tuple[Verdict, Verdict]:
    """The determinant/trace chain for a positive definite matrix.

    First verdict: ``det(m) <= prod(diag)`` (Hadamard).  Second verdict:
    ``det(m) * l**l <= tr(m)**l``, the root-free form of
    ``l * det(m)**(1/l) <= tr(m)``.
    """
    if not is_positive_definite(m):
        raise NotPositiveDefiniteError("not positive definite")
    d = det(m)
    l = m.n
    hadamard = Verdict.compare("hadamard", d, prod(m.diagonal()), [f"det={d}"])
    amgm = Verdict.compare(
        "det_trace_amgm", Fraction(d * l**l), Fraction(m.trace() ** l), [f"l={l}", f"tr={m.trace()}"]
    )
    return hadamard, amgm
