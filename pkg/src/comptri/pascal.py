"""Exact lower-triangular integer matrices and Pascal-matrix helpers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DimensionError


@dataclass(frozen=True)
class LowerTriangularMatrix:
    """A square lower-triangular integer matrix stored as ragged rows.

    ``rows[i - 1][j - 1]`` holds entry (i, j) for 1 <= j <= i; entries above
    the diagonal are zero by construction and never stored.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        if not rows:
            raise DimensionError("a matrix needs at least order 1")
        for i, row in enumerate(rows, start=1):
            if len(row) != i:
                raise DimensionError(f"row {i} must have {i} entries, got {len(row)}")
            for v in row:
                if not isinstance(v, int):
                    raise DimensionError(f"entries must be integers, got {v!r}")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """1-based entry (i, j); zero above the diagonal."""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise IndexError(f"({i}, {j}) is outside order {self.order}")
        return self.rows[i - 1][j - 1] if j <= i else 0


def identity(order: int) -> LowerTriangularMatrix:
    return LowerTriangularMatrix(
        tuple(tuple(1 if j == i else 0 for j in range(i + 1)) for i in range(order))
    )


def pascal_lower(order: int) -> LowerTriangularMatrix:
    """The Pascal matrix: entry (i, j) = C(i-1, j-1)."""
    return LowerTriangularMatrix(
        tuple(tuple(comb(i - 1, j - 1) for j in range(1, i + 1)) for i in range(1, order + 1))
    )


def from_rows(rows: Sequence[Sequence[int]]) -> LowerTriangularMatrix:
    return LowerTriangularMatrix(tuple(tuple(r) for r in rows))


def mat_mul(a: LowerTriangularMatrix, b: LowerTriangularMatrix) -> LowerTriangularMatrix:
    if a.order != b.order:
        raise DimensionError(f"orders differ: {a.order} vs {b.order}")
    rows = []
    for i in range(1, a.order + 1):
        rows.append(
            tuple(
                sum(a.entry(i, t) * b.entry(t, j) for t in range(j, i + 1))
                for j in range(1, i + 1)
            )
        )
    return LowerTriangularMatrix(tuple(rows))


def mat_pow(a: LowerTriangularMatrix, e: int) -> LowerTriangularMatrix:
    """a**e by repeated squaring; e = 0 gives the identity."""
    if e < 0:
        raise ValueError("negative powers are not defined here")
    result = identity(a.order)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def shifted_pascal_inverse(order: int) -> tuple[LowerTriangularMatrix, LowerTriangularMatrix]:
    """The shifted Pascal matrix Q with entry (i, j) = C(i, j) and its inverse.

    The inverse has entries (-1)^(i+j) C(i, j); the pair multiplies to the
    identity in both orders.
    """
    q = LowerTriangularMatrix(
        tuple(tuple(comb(i, j) for j in range(1, i + 1)) for i in range(1, order + 1))
    )
    qinv = LowerTriangularMatrix(
        tuple(
            tuple((-1) ** (i + j) * comb(i, j) for j in range(1, i + 1))
            for i in range(1, order + 1)
        )
    )
    return q, qinv
