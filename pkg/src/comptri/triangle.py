"""Weighted composition triangles, built by four independent routes.

Fix a seed f_0 and a depth m >= 1, and let w = f_{m-1} be the (m-1)-st
invert transform of the seed.  The triangle entry c(n, k) is the total
weight of compositions of n into k ordered parts, each part i weighted by
w(i):

    c(n, k) = sum over (i_1, ..., i_k), i_t >= 1, i_1 + ... + i_k = n
              of w(i_1) * ... * w(i_k),

with the conventions c(0, 0) = 1 and c(n, 0) = 0 for n >= 1.  Four
algorithms compute the same triangle:

  * triangle_recurrence: peel off the first part,
        c(n, k) = sum_{i=1}^{n-k+1} w(i) c(n-i, k-1);
  * triangle_convolution: column k is the k-fold self-convolution of w,
        c(n, k) = [x^n] (sum_i w(i) x^i)^k;
  * triangle_bell: partial Bell polynomials at factorial-scaled arguments,
        c(n, k) = (k! / n!) B_{n,k}(1! w(1), 2! w(2), ...);
  * triangle_pascal: binomially weighted depth-1 entries,
        c(n, k) = sum_{i=k}^{n} (m-1)^(i-k) C(i-1, k-1) c_1(n, i).

They share only the seed and the invert transform, so agreement across all
four is a strong consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bell import bell_table
from .errors import InsufficientSeedError, InternalConsistencyError
from .sequences import ArithmeticFunction, iterate_invert

DEFAULT_ORDER_CAP = 64


@dataclass(frozen=True)
class CompositionTriangle:
    """Entries c(n, k) for 1 <= k <= n <= order at a fixed depth m.

    ``rows[n - 1][k - 1]`` is c(n, k).  The boundary conventions c(0, 0) = 1
    and c(n, 0) = 0 live in :meth:`value`, not in storage.
    """

    m: int
    rows: tuple[tuple[int, ...], ...]
    seed_label: str = ""

    @property
    def order(self) -> int:
        return len(self.rows)

    def value(self, n: int, k: int) -> int:
        """c(n, k); zero for k > n and for k = 0 with n >= 1."""
        if n == 0 and k == 0:
            return 1
        if not 1 <= n <= self.order:
            raise IndexError(f"n must lie in 1..{self.order}")
        if k < 0:
            raise IndexError("k must be >= 0")
        if k == 0 or k > n:
            return 0
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.order:
            raise IndexError(f"n must lie in 1..{self.order}")
        return self.rows[n - 1]


def _weights(
    f0: ArithmeticFunction, m: int, order: int, order_cap: int
) -> tuple[int, ...]:
    if m < 1:
        raise ValueError("depth m must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    if order > order_cap:
        raise ValueError(f"order {order} exceeds the cap {order_cap}")
    if order > len(f0):
        raise InsufficientSeedError(
            f"order {order} needs f_0(1..{order}), seed stores {len(f0)} terms"
        )
    return iterate_invert(f0, m - 1).values[:order]


def _rows_from_weights(w: tuple[int, ...], order: int) -> tuple[tuple[int, ...], ...]:
    # padded[n][k] covers 0 <= k <= n so the recurrence can touch c(*, 0)
    padded: list[list[int]] = [[1]]
    for n in range(1, order + 1):
        row = [0]
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, n - k + 2):
                acc += w[i - 1] * padded[n - i][k - 1]
            row.append(acc)
        padded.append(row)
    return tuple(tuple(row[1:]) for row in padded[1:])


def triangle_recurrence(
    f0: ArithmeticFunction, m: int, order: int, order_cap: int = DEFAULT_ORDER_CAP
) -> CompositionTriangle:
    """Build the triangle by the first-part recurrence."""
    w = _weights(f0, m, order, order_cap)
    return CompositionTriangle(m, _rows_from_weights(w, order), f0.label)


def _poly_mul_trunc(a: list[int], b: list[int], deg: int) -> list[int]:
    out = [0] * (deg + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        top = min(len(b) - 1, deg - i)
        for j in range(top + 1):
            out[i + j] += ai * b[j]
    return out


def triangle_convolution(
    f0: ArithmeticFunction, m: int, order: int, order_cap: int = DEFAULT_ORDER_CAP
) -> CompositionTriangle:
    """Build the triangle by truncated polynomial self-convolution."""
    w = _weights(f0, m, order, order_cap)
    poly = [0] + list(w)
    power = [1] + [0] * order
    rows = [[0] * n for n in range(1, order + 1)]
    for k in range(1, order + 1):
        power = _poly_mul_trunc(power, poly, order)
        for n in range(k, order + 1):
            rows[n - 1][k - 1] = power[n]
    return CompositionTriangle(m, tuple(tuple(r) for r in rows), f0.label)


def triangle_bell(
    f0: ArithmeticFunction, m: int, order: int, order_cap: int = DEFAULT_ORDER_CAP
) -> CompositionTriangle:
    """Build the triangle from partial Bell polynomials.

    Every (k! / n!) scaling must divide exactly; a remainder raises
    InternalConsistencyError.
    """
    w = _weights(f0, m, order, order_cap)
    fact = [1]
    for i in range(1, order + 1):
        fact.append(fact[-1] * i)
    table = bell_table([fact[i] * w[i - 1] for i in range(1, order + 1)], order)
    rows = []
    for n in range(1, order + 1):
        row = []
        for k in range(1, n + 1):
            q, r = divmod(table[n][k] * fact[k], fact[n])
            if r:
                raise InternalConsistencyError(
                    f"k!/n! scaling of B({n},{k}) is not exact"
                )
            row.append(q)
        rows.append(tuple(row))
    return CompositionTriangle(m, tuple(rows), f0.label)


def triangle_pascal(
    f0: ArithmeticFunction, m: int, order: int, order_cap: int = DEFAULT_ORDER_CAP
) -> CompositionTriangle:
    """Build the depth-m triangle from the depth-1 triangle and binomials."""
    base = triangle_recurrence(f0, 1, order, order_cap)
    if m == 1:
        return base
    if m < 1:
        raise ValueError("depth m must be >= 1")
    rows = []
    for n in range(1, order + 1):
        row = []
        for k in range(1, n + 1):
            row.append(
                sum(
                    (m - 1) ** (i - k) * comb(i - 1, k - 1) * base.value(n, i)
                    for i in range(k, n + 1)
                )
            )
        rows.append(tuple(row))
    return CompositionTriangle(m, tuple(rows), f0.label)


def step_up(tri: CompositionTriangle) -> CompositionTriangle:
    """One depth step: c'(n, k) = sum_{i=k}^{n} C(i-1, k-1) c(n, i)."""
    rows = []
    for n in range(1, tri.order + 1):
        rows.append(
            tuple(
                sum(comb(i - 1, k - 1) * tri.value(n, i) for i in range(k, n + 1))
                for k in range(1, n + 1)
            )
        )
    return CompositionTriangle(tri.m + 1, tuple(rows), tri.seed_label)


def row_sum(tri: CompositionTriangle, n: int) -> int:
    """sum_k c(n, k), which equals f_m(n) for the triangle's seed and depth."""
    return sum(tri.row(n))


def extended_binomial(f: ArithmeticFunction, k: int, n: int) -> int:
    """The f-weighted analogue of C(n+k-1, k-1): the entry c(n+k, k) with weights f.

    For f identically 1 this is the number of compositions of n+k into k
    parts, C(n+k-1, k-1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n + k > len(f):
        raise InsufficientSeedError(
            f"need f(1..{n + k}), seed stores {len(f)} terms"
        )
    return _rows_from_weights(f.values[: n + k], n + k)[n + k - 1][k - 1]
