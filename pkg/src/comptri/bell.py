"""Exact partial Bell polynomials at integer arguments.

B(n, k) here is the partial (incomplete) exponential Bell polynomial
B_{n,k}(x_1, ..., x_{n-k+1}) evaluated at integer arguments.  The table is
filled with the dividing recurrence

    k * B(n, k) = sum_{i=1}^{n-k+1} C(n, i) * x_i * B(n-i, k-1),

with B(0, 0) = 1.  At integer arguments every division by k is exact; a
remainder would mean a bug, so it raises instead of truncating.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .errors import InternalConsistencyError
from .sequences import ArithmeticFunction, invert_transform


def bell_table(x: Sequence[int], n_max: int) -> list[list[int]]:
    """Table of B(n, k) for 0 <= k <= n <= n_max, as ragged rows.

    ``x`` is 1-based: ``x[i - 1]`` plays the role of x_i.  Entries may be
    negative; exactness only needs them to be integers.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if len(x) < n_max:
        raise ValueError(f"need x_1..x_{n_max}, got {len(x)} arguments")
    for v in x[:n_max]:
        if not isinstance(v, int):
            raise ValueError(f"arguments must be integers, got {v!r}")
    table: list[list[int]] = [[1]]
    for n in range(1, n_max + 1):
        row = [0]
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, n - k + 2):
                acc += comb(n, i) * x[i - 1] * table[n - i][k - 1]
            q, r = divmod(acc, k)
            if r:
                raise InternalConsistencyError(
                    f"B({n},{k}) recurrence sum {acc} is not divisible by {k}"
                )
            row.append(q)
        table.append(row)
    return table


def partial_bell(x: Sequence[int], n: int, k: int) -> int:
    """B_{n,k}(x_1, ..., x_{n-k+1}) as an exact integer.

    Only x_1..x_{n-k+1} are read; missing later arguments are irrelevant and
    treated as zero when the table is filled.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    needed = n - k + 1 if k >= 1 else 0
    if len(x) < needed:
        raise ValueError(f"B({n},{k}) needs x_1..x_{needed}, got {len(x)} arguments")
    padded = list(x[:n]) + [0] * max(0, n - len(x))
    return bell_table(padded, n)[n][k]


def bell_invert_identity_check(x: Sequence[int], n_max: int) -> bool:
    """Check the argument-transform identity for all 1 <= k <= n <= n_max.

    With y the invert transform of x, the claim is

        k! B_{n,k}(1! y_1, 2! y_2, ...)
            = sum_{i=k}^{n} C(i-1, k-1) i! B_{n,i}(1! x_1, 2! x_2, ...).

    Returns True iff every pair (n, k) in range satisfies it.
    """
    f = ArithmeticFunction(tuple(x[:n_max]))
    y = invert_transform(f)
    fact = [1]
    for i in range(1, n_max + 1):
        fact.append(fact[-1] * i)
    bx = bell_table([fact[i] * f(i) for i in range(1, n_max + 1)], n_max)
    by = bell_table([fact[i] * y(i) for i in range(1, n_max + 1)], n_max)
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            lhs = fact[k] * by[n][k]
            rhs = sum(comb(i - 1, k - 1) * fact[i] * bx[n][i] for i in range(k, n + 1))
            if lhs != rhs:
                return False
    return True
