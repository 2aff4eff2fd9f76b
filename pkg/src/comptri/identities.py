"""Closed forms for preset triangles and stand-alone identity checkers.

The binomial helper here returns 0 outside 0 <= k <= n, which lets the
closed forms carry their own support conditions: a formula summed over a
generous index range still vanishes exactly where the triangle does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sequences import Preset
from .words import DEFAULT_BUDGET, Restriction, WordModel, count_words

PolynomialZ = tuple[int, ...]


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever k < 0, n < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def closed_form(preset: Preset | str, m: int, n: int, k: int) -> int:
    """Explicit binomial value of the depth-m triangle entry c(n, k).

    Every preset has a depth-1 form; all but ODD extend to arbitrary depth
    as a polynomial in m - 1 (the depth-1 form is the m = 1 case).  ODD with
    m > 1 raises ValueError.
    """
    preset = Preset(preset)
    if m < 1:
        raise ValueError("depth m must be >= 1")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if preset is Preset.ONES:
        return m ** (n - k) * binom(n - 1, k - 1)
    if preset is Preset.FIB:
        return sum(
            (m - 1) ** j * binom(j + k - 1, k - 1) * binom(j + k, n - j - k)
            for j in range(n - k + 1)
        )
    if preset is Preset.ODD:
        if m != 1:
            raise ValueError("no explicit form is available beyond depth 1")
        if (n - k) % 2:
            return 0
        return binom((n - k) // 2 + k - 1, k - 1)
    if preset is Preset.NATURAL:
        return sum(
            (m - 1) ** (i - k) * binom(i - 1, k - 1) * binom(n + i - 1, 2 * i - 1)
            for i in range(k, n + 1)
        )
    if preset is Preset.GE2:
        return sum(
            (m - 1) ** j * binom(j + k - 1, k - 1) * binom(n - k - j - 1, k + j - 1)
            for j in range(max(0, n // 2 - k) + 1)
        )
    if preset is Preset.TWO_THREE:
        return sum(
            (m - 1) ** j * binom(j + k - 1, k - 1) * binom(k + j, n - 2 * k - 2 * j)
            for j in range(n // 2 + 1)
        )
    raise ValueError("custom seeds have no closed form")


@dataclass(frozen=True)
class FormCheck:
    """One comparison of a triangle entry against its closed form."""

    m: int
    n: int
    k: int
    engine: int
    formula: int

    @property
    def ok(self) -> bool:
        return self.engine == self.formula


def check_closed_forms(
    preset: Preset | str, order: int, m_values: tuple[int, ...] = (1, 2, 3)
) -> list[FormCheck]:
    """Compare recurrence-built triangles against the explicit forms.

    Results are ordered by (m, n, k).  Depths without a known form for the
    preset are skipped rather than failed.
    """
    from .sequences import make_seed
    from .triangle import triangle_recurrence

    preset = Preset(preset)
    results: list[FormCheck] = []
    for m in m_values:
        if preset is Preset.ODD and m != 1:
            continue
        tri = triangle_recurrence(make_seed(preset, order), m, order)
        for n in range(1, order + 1):
            for k in range(1, n + 1):
                results.append(FormCheck(m, n, k, tri.value(n, k), closed_form(preset, m, n, k)))
    return results


def check_binomial_inversion(n: int, k: int) -> bool:
    """C(n-1, k-1) == sum_{j=1}^{k} (-1)^(j+k) C(k, j) C(n+j-1, n)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rhs = sum((-1) ** (j + k) * binom(k, j) * binom(n + j - 1, n) for j in range(1, k + 1))
    return binom(n - 1, k - 1) == rhs


def check_power_expansion(m: int, n: int, k: int) -> bool:
    """m^(n-k) C(n-1, k-1) == sum_j (m-1)^j C(n-1, k+j-1) C(k+j-1, j), m > 1."""
    if m <= 1:
        raise ValueError("defined for m > 1")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    lhs = m ** (n - k) * binom(n - 1, k - 1)
    rhs = sum(
        (m - 1) ** j * binom(n - 1, k + j - 1) * binom(k + j - 1, j)
        for j in range(n - k + 1)
    )
    return lhs == rhs


def check_word_binomial(n: int, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """C(n+k-1, 2k-1) counts ternary words of length n-1 that avoid the
    factor 01 and contain exactly k-1 twos; checked by enumeration."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k > n:
        return binom(n + k - 1, 2 * k - 1) == 0
    model = WordModel(3, n - 1, Restriction.AVOID_01, 2, k - 1)
    return binom(n + k - 1, 2 * k - 1) == count_words(model, budget)


def chebyshev_u(d: int) -> PolynomialZ:
    """Coefficients of the degree-d Chebyshev polynomial of the second kind,
    ascending by degree: u_0 = 1, u_1 = 2x, u_d = 2x u_(d-1) - u_(d-2)."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    prev: PolynomialZ = (1,)
    if d == 0:
        return prev
    cur: PolynomialZ = (0, 2)
    for _ in range(d - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, tuple(nxt)
    return cur


def check_chebyshev(n: int, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """|coefficient of x^(n-k) in u_(n+k-2)| == 2^(n-k) C(n-1, k-1), and both
    equal the number of ternary words of length n-1 with exactly k-1 twos."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    magnitude = abs(chebyshev_u(n + k - 2)[n - k])
    closed = 2 ** (n - k) * binom(n - 1, k - 1)
    words = count_words(WordModel(3, n - 1, Restriction.NONE, 2, k - 1), budget)
    return magnitude == closed == words
