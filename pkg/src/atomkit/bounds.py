"""Exact values of the atom complexity bound f(n, r).

All arithmetic is on Python ints and Fractions; nothing here touches floats.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binom(i: int, j: int) -> int:
    """``i`` choose ``j``, zero when ``j`` is outside ``0..i``.

    The upper index comes first.  Where the binomial is written with the
    upper index as a superscript (C_j^i), that is ``binom(i, j)``.
    """
    if i < 0:
        raise ValueError(f"binom: negative upper index {i}")
    if j < 0 or j > i:
        return 0
    return math.comb(i, j)


def _check(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= r <= n:
        raise ValueError(f"r must be in 0..{n}, got {r}")


def atom_bound(n: int, r: int) -> int:
    """Maximal quotient complexity of an atom with ``r`` complemented quotients.

    ``n`` is the quotient complexity of the language.  The atoms with no or
    only complemented quotients are bounded by 2^n - 1; the others by

        1 + sum_{k=1..r} sum_{h=k+1..k+n-r} binom(n, h) * binom(h, k)

    where the leading 1 counts the empty quotient.
    """
    _check(n, r)
    if r == 0 or r == n:
        return 2**n - 1
    total = 1
    for k in range(1, r + 1):
        for h in range(k + 1, k + n - r + 1):
            total += binom(n, h) * binom(h, k)
    return total


def atom_bound_closed(n: int, r: int) -> int:
    """Closed forms of :func:`atom_bound` for r = 1, 2, 3."""
    if r not in (1, 2, 3):
        raise ValueError(f"closed form only for r in 1..3, got {r}")
    if n < 2 or r > n - 1:
        raise ValueError(f"closed form needs n >= 2 and r <= n-1, got n={n}, r={r}")
    head = n * 2 ** (n - 1)
    if r == 1:
        return head - n + 1
    if r == 2:
        return head - 2 * n + n * (n - 1) // 2 * (2 ** (n - 2) - 1) + 1
    coeff, rem = divmod(n * (n - 1) * (n + 4), 6)
    assert rem == 0
    return head - (n * n + n) + coeff * (2 ** (n - 3) - 1) + 1


def max_bound(n: int) -> tuple[int, int]:
    """``(r, f(n, r))`` at the maximizing r = floor(n/2); ``(0, 1)`` for n = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0, 1
    r = n // 2
    return r, atom_bound(n, r)


def symmetry_check(n: int) -> bool:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return all(atom_bound(n, r) == atom_bound(n, n - r) for r in range(1, n))


def growth_ratio(n: int) -> Fraction:
    """Ratio of the maximal bound at ``n`` to the one at ``n - 1``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return Fraction(max_bound(n)[1], max_bound(n - 1)[1])


def decimal_string(x: Fraction, places: int = 6) -> str:
    """Render a nonnegative rational by long division, rounding half up."""
    if x < 0:
        raise ValueError("negative value")
    if places < 0:
        raise ValueError("negative precision")
    scaled, rem = divmod(x.numerator * 10**places, x.denominator)
    if 2 * rem >= x.denominator:
        scaled += 1
    whole, frac = divmod(scaled, 10**places)
    if places == 0:
        return str(whole)
    return f"{whole}.{frac:0{places}d}"


def table_rows(max_n: int, max_r: int | None = None) -> dict:
    """Data behind the bound table: values, column maxima and ratios.

    ``values[r][n-1]`` is None where r > n.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if max_r is None:
        max_r = max_n // 2
    ns = list(range(1, max_n + 1))
    values = [[atom_bound(n, r) if r <= n else None for n in ns] for r in range(max_r + 1)]
    maxima = [max_bound(n)[1] for n in ns]
    ratios = [None] + [growth_ratio(n) for n in ns[1:]]
    return {"n": ns, "values": values, "max": maxima, "ratio": ratios}
