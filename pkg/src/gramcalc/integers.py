"""Exact integer kernel: binomial coefficients and multifactorials.

Everything here returns plain Python ints, which are arbitrary precision,
so no identity check downstream ever loses exactness to overflow.
"""

from __future__ import annotations

import math

__all__ = ["binomial", "multifactorial", "rising_product"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 outside 0 <= k <= n.

    Returning 0 instead of raising for out-of-range k keeps convolution
    sums uniform (no clamping needed at the boundaries).
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multifactorial(n: int, r: int) -> int:
    """Step-r factorial n!_r: n (n-r) (n-2r) ... down to the base window.

    The recurrence is n!_r = n * (n-r)!_r with base cases
    (1-r)!_r = ... = (-1)!_r = 0!_r = 1.  Values below the base window
    are undefined and rejected.

    r=1 gives the factorial, r=2 the double factorial.
    """
    if r < 1:
        raise ValueError(f"multifactorial requires r >= 1, got r={r}")
    if n < 1 - r:
        raise ValueError(f"multifactorial undefined for n < 1 - r (n={n}, r={r})")
    result = 1
    while n > 0:
        result *= n
        n -= r
    return result


def rising_product(m: int, n: int, r: int) -> int:
    """Product m (m+r) (m+2r) ... (m+(n-1)r); the empty product (n=0) is 1.

    This is the denominator-cleared form of the multifactorial ratio
    (m+(n-1)r)!_r / (m-r)!_r, computed multiplicatively so it is total in
    m (no spurious domain errors, no division).
    """
    if n < 0:
        raise ValueError(f"rising_product requires n >= 0, got n={n}")
    if r < 1:
        raise ValueError(f"rising_product requires r >= 1, got r={r}")
    result = 1
    for j in range(n):
        result *= m + j * r
    return result
