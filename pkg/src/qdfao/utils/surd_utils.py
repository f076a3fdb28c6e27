# qdfao/utils/surd_utils.py
"""Integer helpers on surds (A + B*sqrt(D)) / C shared by the models and qexact."""

from math import gcd, isqrt


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def split_square(n: int) -> tuple[int, int]:
    """Returns (s, r) with n = s*s*r and r square-free."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    s, r, f = 1, n, 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            s *= f
        f += 1
    return s, r


def floor_surd(a: int, b: int, d: int, c: int) -> int:
    """
    Exact floor of (a + b*sqrt(d)) / c for c > 0 and d not a perfect square (or b = 0).
    b*sqrt(d) is irrational, so its floor is isqrt(b^2 d) when b > 0 and -isqrt(b^2 d) - 1 when b < 0.
    """
    if c <= 0:
        raise ValueError("denominator must be positive")
    if b == 0:
        return a // c
    r = isqrt(b * b * d)
    s = r if b > 0 else -r - 1
    return (a + s) // c


def surd_sign(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) for irrational sqrt(d)."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b > 0:
        return 1
    if a <= 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with b^2 d
    if a * a > b * b * d:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def normalize(a: int, b: int, d: int, c: int) -> tuple[int, int, int, int]:
    if c < 0:
        a, b, c = -a, -b, -c
    g = gcd(gcd(a, b), c)
    if g > 1:
        a, b, c = a // g, b // g, c // g
    return a, b, d, c
