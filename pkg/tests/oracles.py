"""Independent numeric checks used by the weil tests and the acceptance run."""
import math

import mpmath
import numpy as np


def _precise(q, a, b):
    with mpmath.workdps(60):
        roots = mpmath.polyroots([1, a, b, q * a, q * q], maxsteps=3000, extraprec=1000)
        r = mpmath.sqrt(q)
        return max(abs(abs(z) - r) for z in roots) / r < mpmath.mpf("1e-15")


def roots_on_circle(q, a, b):
    """All complex roots of X^4 + aX^3 + bX^2 + qaX + q^2 have modulus sqrt(q).

    float64 roots settle clear cases; repeated roots only lose about half the
    digits, so anything that is not clearly on or off the circle is re-solved
    in mpmath.
    """
    roots = np.roots([1, a, b, q * a, q * q])
    dev = float(np.max(np.abs(np.abs(roots) - q ** 0.5))) / q ** 0.5
    if dev < 1e-12:
        return True
    if dev > 1e-2:
        return False
    return _precise(q, a, b)


def grid(q):
    """a in [-ceil(4 sqrt q), ceil(4 sqrt q)], b in [-8q, 8q]."""
    amax = math.isqrt(16 * q)
    if amax * amax < 16 * q:
        amax += 1
    for a in range(-amax, amax + 1):
        for b in range(-8 * q, 8 * q + 1):
            yield a, b


def brute_census(q, p):
    """(total, b1, b2) by walking every b; slow but has no residue tricks."""
    total = b2 = 0
    amax = math.isqrt(16 * q)
    for a in range(-amax, amax + 1):
        for b in range(-6 * q, 6 * q + 1):
            if a * a > 16 * q or 4 * b > a * a + 8 * q:
                continue
            if b + 2 * q < 0 or (b + 2 * q) ** 2 < 4 * a * a * q:
                continue
            if b % p == 0:
                continue
            total += 1
            d = (a * a - 4 * (b - 2 * q)) % p
            if d and pow(d, (p - 1) // 2, p) == 1:
                b2 += 1
    return total, total - b2, b2
