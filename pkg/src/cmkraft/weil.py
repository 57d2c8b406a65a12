"""Census of ordinary abelian-surface Weil polynomials over F_q.

A class is given by (a, b) with characteristic polynomial
X^4 + a X^3 + b X^2 + q a X + q^2.  All tests are exact integer comparisons.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

__all__ = [
    "DensityError",
    "FieldSize",
    "DensityReport",
    "is_weil_surface",
    "is_ordinary",
    "legendre",
    "disc",
    "b_number_bucket",
    "b_range",
    "count_classes",
    "density_report",
    "render_decimal",
]


class DensityError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class FieldSize:
    p: int
    n: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise DensityError(f"p={self.p} is not prime")
        if self.p == 2:
            raise DensityError("p must be odd")
        if self.n < 1:
            raise DensityError("n must be at least 1")

    @property
    def q(self) -> int:
        return self.p ** self.n

    @classmethod
    def from_q(cls, q: int) -> "FieldSize":
        if q < 3:
            raise DensityError(f"q={q} is not an odd prime power")
        p = next(d for d in range(2, q + 1) if q % d == 0)
        n, m = 0, q
        while m % p == 0:
            m //= p
            n += 1
        if m != 1:
            raise DensityError(f"q={q} is not a prime power")
        return cls(p, n)


def _check_q(q: int) -> int:
    return FieldSize.from_q(q).p


def b_range(q: int, a: int) -> tuple[int, int] | None:
    """Inclusive range of b making (a, b) a Weil class, or None.

    The quadratic h(T) = T^2 + aT + (b - 2q) must have both roots real and in
    [-2 sqrt q, 2 sqrt q]:  a^2 <= 16q,  4b <= a^2 + 8q  and
    b + 2q >= 2|a| sqrt q, the last one as (b + 2q)^2 >= 4 a^2 q.
    """
    if a * a > 16 * q:
        return None
    hi = (a * a + 8 * q) // 4
    # least c >= 0 with c^2 >= 4 a^2 q
    t = 4 * a * a * q
    c = math.isqrt(t)
    if c * c < t:
        c += 1
    lo = c - 2 * q
    return (lo, hi) if lo <= hi else None


def is_weil_surface(q: int, a: int, b: int) -> bool:
    _check_q(q)
    r = b_range(q, a)
    return r is not None and r[0] <= b <= r[1]


def is_ordinary(p: int, b: int) -> bool:
    return b % p != 0


def legendre(m: int, p: int) -> int:
    m %= p
    if m == 0:
        return 0
    return 1 if pow(m, (p - 1) // 2, p) == 1 else -1


def disc(q: int, a: int, b: int) -> int:
    """Discriminant a^2 - 4(b - 2q) of the real quadratic h."""
    return a * a - 4 * (b - 2 * q)


def b_number_bucket(q: int, a: int, b: int) -> int:
    """2 if p splits in the real quadratic field (legendre = +1), else 1."""
    p = _check_q(q)
    return 2 if legendre(disc(q, a, b), p) == 1 else 1


def _count_in_residue(lo: int, hi: int, r: int, p: int) -> int:
    """How many b in [lo, hi] have b = r mod p."""
    return (hi - r) // p - (lo - 1 - r) // p


def count_classes(q: int, a_lo: int, a_hi: int) -> tuple[int, int, int]:
    """(total, b1, b2) over ordinary Weil classes with a_lo <= a <= a_hi.

    b is bucketed by its residue mod p, so the work is O(p) per value of a.
    """
    p = _check_q(q)
    total = b2 = 0
    for a in range(a_lo, a_hi + 1):
        r = b_range(q, a)
        if r is None:
            continue
        lo, hi = r
        for res in range(1, p):
            k = _count_in_residue(lo, hi, res, p)
            if not k:
                continue
            total += k
            if legendre(a * a - 4 * (res - 2 * q), p) == 1:
                b2 += k
    return total, total - b2, b2


def render_decimal(x: Fraction, digits: int = 10) -> str:
    """Round half to even at ``digits`` fractional digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 40
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return format(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN), "f")


@dataclass(frozen=True)
class DensityReport:
    q: int
    p: int
    n: int
    total: int
    b1: int
    b2: int

    @property
    def d1(self) -> Fraction:
        return Fraction(self.b1, self.total)

    @property
    def d2(self) -> Fraction:
        return Fraction(self.b2, self.total)

    def csv_row(self) -> str:
        return ",".join(
            [str(self.q), str(self.total), str(self.b1), str(self.b2),
             render_decimal(self.d1), render_decimal(self.d2)]
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "n": self.n,
            "total": self.total,
            "b1": self.b1,
            "b2": self.b2,
            "d1": {"numerator": self.d1.numerator, "denominator": self.d1.denominator,
                   "decimal": render_decimal(self.d1)},
            "d2": {"numerator": self.d2.numerator, "denominator": self.d2.denominator,
                   "decimal": render_decimal(self.d2)},
        }


CSV_HEADER = "q,total,b1,b2,d1,d2"


def _chunks(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    step = max(1, -(-(hi - lo + 1) // k))
    return [(s, min(s + step - 1, hi)) for s in range(lo, hi + 1, step)]


def density_report(p: int, n: int, workers: int = 1) -> DensityReport:
    fs = FieldSize(p, n)
    q = fs.q
    amax = math.isqrt(16 * q)
    if workers <= 1:
        total, b1, b2 = count_classes(q, -amax, amax)
    else:
        parts = _chunks(-amax, amax, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(count_classes, [q] * len(parts),
                                  [lo for lo, _ in parts], [hi for _, hi in parts]))
        total = sum(r[0] for r in results)
        b1 = sum(r[1] for r in results)
        b2 = sum(r[2] for r in results)
    if total == 0:
        raise DensityError(f"no ordinary Weil classes for q={q}")
    return DensityReport(q, p, n, total, b1, b2)
