from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmkraft.weil import (
    DensityError,
    FieldSize,
    b_number_bucket,
    b_range,
    count_classes,
    density_report,
    disc,
    is_ordinary,
    is_weil_surface,
    legendre,
    render_decimal,
)
from oracles import brute_census, grid, roots_on_circle


def test_small_examples():
    assert is_weil_surface(3, 0, 0)
    assert is_weil_surface(3, 0, 6)       # (X^2 + 3)^2
    assert not is_weil_surface(3, 0, 7)
    assert is_weil_surface(3, 6, 15)      # h = (T + 3)^2, inside [-2sqrt3, 2sqrt3]
    assert not is_weil_surface(3, 7, 15)
    assert b_range(3, 7) is None
    assert is_ordinary(3, 1) and not is_ordinary(3, 6)


def test_lower_bound_boundary():
    # b + 2q = 0 with a = 0: h(T) = T^2 - 12 has roots +-2sqrt3, on the edge
    assert is_weil_surface(3, 0, -6)
    assert roots_on_circle(3, 0, -6)
    assert not is_weil_surface(3, 0, -7)
    # the printed bound 2|a|sqrt(q) - 2sqrt(q) would admit this point
    assert not is_weil_surface(3, 2, -2) and not roots_on_circle(3, 2, -2)
    assert is_weil_surface(3, 2, 1)


def test_lower_bound_is_rounded_up():
    # b + 2q >= 2|a| sqrt(q) with a non-square right side
    lo, hi = b_range(5, 3)
    assert lo == 4  # 2*3*sqrt5 = 13.41..., so b + 10 >= 14
    assert hi == (9 + 40) // 4


@pytest.mark.parametrize("q", [3, 5, 9])
def test_matches_root_modulus_oracle(q):
    bad = [(a, b) for a, b in grid(q) if is_weil_surface(q, a, b) != roots_on_circle(q, a, b)]
    assert bad == []


@pytest.mark.parametrize("q,p", [(3, 3), (9, 3), (27, 3), (5, 5), (25, 5), (7, 7)])
def test_count_matches_brute_force(q, p):
    from math import isqrt
    a = isqrt(16 * q)
    assert count_classes(q, -a, a) == brute_census(q, p)


def test_sign_symmetry_exhaustive_q3():
    for a, b in grid(3):
        assert is_weil_surface(3, a, b) == is_weil_surface(3, -a, b)
        assert b_number_bucket(3, a, b) == b_number_bucket(3, -a, b)


def test_sign_symmetry():
    for q in (3, 25, 27):
        for a in range(0, 21):
            assert b_range(q, a) == b_range(q, -a)
        a = 4
        r = b_range(q, a)
        for b in range(r[0], r[1] + 1):
            assert b_number_bucket(q, a, b) == b_number_bucket(q, -a, b)


def test_legendre_and_bucket():
    assert [legendre(m, 5) for m in range(5)] == [0, 1, -1, -1, 1]
    assert disc(5, 0, 1) == 36
    assert b_number_bucket(5, 0, 1) == 2
    assert b_number_bucket(5, 1, 1) == 1   # 37 is a non-residue mod 5
    assert b_number_bucket(3, 1, 1) == 1   # 21 is divisible by 3


def test_field_size_errors():
    with pytest.raises(DensityError, match="odd"):
        density_report(2, 3)
    with pytest.raises(DensityError, match="not prime"):
        FieldSize(9, 1)
    with pytest.raises(DensityError):
        FieldSize(3, 0)
    with pytest.raises(DensityError):
        is_weil_surface(12, 0, 0)
    assert FieldSize.from_q(243) == FieldSize(3, 5)


def test_report_is_exact():
    rep = density_report(3, 1)
    assert (rep.total, rep.b1, rep.b2) == (40, 32, 8)
    assert rep.d1 == Fraction(4, 5) and rep.d1 + rep.d2 == 1
    assert rep.csv_row() == "3,40,32,8,0.8000000000,0.2000000000"
    d = rep.to_dict()
    assert d["d2"] == {"numerator": 1, "denominator": 5, "decimal": "0.2000000000"}


@pytest.mark.parametrize("p,n", [(3, 4), (5, 2), (7, 1)])
def test_parallel_partition_is_deterministic(p, n):
    serial = density_report(p, n)
    assert density_report(p, n, workers=2) == serial
    assert density_report(p, n, workers=3) == serial


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 9, 27, 5, 25]), st.integers(-30, 30), st.integers(-30, 30))
def test_chunking_is_additive(q, lo, mid):
    amax = 4 * int(q ** 0.5) + 1
    lo, mid = sorted((max(-amax, lo), min(amax, mid)))
    left = count_classes(q, -amax, lo - 1)
    middle = count_classes(q, lo, mid)
    right = count_classes(q, mid + 1, amax)
    whole = count_classes(q, -amax, amax)
    assert tuple(map(sum, zip(left, middle, right))) == whole


def test_half_even_rendering():
    assert render_decimal(Fraction(1, 3)) == "0.3333333333"
    assert render_decimal(Fraction(2, 3)) == "0.6666666667"
    # exact ties at the 11th digit round to even
    assert render_decimal(Fraction(5, 10 ** 11)) == "0.0000000000"
    assert render_decimal(Fraction(15, 10 ** 11)) == "0.0000000002"
    assert render_decimal(Fraction(1), 3) == "1.000"
