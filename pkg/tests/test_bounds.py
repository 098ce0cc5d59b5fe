"""Non-defectivity bounds and osculating dimension formulas, pinned
against hand computed tables and cross checked between the general branch
formulas and their closed polynomial forms."""

from math import comb

import pytest
from hypothesis import given, strategies as st

from grassdef import (
    GrassShape,
    SegreVeroneseShape,
    aop_bound,
    grass_bound,
    h_m,
    linear_bound,
    osculating_dim_grass,
    osculating_dim_sv,
    sv_bound,
)
from strategies import sv_shapes

# max_h values of the main bound on small parameter pairs
GRASS_TABLE = {
    (2, 5): 2, (2, 6): 2, (2, 7): 3, (2, 8): 3, (2, 9): 4,
    (2, 10): 4, (2, 11): 5, (2, 12): 5, (2, 13): 5, (2, 14): 6,
    (3, 7): 2, (3, 8): 3, (3, 9): 3, (3, 10): 3,
    (4, 9): 3, (4, 10): 3, (4, 11): 4,
    (5, 11): 3, (5, 12): 4,
    (4, 28): 27, (4, 29): 37, (6, 55): 73, (8, 89): 1001,
}


def test_hm_base_values():
    assert h_m(2, 0) == 0
    for m in range(2, 7):
        assert h_m(m, 1) == 1
        assert h_m(m, 3) == m
        assert h_m(m, 5) == m + 1
        assert h_m(m, 7) == m * m
        assert h_m(m, 9) == m * m + 1
        assert h_m(m, 22) == m**3 + m + 1


def test_hm_binary_expansion_definition():
    # h_m(k) reads the binary expansion of k + 1 above the lowest bit
    def reference(m, k):
        if k == 0:
            return 0
        total, power, bits = 0, 1, (k + 1) >> 1
        while bits:
            if bits & 1:
                total += power
            power *= m
            bits >>= 1
        return total

    for m in range(2, 6):
        for k in range(0, 200):
            assert h_m(m, k) == reference(m, k)


def test_hm_halving_identities():
    for m in range(2, 6):
        for k in range(1, 100):
            assert h_m(m, 2 * k) == h_m(m, 2 * k - 1)
    for k in range(0, 100):
        assert h_m(2, k) == (k + 1) // 2


def test_hm_validation():
    with pytest.raises(ValueError):
        h_m(1, 3)
    with pytest.raises(ValueError):
        h_m(2, -1)
    with pytest.raises(TypeError):
        h_m(2.0, 3)


@pytest.mark.parametrize("pair,expected", sorted(GRASS_TABLE.items()))
def test_grass_bound_table(pair, expected):
    r, n = pair
    report = grass_bound(r, n)
    assert report.max_h == expected
    assert report.raw_value == expected - 1
    assert report.branch in ("large_n", "even_r", "odd_r")


def test_grass_bound_statement():
    assert grass_bound(4, 29).statement == "not h-defective for h ≤ 37"


def test_grass_bound_polynomial_rows():
    # for n = r^2 + 3r + 1 the bound equals a polynomial in
    # alpha = (n + 1) // (r + 1)
    rows = {
        4: (29, lambda a: a**2 + 1),
        6: (55, lambda a: a**2 + a + 1),
        8: (89, lambda a: a**3 + 1),
        10: (131, lambda a: a**3 + a + 1),
        12: (181, lambda a: a**3 + a**2 + 1),
        14: (239, lambda a: a**3 + a**2 + a + 1),
        16: (305, lambda a: a**4 + 1),
    }
    for r, (n, poly) in rows.items():
        assert n == r * r + 3 * r + 1
        alpha = (n + 1) // (r + 1)
        assert grass_bound(r, n).max_h == poly(alpha)


def test_grass_bound_validation():
    with pytest.raises(ValueError):
        grass_bound(1, 5)
    with pytest.raises(ValueError):
        grass_bound(2, 4)
    with pytest.raises(ValueError):
        linear_bound(3, 6)
    with pytest.raises(ValueError):
        aop_bound(1, 9)


def test_linear_bound_values():
    assert linear_bound(4, 29).max_h == 13
    assert linear_bound(2, 7).max_h == 3
    assert linear_bound(3, 9).max_h == 3


def test_linear_bound_closed_forms():
    # below the large-n threshold the even branch collapses to a formula
    # independent of alpha; the odd branch min form holds everywhere
    for r in range(2, 13, 2):
        for n in range(2 * r + 1, r * r + 3 * r + 1):
            assert linear_bound(r, n).max_h == (n + 1) // 2 - r // 2
    for r in range(3, 13, 2):
        for n in range(2 * r + 1, 61):
            alpha = (n + 1) // (r + 1)
            want = min(((r - 1) // 2) * alpha + 1, n // 2 - (r - 1) // 2)
            assert linear_bound(r, n).max_h == want


def test_grass_equals_linear_on_boundary_rows():
    for (r, n), value in {
        (6, 13): 4, (8, 17): 5, (10, 21): 6, (12, 25): 7,
        (9, 19): 5, (11, 23): 6,
    }.items():
        assert grass_bound(r, n).max_h == value
        assert linear_bound(r, n).max_h == value


def test_aop_bound_values():
    assert aop_bound(4, 29).max_h == 9
    assert aop_bound(2, 7).max_h == 2
    for r in range(2, 9):
        for n in range(2 * r + 1, 40):
            assert aop_bound(r, n).max_h == (n - r) // 3 + 1


SV_TABLE = [
    (((1, 1), (2, 2)), 2),
    (((1, 1, 1), (1, 1, 2)), 2),
    (((1, 1, 1, 1), (1, 1, 1, 1)), 2),
    (((2, 2, 2), (1, 1, 1)), 3),
]


@pytest.mark.parametrize("factors,expected", SV_TABLE)
def test_sv_bound_table(factors, expected):
    ns, ds = factors
    report = sv_bound(SegreVeroneseShape(ns, ds))
    assert report.max_h == expected
    assert report.raw_value == expected - 1
    assert report.branch == "sv"


def test_sv_bound_veronese_degree_table():
    # closed forms of the bound for a single Veronese factor of odd degree
    forms = {
        3: lambda n1: n1 + 1,
        5: lambda n1: n1 * (n1 + 1) + 1,
        7: lambda n1: n1 * ((n1 + 1) + 1) + 1,
        9: lambda n1: n1 * (n1 + 1) ** 2 + 1,
        11: lambda n1: n1 * ((n1 + 1) ** 2 + 1) + 1,
        13: lambda n1: n1 * ((n1 + 1) ** 2 + n1 + 1) + 1,
        15: lambda n1: n1 * ((n1 + 1) ** 2 + (n1 + 1) + 1) + 1,
        17: lambda n1: n1 * (n1 + 1) ** 3 + 1,
    }
    for d, poly in forms.items():
        for n1 in range(1, 5):
            assert sv_bound(SegreVeroneseShape((n1,), (d,))).max_h == poly(n1)


def test_sv_bound_requires_degree_three():
    with pytest.raises(ValueError):
        sv_bound(SegreVeroneseShape((1, 1), (1, 1)))
    with pytest.raises(TypeError):
        sv_bound(GrassShape(2, 5))


def test_osculating_dim_grass_values():
    assert osculating_dim_grass(2, 5, 2) == 18
    assert osculating_dim_grass(1, 4, 1) == 6
    assert osculating_dim_grass(2, 5, 0) == 0


def test_osculating_dim_grass_saturates_at_ambient():
    for r in range(1, 5):
        for n in range(2 * r + 1, 11):
            N = comb(n + 1, r + 1) - 1
            assert osculating_dim_grass(r, n, r + 1) == N
            assert osculating_dim_grass(r, n, r + 5) == N


def test_osculating_dim_grass_respects_duality():
    for n in range(3, 10):
        for r in range(1, n):
            for s in range(0, 5):
                assert osculating_dim_grass(r, n, s) == osculating_dim_grass(
                    n - r - 1, n, s
                )


def test_osculating_dim_sv_values():
    assert osculating_dim_sv(SegreVeroneseShape((2,), (3,)), 2) == 5
    big = SegreVeroneseShape((1, 3), (2, 3))
    assert osculating_dim_sv(big, 5) == 59
    assert osculating_dim_sv(big, 6) == 59
    assert osculating_dim_sv(SegreVeroneseShape((1, 1, 1), (1, 1, 1)), 1) == 3


@given(sv_shapes(), st.integers(0, 8))
def test_osculating_dim_sv_monotone_and_saturating(shape, s):
    here = osculating_dim_sv(shape, s)
    assert 0 <= here <= shape.ambient_dim
    assert here <= osculating_dim_sv(shape, s + 1)
    assert osculating_dim_sv(shape, shape.d_total) == shape.ambient_dim


@given(sv_shapes(max_factors=2, max_n=2, max_d=2), st.integers(1, 4))
def test_osculating_dim_sv_first_level_is_variety_dim(shape, s):
    assert osculating_dim_sv(shape, 1) == shape.dim
