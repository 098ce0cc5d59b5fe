"""Exact arithmetic rank oracle: prime fields, jet matrices, secant
dimensions, projection finiteness and limit hyperplane sections.

Defectivity values asserted here were computed independently with exact
rational arithmetic; a modular rank equal to the expected dimension is a
proof of non-defectivity, so the certified entries are unconditional.
"""

import json
import random
from fractions import Fraction
from math import comb, gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from grassdef import (
    CERTIFIED,
    CONSTANT_MAP,
    DEFAULT_PRIME,
    DEFECT_EVIDENCE,
    FIBER_EVIDENCE,
    GENERICALLY_FINITE,
    HYPOTHESIS_VIOLATED,
    CapExceeded,
    GrassShape,
    PrimeField,
    RationalNormalCurve,
    SegreVeroneseShape,
    TangentDevelopable,
    build_parametrization,
    is_probable_prime,
    jet_matrix,
    limit_hyperplane_coeffs,
    osculating_dim_grass,
    osculating_dim_sv,
    osculating_projection_finite,
    osculating_rank_sweep,
    rank,
    secant_dimension,
    tangential_projection_finite,
)
from grassdef.bounds import grass_bound


def grass_coord_point(shape, I):
    P = build_parametrization(shape)
    pt = [0] * P.domain_dim
    for row, col in enumerate(I):
        pt[row * (shape.n + 1) + col] = 1
    return tuple(pt)


def sv_coord_point(shape, value):
    pt = []
    for nj in shape.n:
        unit = [0] * (nj + 1)
        unit[value] = 1
        pt.extend(unit)
    return tuple(pt)


# ---------------------------------------------------------------------------
# prime field and rank


def test_default_prime_is_a_62_bit_prime():
    assert DEFAULT_PRIME == (1 << 62) - 57
    assert DEFAULT_PRIME.bit_length() == 62
    assert is_probable_prime(DEFAULT_PRIME)
    assert sympy.isprime(DEFAULT_PRIME)


def test_prime_field_validation():
    PrimeField(DEFAULT_PRIME)
    with pytest.raises(ValueError):
        PrimeField(101)
    with pytest.raises(ValueError):
        PrimeField((1 << 62) - 58)


def test_rank_known_matrices():
    field = PrimeField(DEFAULT_PRIME)
    identity = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert rank(identity) == 4
    assert rank(identity, field) == 4
    singular = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(singular) == 2
    assert rank(singular, field) == 2
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([{0: 5, 2: -1}, {2: 7}]) == 2


@given(st.integers(0, 2**32))
def test_rank_of_rational_vs_modular_on_random_small(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    matrix = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    assert rank(matrix) == rank(matrix, PrimeField(DEFAULT_PRIME))


# ---------------------------------------------------------------------------
# parametrizations and jets


def test_grass_parametrization_is_pluecker():
    shape = GrassShape(1, 3)
    P = build_parametrization(shape)
    assert P.ncols == 6
    assert all(len(monomials) == 2 for monomials in P.coords)
    # the image satisfies the Pluecker quadric p01 p23 - p02 p13 + p03 p12
    rng = random.Random(5)
    for _ in range(20):
        matrix = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(2)]

        def minor(i, j):
            return matrix[0][i] * matrix[1][j] - matrix[0][j] * matrix[1][i]

        values = {}
        flat = [v for row in matrix for v in row]
        for col, monomials in enumerate(P.coords):
            total = 0
            for coef, expo in monomials:
                term = coef
                for v, e in enumerate(expo):
                    term *= flat[v] ** e
                total += term
            values[col] = total
        p01, p02, p03, p12, p13, p23 = (values[c] for c in range(6))
        assert (p01, p02, p03, p12, p13, p23) == (
            minor(0, 1), minor(0, 2), minor(0, 3),
            minor(1, 2), minor(1, 3), minor(2, 3),
        )
        assert p01 * p23 - p02 * p13 + p03 * p12 == 0


def test_grass_parametrization_cap():
    with pytest.raises(CapExceeded):
        build_parametrization(GrassShape(6, 13))


def test_jet_matrix_row_count_is_nominal():
    shape = GrassShape(1, 3)
    P = build_parametrization(shape)
    jm = jet_matrix(P, grass_coord_point(shape, (0, 1)), 2)
    assert jm.row_count == comb(P.domain_dim + 2, 2)


def test_jet_rows_at_coordinate_points_are_singletons():
    for shape in (GrassShape(1, 4), GrassShape(2, 5)):
        P = build_parametrization(shape)
        jm = jet_matrix(P, grass_coord_point(shape, tuple(range(shape.r + 1))), 1)
        for _, row in jm.iter_rows():
            assert len(row) == 1


def test_rank_sweep_matches_individual_jet_matrices():
    shape = GrassShape(1, 4)
    P = build_parametrization(shape)
    pt = grass_coord_point(shape, (0, 1))
    sweep = osculating_rank_sweep(P, pt, 3)
    for s in range(4):
        assert sweep[s] == rank(jet_matrix(P, pt, s))


def test_rnc_jets_at_origin():
    P = build_parametrization(RationalNormalCurve(6))
    assert osculating_rank_sweep(P, (0,), 4) == [1, 2, 3, 4, 5]


def test_tangent_developable_order_two_rank():
    P = build_parametrization(TangentDevelopable(5))
    for t in (3, 7, 11):
        ranks = osculating_rank_sweep(P, (t, 5), 2)
        assert ranks[2] - 1 == 3


# ---------------------------------------------------------------------------
# secant dimensions

CERTIFIED_CASES = [
    (GrassShape(1, 4), 2, 9),
    (GrassShape(2, 6), 2, 25),
    (GrassShape(3, 7), 2, 33),
    (GrassShape(2, 8), 3, 56),
]


@pytest.mark.parametrize("shape,h,expected", CERTIFIED_CASES)
def test_certified_secant_dimensions(shape, h, expected):
    cert = secant_dimension(shape, h)
    assert cert.expected_dim == expected
    assert cert.computed_dim == expected
    assert cert.defect == 0
    assert cert.verdict == CERTIFIED


DEFECTIVE_CASES = [
    (GrassShape(1, 5), 2, 14, 13),
    (GrassShape(2, 6), 3, 34, 33),
    (GrassShape(3, 7), 3, 50, 49),
    (GrassShape(3, 7), 4, 67, 63),
    (GrassShape(2, 8), 4, 75, 73),
    (SegreVeroneseShape((2,), (2,)), 2, 5, 4),
    (SegreVeroneseShape((1, 1), (2, 2)), 3, 8, 7),
    (SegreVeroneseShape((1, 1, 1), (1, 1, 2)), 3, 11, 10),
    (SegreVeroneseShape((1, 1, 1, 1), (1, 1, 1, 1)), 3, 14, 13),
    (SegreVeroneseShape((2, 2, 2), (1, 1, 1)), 4, 26, 25),
]


@pytest.mark.parametrize("shape,h,expected,computed", DEFECTIVE_CASES)
def test_defective_secant_dimensions(shape, h, expected, computed):
    cert = secant_dimension(shape, h)
    assert cert.expected_dim == expected
    assert cert.computed_dim == computed
    assert cert.defect == expected - computed
    assert cert.verdict == DEFECT_EVIDENCE
    assert "evidence" in cert.note.lower() or cert.note


def test_secant_certificate_serialization():
    cert = secant_dimension(GrassShape(1, 4), 2)
    payload = cert.to_dict()
    assert sorted(payload) == [
        "computed", "defect", "elapsed_ms", "expected", "h",
        "prime", "seed", "shape", "trials", "verdict",
    ]
    assert payload["elapsed_ms"] is None
    assert cert.elapsed_ms is not None
    assert cert.to_dict(with_timing=True)["elapsed_ms"] > 0
    decoded = json.loads(cert.to_json())
    assert decoded == payload
    assert cert.to_json() == json.dumps(payload, sort_keys=True, separators=(",", ":"))


def test_secant_is_deterministic_in_seed():
    a = secant_dimension(GrassShape(1, 4), 2, seed=99)
    b = secant_dimension(GrassShape(1, 4), 2, seed=99)
    assert a.to_dict() == b.to_dict()


def test_secant_rational_prime_agrees():
    a = secant_dimension(SegreVeroneseShape((2,), (2,)), 2, trials=1, prime="rational")
    assert a.computed_dim == 4
    assert a.prime == "rational"


def test_secant_saturates_at_ambient():
    cert = secant_dimension(RationalNormalCurve(4), 5)
    assert cert.expected_dim == 4
    assert cert.computed_dim == 4


def test_secant_parameter_validation():
    with pytest.raises(ValueError):
        secant_dimension(GrassShape(1, 4), 0)
    with pytest.raises(ValueError):
        secant_dimension(GrassShape(1, 4), 1, trials=0)
    with pytest.raises(ValueError):
        secant_dimension(GrassShape(1, 4), 1, trials=65)
    with pytest.raises(ValueError):
        secant_dimension(GrassShape(1, 4), 1, prime=101)


def test_bound_consistency_with_oracle():
    # at h equal to the certified bound the oracle must agree, shape by shape
    table = {
        (2, 5): 2, (2, 6): 2, (2, 7): 3, (3, 7): 2, (2, 8): 3, (3, 8): 3,
        (2, 9): 4, (4, 9): 3, (3, 9): 3, (4, 10): 3, (2, 10): 4, (3, 10): 3,
        (2, 11): 5, (2, 12): 5, (2, 13): 5, (2, 14): 6,
    }
    for (r, n), max_h in sorted(table.items()):
        assert grass_bound(r, n).max_h == max_h
        shape = GrassShape(r, n)
        assert shape.num_coords <= 462
        cert = secant_dimension(shape, max_h, trials=1)
        assert cert.verdict == CERTIFIED, (r, n, max_h)


# ---------------------------------------------------------------------------
# tangential projections

TANGENTIAL_CASES = [
    (RationalNormalCurve(4), 1, GENERICALLY_FINITE),
    (RationalNormalCurve(5), 1, GENERICALLY_FINITE),
    (RationalNormalCurve(6), 1, GENERICALLY_FINITE),
    (RationalNormalCurve(6), 2, GENERICALLY_FINITE),
    (GrassShape(2, 6), 1, GENERICALLY_FINITE),
    (SegreVeroneseShape((1, 1, 1), (1, 1, 1)), 1, GENERICALLY_FINITE),
    (SegreVeroneseShape((2,), (2,)), 1, FIBER_EVIDENCE),
    (SegreVeroneseShape((3,), (2,)), 1, FIBER_EVIDENCE),
    (SegreVeroneseShape((4,), (2,)), 1, FIBER_EVIDENCE),
    (SegreVeroneseShape((4,), (2,)), 2, FIBER_EVIDENCE),
    (GrassShape(1, 4), 1, HYPOTHESIS_VIOLATED),
    (GrassShape(1, 5), 1, HYPOTHESIS_VIOLATED),
    (SegreVeroneseShape((3,), (2,)), 2, HYPOTHESIS_VIOLATED),
]


@pytest.mark.parametrize("shape,h,status", TANGENTIAL_CASES)
def test_tangential_projection_statuses(shape, h, status):
    report = tangential_projection_finite(shape, h)
    assert report.status == status
    assert report.kind == "tangential"


def test_tangential_finiteness_matches_secant_increment():
    # projection away from h tangent spaces is generically finite exactly
    # when the (h+1)-secant variety jumps by a full dim X + 1
    for shape, h in [
        (RationalNormalCurve(6), 1),
        (RationalNormalCurve(6), 2),
        (GrassShape(2, 6), 1),
        (SegreVeroneseShape((2,), (2,)), 1),
    ]:
        report = tangential_projection_finite(shape, h)
        assert report.status in (GENERICALLY_FINITE, FIBER_EVIDENCE)
        low = secant_dimension(shape, h).computed_dim
        high = secant_dimension(shape, h + 1).computed_dim
        finite = high - low == shape.dim + 1
        assert (report.status == GENERICALLY_FINITE) == finite


# ---------------------------------------------------------------------------
# osculating projections

OSCULATING_CASES = [
    (GrassShape(2, 5), [((0, 1, 2), 1)], GENERICALLY_FINITE, 10),
    (GrassShape(2, 5), [((0, 1, 2), 2)], CONSTANT_MAP, 1),
    (GrassShape(1, 4), [((0, 1), 1)], FIBER_EVIDENCE, 3),
    (GrassShape(2, 6), [((0, 1, 2), 2)], FIBER_EVIDENCE, 4),
    (GrassShape(2, 6), [((0, 1, 2), 1)], GENERICALLY_FINITE, 22),
    (GrassShape(2, 7), [((0, 1, 2), 1), ((3, 4, 5), 1)], GENERICALLY_FINITE, 24),
    (SegreVeroneseShape((1, 1), (2, 2)), [(0, 2)], GENERICALLY_FINITE, 3),
]


@pytest.mark.parametrize("shape,centers,status,survivors", OSCULATING_CASES)
def test_osculating_projection_cases(shape, centers, status, survivors):
    report = osculating_projection_finite(shape, centers)
    assert report.status == status
    assert report.survivors == survivors


def test_osculating_projection_rnc_sweep():
    for n in range(3, 9):
        for a in range(0, n - 1):
            b = n - 2 - a
            report = osculating_projection_finite(
                RationalNormalCurve(n), [(0, a), (n, b)]
            )
            assert report.status == CONSTANT_MAP
        for a in range(0, n - 2):
            b = n - 3 - a
            report = osculating_projection_finite(
                RationalNormalCurve(n), [(0, a), (n, b)]
            )
            assert report.status == GENERICALLY_FINITE


def test_osculating_projection_center_validation():
    shape = GrassShape(2, 7)
    with pytest.raises(ValueError):
        osculating_projection_finite(shape, [((0, 1, 2), 1), ((2, 3, 4), 1)])
    with pytest.raises(ValueError):
        osculating_projection_finite(shape, [])
    with pytest.raises(ValueError):
        osculating_projection_finite(shape, [((0, 1, 2), -1)])
    sv = SegreVeroneseShape((1, 2), (2, 1))
    with pytest.raises(ValueError):
        osculating_projection_finite(sv, [(2, 1)])
    with pytest.raises(ValueError):
        osculating_projection_finite(sv, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        osculating_projection_finite(RationalNormalCurve(5), [(2, 1)])


def test_osculating_projection_survivor_count_is_ball_complement():
    shape = GrassShape(2, 6)
    report = osculating_projection_finite(shape, [((0, 1, 2), 1)])
    from grassdef import ball

    expected = shape.num_coords - len(ball(shape, (0, 1, 2), 1))
    assert report.survivors == expected


# ---------------------------------------------------------------------------
# limit hyperplanes


def test_limit_hyperplane_worked_values():
    assert limit_hyperplane_coeffs(3, 3, 0, 0, 1).coeffs == (3, -2, 1, 0)
    assert limit_hyperplane_coeffs(5, 5, 0, 2, 1).coeffs == (10, -4, 1, 0, 0, 0)
    section = limit_hyperplane_coeffs(4, 1, 0, 0, 1)
    assert section.trivial
    assert section.coeffs == (1, 0)


def test_limit_hyperplane_validation():
    with pytest.raises(ValueError):
        limit_hyperplane_coeffs(2, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        limit_hyperplane_coeffs(4, 5, 0, 0, 1)
    with pytest.raises(ValueError):
        limit_hyperplane_coeffs(4, 2, -1, 0, 1)


@given(st.integers(0, 2**32))
@settings(max_examples=100)
def test_limit_hyperplane_exactness(seed):
    rng = random.Random(seed)
    k1, k2 = rng.randint(0, 3), rng.randint(0, 3)
    D = rng.randint(k1 + k2 + 2, k1 + k2 + 8)
    s = rng.randint(0, D)
    sbar = rng.randint(0, 4)
    section = limit_hyperplane_coeffs(D, s, sbar, k1, k2)
    coeffs = section.coeffs
    assert len(coeffs) == s + 1
    assert coeffs[0] > 0
    if s < D - k2:
        assert section.trivial
        assert coeffs == (1,) + (0,) * s
        return
    assert gcd(*coeffs) == 1
    q = s - D + k2 + 1
    for j in range(D - k2, s + 1):
        residual = sum(
            Fraction(coeffs[t]) * comb(sbar + j, j - t)
            for t in range(min(j, q) + 1)
        )
        assert residual == 0
