"""Exact-arithmetic Terracini oracle.

Secant dimensions, generic finiteness of tangential and osculating
projections, and limit hyperplane coefficients, all computed from jets of
explicit polynomial parametrizations.  Arithmetic runs over a fixed large
prime field by default: a full-rank specialization proves a lower bound on
the generic rank, so agreement with the expected dimension is a
certificate, while a deficient rank is evidence of defectivity but not a
proof.  A rational trial can be requested for exact cross-checks.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm

from .indices import (
    GrassShape,
    SegreVeroneseShape,
    _check_grass_index,
    distance,
    enumerate_indices,
)

DEFAULT_PRIME = 4611686018427387847  # the largest prime below 2^62
DEFAULT_TRIALS = 3
DEFAULT_SEED = 1729

_COORD_RANGE = 1 << 20  # sample point coordinates uniformly in [1, 2^20]
_MAX_RESAMPLES = 8
_MINOR_CAP = 5  # permutation expansion of (r+1) x (r+1) minors stops here

CERTIFIED = "CertifiedNonDefective"
DEFECT_EVIDENCE = "DefectEvidence"
GENERICALLY_FINITE = "GenericallyFinite"
FIBER_EVIDENCE = "FiberEvidence"
CONSTANT_MAP = "ConstantMap"
HYPOTHESIS_VIOLATED = "HypothesisViolated"

_EVIDENCE_NOTE = (
    "rank over a random specialization only bounds the generic rank from "
    "below; matching the expected dimension is a certificate, a deficit is "
    "evidence of defectivity but not a proof"
)


class CapExceeded(RuntimeError):
    """Raised when a request exceeds a hard size cap instead of silently
    taking unbounded time or memory."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(p: int) -> bool:
    """Miller-Rabin with the first twelve prime bases; deterministic for
    every modulus below 3.3 * 10^24, in particular for 64-bit inputs."""
    if not isinstance(p, int) or p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d = p - 1
    twos = (d & -d).bit_length() - 1
    d >>= twos
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(twos - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic modulo p.  The modulus must be a prime of at least 31
    bits so that divided powers of the orders used here never meet the
    characteristic."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < (1 << 31):
            raise ValueError("the modulus must be an integer of at least 31 bits")
        if not is_probable_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


# ---------------------------------------------------------------------------
# rank kernels


class RankAccumulator:
    """Incremental rank of a growing list of sparse rows.

    Rows are {column: value} dicts.  Over a prime field the elimination is
    ordinary Gaussian reduction with modular inverses; over the rationals a
    fraction-free integer elimination with per-row gcd reduction keeps the
    entries small.  The rank never exceeds ncols, so callers can stop
    feeding rows once ``saturated`` is true.
    """

    def __init__(self, ncols: int, field: PrimeField | None = None) -> None:
        if ncols < 0:
            raise ValueError("ncols must be nonnegative")
        self.ncols = ncols
        self.field = field
        self._pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def saturated(self) -> bool:
        return len(self._pivots) >= self.ncols

    def add_row(self, row: dict) -> int:
        """Reduce one row against the accumulated pivots; returns the rank
        after the update."""
        if not self.saturated:
            if self.field is not None:
                self._add_mod(row)
            else:
                self._add_exact(row)
        return len(self._pivots)

    def _add_mod(self, row: dict) -> None:
        p = self.field.p
        r = {}
        for c, v in row.items():
            v %= p
            if v:
                r[c] = v
        while r:
            c = min(r)
            piv = self._pivots.get(c)
            if piv is None:
                inv = pow(r[c], p - 2, p)
                self._pivots[c] = {cc: vv * inv % p for cc, vv in r.items()}
                return
            f = r[c]
            for cc, vv in piv.items():
                nv = (r.get(cc, 0) - f * vv) % p
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)

    def _add_exact(self, row: dict) -> None:
        scale = 1
        for v in row.values():
            if isinstance(v, Fraction):
                scale = lcm(scale, v.denominator)
        r: dict[int, int] = {}
        for c, v in row.items():
            iv = int(v * scale)
            if iv:
                r[c] = iv
        while r:
            r = _gcd_reduce(r)
            c = min(r)
            piv = self._pivots.get(c)
            if piv is None:
                self._pivots[c] = r
                return
            pc, rc = piv[c], r[c]
            g = gcd(pc, rc)
            mr, mp = pc // g, rc // g
            new: dict[int, int] = {}
            for cc in set(r) | set(piv):
                nv = mr * r.get(cc, 0) - mp * piv.get(cc, 0)
                if nv:
                    new[cc] = nv
            r = new


def _gcd_reduce(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank(matrix, field: PrimeField | None = None) -> int:
    """Rank of a JetMatrix or of an iterable of rows; rows may be dense
    sequences or sparse {column: value} dicts."""
    if isinstance(matrix, JetMatrix):
        if field is None:
            field = matrix.field
        acc = RankAccumulator(matrix.ncols, field)
        for _, row in sorted(matrix.rows.items()):
            acc.add_row(row)
            if acc.saturated:
                break
        return acc.rank
    rows = []
    ncols = 0
    for row in matrix:
        if isinstance(row, dict):
            d = dict(row)
            if d:
                ncols = max(ncols, max(d) + 1)
        else:
            d = {i: v for i, v in enumerate(row) if v}
            ncols = max(ncols, len(row))
        rows.append(d)
    acc = RankAccumulator(ncols, field)
    for d in rows:
        acc.add_row(d)
        if acc.saturated:
            break
    return acc.rank


# ---------------------------------------------------------------------------
# parametrizations


@dataclass(frozen=True)
class RationalNormalCurve:
    """The degree n rational normal curve in P^n."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer")

    @property
    def dim(self) -> int:
        return 1

    @property
    def num_coords(self) -> int:
        return self.n + 1

    @property
    def ambient_dim(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        return f"RNC({self.n})"


@dataclass(frozen=True)
class TangentDevelopable:
    """The tangent developable surface of the degree n rational normal
    curve."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be at least 2")

    @property
    def dim(self) -> int:
        return 2

    @property
    def num_coords(self) -> int:
        return self.n + 1

    @property
    def ambient_dim(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        return f"TD({self.n})"


OracleShape = GrassShape | SegreVeroneseShape | RationalNormalCurve | TangentDevelopable


@dataclass(frozen=True)
class Parametrization:
    """A polynomial map from affine domain_dim-space, one coordinate per
    tuple of (coefficient, exponent vector) monomials."""

    domain_dim: int
    coords: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]
    label: str = ""

    @property
    def ncols(self) -> int:
        return len(self.coords)


def _grass_parametrization(shape: GrassShape) -> Parametrization:
    r, n = shape.r, shape.n
    if r > _MINOR_CAP:
        raise CapExceeded(
            f"minor expansion for G({r},{n}) needs ({r + 1})! terms per "
            f"coordinate; the cap is r <= {_MINOR_CAP}"
        )
    width = n + 1
    dom = (r + 1) * width
    coords = []
    for J in enumerate_indices(shape):
        monomials = []
        for perm in itertools.permutations(range(r + 1)):
            sign = _perm_sign(perm)
            expo = [0] * dom
            for i, pi in enumerate(perm):
                expo[i * width + J[pi]] += 1
            monomials.append((sign, tuple(expo)))
        coords.append(tuple(monomials))
    return Parametrization(dom, tuple(coords), shape.label)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _sv_parametrization(shape: SegreVeroneseShape) -> Parametrization:
    offsets = []
    total = 0
    for nj in shape.n:
        offsets.append(total)
        total += nj + 1
    coords = []
    for I in enumerate_indices(shape):
        expo = [0] * total
        for part, off in zip(I, offsets):
            for value in part:
                expo[off + value] += 1
        coords.append(((1, tuple(expo)),))
    return Parametrization(total, tuple(coords), shape.label)


@lru_cache(maxsize=None)
def build_parametrization(shape: OracleShape) -> Parametrization:
    """Explicit polynomial parametrization of an affine chart cone of the
    shape, with coordinates in enumerate_indices order.

    Grassmannians use the maximal minors of an (r+1) x (n+1) matrix of
    indeterminates; the expansion refuses r above a hard cap.
    Segre-Veronese varieties use one monomial per coordinate.
    """
    if isinstance(shape, GrassShape):
        return _grass_parametrization(shape)
    if isinstance(shape, SegreVeroneseShape):
        return _sv_parametrization(shape)
    if isinstance(shape, RationalNormalCurve):
        coords = tuple(((1, (k,)),) for k in range(shape.n + 1))
        return Parametrization(1, coords, shape.label)
    if isinstance(shape, TangentDevelopable):
        coords = [((1, (0, 0)),)]
        for k in range(1, shape.n + 1):
            monomials = [(1, (k, 0))]
            monomials.append((k, (k - 1, 1)))
            coords.append(tuple(monomials))
        return Parametrization(2, tuple(coords), shape.label)
    raise TypeError(f"unsupported shape {shape!r}")


# ---------------------------------------------------------------------------
# jets


@dataclass
class JetMatrix:
    """Divided-power derivative rows of a parametrization at a point.

    rows maps a derivative multi-index alpha with |alpha| <= order to a
    sparse row; identically zero rows are not stored, and ``row_count``
    reports the nominal number of rows C(domain_dim + order, order)
    including the omitted ones.
    """

    domain_dim: int
    ncols: int
    order: int
    field: PrimeField | None
    rows: dict[tuple[int, ...], dict[int, int]]

    @property
    def row_count(self) -> int:
        return comb(self.domain_dim + self.order, self.order)

    @property
    def nonzero_row_count(self) -> int:
        return len(self.rows)

    def iter_rows(self):
        for key in sorted(self.rows):
            yield key, self.rows[key]

    def level_rows(self, s: int) -> list[dict[int, int]]:
        return [row for key, row in sorted(self.rows.items()) if sum(key) == s]


def _emit_jets(rows, col, value, alpha, free, point, budget, modulus) -> None:
    if not free:
        key = tuple(alpha)
        row = rows.setdefault(key, {})
        acc = row.get(col, 0) + value
        if modulus is not None:
            acc %= modulus
        if acc:
            row[col] = acc
        else:
            row.pop(col, None)
        return
    v, ev = free[0]
    rest = free[1:]
    power = 1
    for a in range(ev, -1, -1):
        if a <= budget:
            alpha[v] = a
            scaled = value * comb(ev, a) * power
            if modulus is not None:
                scaled %= modulus
            _emit_jets(rows, col, scaled, alpha, rest, point, budget - a, modulus)
        power = power * point[v]
        if modulus is not None:
            power %= modulus
    alpha[v] = 0


def _jet_rows(P: Parametrization, point, order: int, modulus: int | None):
    """All divided-power derivative rows of P at the point up to the given
    order.  The row for alpha holds the coefficient of z^alpha in the
    shifted expansion of each coordinate; this equals the classical partial
    derivative divided by alpha!, so entries stay integral and the
    characteristic never divides a spurious factorial."""
    if len(point) != P.domain_dim:
        raise ValueError(f"point must have {P.domain_dim} coordinates")
    rows: dict[tuple[int, ...], dict[int, int]] = {}
    for col, monomials in enumerate(P.coords):
        for coef, expo in monomials:
            forced_weight = 0
            free: list[tuple[int, int]] = []
            base = [0] * P.domain_dim
            for v, ev in enumerate(expo):
                if not ev:
                    continue
                if point[v]:
                    free.append((v, ev))
                else:
                    base[v] = ev
                    forced_weight += ev
            if forced_weight > order:
                continue
            _emit_jets(rows, col, coef, base, free, point, order - forced_weight, modulus)
    return {key: row for key, row in rows.items() if row}


def jet_matrix(P: Parametrization, point, order: int, field: PrimeField | None = None) -> JetMatrix:
    """Jet matrix of P at the point up to the given derivative order."""
    if not isinstance(order, int) or order < 0:
        raise ValueError("order must be a nonnegative integer")
    modulus = field.p if field is not None else None
    rows = _jet_rows(P, tuple(point), order, modulus)
    return JetMatrix(P.domain_dim, P.ncols, order, field, rows)


def osculating_rank_sweep(P: Parametrization, point, s_max: int, field: PrimeField | None = None) -> list[int]:
    """Rank of the order s jet matrix of P at the point for every
    s = 0, ..., s_max, computed with a single elimination pass by feeding
    rows level by level."""
    jm = jet_matrix(P, point, s_max, field)
    by_level: dict[int, list] = {}
    for key, row in jm.rows.items():
        by_level.setdefault(sum(key), []).append((key, row))
    acc = RankAccumulator(P.ncols, field)
    out = []
    for s in range(s_max + 1):
        for _, row in sorted(by_level.get(s, [])):
            acc.add_row(row)
        out.append(acc.rank)
    return out


# ---------------------------------------------------------------------------
# secant dimensions


def _resolve_field(prime) -> PrimeField | None:
    if prime == "rational":
        return None
    if isinstance(prime, PrimeField):
        return prime
    if isinstance(prime, int):
        return PrimeField(prime)
    raise ValueError('prime must be an integer prime, a PrimeField, or "rational"')


def _check_oracle_params(h: int, trials: int) -> None:
    if not isinstance(h, int) or h < 1:
        raise ValueError("h must be a positive integer")
    if not isinstance(trials, int) or not 1 <= trials <= 64:
        raise ValueError("trials must lie in [1, 64]")


def _sample_point(P: Parametrization, dim_x: int, rng: random.Random, field: PrimeField | None):
    """A random point of the domain whose order 1 jet has full rank
    dim_x + 1; degenerate samples are redrawn a bounded number of times."""
    modulus = field.p if field is not None else None
    for _ in range(_MAX_RESAMPLES):
        point = tuple(rng.randint(1, _COORD_RANGE) for _ in range(P.domain_dim))
        rows = _jet_rows(P, point, 1, modulus)
        acc = RankAccumulator(P.ncols, field)
        for _, row in sorted(rows.items()):
            acc.add_row(row)
        if acc.rank == dim_x + 1:
            return point, rows
    raise RuntimeError("could not sample a smooth point with full tangent rank")


@dataclass
class DefectivityCertificate:
    """Outcome of a secant dimension computation.

    computed_dim is the best rank seen over all trials minus one; the
    verdict is CertifiedNonDefective exactly when some trial reaches the
    expected dimension, and DefectEvidence otherwise.  The note records the
    asymmetry between the two outcomes.
    """

    shape: str
    h: int
    expected_dim: int
    computed_dim: int
    defect: int
    verdict: str
    trials: tuple[int, ...]
    prime: int | str
    seed: int
    note: str = ""
    elapsed_ms: float | None = None

    def to_dict(self, with_timing: bool = False) -> dict:
        return {
            "shape": self.shape,
            "h": self.h,
            "expected": self.expected_dim,
            "computed": self.computed_dim,
            "defect": self.defect,
            "verdict": self.verdict,
            "prime": self.prime,
            "seed": self.seed,
            "trials": list(self.trials),
            "elapsed_ms": self.elapsed_ms if with_timing else None,
        }

    def to_json(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_dict(with_timing), sort_keys=True, separators=(",", ":"))


def _secant_rank(shape, h: int, rng: random.Random, field: PrimeField | None) -> int:
    P = build_parametrization(shape)
    acc = RankAccumulator(P.ncols, field)
    for _ in range(h):
        _, rows = _sample_point(P, shape.dim, rng, field)
        for _, row in sorted(rows.items()):
            acc.add_row(row)
            if acc.saturated:
                return acc.rank
    return acc.rank


def secant_dimension(
    shape: OracleShape,
    h: int,
    trials: int = DEFAULT_TRIALS,
    prime: int | str = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> DefectivityCertificate:
    """Dimension of the h-secant variety of the shape, by stacking order 1
    jets at h random points (the tangent star of the secant variety).

    The expected dimension is min(h (dim X + 1), N + 1) - 1.  Each trial is
    deterministic in (seed, trial index); if the trials disagree one extra
    exact rational trial is run and the best rank over all trials is kept.
    """
    _check_oracle_params(h, trials)
    field = _resolve_field(prime)
    start = time.perf_counter()
    P = build_parametrization(shape)
    dim_x, ambient = shape.dim, shape.ambient_dim
    expected = min(h * (dim_x + 1), ambient + 1) - 1
    results = []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        results.append(_secant_rank(shape, h, rng, field) - 1)
    note = ""
    if len(set(results)) > 1:
        rng = random.Random(f"{seed}:rational")
        results.append(_secant_rank(shape, h, rng, None) - 1)
        note = "trials disagreed; escalated to one exact rational trial. "
    computed = max(results)
    defect = expected - computed
    verdict = CERTIFIED if defect == 0 else DEFECT_EVIDENCE
    if verdict == DEFECT_EVIDENCE:
        note += _EVIDENCE_NOTE
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return DefectivityCertificate(
        shape=shape.label,
        h=h,
        expected_dim=expected,
        computed_dim=computed,
        defect=defect,
        verdict=verdict,
        trials=tuple(results),
        prime=prime if isinstance(prime, (int, str)) else prime.p,
        seed=seed,
        note=note.strip(),
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# tangential and osculating projections


@dataclass
class ProjectionReport:
    """Outcome of a generic finiteness test for a linear projection of the
    shape away from a span of tangent or osculating spaces."""

    shape: str
    kind: str
    status: str
    variety_dim: int
    ambient_dim: int
    center_rank: int | None = None
    joint_rank: int | None = None
    survivors: int | None = None
    restricted_rank: int | None = None
    note: str = ""


def tangential_projection_finite(
    shape: OracleShape,
    h: int,
    trials: int = DEFAULT_TRIALS,
    prime: int | str = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> ProjectionReport:
    """Whether the projection of the shape away from the span of the
    tangent spaces at h general points is generically finite onto its
    image.

    The test requires the target of the projection to have dimension at
    least dim X, with the span dimension measured on the actual sample;
    otherwise the report status is HypothesisViolated.  Finiteness holds
    exactly when a fresh general tangent space meets the span only in the
    expected way, so the joint rank exceeds the center rank by dim X + 1.
    """
    _check_oracle_params(h, trials)
    field = _resolve_field(prime)
    P = build_parametrization(shape)
    dim_x, ambient = shape.dim, shape.ambient_dim
    best: tuple[int, int] | None = None
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        acc = RankAccumulator(P.ncols, field)
        for _ in range(h):
            _, rows = _sample_point(P, dim_x, rng, field)
            for _, row in sorted(rows.items()):
                acc.add_row(row)
        center = acc.rank
        _, rows = _sample_point(P, dim_x, rng, field)
        for _, row in sorted(rows.items()):
            acc.add_row(row)
        joint = acc.rank
        if best is None or (center, joint) > best:
            best = (center, joint)
    center, joint = best
    if ambient - center < dim_x:
        status = HYPOTHESIS_VIOLATED
        note = (
            f"the projection away from a span of dimension {center - 1} "
            f"lands in a projective space of dimension {ambient - center}, "
            f"smaller than dim X = {dim_x}; the finiteness question is void"
        )
    elif joint - center == dim_x + 1:
        status = GENERICALLY_FINITE
        note = ""
    else:
        status = FIBER_EVIDENCE
        note = _EVIDENCE_NOTE
    return ProjectionReport(
        shape=shape.label,
        kind="tangential",
        status=status,
        variety_dim=dim_x,
        ambient_dim=ambient,
        center_rank=center,
        joint_rank=joint,
        note=note,
    )


def _diagonal_sv_index(shape: SegreVeroneseShape, value: int):
    return tuple((value,) * dj for dj in shape.d)


def _osculating_centers(shape, centers) -> list[tuple[object, int]]:
    checked = []
    if isinstance(shape, GrassShape):
        supports: list[set] = []
        for index, order in centers:
            index = _check_grass_index(shape, tuple(index))
            if not isinstance(order, int) or order < 0:
                raise ValueError("orders must be nonnegative integers")
            for other in supports:
                if other & set(index):
                    raise ValueError(
                        "osculating centers on a Grassmannian must have "
                        "pairwise disjoint index supports"
                    )
            supports.append(set(index))
            checked.append((index, order))
        return checked
    if isinstance(shape, SegreVeroneseShape):
        seen = set()
        n1 = shape.n[0]
        for index, order in centers:
            if isinstance(index, int):
                value = index
            else:
                index = tuple(tuple(part) for part in index)
                values = {part[0] for part in index} | {a for part in index for a in part}
                if len(values) != 1:
                    raise ValueError(
                        "Segre-Veronese osculating centers must be diagonal "
                        "coordinate points, constant across all factors"
                    )
                value = next(iter(values))
            if not isinstance(value, int) or not 0 <= value <= n1:
                raise ValueError(f"diagonal value must lie in [0, {n1}]")
            if value in seen:
                raise ValueError("osculating centers must be distinct")
            seen.add(value)
            if not isinstance(order, int) or order < 0:
                raise ValueError("orders must be nonnegative integers")
            checked.append((_diagonal_sv_index(shape, value), order))
        return checked
    if isinstance(shape, RationalNormalCurve):
        seen = set()
        for index, order in centers:
            if index not in (0, shape.n):
                raise ValueError(
                    "rational normal curve centers must be the coordinate "
                    "points with index 0 or n"
                )
            if index in seen:
                raise ValueError("osculating centers must be distinct")
            seen.add(index)
            if not isinstance(order, int) or order < 0:
                raise ValueError("orders must be nonnegative integers")
            checked.append((index, order))
        return checked
    raise TypeError(f"unsupported shape {shape!r}")


def _survivor_columns(shape, checked) -> list[int]:
    if isinstance(shape, RationalNormalCurve):
        return [
            j
            for j in range(shape.n + 1)
            if all(abs(j - c) > s for c, s in checked)
        ]
    indices = enumerate_indices(shape)
    return [
        pos
        for pos, J in enumerate(indices)
        if all(distance(shape, I, J) > s for I, s in checked)
    ]


def osculating_projection_finite(
    shape: OracleShape,
    centers,
    trials: int = DEFAULT_TRIALS,
    prime: int | str = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> ProjectionReport:
    """Whether the projection of the shape away from the span of the
    osculating spaces at the given centers is generically finite.

    centers is a list of (coordinate index, order) pairs; the span of the
    order s_i osculating space at the i-th center kills exactly the
    coordinates within distance s_i of its index, so the projection keeps
    the surviving coordinates.  The status is GenericallyFinite when the
    restricted order 1 jet at a general point has full rank dim X + 1,
    ConstantMap when no coordinate survives or the restricted rank is at
    most 1, and FiberEvidence otherwise.
    """
    if not isinstance(trials, int) or not 1 <= trials <= 64:
        raise ValueError("trials must lie in [1, 64]")
    if not centers:
        raise ValueError("at least one center is required")
    field = _resolve_field(prime)
    checked = _osculating_centers(shape, centers)
    survivors = _survivor_columns(shape, checked)
    dim_x, ambient = shape.dim, shape.ambient_dim
    base = ProjectionReport(
        shape=shape.label,
        kind="osculating",
        status=CONSTANT_MAP,
        variety_dim=dim_x,
        ambient_dim=ambient,
        survivors=len(survivors),
    )
    if not survivors:
        base.note = "every coordinate lies in the span of the osculating centers"
        return base
    P = build_parametrization(shape)
    column_of = {col: pos for pos, col in enumerate(survivors)}
    best = 0
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        _, rows = _sample_point(P, dim_x, rng, field)
        acc = RankAccumulator(len(survivors), field)
        for _, row in sorted(rows.items()):
            restricted = {column_of[c]: v for c, v in row.items() if c in column_of}
            if restricted:
                acc.add_row(restricted)
        best = max(best, acc.rank)
    base.restricted_rank = best
    if best == dim_x + 1:
        base.status = GENERICALLY_FINITE
    elif best <= 1:
        base.status = CONSTANT_MAP
        base.note = "the surviving coordinates are proportional"
    else:
        base.status = FIBER_EVIDENCE
        base.note = _EVIDENCE_NOTE
    return base


# ---------------------------------------------------------------------------
# limit hyperplanes


@dataclass(frozen=True)
class LimitHyperplane:
    """Integer coefficient vector (c_0, ..., c_s) of a hyperplane section
    adapted to a two-point collision of osculating conditions on a degree D
    rational normal curve."""

    coeffs: tuple[int, ...]
    trivial: bool


def limit_hyperplane_coeffs(D: int, s: int, sbar: int, k1: int, k2: int) -> LimitHyperplane:
    """Coefficients of the limit hyperplane for parameters (D, s, sbar,
    k1, k2) with D > k1 + k2 + 1, 0 <= s <= D and sbar, k1, k2 >= 0.

    For s < D - k2 the trivial section (1, 0, ..., 0) works.  Otherwise the
    coefficients satisfy c_j = 0 for j in [D - k1, s] together with the
    collision relations sum_k C(sbar + j, j - k) c_k = 0 for j in
    [D - k2, s]; the canonical solution is supported on {0, ..., q} with
    q = s - D + k2 + 1, normalized to coprime integers with c_0 > 0.
    """
    for name, value in (("D", D), ("s", s), ("sbar", sbar), ("k1", k1), ("k2", k2)):
        if not isinstance(value, int):
            raise TypeError(f"{name} must be an integer")
    if k1 < 0 or k2 < 0 or sbar < 0:
        raise ValueError("sbar, k1, k2 must be nonnegative")
    if D <= k1 + k2 + 1:
        raise ValueError("need D > k1 + k2 + 1")
    if not 0 <= s <= D:
        raise ValueError("need 0 <= s <= D")
    if s < D - k2:
        return LimitHyperplane((1,) + (0,) * s, trivial=True)
    q = s - D + k2 + 1
    assert q < D - k1  # the support never meets the forced zero range
    rows = list(range(D - k2, s + 1))
    # comb vanishes for a negative lower index
    matrix = [
        [Fraction(comb(sbar + j, j - k)) if j >= k else Fraction(0) for k in range(1, q + 1)]
        for j in rows
    ]
    rhs = [-Fraction(comb(sbar + j, j)) for j in rows]
    solution = _solve_square(matrix, rhs)
    coeffs = [Fraction(1)] + solution + [Fraction(0)] * (s - q)
    scale = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if ints[0] < 0:
        ints = [-v for v in ints]
    for j in rows:
        residual = sum(comb(sbar + j, j - k) * ints[k] for k in range(0, min(j, s) + 1))
        assert residual == 0
    return LimitHyperplane(tuple(ints), trivial=False)


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    size = len(rhs)
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for c in range(size):
        pivot = next((i for i in range(c, size) if m[i][c]), None)
        assert pivot is not None, "the collision system is always nonsingular"
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(size):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][size] for i in range(size)]
