"""Index combinatorics for Pluecker coordinates and Segre-Veronese monomials.

Coordinates of G(r, n) are indexed by strictly increasing (r+1)-tuples in
{0, ..., n}.  Coordinates of a Segre-Veronese variety are indexed by one
weakly increasing d_j-tuple with entries in {0, ..., n_j} per factor.  Both
families carry a distance function; balls in that distance control which
coordinates a given osculating space touches, and the delta sets below are
the combinatorial core of the degeneration argument behind the bounds
module.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb, prod


@dataclass(frozen=True)
class GrassShape:
    """The Grassmannian of projective r-planes in P^n.

    Shapes are normalized on construction: G(r, n) and G(n-r-1, n) have the
    same coordinate combinatorics, so when r > n-r-1 the dual parameters are
    stored instead and the original r is kept in ``normalized_from``.
    """

    r: int
    n: int
    normalized_from: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.n, int):
            raise TypeError("r and n must be integers")
        if not 0 <= self.r < self.n:
            raise ValueError(f"need 0 <= r < n, got r={self.r}, n={self.n}")
        if self.r > self.n - self.r - 1:
            object.__setattr__(self, "normalized_from", self.r)
            object.__setattr__(self, "r", self.n - self.r - 1)

    @property
    def dim(self) -> int:
        return (self.r + 1) * (self.n - self.r)

    @property
    def num_coords(self) -> int:
        return comb(self.n + 1, self.r + 1)

    @property
    def ambient_dim(self) -> int:
        return self.num_coords - 1

    @property
    def label(self) -> str:
        return f"G({self.r},{self.n})"


@dataclass(frozen=True)
class SegreVeroneseShape:
    """The Segre-Veronese variety: P^{n_1} x ... x P^{n_t} embedded by the
    complete linear system of multidegree (d_1, ..., d_t).

    The embedding does not depend on the order of the factors, so factors
    are stored sorted by (n_j, d_j).
    """

    n: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        n = tuple(int(a) for a in self.n)
        d = tuple(int(a) for a in self.d)
        if not n or len(n) != len(d):
            raise ValueError("n and d must be nonempty tuples of equal length")
        if min(n) < 1 or min(d) < 1:
            raise ValueError("factor dimensions and degrees must be positive")
        order = sorted(range(len(n)), key=lambda j: (n[j], d[j]))
        object.__setattr__(self, "n", tuple(n[j] for j in order))
        object.__setattr__(self, "d", tuple(d[j] for j in order))

    @property
    def factors(self) -> int:
        return len(self.n)

    @property
    def dim(self) -> int:
        return sum(self.n)

    @property
    def d_total(self) -> int:
        return sum(self.d)

    @property
    def num_coords(self) -> int:
        return prod(comb(nj + dj, nj) for nj, dj in zip(self.n, self.d))

    @property
    def ambient_dim(self) -> int:
        return self.num_coords - 1

    @property
    def label(self) -> str:
        ns = ",".join(str(a) for a in self.n)
        ds = ",".join(str(a) for a in self.d)
        return f"SV({ns};{ds})"


Shape = GrassShape | SegreVeroneseShape


def _check_grass_index(shape: GrassShape, I) -> tuple[int, ...]:
    I = tuple(I)
    if len(I) != shape.r + 1:
        raise ValueError(f"index must have {shape.r + 1} entries, got {I}")
    if any(not isinstance(a, int) for a in I):
        raise TypeError(f"index entries must be integers, got {I}")
    if any(b <= a for a, b in zip(I, I[1:])):
        raise ValueError(f"index must be strictly increasing, got {I}")
    if I[0] < 0 or I[-1] > shape.n:
        raise ValueError(f"index entries must lie in [0, {shape.n}], got {I}")
    return I


def _check_sv_index(shape: SegreVeroneseShape, I) -> tuple[tuple[int, ...], ...]:
    I = tuple(tuple(part) for part in I)
    if len(I) != shape.factors:
        raise ValueError(f"index must have {shape.factors} factor parts, got {I}")
    for part, nj, dj in zip(I, shape.n, shape.d):
        if len(part) != dj:
            raise ValueError(f"factor part {part} must have {dj} entries")
        if any(b < a for a, b in zip(part, part[1:])):
            raise ValueError(f"factor part {part} must be weakly increasing")
        if part and (part[0] < 0 or part[-1] > nj):
            raise ValueError(f"factor part {part} must lie in [0, {nj}]")
    return I


def enumerate_indices(shape: Shape) -> list:
    """All coordinate indices of the shape, in lexicographic order."""
    if isinstance(shape, GrassShape):
        return list(itertools.combinations(range(shape.n + 1), shape.r + 1))
    if isinstance(shape, SegreVeroneseShape):
        per_factor = [
            list(itertools.combinations_with_replacement(range(nj + 1), dj))
            for nj, dj in zip(shape.n, shape.d)
        ]
        return [tuple(parts) for parts in itertools.product(*per_factor)]
    raise TypeError(f"unsupported shape {shape!r}")


def grass_distance(I, J) -> int:
    """Number of entries of I not appearing in J.

    Symmetric for index tuples of equal length, and a metric on them.
    """
    return len(I) - len(set(I) & set(J))


def sv_distance(I, J) -> int:
    """Sum over factors of the multiset distance d_j - |I^j cap J^j|."""
    total = 0
    for a, b in zip(I, J):
        common = Counter(a) & Counter(b)
        total += len(a) - sum(common.values())
    return total


def distance(shape: Shape, I, J) -> int:
    """Coordinate distance on the index family of the shape."""
    if isinstance(shape, GrassShape):
        return grass_distance(_check_grass_index(shape, I), _check_grass_index(shape, J))
    if isinstance(shape, SegreVeroneseShape):
        return sv_distance(_check_sv_index(shape, I), _check_sv_index(shape, J))
    raise TypeError(f"unsupported shape {shape!r}")


def ball(shape: Shape, I, s: int) -> list:
    """Indices at distance at most s from I."""
    if s < 0:
        raise ValueError("radius must be nonnegative")
    return [J for J in enumerate_indices(shape) if distance(shape, I, J) <= s]


def _canonical_pair(shape: GrassShape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    r = shape.r
    return tuple(range(r + 1)), tuple(range(r + 1, 2 * r + 2))


def delta_set(shape: GrassShape, I, l: int, origin=None, target=None) -> list:
    """Indices obtained from I by moving |l| entries between the two blocks
    of the canonical disjoint pair.

    With I1 = (0, ..., r) and I2 = (r+1, ..., 2r+2), a positive step l
    replaces l entries i of I lying in I1 by i + r + 1; a negative step
    undoes such moves.  Every J returned satisfies d(J, I) = |l| and
    d(J, I1) = d(I, I1) + l.  Steps that cannot be realized give the empty
    list, and l = 0 gives [I].  Only the canonical pair is supported;
    passing any other origin or target raises ValueError.
    """
    if not isinstance(shape, GrassShape):
        raise TypeError("delta sets are defined for Grassmannian shapes")
    if shape.n < 2 * shape.r + 1:
        raise ValueError("the canonical pair needs n >= 2r + 1")
    I = _check_grass_index(shape, I)
    i1, i2 = _canonical_pair(shape)
    if origin is not None and tuple(origin) != i1:
        raise ValueError(f"only the canonical origin {i1} is supported")
    if target is not None and tuple(target) != i2:
        raise ValueError(f"only the canonical target {i2} is supported")
    if l == 0:
        return [I]
    r = shape.r
    out = []
    if l > 0:
        movable = sorted(set(I) & set(i1))
        if l > len(movable):
            return []
        for moved in itertools.combinations(movable, l):
            kept = set(I) - set(moved)
            shifted = {a + r + 1 for a in moved}
            if kept & shifted:
                continue
            out.append(tuple(sorted(kept | shifted)))
    else:
        steps = -l
        movable = sorted(set(I) & set(i2))
        if steps > len(movable):
            return []
        for moved in itertools.combinations(movable, steps):
            kept = set(I) - set(moved)
            lowered = {a - r - 1 for a in moved}
            if kept & lowered:
                continue
            J = tuple(sorted(kept | lowered))
            # the reverse move must reproduce I, otherwise J is not a
            # legitimate preimage of I under a forward step
            back = (set(J) - lowered) | {a + r + 1 for a in lowered}
            if tuple(sorted(back)) == I:
                out.append(J)
    return sorted(set(out))
