"""Schubert varieties in G(r, n): dimensions, containment, singular loci,
multiplicities, and degrees of Grassmannians.

Partitions here index Schubert varieties with respect to a fixed complete
flag.  The multiplicity routine evaluates the determinantal formula for the
multiplicity of a Schubert variety along a smaller one, with exact integer
arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


@dataclass(frozen=True)
class Partition:
    """A partition indexing a Schubert variety of G(r, n).

    Holds exactly r + 1 weakly decreasing parts, each in [0, n - r];
    shorter part lists are zero padded, and trailing zeros beyond r + 1
    parts are tolerated on input.
    """

    r: int
    n: int
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.n, int):
            raise TypeError("r and n must be integers")
        if not 0 <= self.r < self.n:
            raise ValueError(f"need 0 <= r < n, got r={self.r}, n={self.n}")
        parts = tuple(int(a) for a in self.parts)
        if len(parts) > self.r + 1:
            if any(parts[self.r + 1 :]):
                raise ValueError(f"at most {self.r + 1} nonzero parts allowed")
            parts = parts[: self.r + 1]
        parts = parts + (0,) * (self.r + 1 - len(parts))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts[-1] < 0 or parts[0] > self.n - self.r:
            raise ValueError(f"parts must lie in [0, {self.n - self.r}], got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def blocks(self) -> list[tuple[int, int]]:
        """Parts grouped as (value, repetition) pairs, largest value first,
        including the zero block when present."""
        out: list[tuple[int, int]] = []
        for a in self.parts:
            if out and out[-1][0] == a:
                out[-1] = (a, out[-1][1] + 1)
            else:
                out.append((a, 1))
        return out

    @property
    def label(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"


def complementary(p: Partition) -> tuple[int, ...]:
    """The complementary tuple (n - r - lambda_1, ..., n - r - lambda_{r+1}),
    weakly increasing in index order; its sum is the dimension of the
    Schubert variety."""
    return tuple(p.n - p.r - a for a in p.parts)


def schubert_dim(p: Partition) -> int:
    return sum(complementary(p))


def schubert_codim(p: Partition) -> int:
    return p.size


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether the Schubert variety of lam contains the one of mu; holds
    exactly when mu dominates lam componentwise."""
    if (lam.r, lam.n) != (mu.r, mu.n):
        raise ValueError("partitions must index the same Grassmannian")
    return all(b >= a for a, b in zip(lam.parts, mu.parts))


def singular_locus(p: Partition) -> list[Partition]:
    """Partitions of the irreducible components of the singular locus.

    Writing the parts in blocks (a_1^{p_1}, ..., a_k^{p_k}) with
    a_1 > ... > a_k >= 0, each adjacent pair of blocks contributes the
    candidate obtained by replacing the pair with
    ((a_i + 1)^{p_i + 1}, a_{i+1}^{p_{i+1} - 1}); candidates whose first
    part would exceed n - r are discarded.  Rectangles, including the zero
    partition, are smooth and give the empty list.
    """
    blocks = p.blocks()
    cap = p.n - p.r
    out: list[Partition] = []
    for i in range(len(blocks) - 1):
        a, pa = blocks[i]
        b, pb = blocks[i + 1]
        if a + 1 > cap:
            continue
        merged = blocks[:i] + [(a + 1, pa + 1)] + ([(b, pb - 1)] if pb > 1 else []) + blocks[i + 2 :]
        parts: list[int] = []
        for value, count in merged:
            parts.extend([value] * count)
        out.append(Partition(p.r, p.n, tuple(parts)))
    return out


def multiplicity(lam: Partition, mu: Partition) -> int:
    """Multiplicity of the Schubert variety of lam along the one of mu.

    Requires contains(lam, mu).  With l, j running over 1..r+1 set
    t_l = n - r + l - lambda_l and s_l = #{ j : mu_j - j < lambda_l - l };
    the multiplicity is |det M| for M[k][l] = C(t_l, (k - 1) - s_l).
    """
    if not contains(lam, mu):
        raise ValueError("multiplicity needs mu componentwise above lam")
    size = lam.r + 1
    lshift = [lam.parts[l] - (l + 1) for l in range(size)]
    mshift = [mu.parts[j] - (j + 1) for j in range(size)]
    t = [lam.n - lam.r + (l + 1) - lam.parts[l] for l in range(size)]
    s = [sum(1 for v in mshift if v < lshift[l]) for l in range(size)]
    matrix = [[comb(t[l], k - s[l]) if k - s[l] >= 0 else 0 for l in range(size)] for k in range(size)]
    return abs(_int_det(matrix))


def _int_det(matrix: list[list[int]]) -> int:
    # Gaussian elimination over the rationals; the input is integral and
    # small so Fractions are exact and cheap
    size = len(matrix)
    m = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if m[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, size):
            f = m[i][c] * inv
            if not f:
                continue
            for j in range(c, size):
                m[i][j] -= f * m[c][j]
    assert det.denominator == 1
    return det.numerator


def grass_degree(r: int, n: int) -> int:
    """Degree of G(r, n) in the Pluecker embedding, by the hook length
    formula on the (r+1) x (n-r) rectangle."""
    if not isinstance(r, int) or not isinstance(n, int):
        raise TypeError("r and n must be integers")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    rows, cols = r + 1, n - r
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (rows - i) + (cols - j) - 1
    degree, remainder = divmod(factorial(rows * cols), hooks)
    assert remainder == 0
    return degree


def rectangle_count(p: Partition) -> int:
    """Number of distinct nonzero parts of the complementary tuple: the
    count of maximal rectangles stacked in the complementary diagram."""
    return len({a for a in complementary(p) if a})


@dataclass(frozen=True)
class FerrersDiagram:
    """A Ferrers diagram with weakly increasing row lengths as drawn, with
    an optional inner diagram marked for skew displays."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        outer = tuple(int(a) for a in self.outer)
        if any(a < 0 for a in outer):
            raise ValueError("row lengths must be nonnegative")
        if any(b < a for a, b in zip(outer, outer[1:])):
            raise ValueError("row lengths must be weakly increasing as drawn")
        object.__setattr__(self, "outer", outer)
        if self.inner is not None:
            inner = tuple(int(a) for a in self.inner)
            inner = inner + (0,) * (len(outer) - len(inner))
            if len(inner) != len(outer):
                raise ValueError("inner diagram has too many rows")
            if any(b < a for a, b in zip(inner, inner[1:])):
                raise ValueError("inner row lengths must be weakly increasing")
            if any(i > o for i, o in zip(inner, outer)):
                raise ValueError("inner diagram must fit inside the outer one")
            object.__setattr__(self, "inner", inner)

    @classmethod
    def of_partition(cls, p: Partition, inner: Partition | None = None) -> "FerrersDiagram":
        """Diagram of the complementary tuple of p, optionally marking the
        complementary diagram of a larger Schubert variety inside it."""
        if inner is None:
            return cls(complementary(p))
        if not contains(p, inner):
            raise ValueError("the inner Schubert variety must be contained in the outer one")
        return cls(complementary(p), complementary(inner))

    def render(self) -> str:
        lines = []
        for row, length in enumerate(self.outer):
            marked = self.inner[row] if self.inner is not None else 0
            lines.append("." * marked + "#" * (length - marked))
        return "\n".join(lines)
