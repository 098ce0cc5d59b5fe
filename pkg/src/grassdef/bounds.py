"""Non-defectivity bounds for secant varieties and osculating dimensions.

The bounds certify that the h-secant variety of a Grassmannian or
Segre-Veronese variety has the expected dimension for every h up to the
reported maximum.  They are purely combinatorial: the heavy lifting is the
auxiliary sequence h_m, read off a binary expansion, which counts how many
general points an inductive osculating degeneration can absorb.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .indices import SegreVeroneseShape


def h_m(m: int, k: int) -> int:
    """Value of the auxiliary sequence h_m at k >= 0, for m >= 2.

    h_m(0) = 0, and for k >= 1 write k + 1 = 2^{a_1} + ... + 2^{a_s} + eps
    with a_1 > ... > a_s >= 1 and eps in {0, 1}; then
    h_m(k) = m^{a_1 - 1} + ... + m^{a_s - 1}.

    Consequences used elsewhere: h_m(2k) = h_m(2k - 1) and
    h_2(k) = floor((k + 1) / 2).
    """
    if not isinstance(m, int) or not isinstance(k, int):
        raise TypeError("m and k must be integers")
    if m < 2:
        raise ValueError("m must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _h(m, k)


def _h(m: int, k: int) -> int:
    # extension by 0 for k <= 0; the bound branches below may produce
    # negative residual arguments and rely on this convention
    if k <= 0:
        return 0
    v = k + 1
    total = 0
    i = 1
    while (1 << i) <= v:
        if v & (1 << i):
            total += m ** (i - 1)
        i += 1
    return total


@dataclass(frozen=True)
class BoundReport:
    """Outcome of a non-defectivity bound.

    max_h is the largest number of points h for which the bound asserts
    that the h-secant variety has the expected dimension.  raw_value keeps
    the branch sum before normalization and branch records which case of
    the bound applied.
    """

    max_h: int
    raw_value: int
    branch: str

    @property
    def statement(self) -> str:
        return f"not h-defective for h ≤ {self.max_h}"


def _check_grass_args(r: int, n: int) -> None:
    if not isinstance(r, int) or not isinstance(n, int):
        raise TypeError("r and n must be integers")
    if r < 2:
        raise ValueError(
            "the bound needs r >= 2; secant varieties of Grassmannians of "
            "lines are understood classically"
        )
    if n < 2 * r + 1:
        raise ValueError("need n >= 2r + 1; pass the dual parameters instead")


def grass_bound(r: int, n: int) -> BoundReport:
    """Main non-defectivity bound for secant varieties of G(r, n).

    With alpha = floor((n + 1) / (r + 1)) the report certifies max_h = B + 1
    where B is

      alpha * h_alpha(r - 1)                        if n >= r^2 + 3r + 1,
      (alpha - 1) h_alpha(r - 1) + h_alpha(r')      if r is even,
      (alpha - 1) h_alpha(r - 2) + h_alpha(r'')     if r is odd,

    with r' = n - 2 - alpha r and r'' = min(n - 3 - alpha(r - 1), r - 2).
    The residual arguments r' and r'' can leave [0, r - 1]; h is extended
    by zero on nonpositive arguments.
    """
    _check_grass_args(r, n)
    alpha = (n + 1) // (r + 1)
    if n >= r * r + 3 * r + 1:
        value = alpha * _h(alpha, r - 1)
        branch = "large_n"
    elif r % 2 == 0:
        value = (alpha - 1) * _h(alpha, r - 1) + _h(alpha, n - 2 - alpha * r)
        branch = "even_r"
    else:
        residual = min(n - 3 - alpha * (r - 1), r - 2)
        value = (alpha - 1) * _h(alpha, r - 2) + _h(alpha, residual)
        branch = "odd_r"
    return BoundReport(max_h=value + 1, raw_value=value, branch=branch)


def linear_bound(r: int, n: int) -> BoundReport:
    """Closed-form corollary of grass_bound, always at most as strong.

    max_h is the certified value itself:

      floor(r / 2) alpha + 1                                  if n >= r^2 + 3r + 1,
      floor((n + 1) / 2) - r / 2                              if r is even,
      min{ (r - 1)/2 alpha + 1, floor(n / 2) - (r - 1)/2 }    if r is odd.
    """
    _check_grass_args(r, n)
    alpha = (n + 1) // (r + 1)
    if n >= r * r + 3 * r + 1:
        value = (r // 2) * alpha + 1
        branch = "large_n"
    elif r % 2 == 0:
        value = (n + 1) // 2 - r // 2
        branch = "even_r"
    else:
        value = min(((r - 1) // 2) * alpha + 1, n // 2 - (r - 1) // 2)
        branch = "odd_r"
    return BoundReport(max_h=value, raw_value=value, branch=branch)


def aop_bound(r: int, n: int) -> BoundReport:
    """Previously known non-defectivity range, kept for comparison.

    Certifies max_h = floor((n - r) / 3) + 1, normalized the same way as
    grass_bound so the two reports are directly comparable.
    """
    _check_grass_args(r, n)
    value = (n - r) // 3 + 1
    return BoundReport(max_h=value, raw_value=value, branch="aop")


def sv_bound(shape: SegreVeroneseShape) -> BoundReport:
    """Non-defectivity bound for Segre-Veronese varieties.

    Requires total degree d = d_1 + ... + d_t at least 3 and certifies
    max_h = n_1 * h_{n_1 + 1}(d - 2) + 1 where n_1 is the smallest factor
    dimension.
    """
    if not isinstance(shape, SegreVeroneseShape):
        raise TypeError("sv_bound takes a SegreVeroneseShape")
    d = shape.d_total
    if d < 3:
        raise ValueError("the bound needs total degree at least 3")
    n1 = shape.n[0]
    raw = n1 * _h(n1 + 1, d - 2)
    return BoundReport(max_h=raw + 1, raw_value=raw, branch="sv")


def osculating_dim_grass(r: int, n: int, s: int) -> int:
    """Dimension of the general s-th osculating space of G(r, n) in the
    Pluecker embedding.

    Equals sum_{l=1}^{s} C(r+1, l) C(n-r, l) for s <= r and saturates at
    the ambient dimension from s = r + 1 on.
    """
    if not isinstance(r, int) or not isinstance(n, int) or not isinstance(s, int):
        raise TypeError("r, n, s must be integers")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    if s < 0:
        raise ValueError("s must be nonnegative")
    top = min(s, min(r, n - r - 1) + 1)
    return sum(comb(r + 1, l) * comb(n - r, l) for l in range(1, top + 1))


def _sv_level_counts(shape: SegreVeroneseShape) -> list[int]:
    # coefficient list of prod_j sum_{l=0}^{d_j} C(n_j + l - 1, l) x^l;
    # entry l counts the monomials contributing to the l-th osculating level
    counts = [1]
    for nj, dj in zip(shape.n, shape.d):
        factor = [comb(nj + l - 1, l) for l in range(dj + 1)]
        new = [0] * (len(counts) + dj)
        for i, a in enumerate(counts):
            if not a:
                continue
            for l, b in enumerate(factor):
                new[i + l] += a * b
        counts = new
    return counts


def osculating_dim_sv(shape: SegreVeroneseShape, s: int) -> int:
    """Dimension of the general s-th osculating space of a Segre-Veronese
    variety; saturates at the ambient dimension from s = d_total on."""
    if not isinstance(shape, SegreVeroneseShape):
        raise TypeError("osculating_dim_sv takes a SegreVeroneseShape")
    if not isinstance(s, int) or s < 0:
        raise ValueError("s must be a nonnegative integer")
    counts = _sv_level_counts(shape)
    return sum(counts[1 : min(s, shape.d_total) + 1])
