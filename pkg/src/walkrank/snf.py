"""Smith normal form over the integers and integral-equivalence utilities."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intmatrix import IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    invariant_factors: tuple[int, ...]
    rank: int
    dims: tuple[int, int]

    def __post_init__(self) -> None:
        d = self.invariant_factors
        if self.rank != len(d):
            raise ValueError("rank must equal the number of invariant factors")
        if self.rank > min(self.dims):
            raise ValueError("rank cannot exceed the smaller matrix dimension")
        for x in d:
            if x < 1:
                raise ValueError(f"invariant factors must be positive, got {x}")
        for a, b in zip(d, d[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")

    def as_diagonal(self) -> IntMatrix:
        """Full-size diagonal matrix diag(d_1, ..., d_r, 0, ..., 0)."""
        return IntMatrix.diagonal(self.invariant_factors, *self.dims)


def _nearest_div(v: int, p: int) -> int:
    """Quotient q minimizing |v - q p|."""
    q, r = divmod(v, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def _min_abs_nonzero(a: list[list[int]], t: int, nrows: int, ncols: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            v = row[j]
            if v:
                av = -v if v < 0 else v
                if best is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def _clear_corner(a: list[list[int]], t: int, nrows: int, ncols: int) -> None:
    """Zero out column t below and row t right of the corner with unimodular ops.

    Every restart strictly shrinks |a[t][t]| (a nonzero division remainder is
    at most half the pivot), so this terminates.
    """
    while True:
        p = a[t][t]
        swapped = False
        for i in range(t + 1, nrows):
            v = a[i][t]
            if not v:
                continue
            q = _nearest_div(v, p)
            if q:
                arow, trow = a[i], a[t]
                for j in range(t, ncols):
                    if trow[j]:
                        arow[j] -= q * trow[j]
            if a[i][t]:
                a[t], a[i] = a[i], a[t]
                swapped = True
                break
        if swapped:
            continue
        # column t is now (p, 0, ..., 0); a column op below touches row t only
        trow = a[t]
        for j in range(t + 1, ncols):
            v = trow[j]
            if not v:
                continue
            q = _nearest_div(v, p)
            if q:
                trow[j] -= q * p
            if trow[j]:
                for row in a[t:nrows]:
                    row[t], row[j] = row[j], row[t]
                swapped = True
                break
        if not swapped:
            return


def _divisibility_fixup(diag: list[int]) -> list[int]:
    """Turn positive diagonal entries into a divisibility chain via gcd/lcm passes."""
    d = list(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d) - 1):
            if d[i + 1] % d[i]:
                g = gcd(d[i], d[i + 1])
                d[i], d[i + 1] = g, d[i] * d[i + 1] // g
                changed = True
    return d


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Invariant factors of any rectangular integer matrix.

    Diagonalizes with elementary (unimodular) row and column operations,
    always pivoting on the smallest-magnitude nonzero entry of the remaining
    block, then repairs the divisibility chain on the diagonal.
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    diag: list[int] = []
    for t in range(min(nrows, ncols)):
        pos = _min_abs_nonzero(a, t, nrows, ncols)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        _clear_corner(a, t, nrows, ncols)
        diag.append(abs(a[t][t]))
    factors = _divisibility_fixup(diag)
    return SnfResult(tuple(factors), len(factors), (nrows, ncols))


def rank_via_snf(m: IntMatrix) -> int:
    """Rank as the number of invariant factors."""
    return smith_normal_form(m).rank


def integrally_equivalent(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether a and b differ by unimodular row/column transformations.

    Equal shapes with equal invariant factors is exactly that relation.
    """
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(
            f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}"
        )
    return (
        smith_normal_form(a).invariant_factors == smith_normal_form(b).invariant_factors
    )


def build_w_prime(w: IntMatrix) -> IntMatrix:
    """Zero-padded embedding of the trimmed walk matrix.

    Keeps entries in rows 2..n and columns 1..n-1 (1-indexed) of the square
    input and zeroes the first row, the last row, and the last two columns.
    """
    if w.rows != w.cols:
        raise ValueError(f"expected a square walk matrix, got {w.rows}x{w.cols}")
    size = w.rows
    if size < 5:
        raise ValueError(f"need at least a 5x5 walk matrix, got {size}x{size}")
    src = w.to_rows()
    out = [[0] * size for _ in range(size)]
    for i in range(1, size - 1):
        out[i][: size - 2] = src[i][: size - 2]
    return IntMatrix.from_rows(out)
