"""Dense integer matrices with exact elimination routines.

Everything here runs on Python's arbitrary-precision int, so no entry can
overflow no matter how fast walk counts grow.
"""

from __future__ import annotations

from typing import Sequence


class IntMatrix:
    """Immutable dense integer matrix, row-major storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[int]):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        if len(data) != rows * cols:
            raise ValueError(
                f"a {rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._data = tuple(int(x) for x in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        if not rows:
            raise ValueError("need at least one row")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("all rows must have the same length")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        data = [0] * (k * k)
        for i in range(k):
            data[i * k + i] = 1
        return cls(k, k, data)

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        if len(entries) > min(rows, cols):
            raise ValueError("too many diagonal entries for the requested shape")
        data = [0] * (rows * cols)
        for i, d in enumerate(entries):
            data[i * cols + i] = int(d)
        return cls(rows, cols, data)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) outside {self.rows}x{self.cols}")
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        """Mutable copy as a list of row lists."""
        c = self.cols
        return [list(self._data[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def max_abs(self) -> int:
        return max(abs(x) for x in self._data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = other.transpose().to_rows()
        out = []
        for i in range(self.rows):
            arow = self.row(i)
            out.extend(sum(x * y for x, y in zip(arow, bcol)) for bcol in bt)
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.rows == other.rows and self.cols == other.cols and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


def walk_matrix(m: IntMatrix, width: int | None = None) -> IntMatrix:
    """Matrix whose j-th column is m^(j-1) applied to the all-ones vector.

    Columns are produced by repeated matrix-vector products; matrix powers are
    never formed. `width` defaults to the matrix order and may be smaller when
    only a leading slab of columns is wanted.
    """
    if m.rows != m.cols:
        raise ValueError(f"walk matrix needs a square input, got {m.rows}x{m.cols}")
    k = m.rows
    if width is None:
        width = k
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    # nonzero structure per row; adjacency and divisor matrices are sparse
    support = [
        [(j, val) for j, val in enumerate(m.row(i)) if val] for i in range(k)
    ]
    cols: list[list[int]] = [[1] * k]
    v = cols[0]
    for _ in range(width - 1):
        v = [sum(val * v[j] for j, val in support[i]) for i in range(k)]
        cols.append(v)
    return IntMatrix(k, width, [cols[j][i] for i in range(k) for j in range(width)])


def _pick_pivot(a: list[list[int]], col: int, start: int, nrows: int) -> int:
    """Row index of the smallest-magnitude nonzero entry in a column, or -1."""
    best = -1
    best_abs = 0
    for i in range(start, nrows):
        v = a[i][col]
        if v:
            av = -v if v < 0 else v
            if best < 0 or av < best_abs:
                best, best_abs = i, av
                if av == 1:
                    break
    return best


def rank_fraction_free(m: IntMatrix) -> int:
    """Rank over the rationals via Bareiss fraction-free elimination.

    Pivots are the nonzero column entries of least magnitude, which keeps the
    intermediate integers (all minors of the input) small; every division is
    exact.
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = _pick_pivot(a, c, r, nrows)
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            arow = a[i]
            f = arow[c]
            if f:
                for j in range(c + 1, ncols):
                    arow[j] = (p * arow[j] - f * prow[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    arow[j] = (p * arow[j]) // prev
            arow[c] = 0
        prev = p
        r += 1
    return r


def det_exact(m: IntMatrix) -> int:
    """Exact integer determinant via the same fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    a = m.to_rows()
    k = m.rows
    prev = 1
    sign = 1
    for c in range(k):
        piv = _pick_pivot(a, c, c, k)
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        prow = a[c]
        p = prow[c]
        for i in range(c + 1, k):
            arow = a[i]
            f = arow[c]
            if f:
                for j in range(c + 1, k):
                    arow[j] = (p * arow[j] - f * prow[j]) // prev
            elif p != prev:
                for j in range(c + 1, k):
                    arow[j] = (p * arow[j]) // prev
            arow[c] = 0
        prev = p
    return sign * a[k - 1][k - 1]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    # deterministic Miller-Rabin for p < 3.3e24, which covers every sane modulus
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def rank_modular(m: IntMatrix, p: int) -> int:
    """Rank of m reduced mod a prime p.

    Always a lower bound for the rational rank (strictly lower exactly when p
    divides some pivoting minor), so this is a consistency probe, not ground
    truth.
    """
    if not _is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    a = [[x % p for x in m.row(i)] for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), -1)
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        prow = a[r]
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                mult = f * inv % p
                arow = a[i]
                for j in range(c, ncols):
                    arow[j] = (arow[j] - mult * prow[j]) % p
        r += 1
    return r


def format_matrix_text(m: IntMatrix) -> str:
    """Text form: header `rows cols`, then one space-separated row per line."""
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> IntMatrix:
    """Inverse of format_matrix_text; `#` lines are ignored."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"matrix header must be 'rows cols', got {lines[0]!r}")
    rows, cols = int(head[0]), int(head[1])
    if len(lines) != rows + 1:
        raise ValueError(f"expected {rows} matrix rows, got {len(lines) - 1}")
    data: list[int] = []
    for ln in lines[1:]:
        vals = [int(tok) for tok in ln.split()]
        if len(vals) != cols:
            raise ValueError(f"expected {cols} entries per row, got {len(vals)}")
        data.extend(vals)
    return IntMatrix(rows, cols, data)
