"""Dense bit-packed linear algebra over GF(2).

Rows are Python ints, bit ``j`` of a row being the entry in column ``j``.
Pivoting is deterministic (leftmost column, first usable row), so echelon
forms, ranks, solutions and kernel bases are reproducible byte for byte.
"""

from __future__ import annotations

from .errors import SingularPairing


def lowest_bit(v: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (v & -v).bit_length() - 1


class Gf2Span:
    """Incremental row space kept in echelon form (pivot = lowest set bit).

    Optionally tracks, for every stored row, a tag vector (another int
    bitset) that is combined under the same row operations.  Reducing a
    vector then reports which tagged generators sum to it.
    """

    def __init__(self) -> None:
        self._rows: dict[int, tuple[int, int]] = {}  # pivot -> (row, tag)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        """Reduce v against the span; returns (residual, accumulated tag)."""
        rows = self._rows
        while v:
            p = lowest_bit(v)
            entry = rows.get(p)
            if entry is None:
                break
            v ^= entry[0]
            tag ^= entry[1]
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v, tag = self.reduce(v, tag)
        if v == 0:
            return False
        self._rows[lowest_bit(v)] = (v, tag)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0


class Gf2Matrix:
    """Matrix over GF(2) with deterministic elimination.

    ``rows[i]`` is the i-th row as an int bitset over ``cols`` columns.
    """

    def __init__(self, rows: list[int], cols: int) -> None:
        self.rows = list(rows)
        self.cols = cols

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def rank(self) -> int:
        span = Gf2Span()
        for row in self.rows:
            span.add(row)
        return span.rank

    def rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form.

        Returns (pivot_cols, rows): one fully reduced row per pivot, in
        increasing pivot-column order.  Deterministic for a given input.
        """
        work = list(self.rows)
        pivots: list[int] = []
        pivot_rows: list[int] = []
        row_at = 0
        n = len(work)
        for col in range(self.cols):
            sel = None
            for r in range(row_at, n):
                if (work[r] >> col) & 1:
                    sel = r
                    break
            if sel is None:
                continue
            work[row_at], work[sel] = work[sel], work[row_at]
            piv = work[row_at]
            for r in range(n):
                if r != row_at and ((work[r] >> col) & 1):
                    work[r] ^= piv
            pivots.append(col)
            pivot_rows.append(piv)
            row_at += 1
            if row_at == n:
                break
        # rows above may have been cleaned after later pivots were found
        pivot_rows = [work[i] for i in range(len(pivots))]
        return pivots, pivot_rows

    def solve(self, rhs: int) -> int | None:
        """One solution x (free variables zero) of ``A x = rhs``, else None.

        Row i of the system is ``parity(rows[i] & x) == bit i of rhs``.
        """
        aug_col = self.cols
        aug = [row | (((rhs >> i) & 1) << aug_col) for i, row in enumerate(self.rows)]
        m = Gf2Matrix(aug, self.cols + 1)
        pivots, rows = m.rref()
        x = 0
        for p, row in zip(pivots, rows):
            if p == aug_col:
                return None  # inconsistent: 0 = 1 row
            if (row >> aug_col) & 1:
                x |= 1 << p
        return x

    def kernel_basis(self) -> list[int]:
        """Basis of the null space, one vector per free column, in column order."""
        pivots, rows = self.rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            vec = 1 << f
            for p, row in zip(pivots, rows):
                if (row >> f) & 1:
                    vec |= 1 << p
            basis.append(vec)
        return basis

    def inverse(self) -> "Gf2Matrix":
        """Inverse of a square matrix; raises SingularPairing if singular."""
        n = self.cols
        if len(self.rows) != n:
            raise SingularPairing(f"matrix is {len(self.rows)}x{n}, not square")
        aug = Gf2Matrix([row | (1 << (n + i)) for i, row in enumerate(self.rows)], 2 * n)
        pivots, rows = aug.rref()
        if len(pivots) < n or pivots[:n] != list(range(n)):
            raise SingularPairing("matrix is singular over GF(2)")
        inv = [row >> n for row in rows[:n]]
        return Gf2Matrix(inv, n)

    def mul_vec(self, x: int) -> int:
        """Matrix-vector product over GF(2); x is a column bitset."""
        out = 0
        for i, row in enumerate(self.rows):
            if (row & x).bit_count() & 1:
                out |= 1 << i
        return out
