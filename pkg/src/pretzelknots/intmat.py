"""Exact integer matrices: Hermite form, determinants, Smith invariants and
finite abelian quotients ``Z^n / rowspace(M)``.

Only unimodular *row* operations are used by :func:`hermite_form`, so column
``j`` keeps meaning "generator ``j``" all the way to the coset transversal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IntMatrix",
    "AbelianQuotient",
    "hermite_form",
    "hermite_transform",
    "determinant",
    "quotient",
    "smith_invariants",
]


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        ncols = self.ncols
        if ncols < 0:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], ncols: int = -1) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls.of([[0] * n for _ in range(m)], n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.of(zip(*self.entries), self.rows) if self.rows else IntMatrix.zeros(self.cols, 0)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix.of(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries], other.cols
        )

    def __neg__(self):
        return IntMatrix.of([[-x for x in r] for r in self.entries], self.cols)

    def __sub__(self, other: "IntMatrix"):
        return IntMatrix.of(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "]"

    def __repr__(self):
        return f"IntMatrix({self})"


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.tolist()
    return [list(map(int, r)) for r in m]


def hermite_transform(m) -> tuple[IntMatrix, IntMatrix]:
    """Return ``(H, U)`` with ``U @ m == H``, ``U`` unimodular, ``H`` in
    row Hermite form: echelon, positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, zero rows last."""
    A = _as_rows(m)
    nrows = len(A)
    ncols = m.cols if isinstance(m, IntMatrix) else (len(A[0]) if A else 0)
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def addrow(dst, src, k):
        if k:
            A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def negate(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    piv_row = 0
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        if piv_row >= nrows:
            break
        # Euclid down the column until one nonzero remains at piv_row
        while True:
            nz = [i for i in range(piv_row, nrows) if A[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(A[i][col]), i))
            if best != piv_row:
                swap(best, piv_row)
            done = True
            for i in range(piv_row + 1, nrows):
                if A[i][col]:
                    addrow(i, piv_row, -(A[i][col] // A[piv_row][col]))
                    if A[i][col]:
                        done = False
            if done:
                break
        if A[piv_row][col] == 0:
            continue
        if A[piv_row][col] < 0:
            negate(piv_row)
        d = A[piv_row][col]
        for i in range(piv_row):
            addrow(i, piv_row, -(A[i][col] // d))
        pivots.append((piv_row, col))
        piv_row += 1
    return IntMatrix.of(A, ncols), IntMatrix.of(U, nrows)


def hermite_form(m) -> IntMatrix:
    return hermite_transform(m)[0]


def determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _as_rows(m)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def smith_invariants(m) -> list[int]:
    """Diagonal of the Smith normal form, ``d1 | d2 | ...``, length
    ``min(rows, cols)``; zeros (rank deficiency) come last."""
    A = _as_rows(m)
    nrows = len(A)
    ncols = m.cols if isinstance(m, IntMatrix) else (len(A[0]) if A else 0)
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, nrows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    changed = True
            for j in range(t + 1, ncols):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    changed = True
            if not changed:
                # pivot must divide the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                changed = True
            # move the smallest nonzero of row/col t into the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, nrows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, ncols) if A[t][j]]
            _, bi, bj = min(cand)
            if bi != t:
                A[t], A[bi] = A[bi], A[t]
            if bj != t:
                for r in A:
                    r[t], r[bj] = r[bj], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    diag += [0] * (min(nrows, ncols) - len(diag))
    return diag


@dataclass(frozen=True)
class AbelianQuotient:
    """``Z^n`` modulo the row space of ``relations``.

    When finite, the Hermite form is square upper triangular with pivots
    ``d_0..d_{n-1}``; coset representatives are the mixed-radix tuples
    ``0 <= k_i < d_i`` in lexicographic order (first coordinate slowest).
    """

    rank: int
    relations: IntMatrix
    normal_form: IntMatrix
    pivots: tuple[int, ...]
    finite: bool
    invariants: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int | float:
        return math.prod(self.pivots) if self.finite else math.inf

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if not self.finite:
            raise ValueError("infinite quotient has no canonical representatives")
        v = list(v)
        H = self.normal_form.entries
        for i, d in enumerate(self.pivots):
            k = v[i] % d
            t = (v[i] - k) // d
            if t:
                row = H[i]
                for j in range(i, self.rank):
                    v[j] -= t * row[j]
        return tuple(v)

    def is_trivial(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def representatives(self) -> Iterator[tuple[int, ...]]:
        if not self.finite:
            raise ValueError("infinite quotient")
        return itertools.product(*(range(d) for d in self.pivots))


def quotient(m, rank: int | None = None) -> AbelianQuotient:
    if not isinstance(m, IntMatrix):
        m = IntMatrix.of(m, rank if rank is not None else -1)
    n = m.cols if rank is None else rank
    if m.cols != n:
        raise ValueError("relation width does not match rank")
    H = hermite_form(m)
    E = H.entries
    finite = len(E) >= n and all(E[i][i] > 0 for i in range(n))
    pivots = tuple(E[i][i] for i in range(n)) if finite else ()
    if finite:
        Hsq = IntMatrix.of(E[:n], n)
    else:
        Hsq = H
    sm = smith_invariants(m) if m.rows else []
    sm = sm + [0] * (n - len(sm))
    inv = tuple(d for d in sm if d != 1)
    return AbelianQuotient(n, m, Hsq, pivots, finite, inv)
