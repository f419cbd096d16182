"""Exact linear algebra over the integers.

Dense Hermite normal form with a unimodular transform, integral solving
with rational certificates, and integer kernel bases.  Entries are Python
bignums held in numpy object arrays; sizes here stay at desk scale, so
correctness wins over asymptotics throughout.

``modular_rank`` is the one concession to speed: a row reduction mod a
fixed prime whose result is a *lower bound* for the true rank (equality
holds unless the prime divides every maximal minor).  Callers use it to
certify independence cheaply and fall back to the exact path otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_PRIME = 2_147_483_629  # largest prime below 2^31 - 18; fits int64 products


class IntMatrix:
    """A dense integer matrix; ``entries`` is a 2-D object ndarray."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        arr = np.array(entries, dtype=object)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        self.entries = arr
        self.rows, self.cols = arr.shape

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(np.eye(n, dtype=object))

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix(np.zeros((r, c), dtype=object))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.entries.shape == other.entries.shape
            and bool((self.entries == other.entries).all())
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries.tolist()})"


def _as_array(m) -> np.ndarray:
    if isinstance(m, IntMatrix):
        return m.entries
    return IntMatrix(m).entries


def hermite_form(m) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form ``H`` with unimodular ``U`` so ``U M = H``.

    ``H`` is in row echelon form with positive pivots and entries above each
    pivot reduced to ``0 <= e < pivot``.  ``U`` is a product of row swaps,
    sign flips and integer shears, so ``|det U| = 1``.
    """
    a = _as_array(m).copy()
    rows, cols = a.shape
    u = np.eye(rows, dtype=object)
    r = 0
    for j in range(cols):
        if r == rows:
            break
        # collapse column j below row r by repeated remainder steps
        while True:
            live = [i for i in range(r, rows) if a[i, j] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: abs(a[i, j]))
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
                u[[r, piv]] = u[[piv, r]]
            if a[r, j] < 0:
                a[r] = -a[r]
                u[r] = -u[r]
            done = True
            for i in range(r + 1, rows):
                if a[i, j] != 0:
                    q = a[i, j] // a[r, j]
                    if q:
                        a[i] = a[i] - q * a[r]
                        u[i] = u[i] - q * u[r]
                    if a[i, j] != 0:
                        done = False
            if done:
                break
        if a[r, j] != 0:
            for i in range(r):
                q = a[i, j] // a[r, j]
                if q:
                    a[i] = a[i] - q * a[r]
                    u[i] = u[i] - q * u[r]
            r += 1
    return IntMatrix(a), IntMatrix(u)


def rank(m) -> int:
    """Exact rank via Hermite form."""
    h, _ = hermite_form(m)
    return sum(1 for i in range(h.rows) if any(x != 0 for x in h.entries[i]))


def _column_echelon(m) -> tuple[np.ndarray, np.ndarray]:
    """Unimodular ``V`` with ``M V = L`` in column echelon form."""
    a = _as_array(m)
    h, u = hermite_form(a.T)
    return u.entries.T, h.entries.T


def kernel_basis(m) -> list[list[int]]:
    """A basis of the integer kernel ``{x : M x = 0}``."""
    a = _as_array(m)
    if a.size == 0:
        n = a.shape[1] if a.ndim == 2 else 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    v, l = _column_echelon(a)
    out = []
    for j in range(l.shape[1]):
        if all(x == 0 for x in l[:, j]):
            out.append([int(x) for x in v[:, j]])
    return out


@dataclass
class SolveResult:
    """Outcome of an integral solve.

    ``solution`` is an integer vector with ``M x = b`` when one exists.
    Otherwise ``rational`` carries a rational solution if the system is
    solvable over the rationals, and is None when it is inconsistent.
    """

    solution: list[int] | None
    rational: list[Fraction] | None

    @property
    def consistent_over_rationals(self) -> bool:
        return self.solution is not None or self.rational is not None


def solve_integral(m, b) -> SolveResult:
    """Solve ``M x = b`` over the integers.

    Change of variables ``x = V y`` with ``M V = L`` column echelon makes
    every pivot variable forced, so integrality of the forced values decides
    the problem; free variables are set to zero.
    """
    a = _as_array(m)
    bv = [Fraction(int(x)) for x in np.array(b, dtype=object).ravel()]
    if a.shape[0] != len(bv):
        raise ValueError("dimension mismatch")
    v, l = _column_echelon(a)
    ncols = l.shape[1]
    y = [Fraction(0)] * ncols
    pivot_row = {}
    for j in range(ncols):
        nz = [i for i in range(l.shape[0]) if l[i, j] != 0]
        if nz:
            pivot_row[j] = nz[0]
    row_to_pivot = {r: j for j, r in pivot_row.items()}
    for i in range(l.shape[0]):
        acc = bv[i]
        for j in range(ncols):
            if l[i, j] != 0 and y[j] != 0:
                acc -= int(l[i, j]) * y[j]
        j = row_to_pivot.get(i)
        if j is not None:
            y[j] = acc / int(l[i, j])
        elif acc != 0:
            return SolveResult(None, None)
    xr = [sum(Fraction(int(v[i, j])) * y[j] for j in range(ncols) if y[j] != 0) for i in range(v.shape[0])]
    if all(val.denominator == 1 for val in xr):
        return SolveResult([int(val) for val in xr], None)
    return SolveResult(None, xr)


def modular_rank(mat, p: int = DEFAULT_PRIME) -> int:
    """Rank of ``mat`` over ``GF(p)``; a lower bound for the integer rank."""
    a = np.array(
        [[int(x) % p for x in row] for row in np.array(mat, dtype=object)],
        dtype=np.int64,
    )
    if a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for j in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if a[i, j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, j]), p - 2, p)
        a[r] = (a[r] * inv) % p
        block = a[r + 1 :]
        col = block[:, j].copy()
        nz = col != 0
        if nz.any():
            block[nz] = (block[nz] - col[nz, None] * a[r][None, :]) % p
        r += 1
    return r
