"""NilHecke algebras in closed normal form.

An element of ``NH_n`` is stored as a finite sum ``sum_w f_w(x) d_w`` with
polynomial coefficients on the left of the divided-difference operators
``d_w``, indexed by permutations ``w``.  This indexing is a basis, so
equality of elements is equality of the term dictionaries.

Multiplication pushes generators through coefficients with

    d_i . f = s_i(f) . d_i + d_i(f),        d_i d_w = d_{s_i w} or 0,

applied along the lexicographically smallest reduced word.  The operators
act faithfully on polynomials: ``x_i`` by multiplication and ``d_i`` by
the divided difference; ``nh_act`` realizes that action and doubles as a
cross-check on the normal-form arithmetic.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import intlinalg
from .exactpoly import Polynomial, divided_difference, swap_vars, x_monomial
from .permutations import (
    Perm,
    block_perm,
    compose,
    identity,
    length,
    longest_element,
    reduced_word,
    symmetric_group,
    transposition,
)


class NHElement:
    """An element ``sum_w f_w d_w`` of ``NH_n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Perm, Polynomial] | None = None):
        self.n = n
        self.terms: dict[Perm, Polynomial] = {
            w: f for w, f in (terms or {}).items() if not f.is_zero()
        }

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NHElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None

    def __add__(self, other: "NHElement") -> "NHElement":
        if self.n != other.n:
            raise ValueError("strand count mismatch in sum")
        out = dict(self.terms)
        for w, f in other.terms.items():
            g = out.get(w)
            out[w] = f if g is None else g + f
        return NHElement(self.n, out)

    def __neg__(self) -> "NHElement":
        return NHElement(self.n, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other: "NHElement") -> "NHElement":
        return self + (-other)

    def scale(self, c: int) -> "NHElement":
        return NHElement(self.n, {w: f * c for w, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return nh_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def degrees(self) -> set[int]:
        """Degrees of all terms; dots count 2, crossings -2."""
        out = set()
        for w, f in self.terms.items():
            shift = -2 * length(w)
            out.update(m.degree + shift for m in f.terms)
        return out

    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for w in sorted(self.terms, key=lambda w: (length(w), w)):
            f = self.terms[w]
            dpart = "" if not reduced_word(w) else "d[" + ",".join(map(str, reduced_word(w))) + "]"
            chunks.append(f"({f}){dpart}" if dpart else f"({f})")
        return " + ".join(chunks)

    __repr__ = __str__


# -- constructors ------------------------------------------------------------


def nh_one(n: int) -> NHElement:
    return NHElement(n, {identity(n): Polynomial.const(1)})


def nh_zero(n: int) -> NHElement:
    return NHElement(n)


def nh_from_poly(f: Polynomial, n: int) -> NHElement:
    if f.max_x_index() > n:
        raise ValueError("polynomial uses too many variables")
    return NHElement(n, {identity(n): f})


def nh_x(i: int, n: int) -> NHElement:
    if not 1 <= i <= n:
        raise ValueError(f"x({i},{n}) out of range")
    return nh_from_poly(x_monomial([0] * (i - 1) + [1]), n)


def nh_d(i: int, n: int) -> NHElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"d({i},{n}) out of range")
    return NHElement(n, {transposition(i, n): Polynomial.const(1)})


def nh_d_w(w: Perm) -> NHElement:
    return NHElement(len(w), {tuple(w): Polynomial.const(1)})


def nh_s(i: int, n: int) -> NHElement:
    """The circle crossing ``s_i = d_i x_i - x_i d_i``, acting as ``s_i``."""
    return nh_mul(nh_d(i, n), nh_x(i, n)) - nh_mul(nh_x(i, n), nh_d(i, n))


def staircase_poly(k: int) -> Polynomial:
    """``x1^{k-1} x2^{k-2} ... x_{k-1}``."""
    return x_monomial(range(k - 1, 0, -1)) if k >= 2 else Polynomial.const(1)


def nh_e(k: int) -> NHElement:
    """The idempotent ``e_k = x1^{k-1}...x_{k-1} d_{w0(k)}``; ``e_0, e_1`` are units."""
    if k < 0:
        raise ValueError("negative strand count")
    if k <= 1:
        return nh_one(k)
    return NHElement(k, {longest_element(k): staircase_poly(k)})


def nh_e_tilde(k: int) -> NHElement:
    """The flipped idempotent ``d_{w0(k)} x1^{k-1}...x_{k-1}``."""
    if k < 0:
        raise ValueError("negative strand count")
    if k <= 1:
        return nh_one(k)
    return nh_mul(nh_d_w(longest_element(k)), nh_from_poly(staircase_poly(k), k))


def nh_perm(w: Perm) -> NHElement:
    """The product of circle crossings realizing ``w``."""
    n = len(w)
    out = nh_one(n)
    for i in reduced_word(w):
        out = nh_mul(out, nh_s(i, n))
    return out


def nh_make(kind: str, *args) -> NHElement:
    """Dispatch constructor: one, x, d, d_w, s, e, e_tilde."""
    table = {
        "one": nh_one,
        "x": nh_x,
        "d": nh_d,
        "d_w": nh_d_w,
        "s": nh_s,
        "e": nh_e,
        "e_tilde": nh_e_tilde,
    }
    if kind not in table:
        raise ValueError(f"unknown element kind {kind!r}")
    return table[kind](*args)


# -- multiplication ----------------------------------------------------------


def _left_mul_d(i: int, elem: NHElement) -> NHElement:
    n = elem.n
    si = transposition(i, n)
    out: dict[Perm, Polynomial] = {}

    def add(w: Perm, f: Polynomial) -> None:
        if f.is_zero():
            return
        g = out.get(w)
        out[w] = f if g is None else g + f

    for w, f in elem.terms.items():
        siw = compose(si, w)
        if length(siw) > length(w):
            add(siw, swap_vars(f, i))
        add(w, divided_difference(i, f))
    return NHElement(n, out)


def _left_mul_poly(f: Polynomial, elem: NHElement) -> NHElement:
    return NHElement(elem.n, {w: f * g for w, g in elem.terms.items()})


def nh_mul(a: NHElement, b: NHElement) -> NHElement:
    """Product in normal form; mismatched strand counts multiply to zero."""
    if a.n != b.n:
        return NHElement(a.n)
    out = NHElement(a.n)
    for w, f in a.terms.items():
        cur = b
        for i in reversed(reduced_word(w)):
            cur = _left_mul_d(i, cur)
        out = out + _left_mul_poly(f, cur)
    return out


def nh_hconcat(a: NHElement, b: NHElement) -> NHElement:
    """Horizontal concatenation ``a (x) b`` inside ``NH_{a.n + b.n}``."""
    out: dict[Perm, Polynomial] = {}
    for wa, fa in a.terms.items():
        for wb, fb in b.terms.items():
            w = block_perm(wa, wb)
            shifted = Polynomial({_shift_mono(m, a.n): c for m, c in fb.terms.items()})
            prod = fa * shifted
            g = out.get(w)
            out[w] = prod if g is None else g + prod
    return NHElement(a.n + b.n, out)


def _shift_mono(m, k: int):
    from .exactpoly import _mk_mono

    return _mk_mono((0,) * k + m.x, m.r)


def nh_pad(a: NHElement, left: int, right: int) -> NHElement:
    """``1_left (x) a (x) 1_right``."""
    out = a
    if left:
        out = nh_hconcat(nh_one(left), out)
    if right:
        out = nh_hconcat(out, nh_one(right))
    return out


# -- the polynomial action ---------------------------------------------------


def nh_act(a: NHElement, f: Polynomial) -> Polynomial:
    """Apply ``a`` to a polynomial; r-variables ride along as scalars."""
    total = Polynomial.zero()
    for w, g in a.terms.items():
        cur = f
        for i in reversed(reduced_word(w)):
            cur = divided_difference(i, cur)
        total = total + g * cur
    return total


# -- graded pieces and the centralizer ---------------------------------------


def monomials_of_degree(n: int, total: int) -> list[tuple[int, ...]]:
    """Exponent tuples of the degree-``2*total`` monomials in ``n`` variables."""
    if total < 0:
        return []
    if n == 0:
        return [()] if total == 0 else []
    out = []
    for bars in combinations_with_replacement(range(n), total):
        exps = [0] * n
        for b in bars:
            exps[b] += 1
        out.append(tuple(exps))
    return sorted(out)


def nh_graded_rank(n: int, degree: int) -> int:
    """Rank of the degree-``degree`` piece of ``NH_n`` in the monomial basis."""
    if degree % 2:
        return 0
    count = 0
    for w in symmetric_group(n):
        j2 = degree + 2 * length(w)
        if j2 >= 0 and j2 % 2 == 0:
            count += len(monomials_of_degree(n, j2 // 2))
    return count


def nh_basis_of_degree(n: int, degree: int) -> list[NHElement]:
    """The monomial basis elements ``f d_w`` of the given degree."""
    out = []
    for w in sorted(symmetric_group(n), key=lambda w: (length(w), w)):
        j2 = degree + 2 * length(w)
        if j2 < 0 or j2 % 2:
            continue
        for exps in monomials_of_degree(n, j2 // 2):
            out.append(NHElement(n, {w: x_monomial(exps)}))
    return out


def centralizer_rank(n: int, degree: int, oracle_bound: int | None = None) -> int:
    """Rank of the degree piece of the centralizer of ``NH_n`` in ``NH_{n+1}``.

    The commutant is cut out of the normal-form basis of ``NH_{n+1}`` by the
    integer linear system ``[c, g] = 0`` over the generators ``g`` of the
    ``NH_n`` image under padding by one strand on the right; ``oracle_bound``
    is accepted for interface parity but the normal form needs no oracle.
    """
    del oracle_bound
    if n < 1:
        raise ValueError("need at least one strand")
    basis = nh_basis_of_degree(n + 1, degree)
    if not basis:
        return 0
    gens = [nh_x(i, n + 1) for i in range(1, n + 1)]
    gens += [nh_d(i, n + 1) for i in range(1, n)]
    col_index: dict[tuple, int] = {}
    rows = []
    for b in basis:
        row: dict[int, int] = {}
        for gi, g in enumerate(gens):
            comm = nh_mul(b, g) - nh_mul(g, b)
            for w, f in comm.terms.items():
                for m, c in f.terms.items():
                    key = (gi, w, m)
                    j = col_index.setdefault(key, len(col_index))
                    row[j] = row.get(j, 0) + c
        rows.append(row)
    ncols = len(col_index)
    mat = [[row.get(j, 0) for j in range(ncols)] for row in rows]
    return len(basis) - intlinalg.rank(mat)
