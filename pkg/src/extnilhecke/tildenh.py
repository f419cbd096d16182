"""The extended algebra: nilHecke diagrams joined by a short-strand generator.

Elements are integer combinations of *words*; a word is a vertical stack of
generator slices read top to bottom.  The slice kinds are

* ``("x", i, n)`` a dot on strand ``i`` of ``n`` (degree +2),
* ``("d", i, n)`` a crossing of strands ``i, i+1`` of ``n`` (degree -2),
* ``("v", i, n)`` a short strand in position ``i``: ``n`` strands below,
  ``n - 1`` above (degree 0).

The product ``a * b`` stacks ``a`` on top of ``b`` and is zero unless the
boundary strand counts match; ``a | b`` places ``a`` to the left of ``b``
(with ``a`` raised above ``b``, a choice the isotopy relations make
irrelevant).  Every generator weakly decreases the strand count upward, so
a word with ``m`` top and ``n`` bottom endpoints always has ``m <= n``.

Equality of elements is decided by the faithful action on polynomial rings
``R_n = Z[r1, r2, ...][x1..xn]``: dots multiply, crossings take divided
differences, and the rightmost short strand sends ``x_n^k`` to ``r_k``
(``r_0 = 1``), fixing the other variables.  A short strand in position
``i < n`` first slides to the right through circle crossings.  Comparing
the resulting action tables on all test monomials with exponents up to a
completeness bound is the *equality oracle*: a FALSE answer is always
correct because the action is well defined, and TRUE answers at the
default bound are cross-validated by the basis rank and spanning tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _product

from . import intlinalg
from .exactpoly import (
    Monomial,
    Polynomial,
    divided_difference,
    swap_vars,
    x_monomial,
)
from .nilhecke import NHElement, nh_d, nh_mul, nh_one, nh_s, nh_x, nh_e, nh_e_tilde
from .permutations import (
    Perm,
    compose,
    identity as perm_identity,
    inverse,
    length,
    min_coset_reps,
    reduced_word,
    symmetric_group,
)
from .reports import Report

Slice = tuple[str, int, int]


class ShapeMismatchError(ValueError):
    """Two elements with different endpoint counts were compared."""


class OracleCompletenessError(RuntimeError):
    """A basis-coordinate solve contradicted the oracle's completeness bound.

    Raised when the linear system of action tables is inconsistent or has no
    integral solution; this must surface, never be swallowed, because it
    would falsify either basis independence or the completeness bound.
    """


def _slice_top(sl: Slice) -> int:
    return sl[2] - 1 if sl[0] == "v" else sl[2]


def _valid_slice(sl: Slice) -> bool:
    kind, i, n = sl
    if kind == "x":
        return 1 <= i <= n
    if kind == "d":
        return 1 <= i <= n - 1
    if kind == "v":
        return 1 <= i <= n
    return False


class TnhWord:
    """A composable stack of generator slices; immutable and hashable."""

    __slots__ = ("slices", "n", "m", "_hash")

    def __init__(self, slices: tuple[Slice, ...], n: int):
        cur = n
        for sl in reversed(slices):
            if not _valid_slice(sl):
                raise ValueError(f"invalid slice {sl}")
            if sl[2] != cur:
                raise ValueError(f"slice {sl} does not sit on {cur} strands")
            cur = _slice_top(sl)
        self.slices = slices
        self.n = n
        self.m = cur
        self._hash = hash((slices, n))

    @property
    def degree(self) -> int:
        return 2 * sum(1 for sl in self.slices if sl[0] == "x") - 2 * sum(
            1 for sl in self.slices if sl[0] == "d"
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TnhWord)
            and self.n == other.n
            and self.slices == other.slices
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "TnhWord") -> bool:
        return (self.m, self.n, self.slices) < (other.m, other.n, other.slices)

    def __str__(self) -> str:
        if not self.slices:
            return f"one({self.n})"
        return "*".join(f"{k}({i},{n})" for k, i, n in self.slices)

    __repr__ = __str__


class TnhElement:
    """A finite integer combination of words sharing top and bottom counts.

    The zero element keeps its ``(m, n)`` shape but is treated as belonging
    to every component when adding or comparing.
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: dict[TnhWord, int] | None = None):
        self.m = m
        self.n = n
        self.terms: dict[TnhWord, int] = {w: c for w, c in (terms or {}).items() if c != 0}
        for w in self.terms:
            if (w.m, w.n) != (m, n):
                raise ShapeMismatchError(f"word {w} not in component ({m},{n})")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {w.degree for w in self.terms}

    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def __add__(self, other: "TnhElement") -> "TnhElement":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if (self.m, self.n) != (other.m, other.n):
            raise ShapeMismatchError(
                f"cannot add ({self.m},{self.n}) and ({other.m},{other.n})"
            )
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                del out[w]
        return TnhElement(self.m, self.n, out)

    def __neg__(self) -> "TnhElement":
        return TnhElement(self.m, self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "TnhElement") -> "TnhElement":
        return self + (-other)

    def scale(self, c: int) -> "TnhElement":
        return TnhElement(self.m, self.n, {w: k * c for w, k in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return word_compose(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __or__(self, other: "TnhElement") -> "TnhElement":
        return horizontal_concat(self, other)

    def __eq__(self, other) -> bool:
        """Structural equality of word combinations, not algebra equality."""
        if not isinstance(other, TnhElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for w in sorted(self.terms):
            c = self.terms[w]
            body = str(w)
            piece = body if abs(c) == 1 else f"{abs(c)}*{body}"
            if not chunks:
                chunks.append(piece if c > 0 else f"-{piece}")
            else:
                chunks.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(chunks)

    __repr__ = __str__


def _word(slices: tuple[Slice, ...], n: int) -> TnhElement:
    w = TnhWord(slices, n)
    return TnhElement(w.m, w.n, {w: 1})


def zero(m: int, n: int) -> TnhElement:
    return TnhElement(m, n)


def one(n: int) -> TnhElement:
    if n < 0:
        raise ValueError("negative strand count")
    return _word((), n)


def x(i: int, n: int) -> TnhElement:
    if not 1 <= i <= n:
        raise ValueError(f"x({i},{n}) out of range")
    return _word((("x", i, n),), n)


def d(i: int, n: int) -> TnhElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"d({i},{n}) out of range")
    return _word((("d", i, n),), n)


def v(i: int, n: int) -> TnhElement:
    if not 1 <= i <= n:
        raise ValueError(f"v({i},{n}) out of range")
    return _word((("v", i, n),), n)


def s(i: int, n: int) -> TnhElement:
    """The circle crossing ``d_i x_i - x_i d_i``."""
    return d(i, n) * x(i, n) - x(i, n) * d(i, n)


def d_w(w: Perm) -> TnhElement:
    n = len(w)
    slices = tuple(("d", i, n) for i in reduced_word(tuple(w)))
    return _word(slices, n)


def psi(a: NHElement) -> TnhElement:
    """Embed a nilHecke normal form as diagrams: dots above crossings."""
    n = a.n
    out = zero(n, n)
    for w, f in a.terms.items():
        dpart = tuple(("d", i, n) for i in reduced_word(w))
        for mono, c in f.terms.items():
            if mono.r:
                raise ValueError("algebra coefficients cannot contain r-variables")
            dots = tuple(("x", i + 1, n) for i, e in enumerate(mono.x) for _ in range(e))
            out = out + _word(dots + dpart, n).scale(c)
    return out


def to_nh(a: TnhElement) -> NHElement:
    """Exact normal form of an element without short strands (``m == n``)."""
    if a.m != a.n:
        raise ShapeMismatchError("element has short strands; no nilHecke form")
    out = NHElement(a.n)
    for w, c in a.terms.items():
        acc = nh_one(a.n)
        for kind, i, n in w.slices:
            acc = nh_mul(acc, nh_x(i, n) if kind == "x" else nh_d(i, n))
        out = out + acc.scale(c)
    return out


def e(k: int) -> TnhElement:
    return psi(nh_e(k))


def e_tilde(k: int) -> TnhElement:
    return psi(nh_e_tilde(k))


def u_element(k: int) -> TnhElement:
    """The alternating sum of short-strand positions in ``k`` strands."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = zero(k - 1, k)
    for i in range(1, k + 1):
        out = out + v(i, k).scale((-1) ** (i - 1))
    return out


def v_zero(n: int) -> TnhElement:
    """The diagram of ``n`` short strands."""
    slices = tuple(("v", j, j) for j in range(1, n + 1))
    return _word(slices, n)


def v_left(k: int, n_short: int) -> TnhElement:
    """``k`` vertical strands with ``n_short`` short strands on the right."""
    slices = tuple(("v", k + j, k + j) for j in range(1, n_short + 1))
    return _word(slices, k + n_short)


def g_slide(i: int, n: int) -> TnhElement:
    """The crossing product ``s_{n-1} ... s_i`` carrying position ``n`` to ``i``."""
    acc = one(n)
    for j in range(n - 1, i - 1, -1):
        acc = acc * s(j, n)
    return acc


# -- composition --------------------------------------------------------------


def word_compose(a: TnhWord | TnhElement, b: TnhWord | TnhElement) -> TnhElement:
    """Vertical stacking, ``a`` on top; zero when endpoint counts mismatch."""
    if isinstance(a, TnhWord):
        a = TnhElement(a.m, a.n, {a: 1})
    if isinstance(b, TnhWord):
        b = TnhElement(b.m, b.n, {b: 1})
    if a.n != b.m:
        return zero(a.m, b.n)
    out: dict[TnhWord, int] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = TnhWord(wa.slices + wb.slices, wb.n)
            nc = out.get(w, 0) + ca * cb
            if nc:
                out[w] = nc
            else:
                del out[w]
    return TnhElement(a.m, b.n, out)


def _shift_slices(slices: tuple[Slice, ...], pos: int, amb: int) -> tuple[Slice, ...]:
    return tuple((k, i + pos, n + amb) for k, i, n in slices)


def horizontal_concat(a: TnhElement, b: TnhElement) -> TnhElement:
    """Side-by-side placement ``a | b`` with ``a`` raised above ``b``."""
    out: dict[TnhWord, int] = {}
    for wa, ca in a.terms.items():
        upper = _shift_slices(wa.slices, 0, b.m)
        for wb, cb in b.terms.items():
            lower = _shift_slices(wb.slices, wa.n, wa.n)
            w = TnhWord(upper + lower, wa.n + wb.n)
            nc = out.get(w, 0) + ca * cb
            if nc:
                out[w] = nc
            else:
                del out[w]
    return TnhElement(a.m + b.m, a.n + b.n, out)


# -- the polynomial action ----------------------------------------------------


def _v_collapse(f: Polynomial, n: int) -> Polynomial:
    """Action of the rightmost short strand: ``x_n^k -> r_k`` with ``r_0 = 1``."""
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        xs = m.x
        k = xs[n - 1] if len(xs) >= n else 0
        nxs = xs[: n - 1]
        while nxs and nxs[-1] == 0:
            nxs = nxs[:-1]
        if k == 0:
            mm = Monomial(nxs, m.r)
        else:
            rd = dict(m.r)
            rd[k] = rd.get(k, 0) + 1
            mm = Monomial(nxs, tuple(sorted(rd.items())))
        nc = out.get(mm, 0) + c
        if nc:
            out[mm] = nc
        else:
            del out[mm]
    p = Polynomial.__new__(Polynomial)
    p.terms = out
    return p


_XVARS: dict[int, Polynomial] = {}


def _xpoly(i: int) -> Polynomial:
    p = _XVARS.get(i)
    if p is None:
        p = x_monomial([0] * (i - 1) + [1])
        _XVARS[i] = p
    return p


def _apply_slice(sl: Slice, f: Polynomial) -> Polynomial:
    kind, i, n = sl
    if kind == "x":
        return f * _xpoly(i)
    if kind == "d":
        return divided_difference(i, f)
    for j in range(i, n):
        f = swap_vars(f, j)
    return _v_collapse(f, n)


def act_alpha(a: TnhElement | TnhWord, f: Polynomial) -> Polynomial:
    """Apply an element to a polynomial of ``R_n``, bottom slice first."""
    if isinstance(a, TnhWord):
        a = TnhElement(a.m, a.n, {a: 1})
    if f.max_x_index() > a.n:
        raise ValueError("polynomial uses more variables than the bottom count")
    total = Polynomial.zero()
    for w, c in a.terms.items():
        cur = f
        for sl in reversed(w.slices):
            cur = _apply_slice(sl, cur)
        total = total + cur * c
    return total


# -- action tables and the equality oracle ------------------------------------


@dataclass(frozen=True)
class Grid:
    """A finite set of test x-monomials of ``R_n``."""

    kind: str  # "uniform" or "staircase"
    n: int
    param: int

    @property
    def exps(self) -> tuple[tuple[int, ...], ...]:
        return _grid_exps(self.kind, self.n, self.param)

    def __len__(self) -> int:
        return len(self.exps)


@lru_cache(maxsize=None)
def _grid_exps(kind: str, n: int, param: int) -> tuple[tuple[int, ...], ...]:
    if kind == "uniform":
        ranges = [range(param + 1)] * n
    elif kind == "staircase":
        # positional bound n - t on slot t, shifted by the degree allowance
        ranges = [range(n - t + 1 + param) for t in range(1, n + 1)]
    else:
        raise ValueError(f"unknown grid kind {kind}")
    return tuple(_product(*ranges)) if n else ((),)


def uniform_grid(n: int, bound: int) -> Grid:
    return Grid("uniform", n, bound)


def staircase_grid(n: int, extra: int = 0) -> Grid:
    return Grid("staircase", n, extra)


def default_oracle_bound(*elems: TnhElement) -> int:
    """``(n - 1) + max(0, d/2)`` from the largest bottom count and degree."""
    bound = 0
    for a in elems:
        dmax = max((abs(w.degree) for w in a.terms), default=0)
        bound = max(bound, (a.n - 1) + max(0, dmax // 2))
    return bound


@dataclass
class ActionTable:
    """Images of every grid monomial under an element's action."""

    m: int
    n: int
    grid: Grid
    entries: dict[tuple[int, ...], Polynomial]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ActionTable)
            and self.grid == other.grid
            and self.entries == other.entries
        )

    def first_difference(self, other: "ActionTable"):
        for e in self.grid.exps:
            if self.entries[e] != other.entries[e]:
                return e
        return None


_TAIL_CACHE: dict[tuple, dict[tuple[int, ...], Polynomial]] = {}


def clear_caches() -> None:
    _TAIL_CACHE.clear()
    _grid_exps.cache_clear()


def _identity_table(grid: Grid) -> dict[tuple[int, ...], Polynomial]:
    key = ("id", grid)
    tab = _TAIL_CACHE.get(key)
    if tab is None:
        tab = {e: x_monomial(e) for e in grid.exps}
        _TAIL_CACHE[key] = tab
    return tab


def _suffix_table(slices: tuple[Slice, ...], grid: Grid) -> dict[tuple[int, ...], Polynomial]:
    """Table of a slice suffix applied bottom-first to the grid monomials.

    Results are cached at suffixes opening with a crossing or a short strand
    (runs of dots are folded through in one multiplication), so stacks that
    share a lower body, like a basis family over one ``d_w``, share work.
    """
    if not slices:
        return _identity_table(grid)
    kind = slices[0][0]
    if kind == "x":
        j = 0
        exps: dict[int, int] = {}
        while j < len(slices) and slices[j][0] == "x":
            exps[slices[j][1]] = exps.get(slices[j][1], 0) + 1
            j += 1
        sub = _suffix_table(slices[j:], grid)
        mono = x_monomial([exps.get(i, 0) for i in range(1, max(exps) + 1)])
        return {e: p * mono for e, p in sub.items()}
    key = (slices, grid)
    tab = _TAIL_CACHE.get(key)
    if tab is not None:
        return tab
    sub = _suffix_table(slices[1:], grid)
    tab = {e: _apply_slice(slices[0], p) for e, p in sub.items()}
    _TAIL_CACHE[key] = tab
    return tab


def action_table(a: TnhElement, grid: Grid | None = None, bound: int | None = None) -> ActionTable:
    if grid is None:
        grid = uniform_grid(a.n, bound if bound is not None else default_oracle_bound(a))
    if grid.n != a.n:
        raise ShapeMismatchError("grid does not match the bottom strand count")
    entries = {e: Polynomial.zero() for e in grid.exps}
    for w, c in a.terms.items():
        tab = _suffix_table(w.slices, grid)
        for e, p in tab.items():
            entries[e] = entries[e] + p * c
    return ActionTable(a.m, a.n, grid, entries)


@dataclass
class EqualityResult:
    equal: bool
    bound: int | None
    grid: Grid
    table_left: ActionTable
    table_right: ActionTable
    first_difference: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.equal

    def witness(self) -> dict:
        out = {"grid": f"{self.grid.kind}({self.grid.n},{self.grid.param})", "equal": self.equal}
        if self.first_difference is not None:
            e = self.first_difference
            out["monomial"] = str(x_monomial(e))
            out["left"] = str(self.table_left.entries[e])
            out["right"] = str(self.table_right.entries[e])
        return out


def oracle_equal(
    a: TnhElement,
    b: TnhElement,
    oracle_bound: int | None = None,
    grid: Grid | None = None,
) -> EqualityResult:
    """Compare action tables; FALSE is always correct, TRUE is correct at
    or above the completeness bound."""
    if not a.is_zero() and not b.is_zero() and (a.m, a.n) != (b.m, b.n):
        raise ShapeMismatchError(
            f"components ({a.m},{a.n}) and ({b.m},{b.n}) are not comparable"
        )
    n = b.n if a.is_zero() else a.n
    if grid is None:
        bound = oracle_bound if oracle_bound is not None else default_oracle_bound(a, b)
        grid = uniform_grid(n, bound)
    else:
        bound = None
    ga = grid if not a.is_zero() or a.n == grid.n else Grid(grid.kind, a.n, grid.param)
    ta = action_table(a, grid) if a.n == grid.n else _zero_table(a, grid)
    tb = action_table(b, grid) if b.n == grid.n else _zero_table(b, grid)
    diff = ta.first_difference(tb)
    return EqualityResult(diff is None, bound, grid, ta, tb, diff)


def _zero_table(a: TnhElement, grid: Grid) -> ActionTable:
    return ActionTable(a.m, a.n, grid, {e: Polynomial.zero() for e in grid.exps})


def is_oracle_zero(a: TnhElement, oracle_bound: int | None = None, grid: Grid | None = None) -> bool:
    if a.is_zero():
        return True
    return oracle_equal(a, zero(a.m, a.n), oracle_bound=oracle_bound, grid=grid).equal


# -- rewriting to the reduced generator set -----------------------------------


def to_right_normal(a: TnhElement) -> TnhElement:
    """Replace every short strand by the rightmost one under circle crossings.

    Output uses only slices ``x``, ``d`` and ``v(n, n)`` and is oracle-equal
    to the input.
    """
    out = zero(a.m, a.n)
    for w, c in a.terms.items():
        acc = one(w.m)
        for sl in w.slices:
            kind, i, n = sl
            if kind == "v" and i < n:
                acc = acc * (v(n, n) * g_slide(i, n))
            else:
                acc = acc * _word((sl,), n)
        out = out + acc.scale(c)
    return out


# -- the basis of each graded component ---------------------------------------


def _partitions_at_most(parts: int, total: int) -> list[tuple[int, ...]]:
    """Non-increasing exponent tuples of the given size and weight."""
    if total == 0:
        return [(0,) * parts]
    if parts == 0:
        return []
    out = []

    def rec(prefix: list[int], remaining: int, cap: int, slots: int):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for first in range(min(cap, remaining), -1, -1):
            if first == 0 and remaining > 0:
                return
            rec(prefix + [first], remaining - first, first, slots - 1)

    rec([], total, total, parts)
    return [p for p in out]


@dataclass(frozen=True)
class BasisLabel:
    """A basis element of the ``(k + n_short, k)``-component.

    Realized as: ``k`` vertical strands with ``n_short`` short strands on the
    right at the top, then dots for ``t_monomial`` (left block) and
    ``b_monomial`` (right block, non-increasing), then crossings for
    ``t_perm`` (left block), ``b_perm`` (right block) and the minimal coset
    representative at the bottom.
    """

    k: int
    n_short: int
    t_monomial: tuple[int, ...]
    t_perm: Perm
    b_monomial: tuple[int, ...]
    b_perm: Perm
    coset_rep: Perm

    @property
    def ambient(self) -> int:
        return self.k + self.n_short

    @property
    def degree(self) -> int:
        return (
            2 * (sum(self.t_monomial) + sum(self.b_monomial))
            - 2 * (length(self.t_perm) + length(self.b_perm) + length(self.coset_rep))
        )

    def sort_key(self):
        return (
            length(self.b_perm),
            self.b_monomial,
            self.coset_rep,
            length(self.t_perm),
            self.t_monomial,
            self.t_perm,
        )

    def describe(self) -> dict:
        return {
            "verticals": self.k,
            "short_strands": self.n_short,
            "left_dots": list(self.t_monomial),
            "left_word": list(reduced_word(self.t_perm)),
            "right_dots": list(self.b_monomial),
            "right_word": list(reduced_word(self.b_perm)),
            "coset_word": list(reduced_word(self.coset_rep)),
            "degree": self.degree,
        }


def realize_label(label: BasisLabel) -> TnhElement:
    n = label.ambient
    k = label.k
    slices: list[Slice] = [("v", k + j, k + j) for j in range(1, label.n_short + 1)]
    for i, exp in enumerate(label.t_monomial, start=1):
        slices.extend([("x", i, n)] * exp)
    for i, exp in enumerate(label.b_monomial, start=1):
        slices.extend([("x", k + i, n)] * exp)
    for i in reduced_word(label.t_perm):
        slices.append(("d", i, n))
    for i in reduced_word(label.b_perm):
        slices.append(("d", k + i, n))
    for i in reduced_word(label.coset_rep):
        slices.append(("d", i, n))
    return _word(tuple(slices), n)


def _monomials_of_total(k: int, total: int) -> list[tuple[int, ...]]:
    from .nilhecke import monomials_of_degree

    return monomials_of_degree(k, total)


def enumerate_basis(m: int, n: int, degree: int) -> list[BasisLabel]:
    """All basis labels of the ``(m, n)``-component in one degree.

    For ``m = 0`` these are the short-strand diagrams with non-increasing
    dots and a crossing word; for ``m = n`` they biject with the nilHecke
    monomial basis.
    """
    if m > n:
        raise ValueError("no component with more top than bottom endpoints")
    if degree % 2:
        return []
    k, ns = m, n - m
    out = []
    for coset in min_coset_reps(k, ns):
        lc = length(coset)
        for u in symmetric_group(k):
            lu = length(u)
            for wp in symmetric_group(ns):
                lw = length(wp)
                two_d = degree + 2 * (lc + lu + lw)
                if two_d < 0 or two_d % 2:
                    continue
                total = two_d // 2
                for bw in range(total + 1):
                    tparts = _monomials_of_total(k, total - bw)
                    if not tparts_possible(k, total - bw, tparts):
                        continue
                    for bm in _partitions_at_most(ns, bw):
                        for tm in tparts:
                            out.append(BasisLabel(k, ns, tm, u, bm, wp, coset))
    out.sort(key=BasisLabel.sort_key)
    return out


def tparts_possible(k: int, total: int, tparts) -> bool:
    return bool(tparts) or (k == 0 and total == 0 and tparts == [()])


# -- exact coordinates for components with at most one short strand -----------


def _nh_of_slices(slices: tuple[Slice, ...], n: int) -> NHElement:
    acc = nh_one(n)
    for kind, i, amb in slices:
        acc = nh_mul(acc, nh_x(i, amb) if kind == "x" else nh_d(i, amb))
    return acc


@lru_cache(maxsize=None)
def _g_slide_nh(i: int, n: int) -> NHElement:
    acc = nh_one(n)
    for j in range(n - 1, i - 1, -1):
        acc = nh_mul(acc, nh_s(j, n))
    return acc


@lru_cache(maxsize=None)
def _coset_lookup(k: int, l: int) -> dict[tuple[bool, ...], Perm]:
    return {tuple(vv <= k for vv in rep): rep for rep in min_coset_reps(k, l)}


def one_strand_coords(a: TnhElement) -> dict[tuple, int]:
    """Exact basis coordinates for an element with exactly one short strand.

    Every word splits as (upper nilHecke part) * v(i, m+1) * (lower nilHecke
    part); sliding the short strand to the right and pushing the lower part
    into normal form lands each word in the span of the labels
    ``(mono, u) (x) (dotted strand j)`` over a minimal coset word.  Keys are
    ``(mono, u, j, coset_rep)``; realizations match ``BasisLabel`` fields.
    """
    if a.n != a.m + 1:
        raise ShapeMismatchError("element must have exactly one short strand")
    m = a.m
    lookup = _coset_lookup(m, 1)
    coords: dict[tuple, int] = {}
    for word, c in a.terms.items():
        vidx = next(i for i, sl in enumerate(word.slices) if sl[0] == "v")
        upper = _nh_of_slices(word.slices[:vidx], m)
        i = word.slices[vidx][1]
        lower = _nh_of_slices(word.slices[vidx + 1 :], m + 1)
        body = nh_mul(_g_slide_nh(i, m + 1), lower)
        for w2, f2 in body.terms.items():
            rep = lookup[tuple(vv <= m for vv in w2)]
            u_full = compose(w2, inverse(rep))
            assert u_full[m] == m + 1
            u = u_full[:m]
            for mono, cf in f2.terms.items():
                j = mono.x[m] if len(mono.x) > m else 0
                left_mono = mono.x[:m]
                while left_mono and left_mono[-1] == 0:
                    left_mono = left_mono[:-1]
                folded = nh_mul(upper, NHElement(m, {u: x_monomial(left_mono)}))
                for w3, f3 in folded.terms.items():
                    for mono3, c3 in f3.terms.items():
                        key = (mono3.x, w3, j, rep)
                        nc = coords.get(key, 0) + c * cf * c3
                        if nc:
                            coords[key] = nc
                        else:
                            del coords[key]
    return coords


def equal_exact(a: TnhElement, b: TnhElement) -> bool:
    """Exact equality for components with zero or one short strand.

    Uses the nilHecke normal form (no strands) or the one-strand canonical
    coordinates; falls back to the oracle otherwise.
    """
    if not a.is_zero() and not b.is_zero() and (a.m, a.n) != (b.m, b.n):
        raise ShapeMismatchError("not comparable")
    diff = a - b
    if diff.is_zero():
        return True
    if diff.n == diff.m:
        return to_nh(diff).is_zero()
    if diff.n == diff.m + 1:
        return not one_strand_coords(diff)
    return is_oracle_zero(diff)


# -- coordinates, ranks ------------------------------------------------------


def _label_coord_key(label: BasisLabel) -> tuple:
    return (label.t_monomial, label.t_perm, sum(label.b_monomial), label.coset_rep)


def _vectorize(table: ActionTable) -> dict[tuple, int]:
    out = {}
    for e, p in table.entries.items():
        for mono, c in p.terms.items():
            out[(e, mono)] = c
    return out


def coefficients_in_basis(
    a: TnhElement, oracle_bound: int | None = None
) -> dict[BasisLabel, int]:
    """Integer coordinates of a homogeneous element in the enumerated basis.

    Components with at most one short strand use the exact canonical forms;
    otherwise the linear system of action tables is solved.  The result is
    always verified by an oracle round trip, and any inconsistency or
    non-integrality raises :class:`OracleCompletenessError`.
    """
    if a.is_zero():
        return {}
    deg = a.homogeneous_degree()
    if deg is None:
        raise ValueError("element is not homogeneous")
    labels = enumerate_basis(a.m, a.n, deg)
    if a.n == a.m:
        nh = to_nh(a)
        by_key = {(lb.t_monomial, lb.t_perm): lb for lb in labels}
        coords = {}
        for w, f in nh.terms.items():
            for mono, c in f.terms.items():
                lb = by_key.get((mono.x, w))
                if lb is None:
                    raise OracleCompletenessError(f"no label for ({mono.x}, {w})")
                coords[lb] = c
        return coords
    if a.n == a.m + 1:
        raw = one_strand_coords(a)
        by_key = {
            (lb.t_monomial, lb.t_perm, lb.b_monomial[0], lb.coset_rep): lb for lb in labels
        }
        coords = {}
        for (mono, u, j, rep), c in raw.items():
            lb = by_key.get((mono, u, j, rep))
            if lb is None:
                raise OracleCompletenessError(f"no label for {(mono, u, j, rep)}")
            coords[lb] = c
        return coords
    return _coefficients_by_solve(a, labels, oracle_bound)


def _coefficients_by_solve(a, labels, oracle_bound):
    bound = oracle_bound if oracle_bound is not None else default_oracle_bound(a)
    grid = uniform_grid(a.n, bound)
    target = _vectorize(action_table(a, grid))
    vectors = [_vectorize(action_table(realize_label(lb), grid)) for lb in labels]
    cols = sorted(
        set(target) | {k for vec in vectors for k in vec},
        key=lambda key: (key[0], str(key[1])),
    )
    mat = [[vec.get(col, 0) for vec in vectors] for col in cols]
    rhs = [target.get(col, 0) for col in cols]
    res = intlinalg.solve_integral(mat, rhs)
    if res.solution is None:
        reason = "non-integral solution" if res.rational is not None else "inconsistent system"
        raise OracleCompletenessError(
            f"{reason} expressing element in the degree basis at bound {bound}"
        )
    return {lb: c for lb, c in zip(labels, res.solution) if c != 0}


def realize_combination(coords: dict[BasisLabel, int], m: int, n: int) -> TnhElement:
    out = zero(m, n)
    for lb, c in coords.items():
        out = out + realize_label(lb).scale(c)
    return out


_HASH_BUCKETS = 4096


def _compressed_row(vec: dict[tuple, int], buckets: int) -> list[int]:
    row = [0] * buckets
    for key, c in vec.items():
        h = hash(key)
        sign = -1 if (h >> 17) & 1 else 1
        row[h % buckets] += sign * c
    return row


def graded_rank(m: int, n: int, degree: int, oracle_bound: int | None = None) -> int:
    """Rank of the span of the basis labels' action tables in one degree.

    Certifies full rank cheaply via a sign-hashed compression mod p (a rank
    lower bound); any apparent deficiency is re-checked exactly before being
    reported.
    """
    if n < m:
        return 0
    labels = enumerate_basis(m, n, degree)
    if not labels:
        return 0
    bound = oracle_bound
    if bound is None:
        bound = (n - 1) + max(0, abs(degree) // 2)
    grid = uniform_grid(n, bound)
    vectors = [_vectorize(action_table(realize_label(lb), grid)) for lb in labels]
    buckets = max(256, 4 * len(labels))
    compressed = [_compressed_row(vec, buckets) for vec in vectors]
    r = intlinalg.modular_rank(compressed)
    if r == len(labels):
        return r
    cols = sorted({k for vec in vectors for k in vec}, key=lambda key: (key[0], str(key[1])))
    mat = [[vec.get(col, 0) for col in cols] for vec in vectors]
    return intlinalg.rank(mat)


# -- the relation suite -------------------------------------------------------


def _check(report: Report, name: str, params: dict, a: TnhElement, b: TnhElement, bound):
    res = oracle_equal(a, b, oracle_bound=bound)
    report.add(name, params, res.equal, None if res.equal else res.witness())


def relation_suite(max_n: int, oracle_bound: int | None = None) -> Report:
    """Check every defining and derived relation with all counts <= max_n.

    Covers the idempotent, nilHecke and short-strand groups, the slide
    relation, relation (F), circle-crossing identities, dot slides, the
    crossing/circle braid, and the idempotent-absorption identity of the
    alternating short-strand sums (checked exactly in canonical form).
    """
    rpt = Report()
    B = oracle_bound
    for n in range(0, max_n + 1):
        for mm in range(0, max_n + 1):
            if mm != n:
                rpt.add(
                    "unit.orthogonal", {"n": n, "m": mm}, (one(n) * one(mm)).is_zero()
                )
        _check(rpt, "unit.idempotent", {"n": n}, one(n) * one(n), one(n), B)
        for i in range(1, n + 1):
            _check(rpt, "unit.absorb-x", {"n": n, "i": i}, one(n) * x(i, n) * one(n), x(i, n), B)
        for i in range(1, n):
            _check(rpt, "unit.absorb-d", {"n": n, "i": i}, one(n) * d(i, n) * one(n), d(i, n), B)
        for i in range(1, n + 1):
            _check(rpt, "unit.absorb-v", {"n": n, "i": i}, one(n - 1) * v(i, n) * one(n), v(i, n), B)
    for n in range(2, max_n + 1):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                _check(rpt, "nilhecke.xx", {"n": n, "i": i, "j": j}, x(i, n) * x(j, n), x(j, n) * x(i, n), B)
        for i in range(1, n + 1):
            for j in range(1, n):
                if abs(i - j) > 1:
                    _check(rpt, "nilhecke.xd-distant", {"n": n, "i": i, "j": j}, x(i, n) * d(j, n), d(j, n) * x(i, n), B)
        for i in range(1, n):
            for j in range(i + 2, n):
                _check(rpt, "nilhecke.dd-distant", {"n": n, "i": i, "j": j}, d(i, n) * d(j, n), d(j, n) * d(i, n), B)
        for i in range(1, n):
            _check(rpt, "nilhecke.dd-zero", {"n": n, "i": i}, d(i, n) * d(i, n), zero(n, n), B)
        for i in range(1, n - 1):
            _check(
                rpt,
                "nilhecke.braid",
                {"n": n, "i": i},
                d(i, n) * d(i + 1, n) * d(i, n),
                d(i + 1, n) * d(i, n) * d(i + 1, n),
                B,
            )
        for i in range(1, n):
            _check(rpt, "nilhecke.xd-unit", {"n": n, "i": i}, x(i, n) * d(i, n) - d(i, n) * x(i + 1, n), one(n), B)
            _check(rpt, "nilhecke.dx-unit", {"n": n, "i": i}, d(i, n) * x(i, n) - x(i + 1, n) * d(i, n), one(n), B)
    for n in range(1, max_n + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i > j:
                    _check(rpt, "short.dot-isotopy", {"n": n, "i": i, "j": j}, v(i, n) * x(j, n), x(j, n - 1) * v(i, n), B)
                elif i < j:
                    _check(rpt, "short.dot-isotopy", {"n": n, "i": i, "j": j}, v(i, n) * x(j, n), x(j - 1, n - 1) * v(i, n), B)
            for j in range(1, n):
                if i > j + 1:
                    _check(rpt, "short.crossing-isotopy", {"n": n, "i": i, "j": j}, v(i, n) * d(j, n), d(j, n - 1) * v(i, n), B)
                elif i < j:
                    _check(rpt, "short.crossing-isotopy", {"n": n, "i": i, "j": j}, v(i, n) * d(j, n), d(j - 1, n - 1) * v(i, n), B)
        if n + 1 <= max_n:
            for i in range(1, n + 1):
                for j in range(1, i + 1):
                    _check(
                        rpt,
                        "short.disjoint",
                        {"n": n, "i": i, "j": j},
                        v(i, n) * v(j, n + 1),
                        v(j, n) * v(i + 1, n + 1),
                        B,
                    )
        for i in range(1, n):
            _check(rpt, "short.exchange", {"n": n, "i": i}, v(i, n) * d(i, n), v(i + 1, n) * d(i, n), B)
        for i in range(1, n):
            _check(rpt, "derived.slide", {"n": n, "i": i}, v(i, n), v(n, n) * g_slide(i, n), B)
        if n >= 2:
            lhs = v(n - 1, n - 1) * v(n, n)
            _check(rpt, "derived.relation-F", {"n": n}, lhs, lhs * s(n - 1, n), B)
    for n in range(2, max_n + 1):
        for i in range(1, n):
            _check(rpt, "circle.involution", {"n": n, "i": i}, s(i, n) * s(i, n), one(n), B)
            _check(rpt, "circle.d-absorb", {"n": n, "i": i}, s(i, n) * d(i, n), d(i, n), B)
            _check(rpt, "circle.d-negate", {"n": n, "i": i}, d(i, n) * s(i, n), d(i, n).scale(-1), B)
            _check(rpt, "circle.dot-slide", {"n": n, "i": i}, x(i, n) * s(i, n), s(i, n) * x(i + 1, n), B)
        for i in range(1, n - 1):
            _check(
                rpt,
                "circle.braid",
                {"n": n, "i": i},
                s(i, n) * s(i + 1, n) * s(i, n),
                s(i + 1, n) * s(i, n) * s(i + 1, n),
                B,
            )
            _check(
                rpt,
                "circle.crossing-braid",
                {"n": n, "i": i},
                d(i, n) * s(i + 1, n) * s(i, n),
                s(i + 1, n) * s(i, n) * d(i + 1, n),
                B,
            )
            _check(
                rpt,
                "circle.crossing-braid-mirror",
                {"n": n, "i": i},
                d(i + 1, n) * s(i, n) * s(i + 1, n),
                s(i, n) * s(i + 1, n) * d(i, n),
                B,
            )
        for i in range(1, n):
            for j in range(i + 2, n):
                _check(rpt, "circle.distant", {"n": n, "i": i, "j": j}, s(i, n) * s(j, n), s(j, n) * s(i, n), B)
    for k in range(1, max_n + 1):
        lhs = e(k - 1) * u_element(k) * e(k)
        rhs = e(k - 1) * u_element(k)
        ok = equal_exact(lhs, rhs)
        rpt.add("eue.absorb", {"k": k, "method": "canonical-coordinates"}, ok)
    return rpt
