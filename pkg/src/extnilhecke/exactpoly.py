"""Exact graded polynomial arithmetic over the integers.

Two families of variables are supported:

* ``x1, x2, ..., xn`` of degree 2, on which symmetric groups and divided
  difference operators act;
* ``r1, r2, ...`` of degree ``2i`` for ``ri``, which every operator in this
  package treats as scalars.

All coefficients are arbitrary-precision integers; there is no rounding and
no rational arithmetic anywhere in this module.  The divided difference

    d_i(f) = (f - s_i(f)) / (x_i - x_{i+1})

is computed by exact long division in ``x_i - x_{i+1}``; a nonzero remainder
is impossible for such numerators and raises ``ExactDivisionError`` if it
ever appears.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple


class ExactDivisionError(ArithmeticError):
    """A supposedly exact polynomial division left a remainder."""


class Monomial(NamedTuple):
    """A monomial ``x^a * r^b``.

    ``x`` holds the exponents of ``x1..xk`` with trailing zeros trimmed;
    ``r`` is a sorted tuple of ``(index, exponent)`` pairs with positive
    exponents.  Both are normalized, so equal monomials are equal tuples.
    """

    x: tuple[int, ...]
    r: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return 2 * sum(self.x) + sum(2 * i * e for i, e in self.r)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.x, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        for i, e in self.r:
            parts.append(f"r{i}" if e == 1 else f"r{i}^{e}")
        return " ".join(parts) if parts else "1"


def _mk_mono(x: Iterable[int], r: Iterable[tuple[int, int]] = ()) -> Monomial:
    xs = tuple(x)
    while xs and xs[-1] == 0:
        xs = xs[:-1]
    if any(e < 0 for e in xs):
        raise ValueError(f"negative x-exponent in {xs}")
    rs = tuple(sorted((i, e) for i, e in r if e != 0))
    if any(e < 0 or i < 1 for i, e in rs):
        raise ValueError(f"bad r-part {rs}")
    return Monomial(xs, rs)


ONE_MONO = Monomial((), ())


class Polynomial:
    """An integer linear combination of :class:`Monomial` values.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, so values may be shared freely between threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def const(c: int) -> "Polynomial":
        return Polynomial({ONE_MONO: c})

    @staticmethod
    def monomial(m: Monomial, c: int = 1) -> "Polynomial":
        return Polynomial({m: c})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if zero or mixed."""
        degs = {m.degree for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def max_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def max_x_index(self) -> int:
        return max((len(m.x) for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda mc: (mc[0].degree, mc[0]))
        out = []
        for m, c in items:
            mono = str(m)
            if mono == "1":
                chunk = str(abs(c))
            elif abs(c) == 1:
                chunk = mono
            else:
                chunk = f"{abs(c)} {mono}"
            if not out:
                out.append(chunk if c > 0 else f"-{chunk}")
            else:
                out.append(f"+ {chunk}" if c > 0 else f"- {chunk}")
        return " ".join(out)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not b.x and not b.r:
        return a
    if not a.x and not a.r:
        return b
    la, lb = len(a.x), len(b.x)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    xs = tuple(a.x[i] + b.x[i] for i in range(lb)) + a.x[lb:]
    if a.r and b.r:
        rd = dict(a.r)
        for i, e in b.r:
            rd[i] = rd.get(i, 0) + e
        rs = tuple(sorted(rd.items()))
    else:
        rs = a.r or b.r
    return Monomial(xs, rs)


def x_var(i: int) -> Polynomial:
    """The variable ``x_i`` as a polynomial; indices start at 1."""
    if i < 1:
        raise ValueError(f"x-index {i} out of range")
    return Polynomial({Monomial((0,) * (i - 1) + (1,), ()): 1})


def r_var(i: int) -> Polynomial:
    if i < 1:
        raise ValueError(f"r-index {i} out of range")
    return Polynomial({Monomial((), ((i, 1),)): 1})


def x_monomial(exps: Iterable[int], coeff: int = 1) -> Polynomial:
    return Polynomial({_mk_mono(exps): coeff})


def poly_arith(a: Polynomial, b: Polynomial | int, op: str) -> Polynomial:
    """Dispatch form of the basic ring operations: add, mul, scale."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        if not isinstance(b, int):
            raise ValueError("scale expects an integer")
        return a * b
    raise ValueError(f"unknown op {op!r}")


# -- variable permutations and divided differences -------------------------


def permute_vars(w: tuple[int, ...], f: Polynomial) -> Polynomial:
    """Substitute ``x_i -> x_{w(i)}``; r-variables are fixed.

    This is a left group action: ``permute(w, permute(u, f)) ==
    permute(w*u, f)`` with ``(w*u)(i) = w(u(i))``.  Variables with index
    beyond ``len(w)`` are left untouched.
    """
    n = len(w)
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        xs = [0] * max(len(m.x), n)
        for i, e in enumerate(m.x):
            if i < n:
                xs[w[i] - 1] += e
            else:
                xs[i] += e
        mm = _mk_mono(xs, m.r)
        nc = out.get(mm, 0) + c
        if nc:
            out[mm] = nc
        else:
            del out[mm]
    return Polynomial(out)


def swap_vars(f: Polynomial, i: int) -> Polynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        xs = m.x
        a = xs[i - 1] if len(xs) >= i else 0
        b = xs[i] if len(xs) >= i + 1 else 0
        if a == b:
            mm = m
        else:
            ls = list(xs) + [0] * (i + 1 - len(xs))
            ls[i - 1], ls[i] = b, a
            mm = _mk_mono(ls, m.r)
        nc = out.get(mm, 0) + c
        if nc:
            out[mm] = nc
        else:
            del out[mm]
    return Polynomial(out)


def divided_difference(i: int, f: Polynomial, n: int | None = None) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})`` with exact division.

    ``n`` bounds the ambient variable count; when given, ``1 <= i <= n-1``
    is enforced and ``f`` may not use x-variables beyond ``xn``.
    """
    if n is not None:
        if not 1 <= i <= n - 1:
            raise ValueError(f"strand index {i} out of range for {n} variables")
        if f.max_x_index() > n:
            raise ValueError("polynomial uses more variables than declared")
    elif i < 1:
        raise ValueError(f"strand index {i} out of range")
    num = f - swap_vars(f, i)
    return _divide_by_x_difference(num, i)


def _divide_by_x_difference(num: Polynomial, i: int) -> Polynomial:
    """Exact long division of ``num`` by ``x_i - x_{i+1}``.

    Works term by term on the leading ``x_i``-degree, the univariate
    synthetic-division scheme with ``x_{i+1}`` playing the constant.  Raises
    ``ExactDivisionError`` on any remainder.
    """
    work = dict(num.terms)
    quot: dict[Monomial, int] = {}
    ia, ib = i - 1, i

    def xi_exp(m: Monomial) -> int:
        return m.x[ia] if len(m.x) > ia else 0

    while work:
        m = max(work, key=lambda mm: (xi_exp(mm), mm))
        e = xi_exp(m)
        if e == 0:
            raise ExactDivisionError(
                f"remainder {Polynomial(work)} dividing by x{i} - x{i + 1}"
            )
        c = work.pop(m)
        ls = list(m.x)
        ls[ia] -= 1
        qm = _mk_mono(ls, m.r)
        quot[qm] = quot.get(qm, 0) + c
        # subtract c * qm * (x_i - x_{i+1}); the x_i part cancels m exactly
        ls2 = list(qm.x) + [0] * (ib + 1 - len(qm.x))
        ls2[ib] += 1
        m2 = _mk_mono(ls2, m.r)
        nc = work.get(m2, 0) + c
        if nc:
            work[m2] = nc
        else:
            work.pop(m2, None)
    return Polynomial(quot)


# -- enumeration ------------------------------------------------------------


def _r_parts(cap: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All r-monomials of degree at most ``cap``, as sorted exponent pairs."""

    def rec(min_index: int, budget: int) -> Iterator[tuple[tuple[int, int], ...]]:
        yield ()
        for i in range(min_index, budget // 2 + 1):
            for e in range(1, budget // (2 * i) + 1):
                for rest in rec(i + 1, budget - 2 * i * e):
                    yield ((i, e),) + rest

    return rec(1, cap)


def enumerate_monomials(
    n: int,
    exponent_bound: int,
    include_r: bool = False,
    degree_cap: int | None = None,
) -> list[Monomial]:
    """Deterministic, degree-sorted list of monomials.

    x-exponents run over ``0..exponent_bound`` in each of ``n`` variables;
    when ``include_r`` is set, every r-part of degree within ``degree_cap``
    is attached.  Duplicate-free by normalization of :class:`Monomial`.
    """
    if n < 0 or exponent_bound < 0:
        raise ValueError("bounds must be non-negative")
    cap = degree_cap if degree_cap is not None else 2 * n * exponent_bound
    xs: list[tuple[int, ...]] = [()]
    for _ in range(n):
        xs = [p + (e,) for p in xs for e in range(exponent_bound + 1)]
    out = []
    rparts = list(_r_parts(cap)) if include_r else [()]
    for p in xs:
        base = 2 * sum(p)
        if base > cap:
            continue
        for rp in rparts:
            m = _mk_mono(p, rp)
            if m.degree <= cap:
                out.append(m)
    out = sorted(set(out), key=_mono_sort_key)
    return out


def _mono_sort_key(m: Monomial):
    """Degree first, then x1-heavy monomials first within a degree."""
    return (m.degree, tuple(-e for e in m.x), m.r)


# -- textual form ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xr])(\d+)(?:\^(\d+))?|(\*)|([+-]))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the textual form, e.g. ``3 x1^2 r2 - x2``.

    Integer coefficients, ``^`` for powers, ``*`` optional between factors.
    """
    pos = 0
    total = Polynomial.zero()
    sign = 1
    cur: Polynomial | None = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"syntax error in polynomial at position {pos}: {text[pos:]!r}")
        pos = m.end()
        num, var, idx, exp, star, pm = m.groups()
        if pm is not None:
            if cur is not None:
                total = total + cur * sign
                cur = None
            sign = 1 if pm == "+" else -1
            continue
        if star is not None:
            continue
        if num is not None:
            factor = Polynomial.const(int(num))
        else:
            base = x_var(int(idx)) if var == "x" else r_var(int(idx))
            factor = base ** (int(exp) if exp else 1)
        cur = factor if cur is None else cur * factor
    if cur is not None:
        total = total + cur * sign
    elif sign == -1:
        raise ValueError("dangling sign in polynomial")
    return total
